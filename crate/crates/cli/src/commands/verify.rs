use std::path::PathBuf;

use qsum_core::verify::{
    reports_to_csv, reports_to_json, run_all, run_suite, Status, Suite, SuiteParams, VerificationReport,
};

use crate::error::{CliError, CliResult};
use crate::output::{table, Format};
use crate::{Display, Outcome};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Suite name (e.g. `interlacing`, `T4`, `CONJ1`) or `all`.
    suite: String,

    /// Directory receiving `reports.json` and `reports.csv`.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Random trials for sampling suites.
    #[arg(long)]
    trials: Option<usize>,

    /// Raw matrix trials for the subadditivity suite.
    #[arg(long)]
    matrix_trials: Option<usize>,

    #[arg(long)]
    seed: Option<u64>,

    /// Inclusive range `a:b` (or a single value) for the suite's main index.
    #[arg(long = "n", value_parser = parse_range)]
    range: Option<(usize, usize)>,

    /// Largest order or edge count for enumeration-based suites.
    #[arg(long)]
    n_max: Option<usize>,

    /// Largest k for k-sum suites.
    #[arg(long)]
    k_max: Option<usize>,

    /// Report runtime_ms = 0 so that re-runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer"));
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn write_reports(dir: &PathBuf, reports: &[VerificationReport]) -> CliResult<()> {
    let io = |source| CliError::Io { path: dir.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    std::fs::write(dir.join("reports.json"), reports_to_json(reports)).map_err(io)?;
    std::fs::write(dir.join("reports.csv"), reports_to_csv(reports)).map_err(io)?;
    Ok(())
}

fn summary(reports: &[VerificationReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.claim_id.clone(),
                r.status.to_string(),
                r.trials.to_string(),
                r.counterexamples.len().to_string(),
                r.runtime_ms.to_string(),
            ]
        })
        .collect();
    let mut out = table(&["claim_id", "status", "trials", "counterexamples", "runtime_ms"], &rows);
    for r in reports {
        for c in r.counterexamples.iter().take(5) {
            let id = c.graph6.as_deref().unwrap_or("-");
            out.push_str(&format!("{}: counterexample {id}: {}\n", r.claim_id, c.observed));
        }
        if r.counterexamples.len() > 5 {
            out.push_str(&format!("{}: {} more counterexamples in the JSON report\n", r.claim_id, r.counterexamples.len() - 5));
        }
        for note in &r.notes {
            if note.starts_with("FLAG") {
                out.push_str(&format!("{}: {note}\n", r.claim_id));
            }
        }
    }
    out
}

pub fn run(args: Args, display: Display) -> CliResult<Outcome> {
    let params = SuiteParams {
        range: args.range,
        trials: args.trials,
        matrix_trials: args.matrix_trials,
        n_max: args.n_max,
        k_max: args.k_max,
        seed: args.seed,
        no_timing: args.no_timing,
    };
    let reports = if args.suite.eq_ignore_ascii_case("all") {
        if args.range.is_some() {
            return Err(CliError::Usage("--n applies to a single suite, not `all`".into()));
        }
        run_all(&params)?
    } else {
        let suite: Suite = args.suite.parse()?;
        vec![run_suite(suite, &params)?]
    };
    if let Some(dir) = &args.out {
        write_reports(dir, &reports)?;
    }
    let stdout = match display.format {
        Format::Table => summary(&reports),
        Format::Json => reports_to_json(&reports),
        Format::Csv => reports_to_csv(&reports),
    };
    let all_pass = reports.iter().all(|r| r.status == Status::Pass);
    Ok(Outcome { stdout, code: if all_pass { 0 } else { 1 } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("7:100"), Ok((7, 100)));
        assert_eq!(parse_range("5"), Ok((5, 5)));
        assert!(parse_range("9:3").is_err());
        assert!(parse_range("a:3").is_err());
    }
}
