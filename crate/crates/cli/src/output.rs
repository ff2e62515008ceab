//! Table, JSON and CSV rendering shared by the subcommands.

use clap::ValueEnum;
use qsum_core::RationalInterval;
use serde::Serialize;

use crate::error::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn fixed(x: f64, precision: usize) -> String {
    // avoid printing "-0.000000" for rounding noise around zero
    let s = format!("{x:.precision$}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

pub fn interval(iv: &RationalInterval, precision: usize) -> String {
    let (lo, hi) = iv.to_f64();
    if iv.is_point() {
        format!("{} (exact {})", fixed(lo, precision), iv.lo())
    } else {
        format!("[{}, {}]", fixed(lo, precision), fixed(hi, precision))
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields is UTF-8"))
}

/// Two-column `key  value` block with aligned values.
pub fn key_values(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

/// Column-aligned table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_zero_is_suppressed() {
        assert_eq!(fixed(-1e-15, 4), "0.0000");
        assert_eq!(fixed(-0.5, 2), "-0.50");
    }

    #[test]
    fn tables_align() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }

    #[test]
    fn csv_quotes_when_needed() {
        let s = csv_rows(&["g"], &[vec!["a,b".into()]]).unwrap();
        assert_eq!(s, "g\n\"a,b\"\n");
    }
}
