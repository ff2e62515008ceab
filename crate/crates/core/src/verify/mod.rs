//! Named verification suites producing pass/fail reports with replayable
//! counterexamples.

mod algebraic;
mod combinatorial;
mod random;
mod report;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use algebraic::{
    verify_delta_spectrum, verify_interlacing, verify_star_plus_identities, verify_monotone_f, verify_star_plus_bounds,
    verify_subadditivity,
};
pub use combinatorial::{
    contains_subgraph, verify_disconnected_split, verify_conj1, verify_subgraph_lemma, verify_t1, verify_t2,
    verify_t3, verify_t4, verify_tree_bound,
};
pub use random::{random_graph, random_symmetric, rng, TrialRng};
pub use report::{reports_from_json, reports_to_csv, reports_to_json, Counterexample, Status, VerificationReport};

use crate::error::{Error, Result};
use crate::exact::{int, pow10_inv, sturm_count, CertifiedF, ExactSpectrum, RationalInterval};
use crate::enumerate::canonical_form;
use crate::graph::{graph6_encode, star_plus, star_plus_edges, Graph};
use crate::spectral::{matrix_from_edges, p_qapi, q_a_pi, MatrixKind, VertexPartition};

/// Starting bracket width for strict-inequality checks.
const START_DIGITS: u32 = 12;
/// Each retry narrows the bracket a hundredfold.
const RETRIES: u32 = 3;

fn side(iv: &RationalInterval, c: &BigRational, want: Ordering) -> Option<bool> {
    let (decided_yes, decided_no) = match want {
        Ordering::Greater => (iv.lo() > c, iv.hi() <= c),
        Ordering::Less => (iv.hi() < c, iv.lo() >= c),
        Ordering::Equal => (iv.is_point() && iv.lo() == c, !iv.contains(c)),
    };
    if decided_yes {
        Some(true)
    } else if decided_no {
        Some(false)
    } else {
        None
    }
}

/// Whether `S2 ⋛ c` holds as `want`, for the two largest roots of the
/// spectrum. Brackets are tried first; a bracket still straddling `c` after
/// the retries is settled by exact root comparison.
pub(crate) fn s2_vs(sp: &mut ExactSpectrum, c: &BigRational, want: Ordering) -> Result<bool> {
    let mut width = pow10_inv(START_DIGITS);
    for _ in 0..=RETRIES {
        if let Some(v) = side(&sp.top_sum_interval(2, &width)?, c, want) {
            return Ok(v);
        }
        width *= pow10_inv(2);
    }
    Ok(sp.compare_top_two_sum(c)? == want)
}

/// Whether `f ⋛ c` holds as `want`, decided as in [`s2_vs`].
pub(crate) fn f_vs(cf: &mut CertifiedF, c: &BigRational, want: Ordering) -> Result<bool> {
    let mut width = pow10_inv(START_DIGITS);
    for _ in 0..=RETRIES {
        if let Some(v) = side(cf.refine(&width), c, want) {
            return Ok(v);
        }
        width *= pow10_inv(2);
    }
    Ok(cf.compare_rational(c)? == want)
}

/// Exact spectrum whose two largest roots are `q1, q2` of `K⁺_{1,a}`,
/// obtained without expanding the full characteristic polynomial.
///
/// The quotient over {degree-2 pair, center, leaves} is checked to be
/// equitable, the `a - 2` vectors `e_1 - e_2` and `e_i - e_{i+1}` on the
/// leaves are checked to be eigenvectors for 1, and the quotient cubic is
/// checked to have two roots above 1. Together these pin the whole spectrum.
pub fn star_plus_spectrum(a: usize) -> Result<ExactSpectrum> {
    let n = a + 1;
    let q = matrix_from_edges(n, &star_plus_edges(a)?, MatrixKind::Signless)?;
    let partition = VertexPartition::new(vec![vec![1, 2], vec![0], (3..=a).collect()]);
    if partition.matrix_quotient(q.as_matrix())? != q_a_pi(a)? {
        return Err(Error::InvalidParameter(format!("unexpected quotient for a = {a}")));
    }
    let mut vectors = vec![(1, 2)];
    vectors.extend((3..a).map(|i| (i, i + 1)));
    for (i, j) in vectors {
        // Q (e_i - e_j) = e_i - e_j, entries are small integers so f64 is exact
        for r in 0..n {
            let got = q.get(r, i) - q.get(r, j);
            let want = if r == i { 1.0 } else if r == j { -1.0 } else { 0.0 };
            if got != want {
                return Err(Error::InvalidParameter(format!("e_{i} - e_{j} is not an eigenvector for 1")));
            }
        }
    }
    let cubic = p_qapi(a)?;
    let above_one = RationalInterval::new(int(1), crate::exact::cauchy_bound(&cubic))?;
    if sturm_count(&cubic, &above_one)? != 2 || cubic.sign_at(&int(1)) == Ordering::Equal {
        return Err(Error::InvalidParameter(format!("quotient cubic for a = {a} lacks two roots above 1")));
    }
    ExactSpectrum::from_charpoly(cubic)
}

/// Replayable identifier: canonical graph6 when small enough, plain graph6
/// otherwise.
pub(crate) fn g6(g: &Graph) -> String {
    canonical_form(g).or_else(|_| graph6_encode(g)).unwrap_or_default()
}

/// Identifier for `K⁺_{1,a}`, falling back to its family name when the order
/// is past what graph6 encodes here.
pub(crate) fn star_plus_id(a: usize) -> String {
    star_plus(a).map(|g| g6(&g)).unwrap_or_else(|_| format!("star-plus:{a}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    StarPlusBounds,
    MonotoneF,
    StarPlusIdentities,
    Interlacing,
    Subadditivity,
    SubgraphLemma,
    TreeBound,
    DeltaSpectrum,
    DisconnectedSplit,
    T1,
    T2,
    T3,
    T4,
    Conj1,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::StarPlusBounds,
        Suite::MonotoneF,
        Suite::StarPlusIdentities,
        Suite::DeltaSpectrum,
        Suite::Interlacing,
        Suite::Subadditivity,
        Suite::SubgraphLemma,
        Suite::TreeBound,
        Suite::DisconnectedSplit,
        Suite::T1,
        Suite::T2,
        Suite::T3,
        Suite::T4,
        Suite::Conj1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StarPlusBounds => "star-plus-bounds",
            Suite::MonotoneF => "monotone-f",
            Suite::StarPlusIdentities => "star-plus-identities",
            Suite::Interlacing => "interlacing",
            Suite::Subadditivity => "subadditivity",
            Suite::SubgraphLemma => "subgraph-lemma",
            Suite::TreeBound => "tree-bound",
            Suite::DeltaSpectrum => "delta-spectrum",
            Suite::DisconnectedSplit => "disconnected-split",
            Suite::T1 => "T1",
            Suite::T2 => "T2",
            Suite::T3 => "T3",
            Suite::T4 => "T4",
            Suite::Conj1 => "CONJ1",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

/// Overrides for suite parameters; unset fields take each suite's default.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    /// Inclusive range for the suite's main index (`n`, `a` or `m`).
    pub range: Option<(usize, usize)>,
    pub trials: Option<usize>,
    pub matrix_trials: Option<usize>,
    pub n_max: Option<usize>,
    pub k_max: Option<usize>,
    pub seed: Option<u64>,
    /// Zero `runtime_ms` so reports are byte-stable across runs.
    pub no_timing: bool,
}

pub const DEFAULT_SEED: u64 = 42;

pub fn run_suite(suite: Suite, p: &SuiteParams) -> Result<VerificationReport> {
    let timing = !p.no_timing;
    let seed = p.seed.unwrap_or(DEFAULT_SEED);
    let range = |lo: usize, hi: usize| p.range.unwrap_or((lo, hi));
    match suite {
        Suite::StarPlusBounds => {
            let (lo, hi) = range(7, 100);
            verify_star_plus_bounds(lo, hi, timing)
        }
        Suite::MonotoneF => {
            let (lo, hi) = range(3, 50);
            verify_monotone_f(lo, hi, timing)
        }
        Suite::StarPlusIdentities => {
            let (lo, hi) = range(3, 12);
            verify_star_plus_identities(lo, hi, timing)
        }
        Suite::Interlacing => verify_interlacing(p.trials.unwrap_or(1000), p.n_max.unwrap_or(12), seed, timing),
        Suite::Subadditivity => verify_subadditivity(
            p.trials.unwrap_or(500),
            p.matrix_trials.unwrap_or(200),
            p.n_max.unwrap_or(10),
            p.k_max.unwrap_or(4),
            seed,
            timing,
        ),
        Suite::SubgraphLemma => verify_subgraph_lemma(p.n_max.unwrap_or(7), timing),
        Suite::TreeBound => verify_tree_bound(p.n_max.unwrap_or(9), timing),
        Suite::DeltaSpectrum => verify_delta_spectrum(p.trials.unwrap_or(200), seed, timing),
        Suite::DisconnectedSplit => verify_disconnected_split(p.n_max.unwrap_or(7), timing),
        Suite::T1 => {
            let (lo, hi) = range(4, 7);
            verify_t1(lo, hi, timing)
        }
        Suite::T2 => {
            let (lo, hi) = range(4, 7);
            verify_t2(lo, hi, timing)
        }
        Suite::T3 => {
            let (lo, hi) = range(4, 8);
            verify_t3(lo, hi, timing)
        }
        Suite::T4 => {
            let (lo, hi) = range(4, 7);
            verify_t4(lo, hi, timing)
        }
        Suite::Conj1 => {
            let (lo, hi) = range(5, 8);
            verify_conj1(lo, hi, timing)
        }
    }
}

/// Runs every suite at its defaults; reports come back in [`Suite::ALL`] order.
pub fn run_all(p: &SuiteParams) -> Result<Vec<VerificationReport>> {
    let shared = SuiteParams { range: None, ..p.clone() };
    Suite::ALL.par_iter().map(|&s| run_suite(s, &shared)).collect()
}
