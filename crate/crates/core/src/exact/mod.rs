//! Exact integer characteristic polynomials and certified root brackets.
//!
//! Equality and strict-inequality claims about eigenvalue sums are decided
//! here, never by comparing floats.

mod certify;
mod charpoly;
mod interval;
mod poly;
mod roots;

pub use certify::{certify_f, certify_s2, CertifiedF, ExactSpectrum};
pub use charpoly::{charpoly_exact, charpoly_int, charpoly_sym, IntMatrix};
pub use interval::{pow10_inv, rational_from_f64, rational_serde, RationalInterval};
pub use poly::IntPolynomial;
pub use roots::{cauchy_bound, isolate_top_roots, sturm_count, AlgebraicReal, IsolatedRoot, RealRoots, SturmSequence};

pub(crate) use interval::{int, ratio};
