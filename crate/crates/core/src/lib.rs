//! Signless Laplacian eigenvalue sums: graph primitives, dense and exact
//! spectral computation, exhaustive graph search and claim verification.

pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod linalg;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{certify_f, certify_s2, AlgebraicReal, CertifiedF, ExactSpectrum, IntPolynomial, RationalInterval};
pub use graph::{FamilySpec, Graph};
pub use linalg::{additive_compound, compound, eig_sym, Matrix, Spectrum, SymMatrix};
pub use spectral::{f_value, matrix_of, s_k, spectrum, MatrixKind};
