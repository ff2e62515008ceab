//! Dense real matrices, the Jacobi symmetric eigensolver and compound matrices.

mod compound;
mod jacobi;
mod matrix;

pub use compound::{additive_compound, compound, ksubsets_lex, numeric_derivative_compound, KSubsetIndex};
pub use jacobi::{eig_sym, eig_sym_vectors, Spectrum};
pub use matrix::{Matrix, SymMatrix};
