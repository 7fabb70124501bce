//! Exact rational scalars and the dense linear algebra built on them.
//!
//! Everything here is deterministic: row reduction always takes the leftmost
//! available pivot, so kernels, spans and eigenspaces come back in a canonical
//! basis and reports built from them are reproducible byte for byte.

mod eigen;
pub mod float;
mod matrix;
mod poly;
mod rational;

pub use eigen::{rational_eigenpairs, simultaneous_eigenspaces, EigenPair, JointEigenspace};
pub use matrix::{canonical_span, LinearSolution, RatMatrix};
pub use poly::{characteristic_polynomial, rational_roots, Poly};
pub use rational::*;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericsError {
    #[error("malformed rational {0:?}: expected p or p/q with q > 0")]
    MalformedRational(String),
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("characteristic polynomial does not split over the rationals ({found} of {dim} eigenvalues rational)")]
    NotRationalSplit { found: usize, dim: usize },
    #[error("matrix is not diagonalizable: eigenvalue {eigenvalue} has algebraic multiplicity {algebraic} but geometric multiplicity {geometric}")]
    NonDiagonalizable {
        eigenvalue: String,
        algebraic: usize,
        geometric: usize,
    },
    #[error("matrices {0} and {1} of the family do not commute")]
    NonCommuting(usize, usize),
}
