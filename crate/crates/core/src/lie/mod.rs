//! Metric Lie algebras: brackets, adjoint maps, metric adjoints, subalgebras.
//!
//! Structure constants are stored for basis pairs `i < j` only and the
//! antisymmetric half is synthesized, so an algebra value is antisymmetric by
//! construction. Raw tensors from outside can still be checked with
//! [`validate_tensor`].

mod algebra;
mod subspace;

pub use algebra::{validate_tensor, CentralSeries, MetricLieAlgebra, StructureTensor, ValidityReport};
pub use subspace::Subspace;

use thiserror::Error;

use crate::numerics::NumericsError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket record ({i}, {j}) must have i < j")]
    BracketOrder { i: usize, j: usize },
    #[error("duplicate bracket record ({i}, {j})")]
    DuplicateBracket { i: usize, j: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("degenerate scalar product in {0}")]
    DegenerateGram(&'static str),
    #[error("subspace is not closed under the bracket: [b{i}, b{j}] leaves it")]
    NotClosed { i: usize, j: usize },
    #[error("raw structure tensor is not antisymmetric at ({0}, {1}, {2})")]
    NotAntisymmetric(usize, usize, usize),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}
