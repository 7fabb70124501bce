use num_traits::Zero;

use crate::numerics::{canonical_span, unit_vec, LinearSolution, RatMatrix, RatVector, Rational};

use super::LieError;

/// A linear subspace carried by an explicit basis in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<RatVector>,
}

impl Subspace {
    /// Keeps the given basis as is; fails if it is dependent or the wrong length.
    pub fn new(ambient_dim: usize, basis: Vec<RatVector>) -> Result<Self, LieError> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient_dim) {
            return Err(LieError::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        if !basis.is_empty() && RatMatrix::from_rows(&basis).rank() < basis.len() {
            return Err(LieError::DependentBasis);
        }
        Ok(Subspace { ambient_dim, basis })
    }

    /// The span of arbitrary vectors, in canonical (reduced echelon) basis.
    pub fn span(ambient_dim: usize, vectors: &[RatVector]) -> Self {
        let nonzero: Vec<RatVector> = vectors.iter().filter(|v| !v.iter().all(Zero::is_zero)).cloned().collect();
        Subspace {
            ambient_dim,
            basis: canonical_span(ambient_dim, &nonzero),
        }
    }

    pub fn whole(n: usize) -> Self {
        Self::coordinate(n, &(0..n).collect::<Vec<_>>())
    }

    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Vec::new(),
        }
    }

    /// Span of the standard basis vectors with the given indices, in that order.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        Subspace {
            ambient_dim: n,
            basis: indices.iter().map(|&i| unit_vec(n, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatVector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside.
    pub fn coords(&self, v: &[Rational]) -> Option<RatVector> {
        if self.basis.is_empty() {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        match self.matrix().solve(v) {
            Ok(LinearSolution::Unique(c)) => Some(c),
            _ => None,
        }
    }

    /// The ambient vector with the given coordinates.
    pub fn embed(&self, coords: &[Rational]) -> RatVector {
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            crate::numerics::axpy(&mut out, c, b);
        }
        out
    }

    /// Matrix whose columns are the coordinates of `images`; `None` if any lies outside.
    pub fn matrix_of(&self, images: &[RatVector]) -> Option<RatMatrix> {
        let cols = images.iter().map(|v| self.coords(v)).collect::<Option<Vec<_>>>()?;
        Some(RatMatrix::from_columns(self.dim(), &cols))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Equality as sets, regardless of basis.
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// The same span in canonical basis.
    pub fn canonical(&self) -> Self {
        Self::span(self.ambient_dim, &self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Self {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &all)
    }

    /// Concatenates bases; fails unless the sum is direct.
    pub fn direct_sum(&self, other: &Subspace) -> Result<Self, LieError> {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::new(self.ambient_dim, all)
    }

    pub fn intersection(&self, other: &Subspace) -> Self {
        if self.basis.is_empty() || other.basis.is_empty() {
            return Self::zero(self.ambient_dim);
        }
        let a = self.matrix();
        let stacked = a.hstack(&(-&other.matrix()));
        let vecs: Vec<RatVector> = stacked
            .kernel()
            .iter()
            .map(|k| a.mul_vec(&k[..self.dim()]))
            .collect();
        Self::span(self.ambient_dim, &vecs)
    }

    /// `W^T G W`
    pub fn restricted_gram(&self, gram: &RatMatrix) -> RatMatrix {
        let w = self.matrix();
        &(&w.transpose() * gram) * &w
    }

    /// `{v : ⟨v, w⟩ = 0 for all w}` in canonical basis.
    pub fn orthogonal_complement(&self, gram: &RatMatrix) -> Self {
        if self.basis.is_empty() {
            return Self::whole(self.ambient_dim);
        }
        let rows = &self.matrix().transpose() * gram;
        Self::span(self.ambient_dim, &rows.kernel())
    }

    /// Gram-orthogonal projection onto this subspace, as ambient coordinates.
    pub fn project(&self, gram: &RatMatrix, v: &[Rational]) -> Result<RatVector, LieError> {
        if self.basis.is_empty() {
            return Ok(vec![Rational::zero(); self.ambient_dim]);
        }
        let w = self.matrix();
        let gd = self.restricted_gram(gram);
        let rhs = (&w.transpose() * gram).mul_vec(v);
        let c = gd
            .solve(&rhs)?
            .unique()
            .ok_or(LieError::DegenerateGram("orthogonal projection"))?;
        Ok(w.mul_vec(&c))
    }

    pub fn is_orthogonal_to(&self, other: &Subspace, gram: &RatMatrix) -> bool {
        let cross = &(&self.matrix().transpose() * gram) * &other.matrix();
        cross.is_zero()
    }
}
