//! The split `s = a ⊕ n` of a metric solvable Lie algebra of strong Iwasawa
//! type: roots, root spaces, root vectors, dual bases, reflections and simple
//! systems.
//!
//! Roots are covectors on `a`, stored as their values on the a-basis. Root
//! vectors and reflections are ambient vectors of the parent algebra.

mod witness;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lie::{LieError, MetricLieAlgebra, Subspace, ValidityReport};
use crate::numerics::{
    add_vec, dot, format_vec, scale_vec, simultaneous_eigenspaces, sub_vec, zero, NumericsError, RatMatrix, RatVector,
    Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IwasawaError {
    #[error("algebra fails validation: {0:?}")]
    Invalid(ValidityReport),
    #[error("s = a + n split fails: {0}")]
    Decomposition(String),
    #[error("a is not abelian, [a{0}, a{1}] != 0")]
    NotAbelian(usize, usize),
    #[error("ad of a-basis vector {0} is not symmetric")]
    NotSymmetric(usize),
    #[error("ad vanishes on the nonzero a-vector {0}")]
    NotFaithful(String),
    #[error("no A0 in a with alpha(A0) > 0 for every root")]
    NoPositiveWitness,
    #[error("scalar product on a is not positive definite, witness {0}")]
    NotPositiveDefinite(String),
    #[error("0 is a root: ad_a has a common kernel of dimension {0} in n")]
    ZeroRoot(usize),
    #[error("scalar product degenerate on the root space of {0}")]
    DegenerateRootSpace(String),
    #[error("a-basis hint does not span the orthogonal complement of [s,s]")]
    HintMismatch,
    #[error("simple system: {0}")]
    Simple(String),
    #[error("root data not rational; retry with --mode float")]
    NotRationalSplit,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Numerics(NumericsError),
}

impl From<NumericsError> for IwasawaError {
    fn from(e: NumericsError) -> Self {
        match e {
            NumericsError::NotRationalSplit { .. } => IwasawaError::NotRationalSplit,
            other => IwasawaError::Numerics(other),
        }
    }
}

/// A root with the dimension of its root space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// `α(A_i)` for the a-basis vectors `A_i`.
    pub coords: RatVector,
    pub multiplicity: usize,
}

/// `s = a ⊕ n` with `a` abelian, `ad_A` symmetric and faithful, and the
/// scalar product definite on `a`; roots not yet computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IwasawaSplit {
    algebra: MetricLieAlgebra,
    a: Subspace,
    n: Subspace,
    a_gram: RatMatrix,
}

impl IwasawaSplit {
    /// Checks everything except root rationality and positivity.
    pub fn new(algebra: &MetricLieAlgebra, a_hint: Option<&[usize]>) -> Result<Self, IwasawaError> {
        let report = algebra.validate();
        if !report.is_valid() {
            return Err(IwasawaError::Invalid(report));
        }
        let dim = algebra.dim();
        let n = algebra.derived_algebra();
        let complement = n.orthogonal_complement(algebra.gram());
        let a = match a_hint {
            Some(idx) => {
                let hinted = Subspace::new(dim, Subspace::coordinate(dim, idx).basis().to_vec())?;
                if !hinted.same_span(&complement) {
                    return Err(IwasawaError::HintMismatch);
                }
                hinted
            }
            None => complement,
        };
        if a.dim() + n.dim() != dim || a.intersection(&n).dim() != 0 {
            return Err(IwasawaError::Decomposition(format!(
                "a = [s,s]^perp (dim {}) and n = [s,s] (dim {}) do not split s (dim {dim})",
                a.dim(),
                n.dim()
            )));
        }
        for (i, x) in a.basis().iter().enumerate() {
            for (j, y) in a.basis().iter().enumerate().skip(i + 1) {
                if !algebra.bracket(x, y).iter().all(Zero::is_zero) {
                    return Err(IwasawaError::NotAbelian(i, j));
                }
            }
        }
        for (i, x) in a.basis().iter().enumerate() {
            if !(algebra.gram() * &algebra.ad_matrix(x)).is_symmetric() {
                return Err(IwasawaError::NotSymmetric(i));
            }
        }
        if n.dim() > 0 && a.dim() > 0 {
            let rows: Vec<RatVector> = a.basis().iter().map(|x| algebra.ad_matrix(x).row_vectors().concat()).collect();
            let flat = RatMatrix::from_columns(dim * dim, &rows);
            if let Some(k) = flat.kernel().first() {
                return Err(IwasawaError::NotFaithful(format_vec(&a.embed(k))));
            }
        }
        let a_gram = a.restricted_gram(algebra.gram());
        if let Some(w) = a_gram.positive_definite_witness()? {
            return Err(IwasawaError::NotPositiveDefinite(format_vec(&a.embed(&w))));
        }
        Ok(IwasawaSplit {
            algebra: algebra.clone(),
            a,
            n,
            a_gram,
        })
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.algebra
    }

    pub fn a(&self) -> &Subspace {
        &self.a
    }

    pub fn n(&self) -> &Subspace {
        &self.n
    }

    /// Gram matrix of the a-basis.
    pub fn a_gram(&self) -> &RatMatrix {
        &self.a_gram
    }

    /// `ad_A|n` in n-coordinates, one per a-basis vector.
    pub fn ad_family(&self) -> Result<Vec<RatMatrix>, IwasawaError> {
        self.a
            .basis()
            .iter()
            .map(|x| Ok(self.algebra.compress(&self.algebra.ad_matrix(x), &self.n)?))
            .collect()
    }
}

/// A verified strong Iwasawa decomposition with exact root data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IwasawaDecomposition {
    split: IwasawaSplit,
    /// Concatenation of the root-space bases in root order.
    n_adapted: Subspace,
    roots: Vec<Root>,
    root_spaces: Vec<Subspace>,
    witness: RatVector,
}

/// Verifies strong Iwasawa type with no hints; the witness comes from an exact
/// Fourier–Motzkin search.
pub fn verify_strong_iwasawa(algebra: &MetricLieAlgebra) -> Result<IwasawaDecomposition, IwasawaError> {
    verify_strong_iwasawa_with(algebra, None, None).map(|(d, _)| d)
}

/// As [`verify_strong_iwasawa`], using an a-basis hint and a simple system
/// (roots as coordinates on the a-basis) when supplied. With a simple system
/// the witness is the sum of its dual basis.
pub fn verify_strong_iwasawa_with(
    algebra: &MetricLieAlgebra,
    a_hint: Option<&[usize]>,
    simple: Option<&[RatVector]>,
) -> Result<(IwasawaDecomposition, Option<SimpleSystem>), IwasawaError> {
    let split = IwasawaSplit::new(algebra, a_hint)?;
    let (roots, root_spaces) = root_data(&split)?;
    let mut dec = IwasawaDecomposition {
        n_adapted: Subspace::new(
            algebra.dim(),
            root_spaces.iter().flat_map(|s| s.basis().iter().cloned()).collect(),
        )?,
        split,
        roots,
        root_spaces,
        witness: Vec::new(),
    };
    let system = simple.map(|s| verify_simple_system(&dec, s)).transpose()?;
    let witness = match &system {
        Some(sys) => sys.dual_basis.iter().fold(vec![zero(); algebra.dim()], |acc, b| add_vec(&acc, b)),
        None => {
            let rows: Vec<RatVector> = dec.roots.iter().map(|r| r.coords.clone()).collect();
            let x = witness::positive_point(&rows, dec.split.a.dim()).ok_or(IwasawaError::NoPositiveWitness)?;
            dec.split.a.embed(&x)
        }
    };
    if dec.roots.iter().any(|r| !dec.evaluate(&r.coords, &witness).is_positive()) {
        return Err(IwasawaError::NoPositiveWitness);
    }
    dec.witness = witness;
    Ok((dec, system))
}

/// Joint eigenspaces of `{ad_A|n}`, ordered lexicographically by root coordinates.
fn root_data(split: &IwasawaSplit) -> Result<(Vec<Root>, Vec<Subspace>), IwasawaError> {
    let dim = split.algebra.dim();
    if split.n.dim() == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    if split.a.dim() == 0 {
        return Err(IwasawaError::ZeroRoot(split.n.dim()));
    }
    let mut roots = Vec::new();
    let mut spaces = Vec::new();
    for js in simultaneous_eigenspaces(&split.ad_family()?)? {
        let ambient: Vec<RatVector> = js.space.iter().map(|c| split.n.embed(c)).collect();
        if js.weight.iter().all(Zero::is_zero) {
            return Err(IwasawaError::ZeroRoot(ambient.len()));
        }
        let space = Subspace::span(dim, &ambient);
        let g = space.restricted_gram(split.algebra.gram());
        if g.determinant()?.is_zero() {
            return Err(IwasawaError::DegenerateRootSpace(format_vec(&js.weight)));
        }
        roots.push(Root {
            coords: js.weight,
            multiplicity: space.dim(),
        });
        spaces.push(space);
    }
    Ok((roots, spaces))
}

impl IwasawaDecomposition {
    pub fn split(&self) -> &IwasawaSplit {
        &self.split
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.split.algebra
    }

    pub fn a(&self) -> &Subspace {
        &self.split.a
    }

    /// `n` with a root-adapted basis.
    pub fn n(&self) -> &Subspace {
        &self.n_adapted
    }

    pub fn a_gram(&self) -> &RatMatrix {
        &self.split.a_gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_spaces(&self) -> &[Subspace] {
        &self.root_spaces
    }

    /// `A0 ∈ a` with `α(A0) > 0` for every root.
    pub fn witness(&self) -> &RatVector {
        &self.witness
    }

    pub fn root_index(&self, coords: &[Rational]) -> Option<usize> {
        self.roots.iter().position(|r| r.coords == coords)
    }

    /// Coordinates of `x ∈ a` on the a-basis.
    pub fn a_coords(&self, x: &[Rational]) -> Option<RatVector> {
        self.split.a.coords(x)
    }

    /// `α(x)` for the covector `α` and an ambient `x`; the n-component of `x` is ignored.
    pub fn evaluate(&self, alpha: &[Rational], x: &[Rational]) -> Rational {
        let projected = self
            .split
            .a
            .project(self.algebra().gram(), x)
            .expect("scalar product definite on a");
        dot(alpha, &self.a_coords(&projected).expect("projection lies in a"))
    }

    /// `H_α ∈ a` with `⟨H_α, A⟩ = α(A)` for all `A ∈ a`.
    pub fn root_vector(&self, alpha: &[Rational]) -> RatVector {
        let c = self
            .a_gram()
            .solve(alpha)
            .ok()
            .and_then(|s| s.unique())
            .expect("scalar product definite on a");
        self.split.a.embed(&c)
    }

    /// `⟨α, β⟩ = ⟨H_α, H_β⟩`
    pub fn root_inner(&self, alpha: &[Rational], beta: &[Rational]) -> Rational {
        self.algebra().inner(&self.root_vector(alpha), &self.root_vector(beta))
    }

    /// `B_i ∈ a` with `α_i(B_j) = δ_ij`; fails unless the covectors form a basis of `a*`.
    pub fn dual_basis(&self, lambda: &[RatVector]) -> Result<Vec<RatVector>, IwasawaError> {
        let r = self.a().dim();
        if lambda.len() != r || lambda.iter().any(|l| l.len() != r) {
            return Err(IwasawaError::Simple(format!(
                "need {r} covectors of length {r} for a basis of a*, got {}",
                lambda.len()
            )));
        }
        let inv = RatMatrix::from_rows(lambda)
            .inverse()
            .map_err(|_| IwasawaError::Simple("covectors are not a basis of a*".into()))?;
        Ok(inv.columns().iter().map(|c| self.split.a.embed(c)).collect())
    }

    /// `s_β(A) = A − 2⟨A, H_β⟩ / ⟨H_β, H_β⟩ · H_β`
    pub fn reflect(&self, beta: &[Rational], x: &[Rational]) -> RatVector {
        let h = self.root_vector(beta);
        let hh = self.algebra().inner(&h, &h);
        assert!(!hh.is_zero(), "reflection in a zero covector");
        let c = Rational::from_integer(2.into()) * self.algebra().inner(x, &h) / hh;
        sub_vec(x, &scale_vec(&c, &h))
    }

    /// `š_β(γ)`: the covector whose root vector is `s_β(H_γ)`.
    pub fn dual_reflect(&self, beta: &[Rational], gamma: &[Rational]) -> RatVector {
        let image = self.reflect(beta, &self.root_vector(gamma));
        self.a().basis().iter().map(|a| self.algebra().inner(&image, a)).collect()
    }

    /// Roots that are not a sum of two roots.
    pub fn suggest_simple_system(&self) -> Vec<RatVector> {
        let coords: Vec<&RatVector> = self.roots.iter().map(|r| &r.coords).collect();
        coords
            .iter()
            .filter(|&&c| {
                !coords
                    .iter()
                    .any(|&b| coords.iter().any(|&g| &add_vec(b, g) == c))
            })
            .map(|&c| c.clone())
            .collect()
    }
}

/// A verified simple system `Λ` with dual basis and root expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleSystem {
    /// Root indices of `Λ`, in the given order.
    pub lambda: Vec<usize>,
    /// `B_{α_i}` as ambient vectors.
    pub dual_basis: Vec<RatVector>,
    /// Coefficients of every root on `Λ`, indexed like the roots.
    pub expansions: Vec<RatVector>,
}

impl SimpleSystem {
    /// Root indices sorted lexicographically by expansion.
    pub fn ordered_roots(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.expansions.len()).collect();
        idx.sort_by(|&i, &j| self.expansions[i].cmp(&self.expansions[j]));
        idx
    }

    /// Canonical label of root `i`: `a0`, `a1+a2`, `2a0+a1`, ...
    pub fn root_label(&self, i: usize) -> String {
        let parts: Vec<String> = self.expansions[i]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| if c.is_one() { format!("a{k}") } else { format!("{c}a{k}") })
            .collect();
        parts.join("+")
    }

    /// Position in `Λ` of the simple root labelled `a<k>`.
    pub fn simple_by_label(&self, label: &str) -> Option<usize> {
        let k: usize = label.strip_prefix('a')?.parse().ok()?;
        (k < self.lambda.len()).then_some(k)
    }
}

/// Checks `Λ ⊆ Δ`, that `Λ` is a basis of `a*`, and that every root expands
/// on `Λ` with nonnegative integer coefficients.
pub fn verify_simple_system(dec: &IwasawaDecomposition, lambda: &[RatVector]) -> Result<SimpleSystem, IwasawaError> {
    let indices = lambda
        .iter()
        .map(|l| {
            dec.root_index(l)
                .ok_or_else(|| IwasawaError::Simple(format!("{} is not a root", format_vec(l))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let dual_basis = dec.dual_basis(lambda)?;
    let transpose = RatMatrix::from_rows(lambda).transpose();
    let mut expansions = Vec::with_capacity(dec.roots.len());
    for r in &dec.roots {
        let c = transpose
            .solve(&r.coords)?
            .unique()
            .expect("lambda is a basis");
        if c.iter().any(|x| x.is_negative() || !x.is_integer()) {
            return Err(IwasawaError::Simple(format!(
                "root {} has coefficients {} on the simple system",
                format_vec(&r.coords),
                format_vec(&c)
            )));
        }
        expansions.push(c);
    }
    Ok(SimpleSystem {
        lambda: indices,
        dual_basis,
        expansions,
    })
}
