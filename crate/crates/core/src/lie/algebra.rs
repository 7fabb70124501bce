use std::collections::BTreeMap;

use num_traits::Zero;

use crate::numerics::{axpy, format_combination, zero, RatMatrix, RatVector, Rational};

use super::{LieError, Subspace};

/// Full structure tensor `c[i][j]`, the coordinate vector of `[e_i, e_j]`.
pub type StructureTensor = Vec<Vec<RatVector>>;

/// A finite-dimensional real Lie algebra with a symmetric bilinear form on a
/// fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    name: String,
    labels: Vec<String>,
    /// `[e_i, e_j]` for `i < j`, indexed by [`pair_index`].
    upper: Vec<RatVector>,
    gram: RatMatrix,
    ad: Vec<RatMatrix>,
}

/// Outcome of the structural checks; every `None` witness is a pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    /// First `(i, j, k)` with `c[i][j][k] ≠ −c[j][i][k]`.
    pub antisymmetry: Option<(usize, usize, usize)>,
    /// First basis triple `i < j < k` violating the Jacobi identity.
    pub jacobi: Option<(usize, usize, usize)>,
    /// First `(i, j)` with `G[i][j] ≠ G[j][i]`.
    pub gram_symmetry: Option<(usize, usize)>,
    pub gram_nondegenerate: bool,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_none() && self.jacobi.is_none() && self.gram_symmetry.is_none() && self.gram_nondegenerate
    }
}

/// `C⁰ = V`, `C^{k+1} = [V, C^k]` until it stabilizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralSeries {
    pub terms: Vec<Subspace>,
    pub nilpotent: bool,
}

impl CentralSeries {
    /// Number of strict inclusions down to `{0}`; `None` if not nilpotent.
    pub fn step(&self) -> Option<usize> {
        self.nilpotent.then(|| self.terms.len().saturating_sub(1))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl MetricLieAlgebra {
    /// Builds from bracket records `((i, j), [e_i, e_j])` with `i < j`.
    /// Unlisted pairs bracket to zero.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), RatVector)>,
        gram: RatMatrix,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        if gram.rows() != n || gram.cols() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                found: gram.rows().max(gram.cols()),
            });
        }
        let mut upper = vec![vec![zero(); n]; n * n.saturating_sub(1) / 2];
        let mut seen = vec![false; upper.len()];
        for ((i, j), v) in brackets {
            for index in [i, j] {
                if index >= n {
                    return Err(LieError::IndexOutOfRange { index, dim: n });
                }
            }
            if i >= j {
                return Err(LieError::BracketOrder { i, j });
            }
            if v.len() != n {
                return Err(LieError::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            let p = pair_index(n, i, j);
            if seen[p] {
                return Err(LieError::DuplicateBracket { i, j });
            }
            seen[p] = true;
            upper[p] = v;
        }
        Ok(Self::assemble(name.into(), labels, upper, gram))
    }

    /// Builds from a function giving `[e_i, e_j]` for each `i < j`.
    pub fn from_bracket_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        gram: RatMatrix,
        mut f: impl FnMut(usize, usize) -> RatVector,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        let mut records = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                records.push(((i, j), f(i, j)));
            }
        }
        Self::new(name, labels, records, gram)
    }

    /// Builds from a full tensor; fails if it is not antisymmetric.
    pub fn from_tensor(name: impl Into<String>, labels: Vec<String>, c: &StructureTensor, gram: RatMatrix) -> Result<Self, LieError> {
        check_tensor_shape(c, labels.len())?;
        if let Some((i, j, k)) = antisymmetry_witness(c) {
            return Err(LieError::NotAntisymmetric(i, j, k));
        }
        Self::from_bracket_fn(name, labels, gram, |i, j| c[i][j].clone())
    }

    fn assemble(name: String, labels: Vec<String>, upper: Vec<RatVector>, gram: RatMatrix) -> Self {
        let n = labels.len();
        let mut ad = vec![RatMatrix::zeros(n, n); n];
        for i in 0..n {
            for j in i + 1..n {
                let v = &upper[pair_index(n, i, j)];
                for (k, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        ad[i][(k, j)] = c.clone();
                        ad[j][(k, i)] = -c.clone();
                    }
                }
            }
        }
        MetricLieAlgebra {
            name,
            labels,
            upper,
            gram,
            ad,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// Index of the basis vector with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> RatVector {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.upper[pair_index(n, j, i)].iter().map(|c| -c).collect(),
            std::cmp::Ordering::Equal => vec![zero(); n],
        }
    }

    pub fn to_tensor(&self) -> StructureTensor {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.structure(i, j)).collect()).collect()
    }

    /// `ad_{e_i}`; column `j` is `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> &RatMatrix {
        &self.ad[i]
    }

    /// `ad_x`; column `j` is `[x, e_j]`. Panics on a length mismatch.
    pub fn ad_matrix(&self, x: &[Rational]) -> RatMatrix {
        assert_eq!(x.len(), self.dim(), "ad_matrix dimension");
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.ad[i].scale(c);
            }
        }
        m
    }

    /// `[x, y]`. Panics on a length mismatch; see [`Self::checked_bracket`].
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> RatVector {
        assert!(x.len() == self.dim() && y.len() == self.dim(), "bracket dimension");
        let mut out = vec![zero(); self.dim()];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let col = self.ad[i].mul_vec(y);
            axpy(&mut out, c, &col);
        }
        out
    }

    pub fn checked_bracket(&self, x: &[Rational], y: &[Rational]) -> Result<RatVector, LieError> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(LieError::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// `⟨x, y⟩`
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.gram.bilinear(x, y)
    }

    pub fn gram_inverse(&self) -> Result<RatMatrix, LieError> {
        self.gram.inverse().map_err(|_| LieError::DegenerateGram("algebra scalar product"))
    }

    /// Metric adjoint of `ad_x` on `domain`, in domain coordinates:
    /// `⟨A* u, v⟩ = ⟨u, [x, v]⟩` for all `u, v` in the domain. Brackets that
    /// leave the domain are seen only through their pairing with it.
    pub fn ad_star(&self, x: &[Rational], domain: &Subspace) -> Result<RatMatrix, LieError> {
        self.metric_adjoint(&self.ad_matrix(x), domain)
    }

    /// Metric adjoint on `domain` of the compression of an ambient map `m`.
    pub fn metric_adjoint(&self, m: &RatMatrix, domain: &Subspace) -> Result<RatMatrix, LieError> {
        if domain.dim() == 0 {
            return Ok(RatMatrix::zeros(0, 0));
        }
        let w = domain.matrix();
        let gw = &self.gram * &w;
        let gd_inv = (&w.transpose() * &gw)
            .inverse()
            .map_err(|_| LieError::DegenerateGram("restriction to the adjoint domain"))?;
        Ok(&(&gd_inv * &(&w.transpose() * &m.transpose())) * &gw)
    }

    /// Matrix in domain coordinates of `π ∘ m` restricted to `domain`, with `π`
    /// the orthogonal projection onto `domain`.
    pub fn compress(&self, m: &RatMatrix, domain: &Subspace) -> Result<RatMatrix, LieError> {
        if domain.dim() == 0 {
            return Ok(RatMatrix::zeros(0, 0));
        }
        let w = domain.matrix();
        let wtg = &w.transpose() * &self.gram;
        let gd_inv = (&wtg * &w)
            .inverse()
            .map_err(|_| LieError::DegenerateGram("restriction to the compression domain"))?;
        Ok(&(&gd_inv * &wtg) * &(m * &w))
    }

    pub fn validate(&self) -> ValidityReport {
        ValidityReport {
            antisymmetry: None,
            jacobi: jacobi_witness(self.dim(), |x, y| self.bracket(x, y)),
            gram_symmetry: gram_symmetry_witness(&self.gram),
            gram_nondegenerate: self.gram.inverse().is_ok(),
        }
    }

    /// Span of all brackets of basis pairs.
    pub fn derived_algebra(&self) -> Subspace {
        self.bracket_span(&Subspace::whole(self.dim()), &Subspace::whole(self.dim()))
    }

    /// `span{[u, v] : u ∈ a, v ∈ b}`
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in a.basis() {
            let adu = self.ad_matrix(u);
            for v in b.basis() {
                vecs.push(adu.mul_vec(v));
            }
        }
        Subspace::span(self.dim(), &vecs)
    }

    /// `{x : [x, y] = 0 for all y}`
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // [x, e_j] = −ad_{e_j} x, so the center is the common kernel.
        let mut rows = Vec::new();
        for j in 0..n {
            rows.extend(self.ad[j].row_vectors());
        }
        if rows.is_empty() {
            return Subspace::whole(n);
        }
        Subspace::span(n, &RatMatrix::from_rows(&rows).kernel())
    }

    pub fn lower_central_series(&self) -> CentralSeries {
        self.lower_central_series_of(&Subspace::whole(self.dim()))
    }

    /// Lower central series of the subalgebra `sub`, computed in place.
    pub fn lower_central_series_of(&self, sub: &Subspace) -> CentralSeries {
        let mut terms = vec![sub.canonical()];
        loop {
            let last = terms.last().unwrap();
            if last.dim() == 0 {
                return CentralSeries { terms, nilpotent: true };
            }
            let next = self.bracket_span(sub, last);
            if next.dim() == last.dim() {
                return CentralSeries { terms, nilpotent: false };
            }
            terms.push(next);
        }
    }

    /// First basis pair whose bracket leaves `sub`, if any.
    pub fn closure_witness(&self, sub: &Subspace) -> Option<(usize, usize)> {
        let b = sub.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !sub.contains(&self.bracket(&b[i], &b[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// The subalgebra `sub` as a metric Lie algebra on `sub`'s basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<MetricLieAlgebra, LieError> {
        if sub.ambient_dim() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                found: sub.ambient_dim(),
            });
        }
        let gram = sub.restricted_gram(&self.gram);
        if gram.rows() > 0 && gram.inverse().is_err() {
            return Err(LieError::DegenerateGram("restriction to a subalgebra"));
        }
        let b = sub.basis();
        let mut records = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let coords = sub
                    .coords(&self.bracket(&b[i], &b[j]))
                    .ok_or(LieError::NotClosed { i, j })?;
                if !coords.iter().all(Zero::is_zero) {
                    records.push(((i, j), coords));
                }
            }
        }
        let labels = b.iter().map(|v| self.vector_label(v)).collect();
        Self::new(format!("{}'", self.name), labels, records, gram)
    }

    /// Records of all nonzero `[e_i, e_j]` with `i < j`, in index order.
    pub fn bracket_records(&self) -> BTreeMap<(usize, usize), RatVector> {
        let n = self.dim();
        let mut out = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.upper[pair_index(n, i, j)];
                if !v.iter().all(Zero::is_zero) {
                    out.insert((i, j), v.clone());
                }
            }
        }
        out
    }

    /// Label of a basis vector, or the linear combination for other vectors.
    pub fn vector_label(&self, v: &[Rational]) -> String {
        let nonzero: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
        if nonzero.len() == 1 && v[nonzero[0]] == crate::numerics::one() {
            return self.labels[nonzero[0]].clone();
        }
        format_combination(v, &self.labels)
    }
}

fn check_tensor_shape(c: &StructureTensor, n: usize) -> Result<(), LieError> {
    let mismatch = |found| LieError::DimensionMismatch { expected: n, found };
    if c.len() != n {
        return Err(mismatch(c.len()));
    }
    for row in c {
        if row.len() != n {
            return Err(mismatch(row.len()));
        }
        if let Some(v) = row.iter().find(|v| v.len() != n) {
            return Err(mismatch(v.len()));
        }
    }
    Ok(())
}

fn antisymmetry_witness(c: &StructureTensor) -> Option<(usize, usize, usize)> {
    let n = c.len();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if c[i][j][k] != -c[j][i][k].clone() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

fn gram_symmetry_witness(g: &RatMatrix) -> Option<(usize, usize)> {
    if !g.is_square() {
        return Some((0, 0));
    }
    (0..g.rows()).flat_map(|i| (i + 1..g.cols()).map(move |j| (i, j))).find(|&(i, j)| g[(i, j)] != g[(j, i)])
}

fn jacobi_witness(n: usize, bracket: impl Fn(&[Rational], &[Rational]) -> RatVector) -> Option<(usize, usize, usize)> {
    let e = |i: usize| crate::numerics::unit_vec(n, i);
    for i in 0..n {
        for j in i + 1..n {
            let eij = bracket(&e(i), &e(j));
            for k in j + 1..n {
                let t1 = bracket(&eij, &e(k));
                let t2 = bracket(&bracket(&e(j), &e(k)), &e(i));
                let t3 = bracket(&bracket(&e(k), &e(i)), &e(j));
                if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Checks a raw tensor and form; shape errors are the only failures.
pub fn validate_tensor(c: &StructureTensor, gram: &RatMatrix) -> Result<ValidityReport, LieError> {
    let n = c.len();
    check_tensor_shape(c, n)?;
    if gram.rows() != n || gram.cols() != n {
        return Err(LieError::DimensionMismatch {
            expected: n,
            found: gram.rows(),
        });
    }
    let raw_bracket = |x: &[Rational], y: &[Rational]| {
        let mut out = vec![zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), &c[i][j]);
            }
        }
        out
    };
    Ok(ValidityReport {
        antisymmetry: antisymmetry_witness(c),
        jacobi: jacobi_witness(n, raw_bracket),
        gram_symmetry: gram_symmetry_witness(gram),
        gram_nondegenerate: gram.inverse().is_ok(),
    })
}
