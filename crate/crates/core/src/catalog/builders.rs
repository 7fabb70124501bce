//! Programmatic constructions of the built-in algebras.

use num_traits::{Signed, Zero};

use crate::lie::MetricLieAlgebra;
use crate::numerics::{int, rat, zero, RatMatrix, RatVector, Rational};

use super::CatalogError;

type Mat = RatMatrix;

/// `E_ij` in `gl_n`, 0-based.
fn unit_matrix(n: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    m[(i, j)] = int(1);
    m
}

fn flatten(m: &Mat) -> RatVector {
    m.row_vectors().concat()
}

/// Coordinates of `m` in the span of `basis`; `None` when outside.
fn matrix_coords(basis: &[&Mat], m: &Mat) -> Option<RatVector> {
    if basis.is_empty() {
        return m.is_zero().then(Vec::new);
    }
    let k = flatten(basis[0]).len();
    let system = Mat::from_columns(k, &basis.iter().map(|b| flatten(b)).collect::<Vec<_>>());
    system.solve(&flatten(m)).ok()?.unique()
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// An element of the truncated loop algebra: the derivation `D` or `t^deg ⊗ X`.
#[derive(Clone)]
enum LoopElement {
    Degree,
    Loop(usize, Mat),
}

/// The 14-dimensional solvable extension of the degree ≤ 1 truncation of
/// the positive part of the untwisted affine algebra of `sl3`.
///
/// Basis order: `D, H1, H2, E12, E13, E23, tE12, tE13, tE23, tE21, tE31,
/// tE32, tH12, tH23`, where `H1 = 1⊗H12`, `H2 = 1⊗H23` and `tX = t⊗X`.
pub fn build_km_sl3() -> MetricLieAlgebra {
    let e = |i: usize, j: usize| unit_matrix(3, i - 1, j - 1);
    let h12 = &e(1, 1) - &e(2, 2);
    let h23 = &e(2, 2) - &e(3, 3);
    let basis = vec![
        LoopElement::Degree,
        LoopElement::Loop(0, h12.clone()),
        LoopElement::Loop(0, h23.clone()),
        LoopElement::Loop(0, e(1, 2)),
        LoopElement::Loop(0, e(1, 3)),
        LoopElement::Loop(0, e(2, 3)),
        LoopElement::Loop(1, e(1, 2)),
        LoopElement::Loop(1, e(1, 3)),
        LoopElement::Loop(1, e(2, 3)),
        LoopElement::Loop(1, e(2, 1)),
        LoopElement::Loop(1, e(3, 1)),
        LoopElement::Loop(1, e(3, 2)),
        LoopElement::Loop(1, h12),
        LoopElement::Loop(1, h23),
    ];
    let names = labels(&[
        "D", "H1", "H2", "E12", "E13", "E23", "tE12", "tE13", "tE23", "tE21", "tE31", "tE32", "tH12", "tH23",
    ]);
    let n = basis.len();

    let by_degree = |d: usize| -> (Vec<usize>, Vec<&Mat>) {
        basis
            .iter()
            .enumerate()
            .filter_map(|(k, b)| match b {
                LoopElement::Loop(deg, m) if *deg == d => Some((k, m)),
                _ => None,
            })
            .unzip()
    };
    let embed = |deg: usize, m: &Mat| -> RatVector {
        let mut out = vec![zero(); n];
        if deg > 1 || m.is_zero() {
            return out;
        }
        let (idx, mats) = by_degree(deg);
        let c = matrix_coords(&mats, m).expect("bracket stays in the truncated algebra");
        for (k, v) in idx.into_iter().zip(c) {
            out[k] = v;
        }
        out
    };
    let bracket = |i: usize, j: usize| -> RatVector {
        match (&basis[i], &basis[j]) {
            (LoopElement::Degree, LoopElement::Degree) => vec![zero(); n],
            (LoopElement::Degree, LoopElement::Loop(d, m)) => embed(*d, &m.scale(&int(*d as i64))),
            (LoopElement::Loop(d, m), LoopElement::Degree) => embed(*d, &m.scale(&int(-(*d as i64)))),
            (LoopElement::Loop(d1, x), LoopElement::Loop(d2, y)) => embed(d1 + d2, &x.commutator(y)),
        }
    };

    let mut gram = Mat::zeros(n, n);
    gram[(0, 0)] = rat(16, 9);
    gram[(1, 1)] = int(4);
    gram[(2, 2)] = int(4);
    gram[(1, 2)] = int(-2);
    gram[(2, 1)] = int(-2);
    for i in 3..n {
        for j in 3..n {
            if let (LoopElement::Loop(d1, x), LoopElement::Loop(d2, y)) = (&basis[i], &basis[j]) {
                if d1 == d2 {
                    gram[(i, j)] = (&x.transpose() * y).trace();
                }
            }
        }
    }
    MetricLieAlgebra::from_bracket_fn("km-sl3", names, gram, bracket).expect("well-formed construction")
}

/// A real matrix Lie algebra together with its Iwasawa data.
struct MatrixIwasawa {
    full: Vec<Mat>,
    a: Vec<Mat>,
    n: Vec<Mat>,
    labels: Vec<String>,
}

impl MatrixIwasawa {
    /// `s = a ⊕ n` with `2B_σ` on `a`, `B_σ` on `n`, where
    /// `B_σ(X, Y) = −B(X, σY)`, `σ(Y) = −Yᵀ` and `B` is the Killing form of
    /// the full algebra computed from its adjoint matrices.
    fn build(self, name: &str) -> MetricLieAlgebra {
        let full: Vec<&Mat> = self.full.iter().collect();
        let dim = full.len();
        let coords = |m: &Mat| matrix_coords(&full, m).expect("closed under commutator");
        let ad: Vec<Mat> = full
            .iter()
            .map(|x| Mat::from_columns(dim, &full.iter().map(|y| coords(&x.commutator(y))).collect::<Vec<_>>()))
            .collect();
        let killing = Mat::from_fn(dim, dim, |i, j| (&ad[i] * &ad[j]).trace());
        let b = |x: &Mat, y: &Mat| killing.bilinear(&coords(x), &coords(y));
        let b_sigma = |x: &Mat, y: &Mat| b(x, &y.transpose());

        let s: Vec<&Mat> = self.a.iter().chain(&self.n).collect();
        let r = self.a.len();
        let k = s.len();
        let gram = Mat::from_fn(k, k, |i, j| match (i < r, j < r) {
            (true, true) => int(2) * b_sigma(s[i], s[j]),
            (false, false) => b_sigma(s[i], s[j]),
            _ => zero(),
        });
        MetricLieAlgebra::from_bracket_fn(name, self.labels, gram, |i, j| {
            matrix_coords(&s, &s[i].commutator(s[j])).expect("Iwasawa subalgebra is closed")
        })
        .expect("well-formed construction")
    }
}

/// Which split real form to take the Iwasawa solvable part of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricKind {
    /// `sl3(ℝ)`: rank 2, `n = span{E12, E23, E13}`.
    Sl3,
    /// `so(n, 1)`: rank 1, `n` abelian of dimension `n − 1`; real hyperbolic `n`-space.
    SoN1(usize),
}

/// Iwasawa solvable part `a ⊕ n` of a noncompact semisimple algebra with
/// the symmetric-space metric.
pub fn build_symmetric_iwasawa(kind: SymmetricKind) -> Result<MetricLieAlgebra, CatalogError> {
    match kind {
        SymmetricKind::Sl3 => {
            let e = |i: usize, j: usize| unit_matrix(3, i - 1, j - 1);
            let h12 = &e(1, 1) - &e(2, 2);
            let h23 = &e(2, 2) - &e(3, 3);
            let nilradical = vec![e(1, 2), e(2, 3), e(1, 3)];
            let mut full = nilradical.clone();
            full.extend([e(2, 1), e(3, 2), e(3, 1), h12.clone(), h23.clone()]);
            Ok(MatrixIwasawa {
                full,
                a: vec![h12, h23],
                n: nilradical,
                labels: labels(&["H12", "H23", "E12", "E23", "E13"]),
            }
            .build("iwasawa-sl3"))
        }
        SymmetricKind::SoN1(n) => {
            if n < 2 {
                return Err(CatalogError::BadParameter(format!("hyperbolic:{n} needs n >= 2")));
            }
            let size = n + 1;
            let last = n;
            let e = |i, j| unit_matrix(size, i, j);
            let boost = |i: usize| &e(i, last) + &e(last, i);
            let mut full = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    full.push(&e(i, j) - &e(j, i));
                }
                full.push(boost(i));
            }
            // Sign chosen so that the single root is positive on A.
            let a = -&boost(0);
            let nil: Vec<Mat> = (1..n).map(|k| &(&(&e(k, 0) - &e(0, k)) + &e(k, last)) + &e(last, k)).collect();
            let mut names = vec!["A".to_string()];
            names.extend((1..n).map(|k| format!("N{k}")));
            Ok(MatrixIwasawa {
                full,
                a: vec![a],
                n: nil,
                labels: names,
            }
            .build(&format!("hyperbolic:{n}")))
        }
    }
}

/// The 3-dimensional Heisenberg algebra `[X, Y] = Z` extended by one
/// diagonal derivation `A` with weights `(w_X, w_Y, w_Z)`; basis `A, X, Y, Z`,
/// orthonormal scalar product.
pub fn build_heisenberg_extension(weights: &[Rational]) -> Result<MetricLieAlgebra, CatalogError> {
    build_heisenberg_extension_scaled(weights, &int(1))
}

/// As [`build_heisenberg_extension`] with `⟨A, A⟩ = a_norm`.
pub fn build_heisenberg_extension_scaled(weights: &[Rational], a_norm: &Rational) -> Result<MetricLieAlgebra, CatalogError> {
    let [wx, wy, wz] = weights else {
        return Err(CatalogError::BadParameter(format!(
            "heisenberg extension needs 3 weights, got {}",
            weights.len()
        )));
    };
    if [wx, wy, wz].iter().any(|w| !w.is_positive()) {
        return Err(CatalogError::BadParameter("heisenberg weights must be positive".into()));
    }
    if &(wx + wy) != wz {
        return Err(CatalogError::BadParameter(
            "heisenberg weights must satisfy w_Z = w_X + w_Y for [X, Y] = Z".into(),
        ));
    }
    if !a_norm.is_positive() {
        return Err(CatalogError::BadParameter("norm of A must be positive".into()));
    }
    let mut gram = Mat::identity(4);
    gram[(0, 0)] = a_norm.clone();
    let unit = |k: usize, c: &Rational| {
        let mut v = vec![zero(); 4];
        v[k] = c.clone();
        v
    };
    let records = vec![
        ((0, 1), unit(1, wx)),
        ((0, 2), unit(2, wy)),
        ((0, 3), unit(3, wz)),
        ((1, 2), unit(3, &int(1))),
    ];
    Ok(MetricLieAlgebra::new("heisenberg-ext-1", labels(&["A", "X", "Y", "Z"]), records, gram)?)
}

/// Heisenberg algebra extended by two derivations: `ad_{A1} = diag(1, 0, 1)`
/// and `ad_{A2} = diag(0, 1, 1)` on `(X, Y, Z)`. The roots `α_X, α_Y` have
/// dual Gram matrix `dual_gram` (so the scalar product on `a` is its
/// inverse); `n_norms` gives `⟨X,X⟩, ⟨Y,Y⟩, ⟨Z,Z⟩`, any nonzero signs.
pub fn build_heisenberg_rank2(dual_gram: &RatMatrix, n_norms: &[Rational]) -> Result<MetricLieAlgebra, CatalogError> {
    if dual_gram.rows() != 2 || !dual_gram.is_symmetric() {
        return Err(CatalogError::BadParameter("dual Gram matrix must be symmetric 2x2".into()));
    }
    if dual_gram.positive_definite_witness().ok().flatten().is_some() {
        return Err(CatalogError::BadParameter("dual Gram matrix must be positive definite".into()));
    }
    if n_norms.len() != 3 || n_norms.iter().any(Zero::is_zero) {
        return Err(CatalogError::BadParameter("need three nonzero norms for X, Y, Z".into()));
    }
    let a_gram = dual_gram.inverse().map_err(|_| CatalogError::BadParameter("singular dual Gram".into()))?;
    let mut gram = Mat::zeros(5, 5);
    for i in 0..2 {
        for j in 0..2 {
            gram[(i, j)] = a_gram[(i, j)].clone();
        }
    }
    for (k, v) in n_norms.iter().enumerate() {
        gram[(k + 2, k + 2)] = v.clone();
    }
    let unit = |k: usize| crate::numerics::unit_vec(5, k);
    let records = vec![
        ((0, 2), unit(2)),
        ((0, 4), unit(4)),
        ((1, 3), unit(3)),
        ((1, 4), unit(4)),
        ((2, 3), unit(4)),
    ];
    Ok(MetricLieAlgebra::new(
        "heisenberg-ext",
        labels(&["A1", "A2", "X", "Y", "Z"]),
        records,
        gram,
    )?)
}

/// Direct product of two real hyperbolic planes `[A_i, N_i] = N_i`, with an
/// orthonormal basis `A1, N1, A2, N2`. Its two simple roots are orthogonal.
pub fn build_hyperbolic_product() -> MetricLieAlgebra {
    let unit = |k: usize| crate::numerics::unit_vec(4, k);
    MetricLieAlgebra::new(
        "hyperbolic-product",
        labels(&["A1", "N1", "A2", "N2"]),
        vec![((0, 1), unit(1)), ((2, 3), unit(3))],
        Mat::identity(4),
    )
    .expect("well-formed construction")
}
