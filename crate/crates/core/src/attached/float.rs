//! Floating-point evaluations: the Jacobi Star identity on a concrete
//! compatible orthonormal basis, and numeric roots when the exact spectrum
//! is irrational.

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};
use thiserror::Error;

use crate::curvature::float::orthonormal_frame;
use crate::iwasawa::IwasawaSplit;
use crate::numerics::float::to_dmatrix;
use crate::numerics::RatMatrix;

use super::AttachedSubalgebra;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FloatError {
    #[error("scalar product numerically degenerate on a root space")]
    DegenerateRootSpace,
    #[error("numeric roots need a definite scalar product on n")]
    IndefiniteNilradical,
    #[error(transparent)]
    Lie(#[from] crate::lie::LieError),
}

/// Outcome of the literal evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectJacobiStar {
    pub holds: bool,
    /// Largest entrywise gap between the two sides, relative to `max(1, |entry|)`.
    pub max_deviation: f64,
    pub tolerance: f64,
}

fn cols(m: &RatMatrix) -> DMatrix<f64> {
    to_dmatrix(m)
}

/// `½ Σ_j ε_j [(ad_{E_j})^{*,n}, ad_{E_j}](X)` against `ad_{Σ ε_j (ad_{E_j})^{*,s} E_j}(X)`
/// for `X` in the `n′` basis, with `{E_j}` orthonormal in each root space of `n₀`.
pub fn jacobi_star_direct(att: &AttachedSubalgebra, tol: f64) -> Result<DirectJacobiStar, FloatError> {
    let dec = att.parent();
    let l = dec.algebra();
    let d = l.dim();
    let n = dec.n();
    let g = cols(l.gram());
    let g_inv = g.clone().try_inverse().ok_or(FloatError::DegenerateRootSpace)?;
    let n_basis = cols(&n.matrix());
    let g_n = n_basis.transpose() * &g * &n_basis;
    let g_n_inv = g_n.clone().try_inverse().ok_or(FloatError::DegenerateRootSpace)?;
    let ad: Vec<DMatrix<f64>> = (0..d).map(|k| cols(l.ad_basis(k))).collect();
    let ad_of = |v: &DVector<f64>| ad.iter().enumerate().fold(DMatrix::zeros(d, d), |acc, (k, m)| acc + m * v[k]);
    // Coordinates on n of an ambient vector in n.
    let n_coords = |v: &DVector<f64>| &g_n_inv * (n_basis.transpose() * &g * v);

    let mut frame: Vec<(DVector<f64>, f64)> = Vec::new();
    for space in dec.root_spaces() {
        if !att.n_zero().contains_subspace(space) {
            continue;
        }
        let w = cols(&space.matrix());
        let local = orthonormal_frame(&(w.transpose() * &g * &w), tol).ok_or(FloatError::DegenerateRootSpace)?;
        for (i, sign) in local.signs.iter().enumerate() {
            frame.push((&w * local.p.column(i), *sign));
        }
    }

    let k = n.dim();
    let mut commutator_sum = DMatrix::zeros(k, k);
    let mut v = DVector::zeros(d);
    for (e, eps) in &frame {
        let ad_e = ad_of(e);
        let on_n = &g_n_inv * n_basis.transpose() * &g * &ad_e * &n_basis;
        let on_n_star = &g_n_inv * on_n.transpose() * &g_n;
        commutator_sum += (&on_n_star * &on_n - &on_n * &on_n_star) * *eps;
        v += (&g_inv * ad_e.transpose() * &g * e) * *eps;
    }
    let ad_v = ad_of(&v);
    let mut max_deviation: f64 = 0.0;
    for x in att.n_prime().basis() {
        let x = DVector::from_vec(x.iter().map(crate::numerics::to_f64).collect());
        let lhs = &n_basis * (&commutator_sum * n_coords(&x) * 0.5);
        let rhs = &ad_v * &x;
        for (a, b) in lhs.iter().zip(rhs.iter()) {
            max_deviation = max_deviation.max((a - b).abs() / a.abs().max(b.abs()).max(1.0));
        }
    }
    Ok(DirectJacobiStar {
        holds: max_deviation <= tol,
        max_deviation,
        tolerance: tol,
    })
}

/// A numerically computed root.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatRoot {
    pub coords: Vec<f64>,
    pub multiplicity: usize,
}

/// Roots from the eigendecomposition of a generic `ad_A|n`, grouped within
/// `tol` and evaluated on each a-basis vector by Rayleigh quotients.
pub fn float_roots(split: &IwasawaSplit, tol: f64) -> Result<Vec<FloatRoot>, FloatError> {
    let l = split.algebra();
    let n = split.n();
    if n.dim() == 0 {
        return Ok(Vec::new());
    }
    let family: Vec<DMatrix<f64>> = split
        .a()
        .basis()
        .iter()
        .map(|x| l.compress(&l.ad_matrix(x), n).map(|m| to_dmatrix(&m)))
        .collect::<Result<_, _>>()?;
    let g_n = to_dmatrix(&n.restricted_gram(l.gram()));
    let chol = Cholesky::new(g_n.clone()).ok_or(FloatError::IndefiniteNilradical)?;
    let lower = chol.l();
    let lower_inv_t = lower.clone().try_inverse().ok_or(FloatError::IndefiniteNilradical)?.transpose();
    // Generic combination: incommensurable weights separate distinct roots.
    let generic = family
        .iter()
        .enumerate()
        .fold(DMatrix::zeros(n.dim(), n.dim()), |acc, (i, m)| acc + m * (1.0 + (i as f64 + 1.0).sqrt() / 7.0));
    let sym = lower.transpose() * &generic * &lower_inv_t;
    let sym = (&sym + sym.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n.dim()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let mut roots: Vec<FloatRoot> = Vec::new();
    let mut last: Option<f64> = None;
    for i in order {
        let u = &lower_inv_t * eig.eigenvectors.column(i);
        let norm = (u.transpose() * &g_n * &u)[(0, 0)];
        let coords: Vec<f64> = family.iter().map(|m| (u.transpose() * &g_n * m * &u)[(0, 0)] / norm).collect();
        let value = eig.eigenvalues[i];
        match (last, roots.last_mut()) {
            (Some(prev), Some(r)) if (value - prev).abs() <= tol * value.abs().max(1.0) => {
                let k = r.multiplicity as f64;
                for (c, x) in r.coords.iter_mut().zip(&coords) {
                    *c = (*c * k + x) / (k + 1.0);
                }
                r.multiplicity += 1;
            }
            _ => roots.push(FloatRoot {
                coords,
                multiplicity: 1,
            }),
        }
        last = Some(value);
    }
    roots.sort_by(|a, b| {
        a.coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(roots)
}
