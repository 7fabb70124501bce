//! Orthonormal-basis evaluations in `f64`, used only to cross-check the exact path.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::lie::MetricLieAlgebra;
use crate::numerics::float::to_dmatrix;

/// A basis `E_i` (columns of `p`) with `⟨E_i, E_j⟩ = ε_i δ_ij`.
#[derive(Debug, Clone)]
pub struct OrthonormalFrame {
    pub p: DMatrix<f64>,
    pub signs: Vec<f64>,
}

/// Orthonormal frame from the symmetric eigendecomposition of a Gram matrix;
/// `None` when some eigenvalue is within `tol` of zero.
pub fn orthonormal_frame(gram: &DMatrix<f64>, tol: f64) -> Option<OrthonormalFrame> {
    let n = gram.nrows();
    let eig = SymmetricEigen::new(gram.clone());
    let mut p = DMatrix::zeros(n, n);
    let mut signs = Vec::with_capacity(n);
    for i in 0..n {
        let l = eig.eigenvalues[i];
        if l.abs() <= tol {
            return None;
        }
        p.set_column(i, &(eig.eigenvectors.column(i) / l.abs().sqrt()));
        signs.push(l.signum());
    }
    Some(OrthonormalFrame { p, signs })
}

/// `Ric = ¼ Σ ε_i ad_{E_i} ad*_{E_i} − ½ Σ ε_i ad*_{E_i} ad_{E_i}` summed over an
/// orthonormal frame, with adjoints `η Mᵀ η` taken in frame coordinates.
/// Returned in the algebra's own basis.
pub fn ricci_nilpotent_orthonormal(n: &MetricLieAlgebra, tol: f64) -> Option<DMatrix<f64>> {
    let d = n.dim();
    let frame = orthonormal_frame(&to_dmatrix(n.gram()), tol)?;
    let p_inv = frame.p.clone().try_inverse()?;
    let eta = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(frame.signs.clone()));
    let ad: Vec<DMatrix<f64>> = (0..d).map(|i| to_dmatrix(n.ad_basis(i))).collect();
    let mut ric = DMatrix::zeros(d, d);
    for i in 0..d {
        let e = frame.p.column(i);
        let mut ad_e = DMatrix::zeros(d, d);
        for (k, m) in ad.iter().enumerate() {
            ad_e += m * e[k];
        }
        let local = &p_inv * &ad_e * &frame.p;
        let local_star = &eta * local.transpose() * &eta;
        ric += (&local * &local_star * 0.25 - &local_star * &local * 0.5) * frame.signs[i];
    }
    Some(&frame.p * ric * p_inv)
}
