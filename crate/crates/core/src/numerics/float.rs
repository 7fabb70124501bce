//! Conversions between exact matrices and `f64` matrices for the float
//! cross-checks.

use nalgebra::DMatrix;

use super::matrix::RatMatrix;
use super::rational::{from_f64, to_f64, zero};

pub fn to_dmatrix(m: &RatMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| to_f64(&m[(i, j)]))
}

/// Exact image of a finite float matrix; non-finite entries become zero.
pub fn from_dmatrix(m: &DMatrix<f64>) -> RatMatrix {
    RatMatrix::from_fn(m.nrows(), m.ncols(), |i, j| from_f64(m[(i, j)]).unwrap_or_else(zero))
}

/// Largest absolute entry of `a − b`; infinite on a shape mismatch.
pub fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    (a - b).iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

/// `|a − b| ≤ tol · max(1, |a|, |b|)` entrywise.
pub fn approx_eq(a: &DMatrix<f64>, b: &DMatrix<f64>, tol: f64) -> bool {
    a.shape() == b.shape()
        && a.iter()
            .zip(b.iter())
            .all(|(x, y)| (x - y).abs() <= tol * 1f64.max(x.abs()).max(y.abs()))
}
