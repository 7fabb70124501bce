use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, one, zero, RatVector, Rational};
use super::NumericsError;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Outcome of [`RatMatrix::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(RatVector),
    /// A particular solution plus a canonical basis of the homogeneous solutions.
    NonUnique {
        particular: RatVector,
        kernel: Vec<RatVector>,
    },
    NoSolution,
}

impl LinearSolution {
    pub fn unique(self) -> Option<RatVector> {
        match self {
            LinearSolution::Unique(x) => Some(x),
            _ => None,
        }
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Panics if the rows have unequal length.
    pub fn from_rows(rows: &[RatVector]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RatMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    /// `n` is the column length, needed when `cols` is empty.
    pub fn from_columns(n: usize, cols: &[RatVector]) -> Self {
        assert!(cols.iter().all(|c| c.len() == n), "ragged columns");
        Self::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        Self::from_diagonal(&vec![c.clone(); n])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        (i < self.rows && j < self.cols).then(|| &self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> RatVector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<RatVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<RatVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// `Some(c)` when the matrix is square and equal to `c` times the identity.
    pub fn as_scalar(&self) -> Option<Rational> {
        if !self.is_square() || !self.is_diagonal() {
            return None;
        }
        if self.rows == 0 {
            return Some(zero());
        }
        let c = self[(0, 0)].clone();
        (0..self.rows).all(|i| self[(i, i)] == c).then_some(c)
    }

    pub fn diagonal(&self) -> RatVector {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn trace(&self) -> Rational {
        self.diagonal().into_iter().fold(zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    /// Panics on a length mismatch.
    pub fn mul_vec(&self, v: &[Rational]) -> RatVector {
        assert_eq!(v.len(), self.cols, "mul_vec dimension");
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `vᵀ M w`
    pub fn bilinear(&self, v: &[Rational], w: &[Rational]) -> Rational {
        super::rational::dot(v, &self.mul_vec(w))
    }

    /// `[A, B] = AB − BA`
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Rows `rs` and columns `cs` of `self`, in the given order.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Self {
        Self::from_fn(rs.len(), cs.len(), |i, j| self[(rs[i], cs[j])].clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row count");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row echelon form and pivot columns, leftmost pivot first.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical null-space basis: one vector per free column, with a 1 in
    /// that column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<RatVector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![zero(); self.cols];
                v[f] = one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn solve(&self, b: &[Rational]) -> Result<LinearSolution, NumericsError> {
        if b.len() != self.rows {
            return Err(NumericsError::DimensionMismatch {
                op: "linear_solve",
                expected: self.rows,
                found: b.len(),
            });
        }
        let aug = self.hstack(&Self::from_columns(self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(LinearSolution::NoSolution);
        }
        let mut x = vec![zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        if pivots.len() == self.cols {
            Ok(LinearSolution::Unique(x))
        } else {
            Ok(LinearSolution::NonUnique {
                particular: x,
                kernel: self.kernel(),
            })
        }
    }

    /// Solves `self · X = rhs` column by column; requires a unique solution.
    pub fn solve_matrix(&self, rhs: &Self) -> Result<Self, NumericsError> {
        if !self.is_square() {
            return Err(NumericsError::NotSquare {
                op: "solve_matrix",
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(&self.inverse()? * rhs)
    }

    pub fn inverse(&self) -> Result<Self, NumericsError> {
        if !self.is_square() {
            return Err(NumericsError::NotSquare {
                op: "inverse",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if n > 0 && pivots[n - 1] != n - 1 {
            return Err(NumericsError::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn determinant(&self) -> Result<Rational, NumericsError> {
        if !self.is_square() {
            return Err(NumericsError::NotSquare {
                op: "determinant",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let v = &m[(i, j)] - &f * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        Ok(det)
    }

    /// Symmetric congruence diagonalization: returns `(P, d)` with `P`
    /// invertible and `Pᵀ · self · P = diag(d)`. Requires a symmetric matrix.
    pub fn congruence_diagonalize(&self) -> Result<(Self, RatVector), NumericsError> {
        if !self.is_square() {
            return Err(NumericsError::NotSquare {
                op: "congruence_diagonalize",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut p = Self::identity(n);
        for k in 0..n {
            if m[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                    m.swap_rows(k, j);
                    m.swap_cols(k, j);
                    p.swap_cols(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                    // e_k <- e_k + e_j makes the pivot 2·m[k][j].
                    m.add_row(k, j, &one());
                    m.add_col(k, j, &one());
                    p.add_col(k, j, &one());
                } else {
                    continue;
                }
            }
            let piv = m[(k, k)].clone();
            for j in k + 1..n {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let f = -(&m[(k, j)] / &piv);
                m.add_row(j, k, &f);
                m.add_col(j, k, &f);
                p.add_col(j, k, &f);
            }
        }
        Ok((p, m.diagonal()))
    }

    /// `(positive, negative, zero)` counts of the symmetric form.
    pub fn signature(&self) -> Result<(usize, usize, usize), NumericsError> {
        let (_, d) = self.congruence_diagonalize()?;
        let pos = d.iter().filter(|x| x.is_positive()).count();
        let neg = d.iter().filter(|x| x.is_negative()).count();
        Ok((pos, neg, d.len() - pos - neg))
    }

    /// For a symmetric matrix: `None` when positive definite, otherwise a
    /// vector `v ≠ 0` with `vᵀ M v ≤ 0`.
    pub fn positive_definite_witness(&self) -> Result<Option<RatVector>, NumericsError> {
        let (p, d) = self.congruence_diagonalize()?;
        Ok(d.iter().position(|x| !x.is_positive()).map(|k| p.column(k)))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row `dst` += f · row `src`
    fn add_row(&mut self, dst: usize, src: usize, f: &Rational) {
        for j in 0..self.cols {
            if self[(src, j)].is_zero() {
                continue;
            }
            let v = &self[(dst, j)] + f * &self[(src, j)];
            self[(dst, j)] = v;
        }
    }

    /// col `dst` += f · col `src`
    fn add_col(&mut self, dst: usize, src: usize, f: &Rational) {
        for i in 0..self.rows {
            if self[(i, src)].is_zero() {
                continue;
            }
            let v = &self[(i, dst)] + f * &self[(i, src)];
            self[(i, dst)] = v;
        }
    }
}

/// Canonical basis of the span of `vectors` (nonzero RREF rows).
pub fn canonical_span(dim: usize, vectors: &[RatVector]) -> Vec<RatVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_rows(vectors);
    debug_assert_eq!(m.cols(), dim);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum dimension");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix difference dimension");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| format_rational(&self[(i, j)])).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn solve_unique_nonunique_none() {
        let g = RatMatrix::from_rows(&[
            vec![rat(16, 9), int(0), int(0)],
            vec![int(0), int(4), int(-2)],
            vec![int(0), int(-2), int(4)],
        ]);
        let x = g.solve(&[int(8), int(2), int(2)]).unwrap().unique().unwrap();
        assert_eq!(x, vec![rat(9, 2), int(1), int(1)]);

        let s = m(&[&[1, 1], &[2, 2]]).solve(&[int(1), int(2)]).unwrap();
        assert!(matches!(s, LinearSolution::NonUnique { .. }));
        let s = m(&[&[1, 1], &[2, 2]]).solve(&[int(1), int(3)]).unwrap();
        assert_eq!(s, LinearSolution::NoSolution);
        assert!(m(&[&[1, 1]]).solve(&[int(1), int(3)]).is_err());
    }

    #[test]
    fn kernel_is_canonical() {
        assert!(RatMatrix::identity(4).kernel().is_empty());
        assert_eq!(RatMatrix::zeros(2, 2).kernel(), vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        let k = m(&[&[-1, 2]]).kernel();
        assert_eq!(k, vec![vec![int(2), int(1)]]);
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant().unwrap(), int(1));
        assert_eq!(&a * &a.inverse().unwrap(), RatMatrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(NumericsError::Singular));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), int(-1));
    }

    #[test]
    fn congruence_handles_zero_diagonal() {
        let a = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -3]]);
        let (p, d) = a.congruence_diagonalize().unwrap();
        assert_eq!(&(&p.transpose() * &a) * &p, RatMatrix::from_diagonal(&d));
        assert_eq!(a.signature().unwrap(), (1, 2, 0));
        let w = a.positive_definite_witness().unwrap().unwrap();
        assert!(!a.bilinear(&w, &w).is_positive());
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(RatMatrix::scalar(3, &rat(-9, 2)).as_scalar(), Some(rat(-9, 2)));
        assert_eq!(m(&[&[1, 0], &[0, 2]]).as_scalar(), None);
    }
}
