use super::matrix::{canonical_span, RatMatrix};
use super::poly::{characteristic_polynomial, rational_roots};
use super::rational::{format_rational, RatVector, Rational};
use super::NumericsError;

/// An eigenvalue with a canonical basis of its eigenspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPair {
    pub value: Rational,
    pub space: Vec<RatVector>,
}

/// A joint eigenspace of a commuting family; `weight[i]` is the eigenvalue
/// of the `i`-th family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointEigenspace {
    pub weight: RatVector,
    pub space: Vec<RatVector>,
}

/// All eigenpairs of a rationally diagonalizable matrix, by increasing eigenvalue.
pub fn rational_eigenpairs(m: &RatMatrix) -> Result<Vec<EigenPair>, NumericsError> {
    if !m.is_square() {
        return Err(NumericsError::NotSquare {
            op: "rational_eigenpairs",
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let roots = rational_roots(&characteristic_polynomial(m));
    let found: usize = roots.iter().map(|(_, k)| k).sum();
    if found < n {
        return Err(NumericsError::NotRationalSplit { found, dim: n });
    }
    roots
        .into_iter()
        .map(|(value, algebraic)| {
            let shifted = m - &RatMatrix::scalar(n, &value);
            let space = shifted.kernel();
            if space.len() < algebraic {
                return Err(NumericsError::NonDiagonalizable {
                    eigenvalue: format_rational(&value),
                    algebraic,
                    geometric: space.len(),
                });
            }
            Ok(EigenPair {
                value,
                space: canonical_span(n, &space),
            })
        })
        .collect()
}

/// Joint eigenspaces of a pairwise commuting family of `n×n` matrices,
/// sorted lexicographically by weight. An empty family yields no spaces.
pub fn simultaneous_eigenspaces(family: &[RatMatrix]) -> Result<Vec<JointEigenspace>, NumericsError> {
    let Some(first) = family.first() else {
        return Ok(Vec::new());
    };
    let n = first.rows();
    for (i, a) in family.iter().enumerate() {
        if !a.is_square() || a.rows() != n {
            return Err(NumericsError::DimensionMismatch {
                op: "simultaneous_eigenspaces",
                expected: n,
                found: a.rows(),
            });
        }
        for (j, b) in family.iter().enumerate().skip(i + 1) {
            if !a.commutator(b).is_zero() {
                return Err(NumericsError::NonCommuting(i, j));
            }
        }
    }
    let mut spaces = vec![JointEigenspace {
        weight: Vec::new(),
        space: RatMatrix::identity(n).columns(),
    }];
    for m in family {
        let mut refined = Vec::new();
        for js in spaces {
            let w = RatMatrix::from_columns(n, &js.space);
            // Coordinates of M·w_j in the basis w; exact because the space is M-invariant.
            let image = m * &w;
            let restricted = coordinates(&w, &image)?;
            for pair in rational_eigenpairs(&restricted)? {
                let vecs: Vec<RatVector> = pair.space.iter().map(|c| w.mul_vec(c)).collect();
                let mut weight = js.weight.clone();
                weight.push(pair.value);
                refined.push(JointEigenspace {
                    weight,
                    space: canonical_span(n, &vecs),
                });
            }
        }
        spaces = refined;
    }
    spaces.sort_by(|a, b| a.weight.cmp(&b.weight));
    Ok(spaces)
}

/// Solves `W · C = image` for `C`, with `W` of full column rank.
fn coordinates(w: &RatMatrix, image: &RatMatrix) -> Result<RatMatrix, NumericsError> {
    let k = w.cols();
    let mut cols = Vec::with_capacity(image.cols());
    for j in 0..image.cols() {
        let c = w
            .solve(&image.column(j))?
            .unique()
            .expect("commuting family preserves joint eigenspaces");
        cols.push(c);
    }
    Ok(RatMatrix::from_columns(k, &cols))
}
