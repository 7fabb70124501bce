//! Built-in example algebras and the on-disk text format.

mod builders;
mod format;

pub use builders::{
    build_heisenberg_extension, build_heisenberg_extension_scaled, build_heisenberg_rank2, build_hyperbolic_product,
    build_km_sl3, build_symmetric_iwasawa, SymmetricKind,
};
pub use format::{parse_algebra, serialize_algebra, AlgebraFile};

use thiserror::Error;

use crate::lie::LieError;
use crate::numerics::{int, parse_rational, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown example '{0}'")]
    UnknownExample(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Catalog entries as `(name pattern, description)`.
pub fn example_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("km-sl3", "14-dim truncated affine sl3 extension, Einstein, non-symmetric"),
        ("iwasawa-sl3", "Iwasawa solvable part of sl3(R), symmetric-space metric"),
        ("hyperbolic:<n>", "Iwasawa solvable part of so(n,1), real hyperbolic n-space"),
        ("heisenberg-ext", "Heisenberg algebra extended by two derivations, rank 2"),
        ("heisenberg-ext:<wX>,<wY>,<wZ>", "Heisenberg algebra extended by one diagonal derivation"),
        ("hyperbolic-product", "product of two real hyperbolic planes, orthogonal simple roots"),
    ]
}

/// Looks up a catalog entry by name, including parametrized families.
pub fn example(name: &str) -> Result<AlgebraFile, CatalogError> {
    if let Some(n) = name.strip_prefix("hyperbolic:") {
        let n: usize = n
            .parse()
            .map_err(|_| CatalogError::BadParameter(format!("bad dimension in '{name}'")))?;
        return Ok(AlgebraFile {
            algebra: build_symmetric_iwasawa(SymmetricKind::SoN1(n))?,
            a_basis: Some(vec![0]),
            simple: Some(vec![vec![int(1)]]),
        });
    }
    if let Some(w) = name.strip_prefix("heisenberg-ext:") {
        let weights = w
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<Rational>, _>>()
            .map_err(|e| CatalogError::BadParameter(e.to_string()))?;
        let algebra = build_heisenberg_extension(&weights)?.with_name(name);
        let simple = single_derivation_simple_root(&weights).map(|r| vec![vec![r]]);
        return Ok(AlgebraFile {
            algebra,
            a_basis: Some(vec![0]),
            simple,
        });
    }
    match name {
        "km-sl3" => Ok(AlgebraFile {
            algebra: build_km_sl3(),
            a_basis: Some(vec![0, 1, 2]),
            simple: Some(vec![
                vec![int(1), int(-1), int(-1)],
                vec![int(0), int(2), int(-1)],
                vec![int(0), int(-1), int(2)],
            ]),
        }),
        "iwasawa-sl3" => Ok(AlgebraFile {
            algebra: build_symmetric_iwasawa(SymmetricKind::Sl3)?,
            a_basis: Some(vec![0, 1]),
            simple: Some(vec![vec![int(2), int(-1)], vec![int(-1), int(2)]]),
        }),
        "heisenberg-ext" => {
            let dual = RatMatrix::from_rows(&[vec![int(2), int(-1)], vec![int(-1), int(2)]]);
            Ok(AlgebraFile {
                algebra: build_heisenberg_rank2(&dual, &[int(1), int(1), int(1)])?,
                a_basis: Some(vec![0, 1]),
                simple: Some(vec![vec![int(1), int(0)], vec![int(0), int(1)]]),
            })
        }
        "hyperbolic-product" => Ok(AlgebraFile {
            algebra: build_hyperbolic_product(),
            a_basis: Some(vec![0, 2]),
            simple: Some(vec![vec![int(1), int(0)], vec![int(0), int(1)]]),
        }),
        _ => Err(CatalogError::UnknownExample(name.to_string())),
    }
}

/// The smallest weight, when every weight is a nonnegative integer multiple of it.
fn single_derivation_simple_root(weights: &[Rational]) -> Option<Rational> {
    let min = weights.iter().min()?.clone();
    weights
        .iter()
        .all(|w| (w / &min).is_integer())
        .then_some(min)
}

/// Names of every fixed (non-parametrized) entry plus small parameter
/// instances, for sweeps over the catalog.
pub fn sample_examples() -> Vec<String> {
    let mut v: Vec<String> = ["km-sl3", "iwasawa-sl3", "heisenberg-ext", "hyperbolic-product"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    v.extend(["hyperbolic:2", "hyperbolic:3", "hyperbolic:4"].map(String::from));
    v.extend(["heisenberg-ext:1,1,2", "heisenberg-ext:1,2,3", "heisenberg-ext:1/2,3/2,2"].map(String::from));
    v
}
