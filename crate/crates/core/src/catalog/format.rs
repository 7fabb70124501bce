//! Line-oriented text format for metric Lie algebras.
//!
//! ```text
//! # comment
//! algebra <name> dim <n>
//! label <i> <text>
//! bracket <i> <j> : <k>=<p/q>, <k>=<p/q>, ...
//! gram <i> <j> <p/q>
//! a-basis <i>,<j>,...
//! simple <c1>,<c2>,...
//! ```
//!
//! Indices are 0-based. `bracket` needs `i < j`; pairs not listed bracket to
//! zero. `gram i j` sets both `(i, j)` and `(j, i)`; unlisted entries are
//! zero. Each `simple` line is one root as coefficients on the a-basis.
//! Rationals are `p` or `p/q` with `q > 0`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::lie::MetricLieAlgebra;
use crate::numerics::{format_rational, parse_rational, zero, RatMatrix, RatVector, Rational};

use super::CatalogError;

/// An algebra with the optional analysis hints carried by a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: MetricLieAlgebra,
    /// Basis indices spanning `a`.
    pub a_basis: Option<Vec<usize>>,
    /// Simple roots as coefficient vectors on the a-basis.
    pub simple: Option<Vec<RatVector>>,
}

impl AlgebraFile {
    pub fn plain(algebra: MetricLieAlgebra) -> Self {
        AlgebraFile {
            algebra,
            a_basis: None,
            simple: None,
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> CatalogError {
    CatalogError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(tok: &str, line: usize, dim: usize) -> Result<usize, CatalogError> {
    let i: usize = tok.parse().map_err(|_| err(line, format!("bad index '{tok}'")))?;
    if i >= dim {
        return Err(err(line, format!("index {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

fn parse_rat(tok: &str, line: usize) -> Result<Rational, CatalogError> {
    parse_rational(tok).map_err(|e| err(line, e.to_string()))
}

fn comma_list(rest: &str) -> Vec<&str> {
    rest.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

/// Parses the text format. Errors carry the 1-based line number.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile, CatalogError> {
    let mut header: Option<(String, usize)> = None;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut brackets: BTreeMap<(usize, usize), RatVector> = BTreeMap::new();
    let mut gram_entries: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    let mut a_basis: Option<Vec<usize>> = None;
    let mut simple: Vec<RatVector> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        if keyword == "algebra" {
            if header.is_some() {
                return Err(err(line, "duplicate 'algebra' header"));
            }
            let toks: Vec<&str> = rest.split_whitespace().collect();
            let [name, "dim", n] = toks[..] else {
                return Err(err(line, "expected 'algebra <name> dim <n>'"));
            };
            let n: usize = n.parse().map_err(|_| err(line, format!("bad dimension '{n}'")))?;
            header = Some((name.to_string(), n));
            labels = vec![None; n];
            continue;
        }
        let Some((_, dim)) = header else {
            return Err(err(line, "expected 'algebra <name> dim <n>' before any other line"));
        };
        match keyword {
            "label" => {
                let (idx, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let i = parse_index(idx, line, dim)?;
                let text = text.trim();
                if text.is_empty() {
                    return Err(err(line, "empty label"));
                }
                if labels[i].replace(text.to_string()).is_some() {
                    return Err(err(line, format!("duplicate label for index {i}")));
                }
            }
            "bracket" => {
                let (pair, comps) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "expected 'bracket i j : k=p/q, ...'"))?;
                let toks: Vec<&str> = pair.split_whitespace().collect();
                let [i, j] = toks[..] else {
                    return Err(err(line, "expected two indices before ':'"));
                };
                let (i, j) = (parse_index(i, line, dim)?, parse_index(j, line, dim)?);
                if i >= j {
                    return Err(err(line, format!("bracket ({i}, {j}) must have i < j")));
                }
                let mut v = vec![zero(); dim];
                let mut seen = vec![false; dim];
                for comp in comma_list(comps) {
                    let (kk, val) = comp
                        .split_once('=')
                        .ok_or_else(|| err(line, format!("expected k=p/q, got '{comp}'")))?;
                    let kk = parse_index(kk.trim(), line, dim)?;
                    if std::mem::replace(&mut seen[kk], true) {
                        return Err(err(line, format!("component {kk} listed twice")));
                    }
                    v[kk] = parse_rat(val.trim(), line)?;
                }
                if brackets.insert((i, j), v).is_some() {
                    return Err(err(line, format!("duplicate bracket ({i}, {j})")));
                }
            }
            "gram" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let [i, j, val] = toks[..] else {
                    return Err(err(line, "expected 'gram i j p/q'"));
                };
                let (i, j) = (parse_index(i, line, dim)?, parse_index(j, line, dim)?);
                let key = (i.min(j), i.max(j));
                if gram_entries.insert(key, parse_rat(val, line)?).is_some() {
                    return Err(err(line, format!("duplicate gram entry ({}, {})", key.0, key.1)));
                }
            }
            "a-basis" => {
                if a_basis.is_some() {
                    return Err(err(line, "duplicate 'a-basis' line"));
                }
                let idx = comma_list(rest)
                    .into_iter()
                    .map(|t| parse_index(t, line, dim))
                    .collect::<Result<Vec<_>, _>>()?;
                a_basis = Some(idx);
            }
            "simple" => {
                let root = comma_list(rest)
                    .into_iter()
                    .map(|t| parse_rat(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                simple.push(root);
            }
            other => return Err(err(line, format!("unknown keyword '{other}'"))),
        }
    }

    let (name, dim) = header.ok_or_else(|| err(0, "missing 'algebra' header"))?;
    let labels: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| format!("e{i}")))
        .collect();
    let mut gram = RatMatrix::zeros(dim, dim);
    for ((i, j), v) in gram_entries {
        gram[(i, j)] = v.clone();
        gram[(j, i)] = v;
    }
    if let (Some(a), false) = (&a_basis, simple.is_empty()) {
        if let Some(bad) = simple.iter().find(|r| r.len() != a.len()) {
            return Err(err(
                0,
                format!("simple root has {} coefficients but a-basis has {}", bad.len(), a.len()),
            ));
        }
    }
    let algebra = MetricLieAlgebra::new(name, labels, brackets, gram).map_err(|e| err(0, e.to_string()))?;
    Ok(AlgebraFile {
        algebra,
        a_basis,
        simple: (!simple.is_empty()).then_some(simple),
    })
}

/// Canonical text: sorted indices, reduced fractions, zero entries omitted.
pub fn serialize_algebra(file: &AlgebraFile) -> String {
    let l = &file.algebra;
    let n = l.dim();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} dim {}", l.name(), n);
    for (i, label) in l.labels().iter().enumerate() {
        let _ = writeln!(out, "label {i} {label}");
    }
    for ((i, j), v) in l.bracket_records() {
        let comps: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{k}={}", format_rational(c)))
            .collect();
        let _ = writeln!(out, "bracket {i} {j} : {}", comps.join(", "));
    }
    for i in 0..n {
        for j in i..n {
            let g = &l.gram()[(i, j)];
            if !g.is_zero() {
                let _ = writeln!(out, "gram {i} {j} {}", format_rational(g));
            }
        }
    }
    if let Some(a) = &file.a_basis {
        let idx: Vec<String> = a.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "a-basis {}", idx.join(","));
    }
    for root in file.simple.iter().flatten() {
        let c: Vec<String> = root.iter().map(format_rational).collect();
        let _ = writeln!(out, "simple {}", c.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::int;

    const SMALL: &str = "\
# Heisenberg
algebra heis dim 3
label 0 X
label 1 Y
label 2 Z   # centre
bracket 0 1 : 2=1
gram 0 0 1
gram 1 1 1
gram 2 2 1/2
";

    #[test]
    fn parses_and_round_trips() {
        let f = parse_algebra(SMALL).unwrap();
        assert_eq!(f.algebra.labels()[2], "Z");
        assert_eq!(f.algebra.gram()[(2, 2)], crate::numerics::rat(1, 2));
        let s = serialize_algebra(&f);
        assert_eq!(parse_algebra(&s).unwrap(), f);
        assert_eq!(serialize_algebra(&parse_algebra(&s).unwrap()), s);
    }

    #[test]
    fn negative_denominator_is_rejected_with_line() {
        let bad = SMALL.replace("gram 2 2 1/2", "gram 2 2 4/-2");
        assert!(matches!(parse_algebra(&bad), Err(CatalogError::Parse { line: 9, .. })));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            parse_algebra(&SMALL.replace("bracket 0 1", "bracket 1 0")),
            Err(CatalogError::Parse { line: 6, .. })
        ));
        let dup = format!("{SMALL}bracket 0 1 : 2=2\n");
        assert!(matches!(parse_algebra(&dup), Err(CatalogError::Parse { line: 10, .. })));
        assert!(parse_algebra(&SMALL.replace("gram 0 0 1", "gram 0 3 1")).is_err());
        assert!(parse_algebra("label 0 X\n").is_err());
    }

    #[test]
    fn hints_survive() {
        let text = format!("{SMALL}a-basis 0\nsimple 1\nsimple -2/3\n");
        let f = parse_algebra(&text).unwrap();
        assert_eq!(f.a_basis, Some(vec![0]));
        assert_eq!(f.simple, Some(vec![vec![int(1)], vec![crate::numerics::rat(-2, 3)]]));
    }
}
