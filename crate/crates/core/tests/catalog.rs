//! Catalog builders against independent constructions, and the text format.

use solvlie::catalog::{
    build_heisenberg_extension, build_km_sl3, build_symmetric_iwasawa, example, example_names, parse_algebra, sample_examples,
    serialize_algebra, CatalogError, SymmetricKind,
};
use solvlie::iwasawa::{verify_strong_iwasawa, verify_strong_iwasawa_with};
use solvlie::lie::MetricLieAlgebra;
use solvlie::numerics::{int, rat, unit_vec, Rational};

const GOLDEN: &str = include_str!("fixtures/km-sl3.alg");

type M3 = [[i64; 3]; 3];

fn e(i: usize, j: usize) -> M3 {
    let mut m = [[0; 3]; 3];
    m[i - 1][j - 1] = 1;
    m
}

fn lin(a: i64, x: &M3, b: i64, y: &M3) -> M3 {
    let mut m = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a * x[i][j] + b * y[i][j];
        }
    }
    m
}

fn mul(x: &M3, y: &M3) -> M3 {
    let mut m = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = (0..3).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    m
}

fn commutator(x: &M3, y: &M3) -> M3 {
    lin(1, &mul(x, y), -1, &mul(y, x))
}

fn trace_xt_y(x: &M3, y: &M3) -> i64 {
    (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| x[i][j] * y[i][j]).sum()
}

/// `None` is the derivation `D`; `Some((d, X))` is `t^d ⊗ X`.
type Elem = Option<(u32, M3)>;

fn km_basis() -> Vec<(&'static str, Elem)> {
    let h12 = lin(1, &e(1, 1), -1, &e(2, 2));
    let h23 = lin(1, &e(2, 2), -1, &e(3, 3));
    vec![
        ("D", None),
        ("H1", Some((0, h12))),
        ("H2", Some((0, h23))),
        ("E12", Some((0, e(1, 2)))),
        ("E13", Some((0, e(1, 3)))),
        ("E23", Some((0, e(2, 3)))),
        ("tE12", Some((1, e(1, 2)))),
        ("tE13", Some((1, e(1, 3)))),
        ("tE23", Some((1, e(2, 3)))),
        ("tE21", Some((1, e(2, 1)))),
        ("tE31", Some((1, e(3, 1)))),
        ("tE32", Some((1, e(3, 2)))),
        ("tH12", Some((1, h12))),
        ("tH23", Some((1, h23))),
    ]
}

/// Coordinates of `t^d ⊗ M` on the basis above, reading entries directly.
fn km_coords(basis: &[(&str, Elem)], d: u32, m: &M3) -> Vec<Rational> {
    let mut out = vec![int(0); basis.len()];
    let idx = |name: &str| basis.iter().position(|(n, _)| *n == name).unwrap();
    let prefix = if d == 0 { "" } else { "t" };
    for i in 0..3 {
        for j in 0..3 {
            if i != j && m[i][j] != 0 {
                out[idx(&format!("{prefix}E{}{}", i + 1, j + 1))] = int(m[i][j]);
            }
        }
    }
    // diag(a, b − a, −b) = a·H12 + b·H23
    let (h1, h2) = if d == 0 { ("H1", "H2") } else { ("tH12", "tH23") };
    out[idx(h1)] = int(m[0][0]);
    out[idx(h2)] = int(-m[2][2]);
    out
}

#[test]
fn km_sl3_matches_loop_algebra_rules() {
    let l = build_km_sl3();
    let basis = km_basis();
    assert_eq!(l.dim(), 14);
    for (i, (name, _)) in basis.iter().enumerate() {
        assert_eq!(&l.labels()[i], name);
    }
    for (i, (_, x)) in basis.iter().enumerate() {
        for (j, (_, y)) in basis.iter().enumerate() {
            let expected = match (x, y) {
                (None, None) => vec![int(0); 14],
                (None, Some((d, m))) => {
                    let mut v = km_coords(&basis, *d, m);
                    v.iter_mut().for_each(|c| *c *= int(*d as i64));
                    v
                }
                (Some((d, m)), None) => {
                    let mut v = km_coords(&basis, *d, m);
                    v.iter_mut().for_each(|c| *c *= int(-(*d as i64)));
                    v
                }
                (Some((d1, a)), Some((d2, b))) if d1 + d2 <= 1 => km_coords(&basis, d1 + d2, &commutator(a, b)),
                _ => vec![int(0); 14],
            };
            assert_eq!(l.bracket(&unit_vec(14, i), &unit_vec(14, j)), expected, "[{}, {}]", basis[i].0, basis[j].0);

            let g = match (x, y) {
                (None, None) => rat(16, 9),
                (Some((0, a)), Some((0, b))) if i <= 2 && j <= 2 => int(trace_xt_y(a, b)) * int(2),
                (Some((d1, a)), Some((d2, b))) if d1 == d2 && i > 2 && j > 2 => int(trace_xt_y(a, b)),
                _ => int(0),
            };
            assert_eq!(l.gram()[(i, j)], g, "<{}, {}>", basis[i].0, basis[j].0);
        }
    }
}

#[test]
fn km_sl3_shape() {
    let l = build_km_sl3();
    let dec = verify_strong_iwasawa(&l).unwrap();
    assert_eq!(dec.n().dim(), 11);
    assert_eq!(dec.roots().len(), 10);
    assert_eq!(dec.roots().iter().filter(|r| r.multiplicity == 2).count(), 1);
    assert_eq!(l.lower_central_series_of(dec.n()).dims(), vec![11, 8, 5, 3, 1, 0]);
    assert_eq!(l.center().dim(), 0);
}

/// `sl3` with `B_σ(X, Y) = 6 tr(X Yᵀ)` from the Killing form `6 tr(XY)`.
#[test]
fn sl3_gram_from_trace_form() {
    let l = build_symmetric_iwasawa(SymmetricKind::Sl3).unwrap();
    let h12 = lin(1, &e(1, 1), -1, &e(2, 2));
    let h23 = lin(1, &e(2, 2), -1, &e(3, 3));
    let mats = [h12, h23, e(1, 2), e(2, 3), e(1, 3)];
    for i in 0..5 {
        for j in 0..5 {
            let factor = match (i < 2, j < 2) {
                (true, true) => 2,
                (false, false) => 1,
                _ => 0,
            };
            assert_eq!(l.gram()[(i, j)], int(6 * factor * trace_xt_y(&mats[i], &mats[j])));
        }
    }
    for i in 0..5 {
        for j in 0..5 {
            let c = commutator(&mats[i], &mats[j]);
            let mut v = vec![int(0); 5];
            v[0] = int(c[0][0]);
            v[1] = int(-c[2][2]);
            v[2] = int(c[0][1]);
            v[3] = int(c[1][2]);
            v[4] = int(c[0][2]);
            assert_eq!(l.bracket(&unit_vec(5, i), &unit_vec(5, j)), v);
        }
    }
}

#[test]
fn hyperbolic_spaces_are_einstein() {
    for n in 2..=5 {
        let l = build_symmetric_iwasawa(SymmetricKind::SoN1(n)).unwrap();
        assert_eq!(l.dim(), n);
        let dec = verify_strong_iwasawa(&l).unwrap();
        let report = solvlie::curvature::einstein_check(&dec).unwrap();
        assert!(report.lambda().is_some_and(|x| *x < int(0)), "n = {n}");
    }
}

#[test]
fn heisenberg_weights_are_checked() {
    assert!(build_heisenberg_extension(&[int(1), int(2), int(3)]).is_ok());
    assert!(matches!(build_heisenberg_extension(&[int(1), int(1), int(1)]), Err(CatalogError::BadParameter(_))));
    assert!(matches!(build_heisenberg_extension(&[int(-1), int(2), int(1)]), Err(CatalogError::BadParameter(_))));
    assert!(matches!(build_heisenberg_extension(&[int(1), int(1)]), Err(CatalogError::BadParameter(_))));
}

#[test]
fn every_catalog_entry_is_valid_and_strong_iwasawa() {
    for name in sample_examples() {
        let f = example(&name).unwrap();
        assert!(f.algebra.validate().is_valid(), "{name}");
        verify_strong_iwasawa(&f.algebra).unwrap_or_else(|e| panic!("{name}: {e}"));
        let (_, sys) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
        assert_eq!(sys.is_some(), f.simple.is_some(), "{name}");
    }
}

#[test]
fn listing_and_lookup() {
    let names: Vec<&str> = example_names().iter().map(|(n, _)| *n).collect();
    for required in ["km-sl3", "iwasawa-sl3", "hyperbolic:<n>", "heisenberg-ext"] {
        assert!(names.contains(&required));
    }
    assert!(matches!(example("nope"), Err(CatalogError::UnknownExample(_))));
    assert!(matches!(example("hyperbolic:x"), Err(CatalogError::BadParameter(_))));
    assert!(matches!(example("hyperbolic:1"), Err(CatalogError::BadParameter(_))));
}

#[test]
fn golden_fixture_reproduces_the_builder() {
    let parsed = parse_algebra(GOLDEN).unwrap();
    let built = example("km-sl3").unwrap();
    assert_eq!(parsed, built);
    assert_eq!(serialize_algebra(&built), GOLDEN);
    assert_eq!(serialize_algebra(&parsed), GOLDEN);
}

#[test]
fn serialization_is_canonical_over_the_catalog() {
    for name in sample_examples() {
        let f = example(&name).unwrap();
        let once = serialize_algebra(&f);
        let back = parse_algebra(&once).unwrap();
        assert_eq!(back, f, "{name}");
        assert_eq!(serialize_algebra(&back), once, "{name}");
    }
}

fn parse_error_line(text: &str) -> usize {
    match parse_algebra(text) {
        Err(CatalogError::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn malformed_files_name_the_line() {
    let head = "algebra t dim 2\nlabel 0 A\nlabel 1 B\n";
    assert_eq!(parse_error_line(&format!("{head}gram 0 0 4/-2\n")), 4);
    assert_eq!(parse_error_line(&format!("{head}gram 0 2 1\n")), 4);
    assert_eq!(parse_error_line(&format!("{head}bracket 1 0 : 1=1\n")), 4);
    assert_eq!(parse_error_line(&format!("{head}bracket 0 1 : 1=1\nbracket 0 1 : 1=2\n")), 5);
    assert_eq!(parse_error_line(&format!("{head}bracket 0 1 : 1=x\n")), 4);
    assert_eq!(parse_error_line(&format!("{head}frobnicate\n")), 4);
    assert_eq!(parse_error_line("label 0 A\n"), 1);
}

#[test]
fn comments_and_whitespace_are_ignored() {
    let text = "# header\n  algebra   t  dim 2  \nlabel 0 A # first\n\ngram 0 0 1\ngram 1 1   2/4\nbracket 0 1 : 1 = 1\n";
    let f = parse_algebra(text).unwrap();
    let l: &MetricLieAlgebra = &f.algebra;
    assert_eq!(l.labels(), ["A".to_string(), "e1".to_string()]);
    assert_eq!(l.gram()[(1, 1)], rat(1, 2));
    assert_eq!(l.bracket(&unit_vec(2, 0), &unit_vec(2, 1)), vec![int(0), int(1)]);
}
