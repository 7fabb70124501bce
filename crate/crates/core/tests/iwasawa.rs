//! Roots, root vectors, dual bases and reflections over the catalog.

use proptest::prelude::*;
use solvlie::catalog::{
    build_heisenberg_extension, build_km_sl3, build_symmetric_iwasawa, example, sample_examples, SymmetricKind,
};
use solvlie::iwasawa::{verify_simple_system, verify_strong_iwasawa, verify_strong_iwasawa_with, IwasawaDecomposition, IwasawaError};
use solvlie::lie::MetricLieAlgebra;
use solvlie::numerics::{dot, int, rat, scale_vec, RatMatrix, RatVector, Rational};

fn decomposition(name: &str) -> IwasawaDecomposition {
    let f = example(name).unwrap();
    verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap().0
}

fn weights(w: &[i64]) -> Vec<Rational> {
    w.iter().map(|&x| int(x)).collect()
}

fn multiplicities(dec: &IwasawaDecomposition) -> Vec<usize> {
    let mut m: Vec<usize> = dec.roots().iter().map(|r| r.multiplicity).collect();
    m.sort();
    m
}

#[test]
fn km_sl3_has_ten_roots_and_one_plane() {
    let dec = verify_strong_iwasawa(&build_km_sl3()).unwrap();
    assert_eq!(dec.a().dim(), 3);
    assert_eq!(dec.n().dim(), 11);
    assert_eq!(dec.roots().len(), 10);
    assert_eq!(dec.roots().iter().filter(|r| r.multiplicity == 2).count(), 1);
    assert_eq!(dec.roots().iter().map(|r| r.multiplicity).sum::<usize>(), 11);
}

#[test]
fn sl3_has_three_simple_spaces() {
    let l = build_symmetric_iwasawa(SymmetricKind::Sl3).unwrap();
    let dec = verify_strong_iwasawa(&l).unwrap();
    assert_eq!(dec.a().dim(), 2);
    assert_eq!(multiplicities(&dec), vec![1, 1, 1]);
    let lambda = vec![vec![int(2), int(-1)], vec![int(-1), int(2)]];
    let sys = verify_simple_system(&dec, &lambda).unwrap();
    let sum = dec.root_index(&[int(1), int(1)]).unwrap();
    assert_eq!(sys.expansions[sum], vec![int(1), int(1)]);
}

#[test]
fn heisenberg_extension_roots() {
    let dec = verify_strong_iwasawa(&build_heisenberg_extension(&weights(&[1, 1, 2])).unwrap()).unwrap();
    assert_eq!(dec.roots().len(), 2);
    // Roots are reported on the a-basis; the a-basis vector A has weights as eigenvalues.
    let pairs: Vec<(RatVector, usize)> = dec.roots().iter().map(|r| (r.coords.clone(), r.multiplicity)).collect();
    assert!(pairs.contains(&(vec![int(1)], 2)));
    assert!(pairs.contains(&(vec![int(2)], 1)));

    let dec = verify_strong_iwasawa(&build_heisenberg_extension(&weights(&[1, 2, 3])).unwrap()).unwrap();
    assert_eq!(multiplicities(&dec), vec![1, 1, 1]);

    assert!(build_heisenberg_extension(&weights(&[1, 1, 1])).is_err());
}

#[test]
fn hyperbolic_space_has_one_root() {
    for n in 2..=4 {
        let l = build_symmetric_iwasawa(SymmetricKind::SoN1(n)).unwrap();
        let dec = verify_strong_iwasawa(&l).unwrap();
        assert_eq!(dec.roots().len(), 1);
        assert_eq!(dec.roots()[0].multiplicity, n - 1);
    }
    assert!(build_symmetric_iwasawa(SymmetricKind::SoN1(1)).is_err());
}

#[test]
fn abelian_algebra_has_empty_root_set() {
    let l = MetricLieAlgebra::new("abelian", vec!["A".into(), "B".into()], Vec::new(), RatMatrix::identity(2)).unwrap();
    let dec = verify_strong_iwasawa(&l).unwrap();
    assert!(dec.roots().is_empty());
    assert_eq!(dec.n().dim(), 0);
}

#[test]
fn indefinite_a_is_rejected() {
    let good = build_heisenberg_extension(&weights(&[1, 1, 2])).unwrap();
    let mut gram = good.gram().clone();
    gram[(0, 0)] = int(-1);
    let bad = MetricLieAlgebra::new("bad", good.labels().to_vec(), good.bracket_records(), gram).unwrap();
    assert!(matches!(verify_strong_iwasawa(&bad), Err(IwasawaError::NotPositiveDefinite(_))));
}

#[test]
fn km_sl3_dual_basis_needs_three_roots() {
    let dec = decomposition("km-sl3");
    let two = vec![vec![int(0), int(2), int(-1)], vec![int(0), int(-1), int(2)]];
    assert!(verify_simple_system(&dec, &two).is_err());
}

#[test]
fn km_sl3_reflection_table() {
    let f = example("km-sl3").unwrap();
    let (dec, sys) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
    let sys = sys.unwrap();
    let alpha = |i: usize| dec.roots()[sys.lambda[i]].coords.clone();
    let h = |i: usize| dec.root_vector(&alpha(i));
    let add = |x: &RatVector, y: &RatVector, c: Rational| -> RatVector { x.iter().zip(y).map(|(a, b)| a + &c * b).collect() };

    assert_eq!(dec.reflect(&alpha(1), &h(1)), scale_vec(&int(-1), &h(1)));
    assert_eq!(dec.reflect(&alpha(2), &h(0)), add(&h(0), &h(2), int(1)));
    assert_eq!(dec.reflect(&alpha(1), &h(0)), add(&h(0), &h(1), int(1)));
    assert_eq!(dec.reflect(&alpha(1), &h(2)), add(&h(2), &h(1), int(1)));
    assert_eq!(dec.reflect(&alpha(0), &h(1)), add(&h(1), &h(0), rat(16, 25)));
    assert_eq!(dec.reflect(&alpha(0), &h(2)), add(&h(2), &h(0), rat(16, 25)));

    // α(B_β) = δ on the dual basis.
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i == j { int(1) } else { int(0) };
            assert_eq!(dec.evaluate(&alpha(i), &sys.dual_basis[j]), expected);
        }
    }
    let delta = dec.roots().iter().position(|r| r.multiplicity == 2).unwrap();
    assert_eq!(sys.expansions[delta], vec![int(1), int(1), int(1)]);
}

#[test]
fn km_sl3_simple_root_pairing_is_computed_not_assumed() {
    let f = example("km-sl3").unwrap();
    let (dec, sys) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
    let sys = sys.unwrap();
    let a1 = &dec.roots()[sys.lambda[1]].coords;
    let a2 = &dec.roots()[sys.lambda[2]].coords;
    assert_eq!(dec.root_inner(a1, a2), rat(-1, 2));
    let l = dec.algebra();
    assert_eq!(l.inner(&dec.root_vector(a1), &dec.root_vector(a2)), dec.root_inner(a1, a2));
    // The zero covector has zero root vector.
    assert!(dec.root_vector(&[int(0), int(0), int(0)]).iter().all(|c| *c == int(0)));
}

#[test]
fn rank_one_dual_basis() {
    let dec = verify_strong_iwasawa(&build_heisenberg_extension(&weights(&[1, 2, 3])).unwrap()).unwrap();
    let b = dec.dual_basis(&[vec![int(3)]]).unwrap();
    let a = dec.a().basis()[0].clone();
    assert_eq!(b[0], scale_vec(&rat(1, 3), &a));
}

/// Root-space, reflection and witness identities for one decomposition.
fn check_root_structure(dec: &IwasawaDecomposition) {
    let l = dec.algebra();
    let a_basis = dec.a().basis();
    assert_eq!(dec.roots().iter().map(|r| r.multiplicity).sum::<usize>(), dec.n().dim());
    for (root, space) in dec.roots().iter().zip(dec.root_spaces()) {
        assert!(root.coords.iter().any(|c| *c != int(0)));
        assert!(dec.evaluate(&root.coords, dec.witness()) > int(0));
        for (k, a) in a_basis.iter().enumerate() {
            for x in space.basis() {
                assert_eq!(l.bracket(a, x), scale_vec(&root.coords[k], x));
            }
        }
    }
    for (i, s) in dec.root_spaces().iter().enumerate() {
        for t in &dec.root_spaces()[i + 1..] {
            assert!(s.is_orthogonal_to(t, l.gram()));
        }
    }
    for beta in dec.roots() {
        for x in a_basis {
            let once = dec.reflect(&beta.coords, x);
            assert_eq!(&dec.reflect(&beta.coords, &once), x);
            for y in a_basis {
                assert_eq!(l.inner(&once, &dec.reflect(&beta.coords, y)), l.inner(x, y));
            }
        }
        for gamma in dec.roots() {
            let image = dec.dual_reflect(&beta.coords, &gamma.coords);
            assert_eq!(dec.reflect(&beta.coords, &dec.root_vector(&gamma.coords)), dec.root_vector(&image));
        }
    }
}

#[test]
fn root_structure_over_the_catalog() {
    for name in sample_examples() {
        check_root_structure(&decomposition(&name));
    }
}

#[test]
fn simple_expansions_are_nonnegative_integers() {
    for name in sample_examples() {
        let f = example(&name).unwrap();
        let (dec, sys) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
        let Some(sys) = sys else { continue };
        for (root, coeffs) in dec.roots().iter().zip(&sys.expansions) {
            assert!(coeffs.iter().all(|c| c.is_integer() && *c >= int(0)), "{name}");
            let rebuilt: RatVector = (0..root.coords.len())
                .map(|k| dot(coeffs, &sys.lambda.iter().map(|&i| dec.roots()[i].coords[k].clone()).collect::<Vec<_>>()))
                .collect();
            assert_eq!(rebuilt, root.coords, "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn heisenberg_weights_give_a_valid_decomposition(x in 1i64..6, y in 1i64..6, q in 1i64..4) {
        let w = vec![rat(x, q), rat(y, q), rat(x + y, q)];
        let dec = verify_strong_iwasawa(&build_heisenberg_extension(&w).unwrap()).unwrap();
        let distinct = if x == y { 2 } else { 3 };
        prop_assert_eq!(dec.roots().len(), distinct);
        check_root_structure(&dec);
    }
}
