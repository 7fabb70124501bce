//! Exact linear algebra: solving, kernels, eigenpairs and joint eigenspaces.

use proptest::prelude::*;
use solvlie::catalog::example;
use solvlie::iwasawa::verify_strong_iwasawa_with;
use solvlie::numerics::{
    format_rational, int, parse_rational, rat, rational_eigenpairs, simultaneous_eigenspaces, LinearSolution,
    NumericsError, RatMatrix, RatVector, Rational,
};

fn m(rows: &[&[i64]]) -> RatMatrix {
    RatMatrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
}

fn v(xs: &[i64]) -> RatVector {
    xs.iter().map(|&x| int(x)).collect()
}

/// Upper unitriangular times lower unitriangular: determinant one, so the inverse is integral.
fn unimodular(upper: &[i64], lower: &[i64], n: usize) -> RatMatrix {
    let mut k = 0;
    let u = RatMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Less => {
            k += 1;
            int(upper[k - 1])
        }
        _ => int(0),
    });
    let mut k = 0;
    let l = RatMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Greater => {
            k += 1;
            int(lower[k - 1])
        }
        _ => int(0),
    });
    &u * &l
}

#[test]
fn mean_curvature_solve_on_the_loop_algebra() {
    let f = example("km-sl3").unwrap();
    let (dec, _) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
    let l = &f.algebra;
    // Trace vector from the structure constants: tr ad restricted to the a-basis.
    let b: RatVector = dec.a().basis().iter().map(|x| l.ad_matrix(x).trace()).collect();
    assert_eq!(b, v(&[8, 2, 2]));
    let x = dec.a_gram().solve(&b).unwrap().unique().unwrap();
    assert_eq!(x, vec![rat(9, 2), int(1), int(1)]);
}

#[test]
fn solve_trivial_cases() {
    assert_eq!(RatMatrix::identity(3).solve(&v(&[1, 2, 3])).unwrap(), LinearSolution::Unique(v(&[1, 2, 3])));
    assert!(matches!(m(&[&[1, 1], &[2, 2]]).solve(&v(&[1, 2])).unwrap(), LinearSolution::NonUnique { .. }));
    assert_eq!(m(&[&[1, 1], &[2, 2]]).solve(&v(&[1, 3])).unwrap(), LinearSolution::NoSolution);
    assert!(matches!(RatMatrix::identity(3).solve(&v(&[1, 2])), Err(NumericsError::DimensionMismatch { .. })));
}

#[test]
fn kernel_examples() {
    assert!(RatMatrix::identity(4).kernel().is_empty());
    let k = RatMatrix::zeros(2, 2).kernel();
    assert_eq!(k.len(), 2);
    assert_eq!(RatMatrix::from_columns(2, &k).rank(), 2);
    let k = m(&[&[-1, 2]]).kernel();
    assert_eq!(k.len(), 1);
    assert_eq!(k[0][0], &k[0][1] * int(2));
}

#[test]
fn eigenpair_examples() {
    let pairs = rational_eigenpairs(&RatMatrix::zeros(4, 4)).unwrap();
    assert_eq!(pairs.len(), 1);
    assert_eq!(pairs[0].value, int(0));
    assert_eq!(pairs[0].space.len(), 4);
    assert!(matches!(rational_eigenpairs(&m(&[&[0, 1], &[0, 0]])), Err(NumericsError::NonDiagonalizable { .. })));
    assert!(matches!(rational_eigenpairs(&m(&[&[0, 2], &[1, 0]])), Err(NumericsError::NotRationalSplit { .. })));
    assert!(matches!(rational_eigenpairs(&m(&[&[1, 2]])), Err(NumericsError::NotSquare { .. })));
}

#[test]
fn mean_curvature_spectrum_on_the_nilradical() {
    let f = example("km-sl3").unwrap();
    let (dec, _) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
    let l = &f.algebra;
    let mut h = vec![int(0); l.dim()];
    h[0] = rat(9, 2);
    h[1] = int(1);
    h[2] = int(1);
    let ad = l.ad_matrix(&h);
    let n = dec.n();
    let on_n = n.matrix_of(&n.basis().iter().map(|x| ad.mul_vec(x)).collect::<Vec<_>>()).unwrap();
    let mut spectrum: Vec<Rational> = Vec::new();
    for p in rational_eigenpairs(&on_n).unwrap() {
        spectrum.extend(std::iter::repeat(p.value).take(p.space.len()));
    }
    let expected: Vec<Rational> = ["1", "1", "2", "5/2", "7/2", "7/2", "9/2", "9/2", "11/2", "11/2", "13/2"]
        .iter()
        .map(|s| parse_rational(s).unwrap())
        .collect();
    assert_eq!(spectrum, expected);
}

#[test]
fn joint_eigenspaces_of_the_a_action() {
    let f = example("km-sl3").unwrap();
    let (dec, _) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
    let l = &f.algebra;
    let n = dec.n();
    let family: Vec<RatMatrix> = dec
        .a()
        .basis()
        .iter()
        .map(|a| {
            let ad = l.ad_matrix(a);
            n.matrix_of(&n.basis().iter().map(|x| ad.mul_vec(x)).collect::<Vec<_>>()).unwrap()
        })
        .collect();
    let spaces = simultaneous_eigenspaces(&family).unwrap();
    assert_eq!(spaces.len(), 10);
    let mut dims: Vec<usize> = spaces.iter().map(|s| s.space.len()).collect();
    dims.sort();
    assert_eq!(dims, [vec![1; 9], vec![2]].concat());
    // The plane is the imaginary root: D acts by 1, the H's by 0.
    let plane = spaces.iter().find(|s| s.space.len() == 2).unwrap();
    assert_eq!(plane.weight, v(&[1, 0, 0]));
}

#[test]
fn joint_eigenspace_trivial_cases() {
    let s = simultaneous_eigenspaces(&[RatMatrix::identity(3)]).unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!(s[0].weight, v(&[1]));
    assert_eq!(s[0].space.len(), 3);

    let s = simultaneous_eigenspaces(&[m(&[&[1, 0], &[0, 2]]), m(&[&[3, 0], &[0, 3]])]).unwrap();
    let weights: Vec<RatVector> = s.iter().map(|x| x.weight.clone()).collect();
    assert_eq!(weights, vec![v(&[1, 3]), v(&[2, 3])]);
    assert!(s.iter().all(|x| x.space.len() == 1));

    let e = simultaneous_eigenspaces(&[m(&[&[1, 0], &[0, 2]]), m(&[&[0, 1], &[1, 0]])]);
    assert!(matches!(e, Err(NumericsError::NonCommuting(0, 1))));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..12).prop_map(|(p, q)| rat(p, q))
}

fn int_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(-4i64..5, n * n).prop_map(move |e| RatMatrix::from_fn(n, n, |i, j| int(e[i * n + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rationals_stay_canonical(a in small_rational(), b in small_rational(), c in small_rational()) {
        for r in [&a + &b, &a * &b, &a - &c, (&a + &b) * &c] {
            prop_assert!(*r.denom() > 0.into());
            prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()), 1.into());
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
    }

    #[test]
    fn solve_recovers_the_right_hand_side(mat in int_matrix(4), x in proptest::collection::vec(small_rational(), 4)) {
        let b = mat.mul_vec(&x);
        match mat.solve(&b).unwrap() {
            LinearSolution::Unique(y) => {
                prop_assert_eq!(mat.rank(), 4);
                prop_assert_eq!(y, x);
            }
            LinearSolution::NonUnique { particular, kernel } => {
                prop_assert!(mat.rank() < 4);
                prop_assert_eq!(mat.mul_vec(&particular), b);
                prop_assert_eq!(kernel.len(), 4 - mat.rank());
            }
            LinearSolution::NoSolution => prop_assert!(false, "consistent system reported unsolvable"),
        }
    }

    #[test]
    fn kernel_is_a_basis_of_the_null_space(mat in proptest::collection::vec(-3i64..4, 12)) {
        let mat = RatMatrix::from_fn(3, 4, |i, j| int(mat[i * 4 + j]));
        let k = mat.kernel();
        prop_assert_eq!(k.len(), 4 - mat.rank());
        for x in &k {
            prop_assert!(mat.mul_vec(x).iter().all(|c| *c == int(0)));
        }
        if !k.is_empty() {
            prop_assert_eq!(RatMatrix::from_columns(4, &k).rank(), k.len());
        }
    }

    #[test]
    fn eigenpairs_of_conjugated_diagonals(
        d in proptest::collection::vec(-3i64..4, 4),
        upper in proptest::collection::vec(-2i64..3, 6),
        lower in proptest::collection::vec(-2i64..3, 6),
    ) {
        let p = unimodular(&upper, &lower, 4);
        let mat = &(&p * &RatMatrix::from_diagonal(&v(&d))) * &p.inverse().unwrap();
        let pairs = rational_eigenpairs(&mat).unwrap();
        prop_assert_eq!(pairs.iter().map(|x| x.space.len()).sum::<usize>(), 4);
        let mut values: Vec<Rational> = pairs.iter().flat_map(|x| std::iter::repeat(x.value.clone()).take(x.space.len())).collect();
        let mut expected = v(&d);
        values.sort();
        expected.sort();
        prop_assert_eq!(values, expected);
        for pair in &pairs {
            for x in &pair.space {
                let scaled: RatVector = x.iter().map(|c| c * &pair.value).collect();
                prop_assert_eq!(mat.mul_vec(x), scaled);
            }
        }
    }

    #[test]
    fn joint_eigenspaces_sum_to_the_whole_space(
        d1 in proptest::collection::vec(-2i64..3, 4),
        d2 in proptest::collection::vec(-2i64..3, 4),
        upper in proptest::collection::vec(-2i64..3, 6),
        lower in proptest::collection::vec(-2i64..3, 6),
    ) {
        let p = unimodular(&upper, &lower, 4);
        let p_inv = p.inverse().unwrap();
        let conj = |d: &[i64]| &(&p * &RatMatrix::from_diagonal(&v(d))) * &p_inv;
        let family = [conj(&d1), conj(&d2)];
        let spaces = simultaneous_eigenspaces(&family).unwrap();
        let all: Vec<RatVector> = spaces.iter().flat_map(|s| s.space.clone()).collect();
        prop_assert_eq!(all.len(), 4);
        prop_assert_eq!(RatMatrix::from_columns(4, &all).rank(), 4);
        for s in &spaces {
            for x in &s.space {
                for (k, member) in family.iter().enumerate() {
                    let scaled: RatVector = x.iter().map(|c| c * &s.weight[k]).collect();
                    prop_assert_eq!(member.mul_vec(x), scaled);
                }
            }
        }
        let distinct: std::collections::BTreeSet<(i64, i64)> = d1.iter().copied().zip(d2.iter().copied()).collect();
        prop_assert_eq!(spaces.len(), distinct.len());
    }
}
