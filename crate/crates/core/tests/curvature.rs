//! Ricci endomorphisms, mean curvature, the U-tensor and the second fundamental
//! form, checked against independent formulas.

use nalgebra::DMatrix;
use proptest::prelude::*;
use solvlie::catalog::{build_heisenberg_extension, build_heisenberg_extension_scaled, build_heisenberg_rank2, example, sample_examples};
use solvlie::curvature::float::{orthonormal_frame, ricci_nilpotent_orthonormal};
use solvlie::curvature::{
    einstein_check, mean_curvature, mean_curvature_from_roots, mean_curvature_vector, minimality_check, ricci_nilpotent,
    ricci_solvable, second_fundamental_form, u_tensor, Submanifold,
};
use solvlie::iwasawa::{verify_strong_iwasawa, verify_strong_iwasawa_with, IwasawaDecomposition};
use solvlie::lie::{MetricLieAlgebra, Subspace};
use solvlie::numerics::float::{max_abs_diff, to_dmatrix};
use solvlie::numerics::{add_vec, int, rat, scale_vec, sub_vec, to_f64, RatMatrix, RatVector, Rational};

const TOL: f64 = 1e-9;

fn decomposition(name: &str) -> IwasawaDecomposition {
    let f = example(name).unwrap();
    verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap().0
}

/// Ricci form of a Riemannian metric Lie algebra from the classical formula
/// `−½Σ⟨[X,E_i],[Y,E_i]⟩ − ½B(X,Y) + ¼Σ⟨[E_i,E_j],X⟩⟨[E_i,E_j],Y⟩ − ½(⟨[H,X],Y⟩ + ⟨[H,Y],X⟩)`
/// over an orthonormal frame, returned as an endomorphism in the algebra's basis.
fn classical_ricci(l: &MetricLieAlgebra) -> DMatrix<f64> {
    let d = l.dim();
    let g = to_dmatrix(l.gram());
    let frame = orthonormal_frame(&g, TOL).expect("definite scalar product");
    assert!(frame.signs.iter().all(|s| *s > 0.0));
    let p = &frame.p;
    let p_inv = p.clone().try_inverse().unwrap();
    // Structure constants in the frame: c[i][j] = coordinates of [E_i, E_j].
    let ad: Vec<DMatrix<f64>> = (0..d).map(|k| to_dmatrix(l.ad_basis(k))).collect();
    let ad_frame: Vec<DMatrix<f64>> = (0..d)
        .map(|i| {
            let e = p.column(i);
            let m = ad.iter().enumerate().fold(DMatrix::zeros(d, d), |acc, (k, a)| acc + a * e[k]);
            &p_inv * m * p
        })
        .collect();
    let bracket = |i: usize, j: usize| ad_frame[i].column(j).into_owned();
    let killing = DMatrix::from_fn(d, d, |i, j| (&ad_frame[i] * &ad_frame[j]).trace());
    let h: Vec<f64> = (0..d).map(|i| ad_frame[i].trace()).collect();
    let ad_h = ad_frame.iter().zip(&h).fold(DMatrix::zeros(d, d), |acc, (m, c)| acc + m * *c);
    let mut ric = DMatrix::zeros(d, d);
    for x in 0..d {
        for y in 0..d {
            let mut r = -0.5 * killing[(x, y)];
            for i in 0..d {
                r -= 0.5 * bracket(x, i).dot(&bracket(y, i));
                for j in 0..d {
                    let b = bracket(i, j);
                    r += 0.25 * b[x] * b[y];
                }
            }
            r -= 0.5 * (ad_h[(y, x)] + ad_h[(x, y)]);
            ric[(x, y)] = r;
        }
    }
    p * ric * p_inv
}

#[test]
fn solvable_ricci_matches_the_classical_formula() {
    for name in sample_examples() {
        let dec = decomposition(&name);
        let exact = to_dmatrix(&ricci_solvable(&dec).unwrap().ricci_s);
        let oracle = classical_ricci(dec.algebra());
        assert!(max_abs_diff(&exact, &oracle) <= TOL, "{name}: {exact} vs {oracle}");
    }
}

#[test]
fn nilpotent_ricci_matches_orthonormal_sum() {
    for name in sample_examples() {
        let dec = decomposition(&name);
        let n = dec.algebra().restrict(dec.n()).unwrap();
        let exact = to_dmatrix(&ricci_nilpotent(&n).unwrap());
        let literal = ricci_nilpotent_orthonormal(&n, TOL).unwrap();
        assert!(max_abs_diff(&exact, &literal) <= TOL, "{name}");
    }
}

fn heisenberg() -> MetricLieAlgebra {
    let labels = ["X", "Y", "Z"].map(String::from).to_vec();
    MetricLieAlgebra::new("heisenberg", labels, vec![((0, 1), vec![int(0), int(0), int(1)])], RatMatrix::identity(3)).unwrap()
}

#[test]
fn heisenberg_ricci() {
    let ric = ricci_nilpotent(&heisenberg()).unwrap();
    assert_eq!(ric, RatMatrix::from_diagonal(&[rat(-1, 2), rat(-1, 2), rat(1, 2)]));
}

#[test]
fn abelian_ricci_and_mean_curvature_vanish() {
    let l = MetricLieAlgebra::new("abelian", vec!["A".into(), "B".into()], Vec::new(), RatMatrix::identity(2)).unwrap();
    assert!(ricci_nilpotent(&l).unwrap().is_zero());
    let dec = verify_strong_iwasawa(&l).unwrap();
    assert!(mean_curvature(&dec).unwrap().iter().all(|c| *c == int(0)));
    let ric = ricci_solvable(&dec).unwrap();
    assert!(ric.ricci_s.is_zero());
    assert_eq!(einstein_check(&dec).unwrap().lambda(), Some(&int(0)));
}

#[test]
fn mean_curvature_two_ways() {
    for name in sample_examples() {
        let dec = decomposition(&name);
        assert_eq!(mean_curvature_vector(dec.algebra()).unwrap(), mean_curvature_from_roots(&dec), "{name}");
    }
}

#[test]
fn mixed_ricci_block_vanishes() {
    for name in sample_examples() {
        let dec = decomposition(&name);
        let l = dec.algebra();
        let form = l.gram() * &ricci_solvable(&dec).unwrap().ricci_s;
        for a in dec.a().basis() {
            for x in dec.n().basis() {
                assert_eq!(form.bilinear(a, x), int(0), "{name}");
            }
        }
    }
}

#[test]
fn einstein_routes_agree_over_the_catalog() {
    for name in sample_examples() {
        let report = einstein_check(&decomposition(&name)).unwrap();
        assert!(report.consistent(), "{name}");
    }
    let hyperbolic = einstein_check(&decomposition("hyperbolic:3")).unwrap();
    assert!(hyperbolic.lambda().is_some());
    // With an orthonormal basis the derivation diag(1,1,2) is not Einstein;
    // the complex hyperbolic plane needs ⟨A, A⟩ = tr ad_A = 4.
    let plain = einstein_check(&decomposition("heisenberg-ext:1,1,2")).unwrap();
    assert!(plain.lambda().is_none());
    let w = [int(1), int(1), int(2)];
    let scaled = build_heisenberg_extension_scaled(&w, &int(4)).unwrap();
    let complex = einstein_check(&verify_strong_iwasawa(&scaled).unwrap()).unwrap();
    assert!(complex.consistent());
    assert!(complex.lambda().is_some_and(|l| *l < int(0)));
    let sl3 = einstein_check(&decomposition("iwasawa-sl3")).unwrap();
    assert!(sl3.lambda().is_some_and(|l| *l < int(0)));
}

#[test]
fn u_tensor_identities() {
    for name in sample_examples() {
        let dec = decomposition(&name);
        let l = dec.algebra();
        let d = l.dim();
        let unit = |i: usize| (0..d).map(|k| if k == i { int(1) } else { int(0) }).collect::<RatVector>();
        for i in 0..d {
            let x = unit(i);
            let ad_star = l.ad_star(&x, &Subspace::whole(d)).unwrap();
            assert_eq!(u_tensor(l, &x, &x).unwrap(), scale_vec(&int(-1), &ad_star.mul_vec(&x)), "{name}");
            for j in 0..i {
                let y = unit(j);
                assert_eq!(u_tensor(l, &x, &y).unwrap(), u_tensor(l, &y, &x).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn u_tensor_on_root_spaces() {
    for name in sample_examples() {
        let dec = decomposition(&name);
        let l = dec.algebra();
        let a_basis = dec.a().basis();
        for x in a_basis {
            for y in a_basis {
                assert!(u_tensor(l, x, y).unwrap().iter().all(|c| *c == int(0)));
            }
        }
        for (root, space) in dec.roots().iter().zip(dec.root_spaces()) {
            for x in space.basis() {
                for a in a_basis {
                    let expected = scale_vec(&rat(-1, 2), &scale_vec(&dec.evaluate(&root.coords, a), x));
                    assert_eq!(u_tensor(l, a, x).unwrap(), expected, "{name}");
                }
                // U(X,X) lies in a for X in a single root space.
                assert!(dec.a().contains(&u_tensor(l, x, x).unwrap()), "{name}");
            }
        }
        for (i, (alpha, s)) in dec.roots().iter().zip(dec.root_spaces()).enumerate() {
            for (j, (beta, t)) in dec.roots().iter().zip(dec.root_spaces()).enumerate() {
                if i == j {
                    continue;
                }
                let diff = sub_vec(&beta.coords, &alpha.coords);
                let mut target = Subspace::zero(l.dim());
                for sign in [int(1), int(-1)] {
                    if let Some(k) = dec.root_index(&scale_vec(&sign, &diff)) {
                        target = target.sum(&dec.root_spaces()[k]);
                    }
                }
                for x in s.basis() {
                    for y in t.basis() {
                        assert!(target.contains(&u_tensor(l, x, y).unwrap()), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn km_sl3_u_tensor_at_e12() {
    let dec = decomposition("km-sl3");
    let l = dec.algebra();
    let x = unit_at(l, "E12");
    // Equals the root vector of α1, i.e. ½ H1.
    let mut expected = vec![int(0); l.dim()];
    expected[l.index_of("H1").unwrap()] = rat(1, 2);
    assert_eq!(u_tensor(l, &x, &x).unwrap(), expected);
}

fn unit_at(l: &MetricLieAlgebra, label: &str) -> RatVector {
    let mut v = vec![int(0); l.dim()];
    v[l.index_of(label).unwrap()] = int(1);
    v
}

#[test]
fn second_fundamental_form_is_normal() {
    let dec = decomposition("km-sl3");
    let l = dec.algebra();
    let sub = Subspace::span(l.dim(), &[unit_at(l, "D"), unit_at(l, "E12"), unit_at(l, "tE12"), unit_at(l, "tE13")]);
    let shape = Submanifold::new(l, &sub).unwrap();
    for x in sub.basis() {
        for y in sub.basis() {
            let h = shape.second_fundamental_form(x, y).unwrap();
            assert_eq!(h, second_fundamental_form(l, &sub, x, y).unwrap());
            for z in sub.basis() {
                assert_eq!(l.inner(&h, z), int(0));
            }
        }
    }
}

#[test]
fn whole_algebra_is_totally_geodesic() {
    let dec = decomposition("iwasawa-sl3");
    let l = dec.algebra();
    let (trace, minimal) = minimality_check(l, &Subspace::whole(l.dim())).unwrap();
    assert!(minimal);
    assert!(trace.iter().all(|c| *c == int(0)));
}

#[test]
fn non_attached_subalgebra_is_not_minimal() {
    let f = example("iwasawa-sl3").unwrap();
    let (dec, sys) = verify_strong_iwasawa_with(&f.algebra, f.a_basis.as_deref(), f.simple.as_deref()).unwrap();
    let l = dec.algebra();
    // The B_{α1} line with E12: its mean curvature leaves the line.
    let b1 = sys.unwrap().dual_basis[0].clone();
    let sub = Subspace::span(l.dim(), &[b1, unit_at(l, "E12")]);
    let (trace, minimal) = minimality_check(l, &sub).unwrap();
    assert!(!minimal);
    // Direct contraction of h with the inverse restricted Gram matrix.
    let g_inv = sub.restricted_gram(l.gram()).inverse().unwrap();
    let mut direct = vec![int(0); l.dim()];
    for (i, x) in sub.basis().iter().enumerate() {
        for (j, y) in sub.basis().iter().enumerate() {
            let h = second_fundamental_form(l, &sub, x, y).unwrap();
            direct = add_vec(&direct, &scale_vec(&g_inv[(i, j)], &h));
        }
    }
    assert_eq!(trace, direct);
}

/// An invertible integer matrix built from elementary row operations.
fn unimodular(d: usize, ops: &[(usize, usize, i64)]) -> RatMatrix {
    let mut m = RatMatrix::identity(d);
    for &(i, j, c) in ops {
        let (i, j) = (i % d, j % d);
        if i == j {
            continue;
        }
        for k in 0..d {
            let v = &m[(i, k)] + &(int(c) * &m[(j, k)]);
            m[(i, k)] = v;
        }
    }
    m
}

/// The same metric Lie algebra written in the basis given by the columns of `p`.
fn change_basis(l: &MetricLieAlgebra, p: &RatMatrix) -> MetricLieAlgebra {
    let p_inv = p.inverse().unwrap();
    let cols = p.columns();
    let gram = &(&p.transpose() * l.gram()) * p;
    MetricLieAlgebra::from_bracket_fn(l.name(), l.labels().to_vec(), gram, |i, j| {
        p_inv.mul_vec(&l.bracket(&cols[i], &cols[j]))
    })
    .unwrap()
}

fn n_of(name: &str) -> MetricLieAlgebra {
    let dec = decomposition(name);
    dec.algebra().restrict(dec.n()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn nilpotent_ricci_is_basis_independent(
        which in 0usize..3,
        ops in proptest::collection::vec((0usize..6, 0usize..6, -2i64..=2), 1..6),
    ) {
        let n = match which {
            0 => heisenberg(),
            1 => n_of("iwasawa-sl3"),
            _ => n_of("heisenberg-ext"),
        };
        let p = unimodular(n.dim(), &ops);
        let moved = change_basis(&n, &p);
        let ric = ricci_nilpotent(&n).unwrap();
        let ric_moved = ricci_nilpotent(&moved).unwrap();
        prop_assert_eq!(&p * &ric_moved, &ric * &p);
    }

    #[test]
    fn rank_two_heisenberg_einstein_routes_agree(
        p in 1i64..6,
        q_extra in 1i64..6,
        norms in proptest::collection::vec(1i64..4, 3),
    ) {
        // K = [[p, -p/2], [-p/2, q]] is definite exactly when q > p/4.
        let q = rat(p, 4) + rat(q_extra, 3);
        let k = RatMatrix::from_rows(&[vec![int(p), rat(-p, 2)], vec![rat(-p, 2), q]]);
        let norms: Vec<Rational> = norms.iter().map(|&c| int(c)).collect();
        let l = build_heisenberg_rank2(&k, &norms).unwrap();
        let dec = verify_strong_iwasawa(&l).unwrap();
        prop_assert!(einstein_check(&dec).unwrap().consistent());
        let exact = to_dmatrix(&ricci_solvable(&dec).unwrap().ricci_s);
        prop_assert!(max_abs_diff(&exact, &classical_ricci(&l)) <= TOL);
    }

    #[test]
    fn single_derivation_ricci_matches_classical(x in 1i64..5, y in 1i64..5) {
        let w = vec![int(x), int(y), int(x + y)];
        let l = build_heisenberg_extension(&w).unwrap();
        let dec = verify_strong_iwasawa(&l).unwrap();
        let exact = to_dmatrix(&ricci_solvable(&dec).unwrap().ricci_s);
        prop_assert!(max_abs_diff(&exact, &classical_ricci(&l)) <= TOL);
        let h = mean_curvature(&dec).unwrap();
        prop_assert!((to_f64(&l.inner(&h, &h)) - to_f64(&rat(4 * (x + y) * (x + y), 1)) / to_f64(&l.gram()[(0, 0)])).abs() <= TOL);
    }
}
