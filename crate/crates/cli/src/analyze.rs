//! Builds report values from the core library.

use solvlie::attached::float::{float_roots, jacobi_star_direct};
use solvlie::attached::{build_attached, check_admissible, geodesic_report, restriction_report, AttachedSubalgebra};
use solvlie::catalog::AlgebraFile;
use solvlie::curvature::float::ricci_nilpotent_orthonormal;
use solvlie::curvature::{einstein_from, mean_curvature_vector, ricci_solvable};
use solvlie::iwasawa::{verify_simple_system, verify_strong_iwasawa_with, IwasawaDecomposition, IwasawaSplit, SimpleSystem};
use solvlie::lie::{MetricLieAlgebra, Subspace};
use solvlie::numerics::float::to_dmatrix;
use solvlie::numerics::{format_rational, format_vec, RatMatrix, RatVector};

use crate::failure::Failure;
use crate::report::*;

/// The alias accepted for the sum of all simple roots when it is a root.
pub const DELTA_ALIAS: &str = "d";

pub fn summarize(l: &MetricLieAlgebra) -> Result<AlgebraSummary, Failure> {
    let v = l.validate();
    let signature = l.gram().signature().map_err(|e| Failure::Input(e.to_string()))?;
    let summary = AlgebraSummary {
        name: l.name().to_string(),
        dim: l.dim(),
        labels: l.labels().to_vec(),
        signature: [signature.0, signature.1, signature.2],
        center_dim: l.center().dim(),
        validity: Validity {
            antisymmetric: v.antisymmetry.is_none(),
            jacobi: v.jacobi.is_none(),
            gram_symmetric: v.gram_symmetry.is_none(),
            gram_nondegenerate: v.gram_nondegenerate,
        },
    };
    let mut problems = Vec::new();
    if let Some((i, j, k)) = v.antisymmetry {
        problems.push(format!("antisymmetry fails at ({i}, {j}, {k})"));
    }
    if let Some((i, j, k)) = v.jacobi {
        problems.push(format!(
            "Jacobi identity fails on ({}, {}, {})",
            l.labels()[i],
            l.labels()[j],
            l.labels()[k]
        ));
    }
    if let Some((i, j)) = v.gram_symmetry {
        problems.push(format!("scalar product not symmetric at ({i}, {j})"));
    }
    if !v.gram_nondegenerate {
        problems.push("scalar product is degenerate".into());
    }
    if problems.is_empty() {
        Ok(summary)
    } else {
        Err(Failure::Validation(problems.join("; ")))
    }
}

fn split_summary(l: &MetricLieAlgebra, a: &Subspace, n: &Subspace) -> Split {
    let series = l.lower_central_series_of(n);
    Split {
        a_basis: basis_labels(l, a),
        n_dim: n.dim(),
        n_series: series.dims(),
        n_step: series.step(),
    }
}

/// Decomposition plus a simple system: the explicit one if given, else the
/// file's hint, else the indecomposable roots when they form a simple system.
pub fn decompose(
    file: &AlgebraFile,
    simple: Option<&[RatVector]>,
) -> Result<(IwasawaDecomposition, Option<SimpleSystem>), Failure> {
    let simple = simple.or(file.simple.as_deref());
    let (dec, sys) = verify_strong_iwasawa_with(&file.algebra, file.a_basis.as_deref(), simple)?;
    if sys.is_some() {
        return Ok((dec, sys));
    }
    let guess = dec.suggest_simple_system();
    let sys = verify_simple_system(&dec, &guess).ok();
    Ok((dec, sys))
}

pub fn root_label(dec: &IwasawaDecomposition, sys: Option<&SimpleSystem>, i: usize) -> String {
    match sys {
        Some(sys) => {
            let label = sys.root_label(i);
            if is_delta(dec, sys, i) {
                format!("{label} ({DELTA_ALIAS})")
            } else {
                label
            }
        }
        None => format!("r{i}: {}", format_vec(&dec.roots()[i].coords)),
    }
}

/// The sum of all simple roots, when it is a root with a root space of
/// dimension above one (the imaginary root of the loop-algebra example).
fn is_delta(dec: &IwasawaDecomposition, sys: &SimpleSystem, i: usize) -> bool {
    sys.lambda.len() > 1
        && dec.roots()[i].multiplicity > 1
        && sys.expansions[i].iter().all(|c| *c == solvlie::numerics::one())
}

/// Positions in the simple system for comma-separated labels `a<k>`; an empty
/// string is the empty subset. `d` and other non-simple root labels are rejected.
pub fn resolve_subset(dec: &IwasawaDecomposition, sys: &SimpleSystem, text: &str) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some(k) = sys.simple_by_label(token) {
            out.push(k);
            continue;
        }
        let names_root = token == DELTA_ALIAS && (0..sys.expansions.len()).any(|i| is_delta(dec, sys, i))
            || (0..sys.expansions.len()).any(|i| sys.root_label(i) == token);
        return Err(Failure::Input(if names_root {
            format!("'{token}' is a root but not a simple root; lambda-prime takes simple roots a0..a{}", sys.lambda.len() - 1)
        } else {
            format!("unknown simple root '{token}'; expected a0..a{}", sys.lambda.len() - 1)
        }));
    }
    Ok(out)
}

fn subset_labels(subset: &[usize]) -> Vec<String> {
    subset.iter().map(|k| format!("a{k}")).collect()
}

/// Proper subsets of `0..rank`, by size and then lexicographically.
fn proper_subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..(1 << rank) - 1)
        .map(|mask| (0..rank).filter(|k| mask & (1 << k) != 0).collect())
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    all
}

fn attached_summary(dec: &IwasawaDecomposition, sys: &SimpleSystem, subset: &[usize]) -> Result<AttachedSummary, Failure> {
    let adm = check_admissible(dec, sys, subset)?;
    let mut out = AttachedSummary {
        subset: subset_labels(subset),
        admissible: adm.admissible(),
        violation: adm.violation.clone(),
        z: label(dec.algebra(), &adm.z),
        a_prime_dim: None,
        n_prime_dim: None,
        jacobi_star: None,
        clauses: None,
        einstein_lambda: None,
        minimal: None,
        totally_geodesic: None,
    };
    if !adm.admissible() {
        return Ok(out);
    }
    let att = build_attached(dec, sys, subset)?;
    let rr = restriction_report(&att)?;
    let geo = geodesic_report(&att)?;
    out.a_prime_dim = Some(att.a_prime().dim());
    out.n_prime_dim = Some(att.n_prime().dim());
    out.jacobi_star = Some(rr.jacobi_star.holds);
    out.clauses = Some(rr.verdicts());
    out.einstein_lambda = opt_rational(rr.restricted_einstein.lambda());
    out.minimal = Some(geo.minimal);
    out.totally_geodesic = Some(geo.via_roots);
    Ok(out)
}

pub fn analyze_exact(file: &AlgebraFile, simple: Option<&[RatVector]>) -> Result<Analysis, Failure> {
    let l = &file.algebra;
    let algebra = summarize(l)?;
    let (dec, sys) = decompose(file, simple)?;
    let split = split_summary(l, dec.a(), dec.n());
    let roots = (0..dec.roots().len())
        .map(|i| {
            let r = &dec.roots()[i];
            RootRow {
                label: root_label(&dec, sys.as_ref(), i),
                coords: strings(&r.coords),
                multiplicity: r.multiplicity,
                root_vector: label(l, &dec.root_vector(&r.coords)),
            }
        })
        .collect();
    let simple_system = sys.as_ref().map(|sys| {
        let labels = subset_labels(&(0..sys.lambda.len()).collect::<Vec<_>>());
        let coords: Vec<&RatVector> = sys.lambda.iter().map(|&i| &dec.roots()[i].coords).collect();
        let pairing = RatMatrix::from_fn(coords.len(), coords.len(), |i, j| dec.root_inner(coords[i], coords[j]));
        SimpleSummary {
            roots: coords.iter().map(|c| strings(c)).collect(),
            pairing: Matrix::new(&pairing, labels.clone()),
            dual_basis: sys.dual_basis.iter().map(|b| label(l, b)).collect(),
            labels,
        }
    });

    let ric = ricci_solvable(&dec)?;
    let report = einstein_from(&dec, &ric)?;
    let n_basis = basis_labels(l, dec.n());
    let a_basis = split.a_basis.clone();
    let curvature = Curvature {
        mean_curvature: label(l, &ric.mean_curvature),
        ricci_n: Matrix::new(&ric.ricci_n, n_basis.clone()),
        ad_h_n: Matrix::new(&ric.ad_h_n, n_basis.clone()),
        ricci_n_minus_ad_h: Matrix::new(&(&ric.ricci_n - &ric.ad_h_n), n_basis.clone()),
        trace_form: Matrix::new(&ric.trace_form, a_basis.clone()),
        a_gram: Matrix::new(dec.a_gram(), a_basis),
        ricci_s: Matrix::new(&ric.ricci_s, l.labels().to_vec()),
    };
    let einstein = Einstein {
        einstein: report.direct.is_some(),
        lambda: opt_rational(report.lambda()),
        direct: opt_rational(report.direct.as_ref()),
        nilradical_lambda: opt_rational(report.nilradical_lambda.as_ref()),
        trace_identity: report.trace_identity,
        nilradical_criterion: opt_rational(report.nilradical_criterion.as_ref()),
    };
    let attached = match &sys {
        Some(sys) => proper_subsets(sys.lambda.len())
            .iter()
            .map(|s| attached_summary(&dec, sys, s))
            .collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    Ok(Analysis {
        mode: "exact",
        algebra,
        split,
        roots,
        simple_system,
        n_basis,
        curvature,
        einstein,
        attached,
    })
}

fn float_matrix(m: &nalgebra::DMatrix<f64>, basis: Vec<String>) -> FloatMatrix {
    FloatMatrix {
        basis,
        rows: (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect(),
    }
}

/// Float analysis: exact split, numeric roots, orthonormal-frame Ricci.
pub fn analyze_float(file: &AlgebraFile, tol: f64) -> Result<FloatAnalysis, Failure> {
    let l = &file.algebra;
    let algebra = summarize(l)?;
    let split = IwasawaSplit::new(l, file.a_basis.as_deref())?;
    let (a, n) = (split.a(), split.n());
    let roots = float_roots(&split, tol)?
        .into_iter()
        .map(|r| FloatRootRow {
            coords: r.coords,
            multiplicity: r.multiplicity,
        })
        .collect();
    let h = mean_curvature_vector(l)?;
    let n_alg = l.restrict(n)?;
    let ricci_n = ricci_nilpotent_orthonormal(&n_alg, tol)
        .ok_or_else(|| Failure::Validation("scalar product numerically degenerate on n".into()))?;
    let ad_h_n = to_dmatrix(&l.compress(&l.ad_matrix(&h), n)?);
    let difference = &ricci_n - &ad_h_n;
    let k = n.dim();
    let ad_a: Vec<RatMatrix> = a.basis().iter().map(|x| l.ad_matrix(x)).collect();
    let trace_form = to_dmatrix(&RatMatrix::from_fn(ad_a.len(), ad_a.len(), |i, j| (&ad_a[i] * &ad_a[j]).trace()));
    let a_gram = to_dmatrix(split.a_gram());
    let lambda = if k > 0 {
        (0..k).map(|i| difference[(i, i)]).sum::<f64>() / k as f64
    } else {
        -trace_form[(0, 0)] / a_gram[(0, 0)]
    };
    let mut deviation: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            let target = if i == j { lambda } else { 0.0 };
            deviation = deviation.max((difference[(i, j)] - target).abs());
        }
    }
    for (x, g) in trace_form.iter().zip(a_gram.iter()) {
        deviation = deviation.max((x + lambda * g).abs());
    }
    let einstein = deviation <= tol * lambda.abs().max(1.0);
    let n_basis = basis_labels(l, n);
    Ok(FloatAnalysis {
        mode: "float",
        tolerance: tol,
        algebra,
        split: split_summary(l, a, n),
        roots,
        mean_curvature: label(l, &h),
        ricci_n: float_matrix(&ricci_n, n_basis.clone()),
        ad_h_n: float_matrix(&ad_h_n, n_basis.clone()),
        n_basis,
        einstein: FloatEinstein {
            einstein,
            lambda: einstein.then_some(lambda),
            max_deviation: deviation,
        },
    })
}

/// Full report for one subset. An inadmissible subset yields the admissibility
/// section only; the caller turns that into a validation exit.
pub fn attached_report(
    file: &AlgebraFile,
    simple: Option<&[RatVector]>,
    subset_text: &str,
    float_tol: Option<f64>,
) -> Result<AttachedReport, Failure> {
    let l = &file.algebra;
    summarize(l)?;
    let (dec, sys) = decompose(file, simple)?;
    let sys = sys.ok_or_else(|| {
        Failure::Validation("no simple system: supply one with --simple".into())
    })?;
    let subset = resolve_subset(&dec, &sys, subset_text)?;
    let adm = check_admissible(&dec, &sys, &subset)?;
    let root_name = |i: usize| root_label(&dec, Some(&sys), i);
    let admissibility = Admissibility {
        admissible: adm.admissible(),
        z: label(l, &adm.z),
        positive_roots: adm.positive_roots.iter().map(|&i| root_name(i)).collect(),
        violation: adm.violation.clone(),
    };
    let mut report = AttachedReport {
        mode: if float_tol.is_some() { "float" } else { "exact" },
        algebra: l.name().to_string(),
        simple_roots: sys.lambda.iter().map(|&i| format_vec(&dec.roots()[i].coords)).collect(),
        subset: subset_labels(&subset),
        admissibility,
        dimensions: None,
        detail: None,
    };
    if !adm.admissible() {
        return Ok(report);
    }
    let att = build_attached(&dec, &sys, &subset)?;
    report.dimensions = Some(Dimensions {
        a_prime: att.a_prime().dim(),
        n_prime: att.n_prime().dim(),
        a_zero: att.a_zero().dim(),
        n_zero: att.n_zero().dim(),
        s_prime: att.s_prime().dim(),
    });
    report.detail = Some(attached_detail(&att, float_tol)?);
    Ok(report)
}

fn attached_detail(att: &AttachedSubalgebra, float_tol: Option<f64>) -> Result<AttachedDetail, Failure> {
    let dec = att.parent();
    let l = dec.algebra();
    let rr = restriction_report(att)?;
    let geo = geodesic_report(att)?;
    let n_prime = att.n_prime();
    let n_prime_basis = basis_labels(l, n_prime);
    let operator = |m: Option<RatMatrix>| {
        m.ok_or_else(|| Failure::Violation("Jacobi Star operator does not preserve n'".into()))
    };
    let lhs = operator(rr.ricci_difference.lhs_in(n_prime))?;
    let rhs = operator(rr.ricci_difference.rhs_in(n_prime))?;
    let direct_check = match float_tol {
        Some(tol) => {
            let d = jacobi_star_direct(att, tol)?;
            if d.holds != rr.jacobi_star.holds {
                return Err(Failure::Violation(format!(
                    "float Jacobi Star verdict {} disagrees with exact verdict {}",
                    d.holds, rr.jacobi_star.holds
                )));
            }
            Some(FloatCheck {
                holds: d.holds,
                max_deviation: d.max_deviation,
                tolerance: d.tolerance,
            })
        }
        None => None,
    };
    let s_prime_labels = basis_labels(l, att.s_prime());
    let simple = |k: usize| format!("a{k}");
    Ok(AttachedDetail {
        a_prime: basis_labels(l, att.a_prime()),
        h: label(l, &ricci_solvable(dec)?.mean_curvature),
        h_prime: label(l, att.h_prime()),
        invariant_failures: att.invariants().failures().iter().map(|s| s.to_string()).collect(),
        jacobi_star: JacobiStar {
            holds: rr.ricci_difference.holds,
            lhs: Matrix::new(&lhs, n_prime_basis.clone()),
            rhs: Matrix::new(&rhs, n_prime_basis.clone()),
        },
        n_prime_basis,
        direct_check,
        clauses: Clauses {
            ricci_restricts: rr.ricci_restricts,
            ricci_difference: rr.ricci_difference.holds,
            jacobi_star: rr.jacobi_star.holds,
        },
        parent_lambda: opt_rational(rr.parent_einstein.lambda()),
        restricted_lambda: opt_rational(rr.restricted_einstein.lambda()),
        restricted_ricci: Matrix::new(&rr.restricted_ricci, s_prime_labels.clone()),
        geodesic: Geodesic {
            totally_geodesic: geo.via_roots && geo.via_h,
            via_roots: geo.via_roots,
            via_second_fundamental_form: geo.via_h,
            root_products: geo
                .root_products
                .iter()
                .map(|(i, j, p)| RootProduct {
                    inside: simple(*i),
                    outside: simple(*j),
                    value: format_rational(p),
                })
                .collect(),
            nonzero_h_at: geo.h_witness.map(|(i, j)| [s_prime_labels[i].clone(), s_prime_labels[j].clone()]),
            mean_curvature_trace: label(l, &geo.mean_curvature_trace),
            minimal: geo.minimal,
        },
    })
}
