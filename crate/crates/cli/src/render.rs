//! Plain-text rendering of report values.

use std::fmt::Write;

use crate::report::*;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn opt(s: &Option<String>) -> &str {
    s.as_deref().unwrap_or("-")
}

/// `c Id` for a scalar matrix, `diag(...)` for a diagonal one, rows otherwise.
fn matrix(out: &mut String, indent: &str, name: &str, m: &Matrix) {
    let n = m.rows.len();
    if n == 0 {
        let _ = writeln!(out, "{indent}{name} = (empty)");
        return;
    }
    let square = m.rows.iter().all(|r| r.len() == n);
    let diagonal = square && (0..n).all(|i| (0..n).all(|j| i == j || m.rows[i][j] == "0"));
    if diagonal {
        let d: Vec<&str> = (0..n).map(|i| m.rows[i][i].as_str()).collect();
        if d.iter().all(|x| *x == d[0]) {
            let _ = writeln!(out, "{indent}{name} = {} Id ({n}x{n})", d[0]);
        } else {
            let _ = writeln!(out, "{indent}{name} = diag({})", d.join(", "));
        }
        return;
    }
    let _ = writeln!(out, "{indent}{name} =");
    let width = m.rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in &m.rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{indent}  [{}]", cells.join("  "));
    }
}

fn float_matrix(out: &mut String, indent: &str, name: &str, m: &FloatMatrix) {
    let _ = writeln!(out, "{indent}{name} =");
    for row in &m.rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>14.9}")).collect();
        let _ = writeln!(out, "{indent}  [{}]", cells.join(" "));
    }
}

fn algebra(out: &mut String, a: &AlgebraSummary) {
    let v = &a.validity;
    let _ = writeln!(out, "algebra {}", a.name);
    let _ = writeln!(out, "  dim {}, signature {} positive {} negative {} null, center dim {}", a.dim, a.signature[0], a.signature[1], a.signature[2], a.center_dim);
    let _ = writeln!(out, "  basis: {}", a.labels.join(", "));
    let _ = writeln!(
        out,
        "  antisymmetry {}, Jacobi identity {}, scalar product symmetric {}, nondegenerate {}",
        yes_no(v.antisymmetric),
        yes_no(v.jacobi),
        yes_no(v.gram_symmetric),
        yes_no(v.gram_nondegenerate)
    );
}

fn split(out: &mut String, s: &Split) {
    let _ = writeln!(out, "iwasawa split s = a + n");
    let _ = writeln!(out, "  a (dim {}): {}", s.a_basis.len(), s.a_basis.join(", "));
    let series: Vec<String> = s.n_series.iter().map(usize::to_string).collect();
    let step = s.n_step.map_or("not nilpotent".to_string(), |k| k.to_string());
    let _ = writeln!(out, "  n (dim {}): lower central series dims {}, step {}", s.n_dim, series.join(" > "), step);
}

pub fn analysis(r: &Analysis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mode exact");
    algebra(&mut out, &r.algebra);
    split(&mut out, &r.split);
    let _ = writeln!(out, "  strong Iwasawa type: yes");

    let _ = writeln!(out, "roots ({}), coordinates on the a-basis", r.roots.len());
    let coords: Vec<String> = r.roots.iter().map(|x| format!("({})", x.coords.join(", "))).collect();
    let label_width = r.roots.iter().map(|x| x.label.len()).max().unwrap_or(0);
    let coord_width = coords.iter().map(String::len).max().unwrap_or(0);
    for (root, c) in r.roots.iter().zip(&coords) {
        let _ = writeln!(
            out,
            "  {:<label_width$}  {c:<coord_width$}  dim {}  H = {}",
            root.label, root.multiplicity, root.root_vector
        );
    }
    match &r.simple_system {
        Some(s) => {
            let _ = writeln!(out, "simple system");
            for ((name, coords), b) in s.labels.iter().zip(&s.roots).zip(&s.dual_basis) {
                let _ = writeln!(out, "  {name} = ({})  B_{name} = {b}", coords.join(", "));
            }
            matrix(&mut out, "  ", "<a_i, a_j>", &s.pairing);
        }
        None => {
            let _ = writeln!(out, "simple system: none found");
        }
    }

    let c = &r.curvature;
    let _ = writeln!(out, "curvature");
    let _ = writeln!(out, "  mean curvature H = {}", c.mean_curvature);
    let _ = writeln!(out, "  n-basis: {}", r.n_basis.join(", "));
    matrix(&mut out, "  ", "Ric^n", &c.ricci_n);
    matrix(&mut out, "  ", "ad_H|n", &c.ad_h_n);
    matrix(&mut out, "  ", "Ric^n - ad_H|n", &c.ricci_n_minus_ad_h);
    matrix(&mut out, "  ", "tr(ad_A ad_B) on a", &c.trace_form);
    matrix(&mut out, "  ", "<A, B> on a", &c.a_gram);
    matrix(&mut out, "  ", "Ric^s", &c.ricci_s);

    let e = &r.einstein;
    match &e.lambda {
        Some(l) => {
            let _ = writeln!(out, "einstein: yes, lambda = {l}");
        }
        None => {
            let _ = writeln!(out, "einstein: no");
        }
    }
    let _ = writeln!(
        out,
        "  direct {}; nilradical {}; trace identity {}; nilradical criterion {}",
        opt(&e.direct),
        opt(&e.nilradical_lambda),
        holds(e.trace_identity),
        opt(&e.nilradical_criterion)
    );

    if !r.attached.is_empty() {
        let _ = writeln!(out, "attached subalgebras (clauses: Ricci restricts, Ricci difference, Jacobi Star)");
        for a in &r.attached {
            let name = format!("{{{}}}", a.subset.join(","));
            if !a.admissible {
                let _ = writeln!(out, "  {name:<12} inadmissible: {}", opt(&a.violation));
                continue;
            }
            let clauses = a.clauses.map_or("-".to_string(), |c| {
                c.iter().map(|b| if *b { "T" } else { "F" }).collect::<Vec<_>>().join("")
            });
            let _ = writeln!(
                out,
                "  {name:<12} dims a' {} n' {}  Jacobi Star {}  clauses {clauses}  lambda' {}  minimal {}  totally geodesic {}",
                a.a_prime_dim.unwrap_or(0),
                a.n_prime_dim.unwrap_or(0),
                a.jacobi_star.map_or("-", holds),
                opt(&a.einstein_lambda),
                a.minimal.map_or("-", yes_no),
                a.totally_geodesic.map_or("-", yes_no)
            );
        }
    }
    out
}

pub fn float_analysis(r: &FloatAnalysis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mode float, tolerance {:e}", r.tolerance);
    algebra(&mut out, &r.algebra);
    split(&mut out, &r.split);
    let _ = writeln!(out, "roots ({}), numeric, coordinates on the a-basis", r.roots.len());
    for root in &r.roots {
        let coords: Vec<String> = root.coords.iter().map(|x| format!("{x:.9}")).collect();
        let _ = writeln!(out, "  ({})  dim {}", coords.join(", "), root.multiplicity);
    }
    let _ = writeln!(out, "curvature");
    let _ = writeln!(out, "  mean curvature H = {}", r.mean_curvature);
    let _ = writeln!(out, "  n-basis: {}", r.n_basis.join(", "));
    float_matrix(&mut out, "  ", "Ric^n", &r.ricci_n);
    float_matrix(&mut out, "  ", "ad_H|n", &r.ad_h_n);
    match r.einstein.lambda {
        Some(l) => {
            let _ = writeln!(out, "einstein: yes, lambda = {l:.9}");
        }
        None => {
            let _ = writeln!(out, "einstein: no");
        }
    }
    let _ = writeln!(out, "  max deviation {:e}", r.einstein.max_deviation);
    out
}

pub fn attached(r: &AttachedReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mode {}", r.mode);
    let _ = writeln!(out, "algebra {}", r.algebra);
    for (k, s) in r.simple_roots.iter().enumerate() {
        let _ = writeln!(out, "  simple root a{k} = {s}");
    }
    let _ = writeln!(out, "lambda-prime {{{}}}", r.subset.join(","));
    let a = &r.admissibility;
    let _ = writeln!(out, "admissible: {}", yes_no(a.admissible));
    let _ = writeln!(out, "  Z = {}", a.z);
    let _ = writeln!(out, "  roots positive on Z: {}", a.positive_roots.join(", "));
    if let Some(v) = &a.violation {
        let _ = writeln!(out, "  witness: {v}");
    }
    if let Some(d) = &r.dimensions {
        let _ = writeln!(
            out,
            "dims: a' {}, n' {}, a0 {}, n0 {}, s' {}",
            d.a_prime, d.n_prime, d.a_zero, d.n_zero, d.s_prime
        );
    }
    let Some(d) = &r.detail else {
        return out;
    };
    let _ = writeln!(out, "  a' basis: {}", d.a_prime.join(", "));
    let _ = writeln!(out, "  H  = {}", d.h);
    let _ = writeln!(out, "  H' = {}", d.h_prime);
    if d.invariant_failures.is_empty() {
        let _ = writeln!(out, "  structural invariants: all hold");
    } else {
        let _ = writeln!(out, "  structural invariants failing: {}", d.invariant_failures.join(", "));
    }
    let _ = writeln!(out, "  n'-basis: {}", d.n_prime_basis.join(", "));
    let _ = writeln!(out, "jacobi star: {}", holds(d.jacobi_star.holds));
    matrix(&mut out, "  ", "Ric^n - Ric^n' on n'", &d.jacobi_star.lhs);
    matrix(&mut out, "  ", "ad_(H-H') on n'", &d.jacobi_star.rhs);
    if let Some(f) = &d.direct_check {
        let _ = writeln!(
            out,
            "  direct float evaluation {}, max deviation {:e}, tolerance {:e}",
            holds(f.holds),
            f.max_deviation,
            f.tolerance
        );
    }
    let c = &d.clauses;
    let _ = writeln!(
        out,
        "clauses: Ricci restricts {}, Ricci difference {}, Jacobi Star {}",
        yes_no(c.ricci_restricts),
        yes_no(c.ricci_difference),
        yes_no(c.jacobi_star)
    );
    let _ = writeln!(out, "einstein: parent lambda {}, attached lambda {}", opt(&d.parent_lambda), opt(&d.restricted_lambda));
    matrix(&mut out, "  ", "Ric^s'", &d.restricted_ricci);
    let g = &d.geodesic;
    let _ = writeln!(out, "minimal: {} (trace of h = {})", yes_no(g.minimal), g.mean_curvature_trace);
    let _ = writeln!(
        out,
        "totally geodesic: {} (root orthogonality {}, second fundamental form {})",
        yes_no(g.totally_geodesic),
        yes_no(g.via_roots),
        yes_no(g.via_second_fundamental_form)
    );
    for p in &g.root_products {
        let _ = writeln!(out, "  <{}, {}> = {}", p.inside, p.outside, p.value);
    }
    if let Some([x, y]) = &g.nonzero_h_at {
        let _ = writeln!(out, "  h({x}, {y}) != 0");
    }
    out
}
