//! Report data. Text and JSON are both rendered from these values, so the two
//! formats always carry the same verdicts. Exact scalars are canonical
//! `p/q` strings.

use serde::Serialize;

use solvlie::lie::{MetricLieAlgebra, Subspace};
use solvlie::numerics::{format_rational, RatMatrix, RatVector, Rational};

/// A matrix with the labels of the basis it is written in.
#[derive(Debug, Clone, Serialize)]
pub struct Matrix {
    pub basis: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Matrix {
    pub fn new(m: &RatMatrix, basis: Vec<String>) -> Self {
        let rows = (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect();
        Matrix { basis, rows }
    }
}

/// A float matrix; entries carry the tolerance of the report that owns them.
#[derive(Debug, Clone, Serialize)]
pub struct FloatMatrix {
    pub basis: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Validity {
    pub antisymmetric: bool,
    pub jacobi: bool,
    pub gram_symmetric: bool,
    pub gram_nondegenerate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `(positive, negative, zero)` of the scalar product.
    pub signature: [usize; 3],
    pub center_dim: usize,
    pub validity: Validity,
}

#[derive(Debug, Clone, Serialize)]
pub struct Split {
    pub a_basis: Vec<String>,
    pub n_dim: usize,
    /// Dimensions of the lower central series of `n`.
    pub n_series: Vec<usize>,
    /// Nilpotency step of `n`.
    pub n_step: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootRow {
    pub label: String,
    /// `α(A_i)` on the a-basis.
    pub coords: Vec<String>,
    pub multiplicity: usize,
    pub root_vector: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimpleSummary {
    pub labels: Vec<String>,
    pub roots: Vec<Vec<String>>,
    /// `⟨α_i, α_j⟩ = ⟨H_{α_i}, H_{α_j}⟩`.
    pub pairing: Matrix,
    pub dual_basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Curvature {
    pub mean_curvature: String,
    pub ricci_n: Matrix,
    pub ad_h_n: Matrix,
    pub ricci_n_minus_ad_h: Matrix,
    pub trace_form: Matrix,
    pub a_gram: Matrix,
    pub ricci_s: Matrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct Einstein {
    pub einstein: bool,
    pub lambda: Option<String>,
    pub direct: Option<String>,
    pub nilradical_lambda: Option<String>,
    pub trace_identity: bool,
    pub nilradical_criterion: Option<String>,
}

/// One proper subset of the simple system.
#[derive(Debug, Clone, Serialize)]
pub struct AttachedSummary {
    pub subset: Vec<String>,
    pub admissible: bool,
    pub violation: Option<String>,
    pub z: String,
    pub a_prime_dim: Option<usize>,
    pub n_prime_dim: Option<usize>,
    pub jacobi_star: Option<bool>,
    /// Ricci restricts, `Ric^n − Ric^{n′} = ad_{H−H′}` on `n′`, Jacobi Star.
    pub clauses: Option<[bool; 3]>,
    pub einstein_lambda: Option<String>,
    pub minimal: Option<bool>,
    pub totally_geodesic: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub mode: &'static str,
    pub algebra: AlgebraSummary,
    pub split: Split,
    pub roots: Vec<RootRow>,
    pub simple_system: Option<SimpleSummary>,
    pub n_basis: Vec<String>,
    pub curvature: Curvature,
    pub einstein: Einstein,
    pub attached: Vec<AttachedSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FloatRootRow {
    pub coords: Vec<f64>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FloatEinstein {
    pub einstein: bool,
    pub lambda: Option<f64>,
    /// Largest deviation of `Ric^n − ad_H|n` from `λ Id`, and of the trace
    /// form from `−λ` times the a-gram.
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FloatAnalysis {
    pub mode: &'static str,
    pub tolerance: f64,
    pub algebra: AlgebraSummary,
    pub split: Split,
    pub roots: Vec<FloatRootRow>,
    pub n_basis: Vec<String>,
    pub mean_curvature: String,
    pub ricci_n: FloatMatrix,
    pub ad_h_n: FloatMatrix,
    pub einstein: FloatEinstein,
}

#[derive(Debug, Clone, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub z: String,
    pub positive_roots: Vec<String>,
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Dimensions {
    pub a_prime: usize,
    pub n_prime: usize,
    pub a_zero: usize,
    pub n_zero: usize,
    pub s_prime: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobiStar {
    pub holds: bool,
    /// `Ric^n − Ric^{n′}` on `n′`.
    pub lhs: Matrix,
    /// `ad_{H−H′}` on `n′`.
    pub rhs: Matrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct FloatCheck {
    pub holds: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Clauses {
    pub ricci_restricts: bool,
    pub ricci_difference: bool,
    pub jacobi_star: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootProduct {
    pub inside: String,
    pub outside: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Geodesic {
    pub totally_geodesic: bool,
    pub via_roots: bool,
    pub via_second_fundamental_form: bool,
    pub root_products: Vec<RootProduct>,
    pub nonzero_h_at: Option<[String; 2]>,
    pub mean_curvature_trace: String,
    pub minimal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AttachedDetail {
    pub a_prime: Vec<String>,
    pub h: String,
    pub h_prime: String,
    /// Structural facts about `s′` that failed; empty in every correct run.
    pub invariant_failures: Vec<String>,
    pub n_prime_basis: Vec<String>,
    pub jacobi_star: JacobiStar,
    pub direct_check: Option<FloatCheck>,
    pub clauses: Clauses,
    pub parent_lambda: Option<String>,
    pub restricted_lambda: Option<String>,
    pub restricted_ricci: Matrix,
    pub geodesic: Geodesic,
}

#[derive(Debug, Clone, Serialize)]
pub struct AttachedReport {
    pub mode: &'static str,
    pub algebra: String,
    pub simple_roots: Vec<String>,
    pub subset: Vec<String>,
    pub admissibility: Admissibility,
    pub dimensions: Option<Dimensions>,
    pub detail: Option<AttachedDetail>,
}

pub fn opt_rational(r: Option<&Rational>) -> Option<String> {
    r.map(format_rational)
}

pub fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn basis_labels(l: &MetricLieAlgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| l.vector_label(v)).collect()
}

pub fn label(l: &MetricLieAlgebra, v: &RatVector) -> String {
    l.vector_label(v)
}
