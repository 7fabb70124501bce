//! Subalgebras attached to a subset `Λ′` of a simple system, and the
//! conditions under which their Ricci curvature is the restriction of the
//! ambient one.
//!
//! Subsets of `Λ` are given as positions in the simple system (`a0`, `a1`,
//! ... are positions 0, 1, ...).

pub mod float;

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::curvature::{
    mean_curvature, ricci_nilpotent, ricci_solvable, CurvatureError, EinsteinReport, SolvableRicci, Submanifold,
};
use crate::iwasawa::{verify_strong_iwasawa_with, IwasawaDecomposition, IwasawaError, SimpleSystem};
use crate::lie::{LieError, MetricLieAlgebra, Subspace};
use crate::numerics::{add_vec, format_vec, sub_vec, zero, RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AttachedError {
    #[error("the subset must be a proper subset of the simple system")]
    NotProper,
    #[error("simple root position {0} out of range or repeated")]
    BadSubset(usize),
    #[error("inadmissible subset: {0}")]
    Inadmissible(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Iwasawa(#[from] IwasawaError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

type Result<T> = std::result::Result<T, AttachedError>;

fn validate_subset(sys: &SimpleSystem, subset: &[usize]) -> Result<BTreeSet<usize>> {
    let mut set = BTreeSet::new();
    for &k in subset {
        if k >= sys.lambda.len() || !set.insert(k) {
            return Err(AttachedError::BadSubset(k));
        }
    }
    if set.len() == sys.lambda.len() {
        return Err(AttachedError::NotProper);
    }
    Ok(set)
}

/// `Z = Σ B_α` over the simple roots outside the subset.
pub fn characteristic_vector(sys: &SimpleSystem, subset: &[usize]) -> Result<RatVector> {
    let set = validate_subset(sys, subset)?;
    let dim = sys.dual_basis.first().map_or(0, Vec::len);
    Ok((0..sys.lambda.len())
        .filter(|k| !set.contains(k))
        .fold(vec![zero(); dim], |acc, k| add_vec(&acc, &sys.dual_basis[k])))
}

/// How one simple reflection acts on the roots positive on `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionPermutation {
    /// Position in `Λ`.
    pub simple: usize,
    /// `(α, š(α))` as root indices.
    pub mapping: Vec<(usize, Option<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub z: RatVector,
    /// Roots with `α(Z) > 0`.
    pub positive_roots: Vec<usize>,
    pub permutations: Vec<ReflectionPermutation>,
    /// First failure, if any.
    pub violation: Option<String>,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that each `š_{α_j}`, `α_j` in the subset, permutes `{α : α(Z) > 0}`
/// and preserves root-space dimensions.
pub fn check_admissible(dec: &IwasawaDecomposition, sys: &SimpleSystem, subset: &[usize]) -> Result<AdmissibilityReport> {
    let set = validate_subset(sys, subset)?;
    let z = characteristic_vector(sys, subset)?;
    let positive_roots: Vec<usize> = (0..dec.roots().len())
        .filter(|&i| dec.evaluate(&dec.roots()[i].coords, &z).is_positive())
        .collect();
    let positive: BTreeSet<usize> = positive_roots.iter().copied().collect();
    let mut permutations = Vec::new();
    let mut violation = None;
    for &j in &set {
        let alpha_j = &dec.roots()[sys.lambda[j]].coords;
        let mut mapping = Vec::new();
        let mut image_set = BTreeSet::new();
        for &i in &positive_roots {
            let root = &dec.roots()[i];
            let image = dec.dual_reflect(alpha_j, &root.coords);
            let target = dec.root_index(&image);
            mapping.push((i, target));
            if violation.is_some() {
                continue;
            }
            violation = match target {
                None => Some(format!(
                    "reflection in a{j} sends {} to {}, not a root",
                    format_vec(&root.coords),
                    format_vec(&image)
                )),
                Some(t) if !positive.contains(&t) => Some(format!(
                    "reflection in a{j} sends {} to {}, which is not positive on Z",
                    format_vec(&root.coords),
                    format_vec(&image)
                )),
                Some(t) if dec.roots()[t].multiplicity != root.multiplicity => Some(format!(
                    "reflection in a{j} sends {} (dim {}) to {} (dim {})",
                    format_vec(&root.coords),
                    root.multiplicity,
                    format_vec(&image),
                    dec.roots()[t].multiplicity
                )),
                Some(t) if !image_set.insert(t) => Some(format!("reflection in a{j} is not injective on positive roots")),
                _ => None,
            };
        }
        permutations.push(ReflectionPermutation { simple: j, mapping });
    }
    Ok(AdmissibilityReport {
        z,
        positive_roots,
        permutations,
        violation,
    })
}

/// Structural facts every attached subalgebra must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    /// `α(Z) ≥ 0` for all roots, with `α(Z) > 0` exactly off the span of the subset.
    pub z_positivity: bool,
    /// `[s, n′] ⊆ n′`
    pub n_prime_is_ideal: bool,
    /// `[s′, s′] = n′`
    pub derived_is_n_prime: bool,
    /// `[a′, n₀] = 0`
    pub a_prime_centralizes_n_zero: bool,
    /// `(ad_X)^{*,s}(n′) ⊆ n′` for `X ∈ n₀`
    pub adjoint_preserves_n_prime: bool,
    /// `a′` equals the common kernel of the subset's roots.
    pub a_prime_is_common_kernel: bool,
    /// `H′ ∈ a′`
    pub mean_curvature_in_a_prime: bool,
    /// `s_{α_j}(H′) = H′` for `α_j` in the subset.
    pub mean_curvature_fixed: bool,
}

impl InvariantReport {
    pub fn failures(&self) -> Vec<&'static str> {
        let checks = [
            (self.z_positivity, "Z positivity"),
            (self.n_prime_is_ideal, "n' is an ideal"),
            (self.derived_is_n_prime, "[s',s'] = n'"),
            (self.a_prime_centralizes_n_zero, "[a', n0] = 0"),
            (self.adjoint_preserves_n_prime, "ad* of n0 preserves n'"),
            (self.a_prime_is_common_kernel, "a' = common kernel"),
            (self.mean_curvature_in_a_prime, "H' in a'"),
            (self.mean_curvature_fixed, "H' fixed by reflections"),
        ];
        checks.iter().filter(|(ok, _)| !ok).map(|(_, name)| *name).collect()
    }

    pub fn all_hold(&self) -> bool {
        self.failures().is_empty()
    }
}

/// `s′ = a′ ⊕ n′` with its complements `a₀`, `n₀` and induced metric.
#[derive(Debug, Clone)]
pub struct AttachedSubalgebra {
    dec: IwasawaDecomposition,
    sys: SimpleSystem,
    subset: Vec<usize>,
    admissibility: AdmissibilityReport,
    z: RatVector,
    a_prime: Subspace,
    n_prime: Subspace,
    a_zero: Subspace,
    n_zero: Subspace,
    s_prime: Subspace,
    restricted: MetricLieAlgebra,
    restricted_dec: IwasawaDecomposition,
    h_prime: RatVector,
    invariants: InvariantReport,
}

/// Assembles the attached subalgebra and verifies its structural invariants.
pub fn build_attached(dec: &IwasawaDecomposition, sys: &SimpleSystem, subset: &[usize]) -> Result<AttachedSubalgebra> {
    let set = validate_subset(sys, subset)?;
    let admissibility = check_admissible(dec, sys, subset)?;
    if let Some(v) = &admissibility.violation {
        return Err(AttachedError::Inadmissible(v.clone()));
    }
    let l = dec.algebra();
    let dim = l.dim();
    let z = admissibility.z.clone();
    let outside: Vec<usize> = (0..sys.lambda.len()).filter(|k| !set.contains(k)).collect();
    let inside: Vec<usize> = set.iter().copied().collect();
    let a_prime = Subspace::new(dim, outside.iter().map(|&k| sys.dual_basis[k].clone()).collect())?;
    let a_zero = Subspace::new(dim, inside.iter().map(|&k| sys.dual_basis[k].clone()).collect())?;
    let positive: BTreeSet<usize> = admissibility.positive_roots.iter().copied().collect();
    let gather = |keep: bool| -> Result<Subspace> {
        let basis = dec
            .root_spaces()
            .iter()
            .enumerate()
            .filter(|(i, _)| positive.contains(i) == keep)
            .flat_map(|(_, s)| s.basis().iter().cloned())
            .collect();
        Ok(Subspace::new(dim, basis)?)
    };
    let n_prime = gather(true)?;
    let n_zero = gather(false)?;
    let s_prime = a_prime.direct_sum(&n_prime)?;
    let restricted = l.restrict(&s_prime)?.with_name(format!("{}'", l.name()));
    let a_hint: Vec<usize> = (0..a_prime.dim()).collect();
    let (restricted_dec, _) = verify_strong_iwasawa_with(&restricted, Some(&a_hint), None)?;
    let h_prime = s_prime.embed(&mean_curvature(&restricted_dec)?);

    let mut att = AttachedSubalgebra {
        dec: dec.clone(),
        sys: sys.clone(),
        subset: inside,
        admissibility,
        z,
        a_prime,
        n_prime,
        a_zero,
        n_zero,
        s_prime,
        restricted,
        restricted_dec,
        h_prime,
        invariants: InvariantReport {
            z_positivity: false,
            n_prime_is_ideal: false,
            derived_is_n_prime: false,
            a_prime_centralizes_n_zero: false,
            adjoint_preserves_n_prime: false,
            a_prime_is_common_kernel: false,
            mean_curvature_in_a_prime: false,
            mean_curvature_fixed: false,
        },
    };
    att.invariants = att.compute_invariants()?;
    let failures = att.invariants.failures();
    if !failures.is_empty() {
        return Err(AttachedError::Inconsistent(failures.join(", ")));
    }
    Ok(att)
}

impl AttachedSubalgebra {
    fn compute_invariants(&self) -> Result<InvariantReport> {
        let dec = &self.dec;
        let l = dec.algebra();
        let dim = l.dim();
        let subset: BTreeSet<usize> = self.subset.iter().copied().collect();

        let z_positivity = dec.roots().iter().enumerate().all(|(i, r)| {
            let value = dec.evaluate(&r.coords, &self.z);
            let in_span = self.sys.expansions[i]
                .iter()
                .enumerate()
                .all(|(k, c)| c.is_zero() || subset.contains(&k));
            !value.is_negative() && (value.is_positive() != in_span)
        });

        let n_prime_is_ideal = (0..dim).all(|i| {
            let ad = l.ad_basis(i);
            self.n_prime.basis().iter().all(|y| self.n_prime.contains(&ad.mul_vec(y)))
        });
        let derived_is_n_prime = l.bracket_span(&self.s_prime, &self.s_prime).same_span(&self.n_prime);
        let a_prime_centralizes_n_zero = self
            .a_prime
            .basis()
            .iter()
            .all(|a| self.n_zero.basis().iter().all(|x| l.bracket(a, x).iter().all(Zero::is_zero)));
        let whole = Subspace::whole(dim);
        let mut adjoint_preserves_n_prime = true;
        for x in self.n_zero.basis() {
            let star = l.ad_star(x, &whole)?;
            if !self.n_prime.basis().iter().all(|y| self.n_prime.contains(&star.mul_vec(y))) {
                adjoint_preserves_n_prime = false;
            }
        }

        let a = dec.a();
        let kernel = if self.subset.is_empty() {
            a.clone()
        } else {
            let rows: Vec<RatVector> = self
                .subset
                .iter()
                .map(|&k| dec.roots()[self.sys.lambda[k]].coords.clone())
                .collect();
            let ker: Vec<RatVector> = RatMatrix::from_rows(&rows).kernel().iter().map(|c| a.embed(c)).collect();
            Subspace::span(dim, &ker)
        };
        let a_prime_is_common_kernel = kernel.same_span(&self.a_prime);

        let mean_curvature_in_a_prime = self.a_prime.contains(&self.h_prime);
        let mean_curvature_fixed = self.subset.iter().all(|&k| {
            let alpha = &dec.roots()[self.sys.lambda[k]].coords;
            dec.reflect(alpha, &self.h_prime) == self.h_prime
        });
        Ok(InvariantReport {
            z_positivity,
            n_prime_is_ideal,
            derived_is_n_prime,
            a_prime_centralizes_n_zero,
            adjoint_preserves_n_prime,
            a_prime_is_common_kernel,
            mean_curvature_in_a_prime,
            mean_curvature_fixed,
        })
    }

    pub fn parent(&self) -> &IwasawaDecomposition {
        &self.dec
    }

    pub fn simple_system(&self) -> &SimpleSystem {
        &self.sys
    }

    /// Positions in `Λ` of the subset, sorted.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn admissibility(&self) -> &AdmissibilityReport {
        &self.admissibility
    }

    pub fn z(&self) -> &RatVector {
        &self.z
    }

    pub fn a_prime(&self) -> &Subspace {
        &self.a_prime
    }

    pub fn n_prime(&self) -> &Subspace {
        &self.n_prime
    }

    pub fn a_zero(&self) -> &Subspace {
        &self.a_zero
    }

    pub fn n_zero(&self) -> &Subspace {
        &self.n_zero
    }

    /// `a′ ⊕ n′` with basis `(a′-basis, n′-basis)`.
    pub fn s_prime(&self) -> &Subspace {
        &self.s_prime
    }

    /// `s′` as a metric Lie algebra on the basis of [`Self::s_prime`].
    pub fn restricted(&self) -> &MetricLieAlgebra {
        &self.restricted
    }

    pub fn restricted_decomposition(&self) -> &IwasawaDecomposition {
        &self.restricted_dec
    }

    /// Mean curvature vector of `s′`, as an ambient vector.
    pub fn h_prime(&self) -> &RatVector {
        &self.h_prime
    }

    pub fn invariants(&self) -> &InvariantReport {
        &self.invariants
    }

    /// `n′` as a subspace of the restricted algebra's own coordinates.
    pub fn n_prime_in_restricted(&self) -> Subspace {
        let (k, d) = (self.a_prime.dim(), self.s_prime.dim());
        Subspace::coordinate(d, &(k..d).collect::<Vec<_>>())
    }
}

/// Two families of ambient vectors indexed by the `n′` basis, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorComparison {
    /// The `n′` basis the images are indexed by.
    pub domain: Subspace,
    /// Image of each `n′` basis vector under the left-hand operator.
    pub lhs: Vec<RatVector>,
    pub rhs: Vec<RatVector>,
    pub holds: bool,
}

impl OperatorComparison {
    fn new(domain: &Subspace, lhs: Vec<RatVector>, rhs: Vec<RatVector>) -> Self {
        let holds = lhs == rhs;
        OperatorComparison {
            domain: domain.clone(),
            lhs,
            rhs,
            holds,
        }
    }

    /// The left-hand operator as a matrix in `basis`, which must span the domain
    /// and contain the images.
    pub fn lhs_in(&self, basis: &Subspace) -> Option<RatMatrix> {
        self.operator_in(&self.lhs, basis)
    }

    pub fn rhs_in(&self, basis: &Subspace) -> Option<RatMatrix> {
        self.operator_in(&self.rhs, basis)
    }

    fn operator_in(&self, images: &[RatVector], basis: &Subspace) -> Option<RatMatrix> {
        if !basis.same_span(&self.domain) {
            return None;
        }
        // Columns of `change` are the domain vectors in `basis` coordinates.
        let change = basis.matrix_of(self.domain.basis())?;
        let on_domain = basis.matrix_of(images)?;
        Some(&on_domain * &change.inverse().ok()?)
    }
}

/// Applies a matrix given in `sub` coordinates to an ambient vector of `sub`.
fn apply_in(sub: &Subspace, m: &RatMatrix, x: &[Rational]) -> RatVector {
    sub.embed(&m.mul_vec(&sub.coords(x).expect("vector lies in the subspace")))
}

/// `Ric^n(X) − Ric^{n′}(X)` against `[H − H′, X]` for `X` in the `n′` basis.
pub fn jacobi_star_exact(att: &AttachedSubalgebra) -> Result<OperatorComparison> {
    let parent_ricci = ricci_solvable(&att.dec)?;
    jacobi_star_exact_with(att, &parent_ricci)
}

fn jacobi_star_exact_with(att: &AttachedSubalgebra, parent_ricci: &SolvableRicci) -> Result<OperatorComparison> {
    let l = att.dec.algebra();
    let ricci_n_prime = ricci_nilpotent(&l.restrict(&att.n_prime)?)?;
    let h_diff = sub_vec(&parent_ricci.mean_curvature, &att.h_prime);
    let ad_diff = l.ad_matrix(&h_diff);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for x in att.n_prime.basis() {
        let full = apply_in(att.dec.n(), &parent_ricci.ricci_n, x);
        let inner = apply_in(&att.n_prime, &ricci_n_prime, x);
        lhs.push(sub_vec(&full, &inner));
        rhs.push(ad_diff.mul_vec(x));
    }
    Ok(OperatorComparison::new(&att.n_prime, lhs, rhs))
}

/// Both sides of the Jacobi Star identity, each summed over `n₀` by inverse-Gram
/// contraction: `½ Σ ε_j [(ad_{E_j})^{*,n}, ad_{E_j}](X)` and
/// `ad_{Σ ε_j (ad_{E_j})^{*,s} E_j}(X)`.
pub fn jacobi_star_contracted(att: &AttachedSubalgebra) -> Result<OperatorComparison> {
    let l = att.dec.algebra();
    let n = att.dec.n();
    let n0 = &att.n_zero;
    let whole = Subspace::whole(l.dim());
    let half = Rational::new(1.into(), 2.into());
    let k = n.dim();

    let mut commutator_sum = RatMatrix::zeros(k, k);
    let mut v = vec![zero(); l.dim()];
    if n0.dim() > 0 {
        let g0_inv = n0
            .restricted_gram(l.gram())
            .inverse()
            .map_err(|_| LieError::DegenerateGram("n0"))?;
        let ad_n: Vec<RatMatrix> = n0
            .basis()
            .iter()
            .map(|f| l.compress(&l.ad_matrix(f), n))
            .collect::<std::result::Result<_, _>>()?;
        let ad_n_star: Vec<RatMatrix> = n0
            .basis()
            .iter()
            .map(|f| l.ad_star(f, n))
            .collect::<std::result::Result<_, _>>()?;
        for a in 0..n0.dim() {
            let star_s = l.ad_star(&n0.basis()[a], &whole)?;
            for b in 0..n0.dim() {
                let w = &g0_inv[(a, b)];
                if w.is_zero() {
                    continue;
                }
                let term = &(&ad_n_star[a] * &ad_n[b]) - &(&ad_n[b] * &ad_n_star[a]);
                commutator_sum = &commutator_sum + &term.scale(w);
                v = add_vec(&v, &crate::numerics::scale_vec(w, &star_s.mul_vec(&n0.basis()[b])));
            }
        }
    }
    let lhs_op = commutator_sum.scale(&half);
    let ad_v = l.ad_matrix(&v);
    let lhs = att.n_prime.basis().iter().map(|x| apply_in(n, &lhs_op, x)).collect();
    let rhs = att.n_prime.basis().iter().map(|x| ad_v.mul_vec(x)).collect();
    Ok(OperatorComparison::new(&att.n_prime, lhs, rhs))
}

/// The three equivalent conditions, each evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    /// `⟨Ric^s x, y⟩` on the `s′` basis.
    pub parent_form: RatMatrix,
    /// `⟨Ric^{s′} x, y⟩′` on the `s′` basis.
    pub restricted_form: RatMatrix,
    /// `Ric^s` restricted to `s′` agrees with `Ric^{s′}`.
    pub ricci_restricts: bool,
    /// `Ric^n − Ric^{n′} = ad_{H−H′}` on `n′`.
    pub ricci_difference: OperatorComparison,
    /// The Jacobi Star identity summed over `n₀`.
    pub jacobi_star: OperatorComparison,
    /// `Ric^{s′}` in `s′` coordinates.
    pub restricted_ricci: RatMatrix,
    pub parent_einstein: EinsteinReport,
    pub restricted_einstein: EinsteinReport,
}

impl RestrictionReport {
    pub fn verdicts(&self) -> [bool; 3] {
        [self.ricci_restricts, self.ricci_difference.holds, self.jacobi_star.holds]
    }

    pub fn consistent(&self) -> bool {
        let v = self.verdicts();
        v[0] == v[1] && v[1] == v[2]
    }
}

/// Evaluates all three conditions; disagreement is a theorem violation.
pub fn restriction_report(att: &AttachedSubalgebra) -> Result<RestrictionReport> {
    let l = att.dec.algebra();
    let parent_ricci = ricci_solvable(&att.dec)?;
    let restricted_ricci_data = ricci_solvable(&att.restricted_dec)?;
    let w = att.s_prime.matrix();
    let parent_form = &(&(&w.transpose() * l.gram()) * &parent_ricci.ricci_s) * &w;
    let restricted_form = att.restricted.gram() * &restricted_ricci_data.ricci_s;
    let report = RestrictionReport {
        ricci_restricts: parent_form == restricted_form,
        parent_form,
        restricted_form,
        ricci_difference: jacobi_star_exact_with(att, &parent_ricci)?,
        jacobi_star: jacobi_star_contracted(att)?,
        restricted_ricci: restricted_ricci_data.ricci_s.clone(),
        parent_einstein: crate::curvature::einstein_from(&att.dec, &parent_ricci)?,
        restricted_einstein: crate::curvature::einstein_from(&att.restricted_dec, &restricted_ricci_data)?,
    };
    if !report.consistent() {
        return Err(AttachedError::TheoremViolation(format!(
            "restriction conditions disagree: {:?}",
            report.verdicts()
        )));
    }
    Ok(report)
}

/// Totally geodesic by root orthogonality and by vanishing of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicReport {
    /// `(α, β, ⟨H_α, H_β⟩)` for `α` in the subset, `β` outside, as positions in `Λ`.
    pub root_products: Vec<(usize, usize, Rational)>,
    pub via_roots: bool,
    /// First basis pair of `s′` with `h ≠ 0`.
    pub h_witness: Option<(usize, usize)>,
    pub via_h: bool,
    /// Trace of `h` over `s′`.
    pub mean_curvature_trace: RatVector,
    pub minimal: bool,
}

pub fn geodesic_report(att: &AttachedSubalgebra) -> Result<GeodesicReport> {
    let dec = &att.dec;
    let coords = |k: usize| dec.roots()[att.sys.lambda[k]].coords.clone();
    let mut root_products = Vec::new();
    for &i in &att.subset {
        for j in (0..att.sys.lambda.len()).filter(|j| !att.subset.contains(j)) {
            root_products.push((i, j, dec.root_inner(&coords(i), &coords(j))));
        }
    }
    let via_roots = root_products.iter().all(|(_, _, p)| p.is_zero());
    let sub = Submanifold::new(dec.algebra(), &att.s_prime)?;
    let h_witness = sub
        .second_fundamental_table()?
        .into_iter()
        .find(|(_, h)| !h.iter().all(Zero::is_zero))
        .map(|(ij, _)| ij);
    let via_h = h_witness.is_none();
    let mean_curvature_trace = sub.mean_curvature_trace()?;
    let minimal = mean_curvature_trace.iter().all(Zero::is_zero);
    if via_roots != via_h {
        return Err(AttachedError::TheoremViolation(format!(
            "totally geodesic verdicts disagree: roots {via_roots}, second fundamental form {via_h}"
        )));
    }
    Ok(GeodesicReport {
        root_products,
        via_roots,
        h_witness,
        via_h,
        mean_curvature_trace,
        minimal,
    })
}

/// First triple `(x, y, z)` of basis indices of `sub` where
/// `ad*_x [y, z] ≠ [ad*_x y, z] + [y, ad*_x z]`, with `ad*_x` the metric
/// adjoint on `sub`. `sub` must be a subalgebra.
pub fn ad_star_derivation_check(l: &MetricLieAlgebra, sub: &Subspace) -> Result<Option<(usize, usize, usize)>> {
    if let Some((i, j)) = l.closure_witness(sub) {
        return Err(LieError::NotClosed { i, j }.into());
    }
    let b = sub.basis();
    for (xi, x) in b.iter().enumerate() {
        let star = l.ad_star(x, sub)?;
        let apply = |v: &[Rational]| apply_in(sub, &star, v);
        for (yi, y) in b.iter().enumerate() {
            for (zi, z) in b.iter().enumerate().skip(yi + 1) {
                let lhs = apply(&l.bracket(y, z));
                let rhs = add_vec(&l.bracket(&apply(y), z), &l.bracket(y, &apply(z)));
                if lhs != rhs {
                    return Ok(Some((xi, yi, zi)));
                }
            }
        }
    }
    Ok(None)
}
