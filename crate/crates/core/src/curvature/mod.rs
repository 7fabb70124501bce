//! Ricci endomorphisms, mean curvature, the U-tensor, second fundamental
//! forms and Einstein checks.
//!
//! Every exact formula contracts with the inverse Gram matrix, so no
//! orthonormal basis (and no square root) is needed. [`float`] keeps the
//! orthonormal-basis versions as independent cross-checks.

pub mod float;

use num_traits::Zero;
use thiserror::Error;

use crate::iwasawa::IwasawaDecomposition;
use crate::lie::{LieError, MetricLieAlgebra, Subspace};
use crate::numerics::{add_vec, format_vec, scale_vec, sub_vec, zero, RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

type Result<T> = std::result::Result<T, CurvatureError>;

/// `ad*_x = G⁻¹ ad_xᵀ G` on the whole algebra.
fn full_adjoint(g: &RatMatrix, g_inv: &RatMatrix, m: &RatMatrix) -> RatMatrix {
    &(g_inv * &m.transpose()) * g
}

/// Ricci endomorphism of a nilpotent metric Lie algebra, in its own basis:
/// `Ric = ¼ Σ ε_i ad_{E_i} ad*_{E_i} − ½ Σ ε_i ad*_{E_i} ad_{E_i}` with the
/// orthonormal sum replaced by `Σ_{ab} (G⁻¹)_{ab} (·)_{e_a, e_b}`.
pub fn ricci_nilpotent(n: &MetricLieAlgebra) -> Result<RatMatrix> {
    let d = n.dim();
    let g = n.gram();
    let g_inv = n.gram_inverse()?;
    let ad: Vec<&RatMatrix> = (0..d).map(|i| n.ad_basis(i)).collect();
    let ad_star: Vec<RatMatrix> = ad.iter().map(|m| full_adjoint(g, &g_inv, m)).collect();
    let mut first = RatMatrix::zeros(d, d);
    let mut second = RatMatrix::zeros(d, d);
    for a in 0..d {
        for b in 0..d {
            let w = &g_inv[(a, b)];
            if w.is_zero() {
                continue;
            }
            first = &first + &(ad[a] * &ad_star[b]).scale(w);
            second = &second + &(&ad_star[a] * ad[b]).scale(w);
        }
    }
    let quarter = Rational::new(1.into(), 4.into());
    let half = Rational::new(1.into(), 2.into());
    Ok(&first.scale(&quarter) - &second.scale(&half))
}

/// `H` with `⟨H, x⟩ = tr ad_x` for all `x`.
pub fn mean_curvature_vector(l: &MetricLieAlgebra) -> Result<RatVector> {
    let traces: RatVector = (0..l.dim()).map(|i| l.ad_basis(i).trace()).collect();
    let g_inv = l.gram_inverse()?;
    Ok(g_inv.mul_vec(&traces))
}

/// `Σ_α dim(n_α) H_α`
pub fn mean_curvature_from_roots(dec: &IwasawaDecomposition) -> RatVector {
    dec.roots().iter().fold(vec![zero(); dec.algebra().dim()], |acc, r| {
        add_vec(&acc, &scale_vec(&Rational::from_integer(r.multiplicity.into()), &dec.root_vector(&r.coords)))
    })
}

/// The mean curvature vector, computed from traces and checked against the root sum.
pub fn mean_curvature(dec: &IwasawaDecomposition) -> Result<RatVector> {
    let h = mean_curvature_vector(dec.algebra())?;
    let from_roots = mean_curvature_from_roots(dec);
    if h != from_roots {
        return Err(CurvatureError::Inconsistent(format!(
            "mean curvature {} differs from root sum {}",
            format_vec(&h),
            format_vec(&from_roots)
        )));
    }
    Ok(h)
}

/// Ricci data of a solvable algebra of strong Iwasawa type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvableRicci {
    /// `Ric^n` in the root-adapted n-basis.
    pub ricci_n: RatMatrix,
    /// `ad_H|n` in the root-adapted n-basis.
    pub ad_h_n: RatMatrix,
    /// `tr(ad_{A_i} ad_{A_j})` on the a-basis.
    pub trace_form: RatMatrix,
    /// Ricci form on the adapted basis `(a-basis, n-basis)`.
    pub form_adapted: RatMatrix,
    /// `Ric^s` as an endomorphism in the algebra's own basis.
    pub ricci_s: RatMatrix,
    pub mean_curvature: RatVector,
}

/// Ricci form assembled blockwise: `−tr(ad_A ad_B)` on `a`, zero between `a`
/// and `n`, `ric^n − ⟨ad_H ·, ·⟩` on `n`; raised to an endomorphism with `G⁻¹`.
pub fn ricci_solvable(dec: &IwasawaDecomposition) -> Result<SolvableRicci> {
    let l = dec.algebra();
    let (a, n) = (dec.a(), dec.n());
    let (r, k) = (a.dim(), n.dim());
    let h = mean_curvature(dec)?;
    let ricci_n = ricci_nilpotent(&l.restrict(n)?)?;
    let ad_h_n = l.compress(&l.ad_matrix(&h), n)?;
    let ad_a: Vec<RatMatrix> = a.basis().iter().map(|x| l.ad_matrix(x)).collect();
    let trace_form = RatMatrix::from_fn(r, r, |i, j| (&ad_a[i] * &ad_a[j]).trace());
    let g_n = n.restricted_gram(l.gram());
    let n_block = &(&g_n * &ricci_n) - &(&g_n * &ad_h_n);
    let form_adapted = RatMatrix::from_fn(r + k, r + k, |i, j| match (i < r, j < r) {
        (true, true) => -trace_form[(i, j)].clone(),
        (false, false) => n_block[(i - r, j - r)].clone(),
        _ => zero(),
    });
    let mut basis = a.basis().to_vec();
    basis.extend(n.basis().iter().cloned());
    let w = RatMatrix::from_columns(l.dim(), &basis);
    let w_inv = w.inverse().map_err(|_| LieError::DependentBasis)?;
    let form = &(&w_inv.transpose() * &form_adapted) * &w_inv;
    let ricci_s = &l.gram_inverse()? * &form;
    Ok(SolvableRicci {
        ricci_n,
        ad_h_n,
        trace_form,
        form_adapted,
        ricci_s,
        mean_curvature: h,
    })
}

/// Both Einstein criteria and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EinsteinReport {
    /// `λ` with `Ric^s = λ Id`.
    pub direct: Option<Rational>,
    /// `λ` with `Ric^n − ad_H|n = λ Id` (from the trace identity when `n = 0`).
    pub nilradical_lambda: Option<Rational>,
    /// `tr(ad_A ad_B) = −λ⟨A, B⟩` on the a-basis for that `λ`.
    pub trace_identity: bool,
    pub trace_form: RatMatrix,
    /// `λ` when both nilradical and trace identitys hold.
    pub nilradical_criterion: Option<Rational>,
}

impl EinsteinReport {
    pub fn consistent(&self) -> bool {
        self.direct == self.nilradical_criterion
    }

    pub fn lambda(&self) -> Option<&Rational> {
        self.direct.as_ref()
    }
}

pub fn einstein_check(dec: &IwasawaDecomposition) -> Result<EinsteinReport> {
    let ric = ricci_solvable(dec)?;
    einstein_from(dec, &ric)
}

pub fn einstein_from(dec: &IwasawaDecomposition, ric: &SolvableRicci) -> Result<EinsteinReport> {
    let direct = ric.ricci_s.as_scalar();
    let difference = &ric.ricci_n - &ric.ad_h_n;
    let nilradical_lambda = if dec.n().dim() > 0 {
        difference.as_scalar()
    } else {
        scalar_multiple(&ric.trace_form, dec.a_gram()).map(|c| -c)
    };
    let trace_identity = match &nilradical_lambda {
        Some(lambda) => ric.trace_form == dec.a_gram().scale(&-lambda.clone()),
        None => false,
    };
    let nilradical_criterion = nilradical_lambda.clone().filter(|_| trace_identity);
    let report = EinsteinReport {
        direct,
        nilradical_lambda,
        trace_identity,
        trace_form: ric.trace_form.clone(),
        nilradical_criterion,
    };
    if !report.consistent() {
        return Err(CurvatureError::Inconsistent(format!(
            "direct Einstein verdict {:?} disagrees with nilradical criterion {:?}",
            report.direct, report.nilradical_criterion
        )));
    }
    Ok(report)
}

/// `c` with `m = c·g`, if any (`g` nonzero or both empty).
fn scalar_multiple(m: &RatMatrix, g: &RatMatrix) -> Option<Rational> {
    if g.rows() == 0 {
        return Some(zero());
    }
    let (i, j) = (0..g.rows())
        .flat_map(|i| (0..g.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !g[(i, j)].is_zero())?;
    let c = &m[(i, j)] / &g[(i, j)];
    (m == &g.scale(&c)).then_some(c)
}

/// `U(x, y)` with `⟨U(x, y), z⟩ = ½(⟨[z, x], y⟩ + ⟨[z, y], x⟩)` for all `z`.
pub fn u_tensor(l: &MetricLieAlgebra, x: &[Rational], y: &[Rational]) -> Result<RatVector> {
    let half = Rational::new(1.into(), 2.into());
    let rhs: RatVector = (0..l.dim())
        .map(|k| {
            let adk = l.ad_basis(k);
            (l.inner(&adk.mul_vec(x), y) + l.inner(&adk.mul_vec(y), x)) * &half
        })
        .collect();
    Ok(l.gram_inverse()?.mul_vec(&rhs))
}

/// A subalgebra with its induced metric algebra, for second fundamental forms.
#[derive(Debug, Clone)]
pub struct Submanifold {
    parent: MetricLieAlgebra,
    sub: Subspace,
    restricted: MetricLieAlgebra,
}

impl Submanifold {
    pub fn new(parent: &MetricLieAlgebra, sub: &Subspace) -> Result<Self> {
        Ok(Submanifold {
            parent: parent.clone(),
            sub: sub.clone(),
            restricted: parent.restrict(sub)?,
        })
    }

    pub fn restricted(&self) -> &MetricLieAlgebra {
        &self.restricted
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    /// `h(x, y) = U(x, y) − U′(x, y)` for ambient `x, y` in the subalgebra.
    pub fn second_fundamental_form(&self, x: &[Rational], y: &[Rational]) -> Result<RatVector> {
        let outside = || LieError::DimensionMismatch {
            expected: self.sub.dim(),
            found: 0,
        };
        let cx = self.sub.coords(x).ok_or_else(outside)?;
        let cy = self.sub.coords(y).ok_or_else(outside)?;
        let u = u_tensor(&self.parent, x, y)?;
        let u_inner = self.sub.embed(&u_tensor(&self.restricted, &cx, &cy)?);
        Ok(sub_vec(&u, &u_inner))
    }

    /// `Σ_{ab} (G_sub⁻¹)_{ab} h(w_a, w_b)` over the subalgebra basis.
    pub fn mean_curvature_trace(&self) -> Result<RatVector> {
        let g_inv = self.restricted.gram_inverse()?;
        let b = self.sub.basis();
        let mut trace = vec![zero(); self.parent.dim()];
        for i in 0..b.len() {
            for j in 0..b.len() {
                let w = &g_inv[(i, j)];
                if !w.is_zero() {
                    trace = add_vec(&trace, &scale_vec(w, &self.second_fundamental_form(&b[i], &b[j])?));
                }
            }
        }
        Ok(trace)
    }

    /// `h` on every basis pair `(i ≤ j)`.
    pub fn second_fundamental_table(&self) -> Result<Vec<((usize, usize), RatVector)>> {
        let b = self.sub.basis();
        let mut out = Vec::new();
        for i in 0..b.len() {
            for j in i..b.len() {
                out.push(((i, j), self.second_fundamental_form(&b[i], &b[j])?));
            }
        }
        Ok(out)
    }
}

pub fn second_fundamental_form(l: &MetricLieAlgebra, sub: &Subspace, x: &[Rational], y: &[Rational]) -> Result<RatVector> {
    Submanifold::new(l, sub)?.second_fundamental_form(x, y)
}

/// Trace of `h` and whether it vanishes.
pub fn minimality_check(l: &MetricLieAlgebra, sub: &Subspace) -> Result<(RatVector, bool)> {
    let trace = Submanifold::new(l, sub)?.mean_curvature_trace()?;
    let minimal = trace.iter().all(Zero::is_zero);
    Ok((trace, minimal))
}
