//! Exact Fourier–Motzkin search for a point strictly inside a polyhedral cone.

use num_traits::{Signed, Zero};

use crate::numerics::{dot, int, zero, RatVector, Rational};

/// `coeffs · x ≥ rhs`
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Constraint {
    coeffs: RatVector,
    rhs: Rational,
}

impl Constraint {
    /// Scales so the last nonzero coefficient among the live variables has
    /// absolute value 1; keeps deduplication effective.
    fn normalized(mut self, live: usize) -> Self {
        if let Some(c) = self.coeffs[..live].iter().rev().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for x in self.coeffs.iter_mut() {
                *x /= &c;
            }
            self.rhs /= &c;
        }
        self
    }
}

/// A point `x` with `α · x ≥ 1` for every row `α`, or `None` when the open
/// cone `{x : α · x > 0 for all α}` is empty. Integral coordinates are
/// preferred during back-substitution.
pub(crate) fn positive_point(rows: &[RatVector], dim: usize) -> Option<RatVector> {
    let mut systems: Vec<Vec<Constraint>> = Vec::with_capacity(dim + 1);
    let mut current: Vec<Constraint> = rows
        .iter()
        .map(|r| Constraint {
            coeffs: r.clone(),
            rhs: int(1),
        })
        .collect();
    for live in (1..=dim).rev() {
        current = dedup(current, live);
        systems.push(current.clone());
        current = eliminate(&current, live - 1);
    }
    if current.iter().any(|c| c.rhs.is_positive()) {
        return None;
    }
    systems.reverse();
    let mut x = vec![zero(); dim];
    for (var, system) in systems.iter().enumerate() {
        let (mut lower, mut upper): (Option<Rational>, Option<Rational>) = (None, None);
        for c in system {
            let a = &c.coeffs[var];
            if a.is_zero() {
                continue;
            }
            let fixed: Rational = dot(&c.coeffs[..var], &x[..var]);
            let bound = (&c.rhs - fixed) / a;
            if a.is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        x[var] = match (lower, upper) {
            (None, None) => zero(),
            (Some(l), None) => l.ceil(),
            (None, Some(u)) => u.floor(),
            (Some(l), Some(u)) => {
                let c = l.ceil();
                if c <= u {
                    c
                } else {
                    l
                }
            }
        };
    }
    rows.iter().all(|r| dot(r, &x) >= int(1)).then_some(x)
}

fn dedup(mut cs: Vec<Constraint>, live: usize) -> Vec<Constraint> {
    cs = cs.into_iter().map(|c| c.normalized(live)).collect();
    cs.sort();
    cs.dedup();
    cs
}

/// Removes variable `var` by pairing every lower bound with every upper bound.
fn eliminate(cs: &[Constraint], var: usize) -> Vec<Constraint> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for c in cs {
        match c.coeffs[var].cmp(&zero()) {
            std::cmp::Ordering::Greater => pos.push(c),
            std::cmp::Ordering::Less => neg.push(c),
            std::cmp::Ordering::Equal => out.push(c.clone()),
        }
    }
    for p in &pos {
        for q in &neg {
            let (a, b) = (&p.coeffs[var], -&q.coeffs[var]);
            let coeffs: RatVector = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * a).collect();
            out.push(Constraint {
                coeffs,
                rhs: &p.rhs * &b + &q.rhs * a,
            });
        }
    }
    out
}
