//! Univariate polynomials over the rationals and their rational roots.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;
use super::rational::{one, zero, Rational};

/// Coefficients from the constant term upward; no trailing zeros.
pub type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[Rational]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Quotient and remainder; `d` must be nonzero.
fn divrem(n: &[Rational], d: &[Rational]) -> (Poly, Poly) {
    let d = trim(d.to_vec());
    let mut r = trim(n.to_vec());
    if r.len() < d.len() {
        return (Vec::new(), r);
    }
    let lead = d.last().expect("nonzero divisor").clone();
    let mut q = vec![zero(); r.len() - d.len() + 1];
    while r.len() >= d.len() && !r.is_empty() {
        let shift = r.len() - d.len();
        let c = r.last().unwrap() / &lead;
        for (i, dc) in d.iter().enumerate() {
            r[shift + i] -= &c * dc;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Poly) -> Poly {
    match p.last() {
        Some(l) if !l.is_one() => {
            let l = l.clone();
            p.into_iter().map(|c| c / &l).collect()
        }
        _ => p,
    }
}

fn gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Monic `det(x·I − M)` by the Faddeev–LeVerrier recurrence.
pub fn characteristic_polynomial(m: &RatMatrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![zero(); n + 1];
    coeffs[n] = one();
    let mut mk = RatMatrix::zeros(n, n);
    for k in 1..=n {
        let mut t = m * &mk;
        for i in 0..n {
            t[(i, i)] += &coeffs[n - k + 1];
        }
        mk = t;
        let tr = (m * &mk).trace();
        coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Scales to coprime integer coefficients with positive leading term.
fn primitive_integer(p: &[Rational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if ints.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigUint::from(2u32), BigUint::from(2u32), BigUint::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

fn factor_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(&n);
    factor_into(&n / &d, out);
    factor_into(d, out);
}

/// Prime factorization with multiplicities, in increasing order.
fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut primes = Vec::new();
    let mut rest = n.clone();
    let mut p = 2u64;
    while p < 10_000 && !rest.is_one() {
        let bp = BigUint::from(p);
        while (&rest % &bp).is_zero() {
            primes.push(bp.clone());
            rest /= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    factor_into(rest, &mut primes);
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, k)) if *last == q => *k += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigUint::one()];
    for (p, k) in factorize(n.magnitude()) {
        let mut next = Vec::with_capacity(divs.len() * (k as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=k {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.into_iter().map(|d| BigInt::from_biguint(Sign::Plus, d)).collect()
}

/// Distinct rational roots in increasing order, each with its multiplicity.
pub fn rational_roots(p: &[Rational]) -> Vec<(Rational, usize)> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut square_free = divrem(&p, &gcd(&p, &derivative(&p))).0;
    let mut candidates_found = Vec::new();
    if square_free[0].is_zero() {
        candidates_found.push(zero());
        square_free.remove(0);
    }
    let ints = primitive_integer(&square_free);
    if ints.len() > 1 {
        let lead_divs = divisors(ints.last().unwrap());
        let const_divs = divisors(&ints[0]);
        for q in &lead_divs {
            for a in &const_divs {
                for num in [a.clone(), -a.clone()] {
                    let r = Rational::new(num, q.clone());
                    if !candidates_found.contains(&r) && eval(&square_free, &r).is_zero() {
                        candidates_found.push(r);
                    }
                }
            }
        }
    }
    candidates_found.sort();
    candidates_found
        .into_iter()
        .map(|r| {
            let lin = vec![-r.clone(), one()];
            let mut rest = p.clone();
            let mut k = 0;
            loop {
                let (q, rem) = divrem(&rest, &lin);
                if !rem.is_empty() {
                    break;
                }
                rest = q;
                k += 1;
            }
            (r, k)
        })
        .collect()
}
