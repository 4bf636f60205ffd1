//! The Apéry-like numbers `J2(n)`, the polynomials `f_n`, `g`, `h`, and the
//! summation operator `I(F) = Σ_{x=0}^{p-1} F(x)`.
//!
//! `J2(n) = Σ_k (-1)^k binom(-1/2, k)^2 binom(n, k)` is computed three ways:
//! the defining sum, the three-term recurrence, and as `3F2(1/2, 1/2, -n; 1, 1; 1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{binom_int, binom_rat, pochhammer, require_prime, vp, Rat};
use crate::hypergeom::{terminating_pfq, HypParams};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AperyMethod {
    Sum,
    Recurrence,
    Hypergeometric,
}

impl fmt::Display for AperyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AperyMethod::Sum => "sum",
            AperyMethod::Recurrence => "recurrence",
            AperyMethod::Hypergeometric => "hypergeometric",
        })
    }
}

/// `J2(0..=N)` together with the route that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySeq {
    pub values: Vec<Rat>,
    pub method: AperyMethod,
}

impl AperySeq {
    pub fn get(&self, n: usize) -> Option<&Rat> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `(-1)^k binom(-1/2, k)^2` for `k = 0..=upto`.
pub fn central_weights(upto: u64) -> Vec<Rat> {
    let mut out = Vec::with_capacity(upto as usize + 1);
    let mut b = Rat::one();
    let half = Rat::new(-1, 2);
    for k in 0..=upto {
        out.push(Rat::sign_power(k) * &b * &b);
        b = b * (&half - Rat::from(k)) / Rat::from(k + 1);
    }
    out
}

pub fn j2_by_sum(n: u64) -> Rat {
    central_weights(n)
        .into_iter()
        .enumerate()
        .map(|(k, w)| w * Rat::from_int(binom_int(n, k as u64)))
        .sum()
}

/// `4n² J(n) = (8n² - 8n + 3) J(n-1) - 4(n-1)² J(n-2)`, seeded with `1, 3/4`.
pub fn j2_by_recurrence(upto: u64) -> AperySeq {
    let mut values = vec![Rat::one()];
    if upto >= 1 {
        values.push(Rat::new(3, 4));
    }
    for n in 2..=upto {
        let n_ = n as i64;
        let a = Rat::from(8 * n_ * n_ - 8 * n_ + 3);
        let b = Rat::from(4 * (n_ - 1) * (n_ - 1));
        let lead = Rat::from(4 * n_ * n_);
        let i = n as usize;
        let next = (a * &values[i - 1] - b * &values[i - 2]) / lead;
        values.push(next);
    }
    AperySeq {
        values,
        method: AperyMethod::Recurrence,
    }
}

pub fn j2_by_3f2(n: u64) -> Rat {
    let half = Rat::new(1, 2);
    let params = HypParams::f32(
        half.clone(),
        half,
        -Rat::from(n),
        Rat::one(),
        Rat::one(),
        Rat::one(),
    );
    terminating_pfq(&params).expect("3F2(1/2,1/2,-n;1,1;1) terminates without poles")
}

/// `f_n(x) = Σ_j binom(n,j) binom(n+j,j) binom(x,j)`.
pub fn f_poly(n: u64) -> Poly {
    let basis = Poly::binomial_basis_prefix(n);
    basis.iter().enumerate().fold(Poly::zero(), |acc, (j, b)| {
        let j = j as u64;
        let c = Rat::from_int(binom_int(n, j) * binom_int(n + j, j));
        &acc + &b.scale(&c)
    })
}

/// Whether `(n+1)² f_{n+1} = (2n+1)(2x+1) f_n + n² f_{n-1}` holds for the given triple.
pub fn f_recursion_holds(n: u64, prev: &Poly, cur: &Poly, next: &Poly) -> bool {
    let n_ = n as i64;
    let lhs = next.scale(&Rat::from((n_ + 1) * (n_ + 1)));
    let two_x_plus_one = Poly::from_ints(&[1, 2]);
    let rhs =
        &(&two_x_plus_one * cur).scale(&Rat::from(2 * n_ + 1)) + &prev.scale(&Rat::from(n_ * n_));
    lhs == rhs
}

pub fn check_f_recursion(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("f recursion needs n >= 1".into()));
    }
    Ok(f_recursion_holds(
        n,
        &f_poly(n - 1),
        &f_poly(n),
        &f_poly(n + 1),
    ))
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::Precondition("p must be an odd prime".into()));
    }
    Ok(())
}

/// `g(x) = Σ_{j<p} (-1)^j binom(-1/2,j)^2 binom(x,j)`, degree `p-1`.
pub fn g_poly(p: u64) -> Result<Poly> {
    require_odd_prime(p)?;
    let weights = central_weights(p - 1);
    let basis = Poly::binomial_basis_prefix(p - 1);
    Ok(weights
        .iter()
        .zip(&basis)
        .fold(Poly::zero(), |acc, (w, b)| &acc + &b.scale(w)))
}

/// `h = (g - f_n) / p²` with `n = (p-1)/2`, checked to lie in `x Z_p[x]`.
pub fn h_poly(p: u64) -> Result<Poly> {
    let g = g_poly(p)?;
    h_from(&g, &f_poly((p - 1) / 2), p)
}

pub(crate) fn h_from(g: &Poly, f: &Poly, p: u64) -> Result<Poly> {
    let p2 = Rat::from(p * p);
    let h = (g - f).scale(&p2.recip()?);
    if !h.coeff(0).is_zero() {
        return Err(Error::HNotIntegral(p));
    }
    for c in h.coeffs() {
        if !vp(c, p)?.at_least(0) {
            return Err(Error::HNotIntegral(p));
        }
    }
    Ok(h)
}

/// `I(F) = F(0) + F(1) + ... + F(p-1)`.
pub fn i_sum(f: &Poly, p: u64) -> Result<Rat> {
    require_odd_prime(p)?;
    Ok((0..p as i64).map(|x| f.eval_int(x)).sum())
}

/// The direct value `I(f_m(x) binom(x,j))` by pointwise evaluation.
pub fn i_f_binom_direct(f_m: &Poly, j: u64, p: u64) -> Rat {
    (0..p as i64)
        .map(|x| f_m.eval_int(x) * binom_rat(&Rat::from(x), j))
        .sum()
}

/// Closed form
/// `(-1)^m Σ_k binom(m,k) binom(m+k,k) (-1)^k (p-j)_{j+k+1} / (j! k! (j+k+1))`.
pub fn i_f_binom_closed(m: u64, j: u64, p: u64) -> Rat {
    let base = Rat::from(p as i64 - j as i64);
    let j_fact = Rat::from_int(crate::exact::factorial(j));
    let total: Rat = (0..=m)
        .map(|k| {
            let c = Rat::from_int(binom_int(m, k) * binom_int(m + k, k));
            let den = &j_fact * Rat::from_int(crate::exact::factorial(k)) * Rat::from(j + k + 1);
            Rat::sign_power(k) * c * pochhammer(&base, j + k + 1) / den
        })
        .sum();
    Rat::sign_power(m) * total
}

/// `(direct, closed form)` for `I(f_m(x) binom(x, j))`.
pub fn i_f_binom(m: u64, j: u64, p: u64) -> Result<(Rat, Rat)> {
    require_odd_prime(p)?;
    if m == 0 {
        return Err(Error::Precondition("m must be >= 1".into()));
    }
    Ok((
        i_f_binom_direct(&f_poly(m), j, p),
        i_f_binom_closed(m, j, p),
    ))
}

/// Both sides of `Σ_{x=0}^{m-1} (x-j+1)_{j+k} = (m-j)_{j+k+1} / (j+k+1)`.
pub fn rising_sum_sides(m: u64, j: u64, k: u64) -> (Rat, Rat) {
    let j_ = j as i64;
    let lhs = (0..m as i64)
        .map(|x| pochhammer(&Rat::from(x - j_ + 1), j + k))
        .sum();
    let rhs = pochhammer(&Rat::from(m as i64 - j_), j + k + 1) / Rat::from(j + k + 1);
    (lhs, rhs)
}

/// `f_n(x)` via `(-1)^n Σ_k binom(n,k) binom(n+k,k) binom(-1-x,k)`.
pub fn f_alternate(n: u64, x: i64) -> Rat {
    let top = Rat::from(-1 - x);
    let s: Rat = (0..=n)
        .map(|k| Rat::from_int(binom_int(n, k) * binom_int(n + k, k)) * binom_rat(&top, k))
        .sum();
    Rat::sign_power(n) * s
}

/// Both sides of `binom(x,j) binom(-1-x,k) = (-1)^k (x-j+1)_{j+k} / (j! k!)`.
pub fn binom_product_sides(x: i64, j: u64, k: u64) -> (Rat, Rat) {
    let lhs = binom_rat(&Rat::from(x), j) * binom_rat(&Rat::from(-1 - x), k);
    let den = Rat::from_int(crate::exact::factorial(j) * crate::exact::factorial(k));
    let rhs = Rat::sign_power(k) * pochhammer(&Rat::from(x - j as i64 + 1), j + k) / den;
    (lhs, rhs)
}
