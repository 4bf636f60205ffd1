//! Terminating and truncated `_{r+1}F_r` series with rational parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{pochhammer, Rat};

/// Parameters of `_{r+1}F_r(α_1..α_{r+1}; β_1..β_r; z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypParams {
    pub numerator: Vec<Rat>,
    pub denominator: Vec<Rat>,
    pub argument: Rat,
}

impl HypParams {
    pub fn new(numerator: Vec<Rat>, denominator: Vec<Rat>, argument: Rat) -> Result<HypParams> {
        if numerator.len() != denominator.len() + 1 {
            return Err(Error::Precondition(format!(
                "expected r+1 numerator and r denominator parameters, got {} and {}",
                numerator.len(),
                denominator.len()
            )));
        }
        Ok(HypParams {
            numerator,
            denominator,
            argument,
        })
    }

    /// `_3F_2(a, b, c; d, e; z)`.
    pub fn f32(a: Rat, b: Rat, c: Rat, d: Rat, e: Rat, z: Rat) -> HypParams {
        HypParams {
            numerator: vec![a, b, c],
            denominator: vec![d, e],
            argument: z,
        }
    }

    /// Smallest `N` such that some numerator parameter equals `-N`.
    pub fn termination_index(&self) -> Option<u64> {
        self.numerator
            .iter()
            .filter_map(|a| a.to_i64())
            .filter(|&a| a <= 0)
            .map(|a| a.unsigned_abs())
            .min()
    }
}

/// Sum of terms `k = 0..=upper`, built from the term ratio
/// `Π(α_i + k) / Π(β_j + k) · z / (k + 1)`.
fn partial_sum(params: &HypParams, upper: u64) -> Result<Rat> {
    let mut term = Rat::one();
    let mut total = Rat::one();
    for k in 0..upper {
        let shift = Rat::from(k);
        let num: Rat = params.numerator.iter().map(|a| a + &shift).product();
        if num.is_zero() {
            break;
        }
        let den: Rat = params.denominator.iter().map(|b| b + &shift).product();
        if den.is_zero() {
            return Err(Error::ParameterPole(k as usize + 1));
        }
        term = term * num * &params.argument / (den * Rat::from(k + 1));
        total += &term;
    }
    Ok(total)
}

/// Exact value of a terminating series.
pub fn terminating_pfq(params: &HypParams) -> Result<Rat> {
    let n = params.termination_index().ok_or(Error::NonTerminating)?;
    partial_sum(params, n)
}

/// Partial sum over `k = 0..=upper`. Terms past a termination index are zero
/// and are never evaluated, so later denominator poles are tolerated.
pub fn truncated_pfq(params: &HypParams, upper: u64) -> Result<Rat> {
    let upper = params.termination_index().map_or(upper, |n| n.min(upper));
    partial_sum(params, upper)
}

/// Both sides of the `_3F_2` transformation
/// `3F2(-m,a,b;d,e;1) = (e-a)_m/(e)_m · 3F2(-m,a,d-b;d,a+1-m-e;1)`.
pub fn transform_357_sides(m: u64, a: &Rat, b: &Rat, d: &Rat, e: &Rat) -> Result<(Rat, Rat)> {
    if m == 0 {
        return Err(Error::Precondition("m must be a positive integer".into()));
    }
    let one = Rat::one();
    let neg_m = -Rat::from(m);
    let lhs = terminating_pfq(&HypParams::f32(
        neg_m.clone(),
        a.clone(),
        b.clone(),
        d.clone(),
        e.clone(),
        one.clone(),
    ))?;
    let e_m = pochhammer(e, m);
    if e_m.is_zero() {
        return Err(Error::ParameterPole(m as usize));
    }
    let prefactor = pochhammer(&(e - a), m) / e_m;
    let inner = terminating_pfq(&HypParams::f32(
        neg_m.clone(),
        a.clone(),
        d - b,
        d.clone(),
        a + &one + &neg_m - e,
        one,
    ))?;
    Ok((lhs, prefactor * inner))
}

pub fn check_transform_357(m: u64, a: &Rat, b: &Rat, d: &Rat, e: &Rat) -> Result<bool> {
    let (lhs, rhs) = transform_357_sides(m, a, b, d, e)?;
    Ok(lhs == rhs)
}

/// Both sides of Pfaff-Saalschütz:
/// `3F2(-n,a,b;c,1+a+b-c-n;1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)`.
pub fn pfaff_saalschutz_sides(n: u64, a: &Rat, b: &Rat, c: &Rat) -> Result<(Rat, Rat)> {
    let one = Rat::one();
    let neg_n = -Rat::from(n);
    let balance = &one + a + b - c - Rat::from(n);
    let den = pochhammer(c, n) * pochhammer(&(c - a - b), n);
    if den.is_zero() {
        return Err(Error::ParameterPole(n as usize));
    }
    let rhs = pochhammer(&(c - a), n) * pochhammer(&(c - b), n) / den;
    let lhs = if n == 0 {
        one
    } else {
        terminating_pfq(&HypParams::f32(
            neg_n,
            a.clone(),
            b.clone(),
            c.clone(),
            balance,
            one,
        ))?
    };
    Ok((lhs, rhs))
}

pub fn check_pfaff_saalschutz(n: u64, a: &Rat, b: &Rat, c: &Rat) -> Result<bool> {
    let (lhs, rhs) = pfaff_saalschutz_sides(n, a, b, c)?;
    Ok(lhs == rhs)
}

fn simple_rational(rng: &mut ChaCha8Rng) -> Rat {
    if rng.gen_bool(0.5) {
        Rat::from(rng.gen_range(-8i64..=8))
    } else {
        Rat::new(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=6))
    }
}

/// True if `(x)_len` has no zero factor.
fn pole_free(x: &Rat, len: u64) -> bool {
    !pochhammer(x, len).is_zero()
}

/// A deterministic sample `(m, a, b, d, e)` on which both sides of the
/// transformation are finite sums with nonvanishing denominators.
pub fn sample_transform_357(seed: u64) -> (u64, Rat, Rat, Rat, Rat) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = rng.gen_range(1u64..=6);
        let (a, b, d, e) = (
            simple_rational(&mut rng),
            simple_rational(&mut rng),
            simple_rational(&mut rng),
            simple_rational(&mut rng),
        );
        let second = &a + Rat::one() - Rat::from(m) - &e;
        if pole_free(&d, m) && pole_free(&e, m) && pole_free(&second, m) {
            return (m, a, b, d, e);
        }
    }
}

/// A deterministic sample `(n, a, b, c)` valid for Pfaff-Saalschütz.
pub fn sample_pfaff_saalschutz(seed: u64) -> (u64, Rat, Rat, Rat) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5aa1_5c40_7a11_0000);
    loop {
        let n = rng.gen_range(0u64..=6);
        let (a, b, c) = (
            simple_rational(&mut rng),
            simple_rational(&mut rng),
            simple_rational(&mut rng),
        );
        let balance = Rat::one() + &a + &b - &c - Rat::from(n);
        if pole_free(&c, n) && pole_free(&balance, n) && pole_free(&(&c - &a - &b), n) {
            return (n, a, b, c);
        }
    }
}
