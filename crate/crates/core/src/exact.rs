//! Exact rational scalars, combinatorial kernels and the p-adic congruence engine.
//!
//! Everything downstream is built on [`Rat`], a thin newtype over
//! `num_rational::BigRational` that is always stored in lowest terms with a
//! positive denominator, so `==` is structural equality of values.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    /// `num / den`, reduced. Panics if `den == 0`; see [`Rat::try_new`].
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rat {
        Rat::try_new(num, den).expect("Rat::new with zero denominator")
    }

    pub fn try_new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rat> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The integer value if the denominator is 1 and it fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn try_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn pow(&self, e: u32) -> Rat {
        Rat(num_traits::Pow::pow(&self.0, e))
    }

    /// `(-1)^k` as a rational.
    pub fn sign_power(k: u64) -> Rat {
        if k.is_multiple_of(2) {
            Rat::one()
        } else {
            -Rat::one()
        }
    }

    /// Always `num/den`, even for integers. Used for serialization.
    pub fn to_frac_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            f.pad(&self.numer().to_string())
        } else {
            f.pad(&self.to_frac_string())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational '{s}'"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rat::try_new(n, d)
            }
            None => Ok(Rat::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_frac_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n)
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_int(n)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $AssignTrait:ident, $assign:ident) => {
        impl $Trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($Trait::$method(&self.0, &rhs.0))
            }
        }
        impl $Trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($Trait::$method(self.0, rhs.0))
            }
        }
        impl $Trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($Trait::$method(self.0, &rhs.0))
            }
        }
        impl $Trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($Trait::$method(&self.0, rhs.0))
            }
        }
        impl $AssignTrait<&Rat> for Rat {
            fn $assign(&mut self, rhs: &Rat) {
                $AssignTrait::$assign(&mut self.0, &rhs.0);
            }
        }
        impl $AssignTrait<Rat> for Rat {
            fn $assign(&mut self, rhs: Rat) {
                $AssignTrait::$assign(&mut self.0, rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

// `/` panics on a zero divisor, like integer division. Use `try_div` to get an error.
impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.try_div(rhs).expect("Rat division by zero")
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self.try_div(&rhs).expect("Rat division by zero")
    }
}

impl Div<&Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.try_div(rhs).expect("Rat division by zero")
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

// ---------------------------------------------------------------------------
// Combinatorial kernels

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Integer binomial `C(n, k)`, zero for `k > n`.
pub fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial `a(a-1)...(a-k+1)/k!`.
pub fn binom_rat(a: &Rat, k: u64) -> Rat {
    let mut num = Rat::one();
    let mut term = a.clone();
    for _ in 0..k {
        num *= &term;
        term -= Rat::one();
    }
    num / Rat::from_int(factorial(k))
}

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    let mut term = a.clone();
    for _ in 0..k {
        if term.is_zero() {
            return Rat::zero();
        }
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// `H_k = 1 + 1/2 + ... + 1/k`, `H_0 = 0`.
pub fn harmonic(k: u64) -> Rat {
    harmonic_prefix(k).pop().unwrap_or_else(Rat::zero)
}

/// `[H_0, H_1, ..., H_k]`.
pub fn harmonic_prefix(k: u64) -> Vec<Rat> {
    let mut out = Vec::with_capacity(k as usize + 1);
    let mut acc = Rat::zero();
    out.push(acc.clone());
    for j in 1..=k {
        acc += Rat::new(1, j);
        out.push(acc.clone());
    }
    out
}

// ---------------------------------------------------------------------------
// Primes

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in `[lo, hi]`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if lo > hi {
        return Vec::new();
    }
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

// ---------------------------------------------------------------------------
// p-adic valuation and congruences

/// `v_p` of a rational; zero has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PadicVal {
    Finite(i64),
    Infinite,
}

impl PadicVal {
    pub fn is_infinite(self) -> bool {
        matches!(self, PadicVal::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            PadicVal::Finite(v) => Some(v),
            PadicVal::Infinite => None,
        }
    }

    /// `self >= m`, with `+inf` dominating every integer.
    pub fn at_least(self, m: i64) -> bool {
        match self {
            PadicVal::Finite(v) => v >= m,
            PadicVal::Infinite => true,
        }
    }
}

impl Ord for PadicVal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PadicVal::Infinite, PadicVal::Infinite) => Ordering::Equal,
            (PadicVal::Infinite, _) => Ordering::Greater,
            (_, PadicVal::Infinite) => Ordering::Less,
            (PadicVal::Finite(a), PadicVal::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for PadicVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for PadicVal {
    type Output = PadicVal;
    fn add(self, rhs: PadicVal) -> PadicVal {
        match (self, rhs) {
            (PadicVal::Finite(a), PadicVal::Finite(b)) => PadicVal::Finite(a + b),
            _ => PadicVal::Infinite,
        }
    }
}

impl fmt::Display for PadicVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicVal::Finite(v) => f.pad(&v.to_string()),
            PadicVal::Infinite => f.pad("inf"),
        }
    }
}

impl Serialize for PadicVal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PadicVal::Finite(v) => s.serialize_i64(*v),
            PadicVal::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for PadicVal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<PadicVal, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(PadicVal::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(PadicVal::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad valuation '{s}'"))),
        }
    }
}

/// Valuation of a nonzero integer. The caller guarantees `n != 0`.
fn vp_int(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(r) = v_p(numerator) - v_p(denominator)`.
pub fn vp(r: &Rat, p: u64) -> Result<PadicVal> {
    require_prime(p)?;
    if r.is_zero() {
        return Ok(PadicVal::Infinite);
    }
    Ok(PadicVal::Finite(
        vp_int(r.numer(), p) - vp_int(r.denom(), p),
    ))
}

/// Outcome of checking `lhs ≡ rhs (mod p^m)`, or of an exact identity when
/// `prime` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceVerdict {
    pub label: String,
    pub lhs: Rat,
    pub rhs: Rat,
    #[serde(rename = "p")]
    pub prime: Option<u64>,
    #[serde(rename = "m")]
    pub exponent: Option<u32>,
    #[serde(rename = "valuation")]
    pub diff_valuation: Option<PadicVal>,
    pub holds: bool,
}

impl CongruenceVerdict {
    /// Exact equality check: no prime, no valuation.
    pub fn exact(label: impl Into<String>, lhs: Rat, rhs: Rat) -> CongruenceVerdict {
        let holds = lhs == rhs;
        CongruenceVerdict {
            label: label.into(),
            lhs,
            rhs,
            prime: None,
            exponent: None,
            diff_valuation: None,
            holds,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> CongruenceVerdict {
        self.label = label.into();
        self
    }
}

/// `a ≡ b (mod p^m)` in the sense `v_p(a - b) >= m`. Operands need not be p-integral.
pub fn congruent(a: &Rat, b: &Rat, p: u64, m: u32) -> Result<CongruenceVerdict> {
    if m == 0 {
        return Err(Error::Precondition(
            "congruence exponent must be >= 1".into(),
        ));
    }
    let val = vp(&(a - b), p)?;
    Ok(CongruenceVerdict {
        label: String::new(),
        lhs: a.clone(),
        rhs: b.clone(),
        prime: Some(p),
        exponent: Some(m),
        diff_valuation: Some(val),
        holds: val.at_least(m as i64),
    })
}
