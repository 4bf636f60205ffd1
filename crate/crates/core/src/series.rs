//! Truncated formal power series in `q` with explicit precision.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Coefficients of `q^0..=q^precision`; everything above `precision` is unknown.
#[derive(Clone, PartialEq, Eq)]
pub struct PSeries {
    coeffs: Vec<Rat>,
}

impl PSeries {
    /// Pads or truncates `coeffs` to exactly `precision + 1` entries.
    pub fn new(mut coeffs: Vec<Rat>, precision: usize) -> PSeries {
        coeffs.resize(precision + 1, Rat::zero());
        PSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], precision: usize) -> PSeries {
        PSeries::new(coeffs.iter().map(|&c| Rat::from(c)).collect(), precision)
    }

    pub fn one(precision: usize) -> PSeries {
        PSeries::new(vec![Rat::one()], precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, or `None` beyond the known precision.
    pub fn coeff(&self, i: usize) -> Option<&Rat> {
        self.coeffs.get(i)
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, precision: usize) -> PSeries {
        let p = precision.min(self.precision());
        PSeries {
            coeffs: self.coeffs[..=p].to_vec(),
        }
    }

    pub fn add(&self, rhs: &PSeries) -> PSeries {
        let n = self.precision().min(rhs.precision());
        PSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &PSeries) -> PSeries {
        let n = self.precision().min(rhs.precision());
        PSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PSeries {
        PSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product known through the smaller of the two precisions.
    pub fn mul(&self, rhs: &PSeries) -> PSeries {
        let n = self.precision().min(rhs.precision());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PSeries { coeffs: out }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<PSeries> {
        let c0 = self.coeffs[0].recip().map_err(|_| Error::NonUnitConstant)?;
        let n = self.precision();
        let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for k in 1..=n {
            let s: Rat = (1..=k)
                .filter(|&i| !self.coeffs[i].is_zero())
                .map(|i| &self.coeffs[i] * &out[k - i])
                .sum();
            out.push(-(s * &c0));
        }
        Ok(PSeries { coeffs: out })
    }

    /// `self^e`; negative exponents go through [`PSeries::invert`].
    pub fn pow(&self, e: i64) -> Result<PSeries> {
        let mut base = self.clone();
        let mut acc = PSeries::one(self.precision());
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        if e < 0 {
            acc.invert()
        } else {
            Ok(acc)
        }
    }

    /// Multiplication by `q^v`; known coefficients move up, so precision grows by `v`.
    pub fn shift(&self, v: usize) -> PSeries {
        let mut coeffs = vec![Rat::zero(); v];
        coeffs.extend(self.coeffs.iter().cloned());
        PSeries { coeffs }
    }

    /// Equality on the common precision.
    pub fn agrees_with(&self, rhs: &PSeries) -> bool {
        let n = self.precision().min(rhs.precision());
        self.coeffs[..=n] == rhs.coeffs[..=n]
    }
}

/// `Σ_k outer[k] · inner^k` through `q^order`. The inner series must have
/// valuation at least 1; missing outer coefficients are zero.
pub fn compose_series(outer: &[Rat], inner: &PSeries, order: usize) -> Result<PSeries> {
    if !inner.coeffs[0].is_zero() {
        return Err(Error::CompositionValuation);
    }
    let inner = inner.truncate(order);
    let n = inner.precision();
    let top = outer.len().min(n + 1);
    let mut acc = PSeries::new(Vec::new(), n);
    for c in outer[..top].iter().rev() {
        acc = acc.mul(&inner);
        acc.coeffs[0] += c;
    }
    Ok(acc)
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}

impl fmt::Debug for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
