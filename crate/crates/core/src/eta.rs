//! Dedekind eta quotients as `q`-expansions and the modular parametrization
//!
//! `η(2z)^22 / (η(z)^12 η(4z)^8) = Σ J2(n) t^n`, `t = 16 η(z)^8 η(4z)^16 / η(2z)^24`.

use crate::apery::j2_by_recurrence;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::series::{compose_series, PSeries};

/// `Π η(scale · z)^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotient {
    pub factors: Vec<(u64, i64)>,
}

impl EtaQuotient {
    pub fn new(factors: &[(u64, i64)]) -> EtaQuotient {
        EtaQuotient {
            factors: factors.to_vec(),
        }
    }

    /// Integer power of `q` contributed by the `q^{c/24}` prefactors.
    pub fn net_power(&self) -> Result<i64> {
        let total: i64 = self.factors.iter().map(|&(c, e)| c as i64 * e).sum();
        if total % 24 != 0 {
            return Err(Error::FractionalPower(total));
        }
        Ok(total / 24)
    }

    /// Generating side of the parametrization.
    pub fn apery_generating() -> EtaQuotient {
        EtaQuotient::new(&[(2, 22), (1, -12), (4, -8)])
    }

    /// The Hauptmodul `t / 16`.
    pub fn hauptmodul() -> EtaQuotient {
        EtaQuotient::new(&[(1, 8), (4, 16), (2, -24)])
    }
}

/// `Π_{n>=1} (1 - q^{scale·n})` through `q^order`.
fn euler_product(scale: u64, order: usize) -> PSeries {
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = Rat::one();
    let step = scale as usize;
    let mut d = step;
    while d <= order {
        // multiply in place by (1 - q^d), high to low
        for i in (d..=order).rev() {
            let lower = coeffs[i - d].clone();
            coeffs[i] -= lower;
        }
        d += step;
    }
    PSeries::new(coeffs, order)
}

pub fn eta_quotient_series(eq: &EtaQuotient, order: usize) -> Result<PSeries> {
    if order == 0 {
        return Err(Error::Precondition("order must be >= 1".into()));
    }
    let v = eq.net_power()?;
    if v < 0 {
        return Err(Error::PoleAtZero(v));
    }
    let v = v as usize;
    if v > order {
        return Ok(PSeries::new(Vec::new(), order));
    }
    let inner_order = order - v;
    let mut acc = PSeries::one(inner_order);
    for &(scale, exp) in &eq.factors {
        if scale == 0 {
            return Err(Error::Precondition("eta scale must be positive".into()));
        }
        let base = euler_product(scale, inner_order);
        let positive = base.pow(exp.abs())?;
        let factor = if exp < 0 {
            positive.invert()?
        } else {
            positive
        };
        acc = acc.mul(&factor);
    }
    Ok(acc.shift(v))
}

/// `t = 16 η(z)^8 η(4z)^16 / η(2z)^24 = 16q + O(q^2)`.
pub fn t_series(order: usize) -> Result<PSeries> {
    Ok(eta_quotient_series(&EtaQuotient::hauptmodul(), order)?.scale(&Rat::from(16)))
}

/// `(eta-quotient side, Σ J2(n) t^n)` through `q^order`.
pub fn parametrization_sides(order: usize) -> Result<(PSeries, PSeries)> {
    let lhs = eta_quotient_series(&EtaQuotient::apery_generating(), order)?;
    let j2 = j2_by_recurrence(order as u64);
    let rhs = compose_series(&j2.values, &t_series(order)?, order)?;
    Ok((lhs, rhs))
}

pub fn verify_parametrization(order: usize) -> Result<bool> {
    let (lhs, rhs) = parametrization_sides(order)?;
    Ok(lhs.precision() == order && rhs.precision() == order && lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_expansion() {
        let delta = eta_quotient_series(&EtaQuotient::new(&[(1, 24)]), 3).unwrap();
        assert_eq!(delta, PSeries::from_ints(&[0, 1, -24, 252], 3));
        let delta = eta_quotient_series(&EtaQuotient::new(&[(1, 24)]), 6).unwrap();
        // tau(4), tau(5), tau(6)
        assert_eq!(
            delta,
            PSeries::from_ints(&[0, 1, -24, 252, -1472, 4830, -6048], 6)
        );
    }

    #[test]
    fn euler_product_pentagonal() {
        // 1 - q - q^2 + q^5 + q^7 - q^12 - q^15
        let e = euler_product(1, 15);
        let mut want = [0i64; 16];
        for (k, s) in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)] {
            want[k] = s;
        }
        assert_eq!(e, PSeries::from_ints(&want, 15));
    }

    #[test]
    fn quotient_errors() {
        let lhs = EtaQuotient::apery_generating();
        assert_eq!(lhs.net_power(), Ok(0));
        assert_eq!(
            eta_quotient_series(&lhs, 4).unwrap().coeff(0),
            Some(&Rat::one())
        );
        let frac = EtaQuotient::new(&[(1, 1), (2, -1)]);
        assert_eq!(
            eta_quotient_series(&frac, 3),
            Err(Error::FractionalPower(-1))
        );
        let pole = EtaQuotient::new(&[(1, -24)]);
        assert_eq!(eta_quotient_series(&pole, 3), Err(Error::PoleAtZero(-1)));
    }

    #[test]
    fn t_series_leading_terms() {
        let t = t_series(10).unwrap();
        assert_eq!(t.coeff(0), Some(&Rat::zero()));
        assert_eq!(t.coeff(1), Some(&Rat::from(16)));
        assert_eq!(t_series(1).unwrap().precision(), 1);
    }

    #[test]
    fn parametrization_small_orders() {
        for order in 1..=12 {
            assert_eq!(verify_parametrization(order), Ok(true), "order {order}");
        }
    }
}
