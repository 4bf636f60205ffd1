//! One verifier per theorem, lemma and displayed congruence, plus a closed
//! registry of claim identifiers for uniform dispatch.
//!
//! Throughout, `p > 3` is prime (or `p >= 3` where stated) and `n = (p-1)/2`.
//! Each verifier returns a [`ClaimResult`] whose verdicts are built from
//! exact rationals. Exact identities carry verdicts with no prime.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::apery::{
    binom_product_sides, central_weights, f_alternate, f_poly, g_poly, h_from, i_f_binom_closed,
    j2_by_3f2, j2_by_recurrence, j2_by_sum, require_odd_prime, rising_sum_sides,
};
use crate::error::{Error, Result};
use crate::eta::parametrization_sides;
use crate::exact::{
    binom_int, binom_rat, congruent, factorial, harmonic_prefix, pochhammer, CongruenceVerdict, Rat,
};
use crate::hypergeom::{
    pfaff_saalschutz_sides, sample_pfaff_saalschutz, sample_transform_357, transform_357_sides,
};
use crate::poly::Poly;

/// Named integer parameters of a claim instance.
pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub params: Params,
    pub verdicts: Vec<CongruenceVerdict>,
    pub passed: bool,
}

impl ClaimResult {
    fn new(
        claim_id: &str,
        params: &[(&str, i64)],
        verdicts: Vec<CongruenceVerdict>,
    ) -> ClaimResult {
        let passed = verdicts.iter().all(|v| v.holds);
        ClaimResult {
            claim_id: claim_id.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            verdicts,
            passed,
        }
    }

    /// Parameter values in registry order, for sorting.
    pub fn param_key(&self) -> Vec<i64> {
        match lookup(&self.claim_id) {
            Some(info) => info
                .params
                .iter()
                .map(|k| self.params.get(*k).copied().unwrap_or(0))
                .collect(),
            None => self.params.values().copied().collect(),
        }
    }

    /// Whether a failure of this instance is a finding rather than a defect.
    pub fn is_conjectural(&self) -> bool {
        is_conjectural(&self.claim_id, &self.params)
    }
}

/// Registry entry.
#[derive(Clone, Copy, Debug)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

pub const REGISTRY: &[ClaimInfo] = &[
    ClaimInfo {
        id: "thm-main1",
        params: &["p"],
        summary: "sum_{x<p} 3F2((1-p)/2,(1+p)/2,-x;1,1;1)^2 = I(f_n^2) == (-1)^n mod p^3, p > 3",
    },
    ClaimInfo {
        id: "thm-main2",
        params: &["p"],
        summary: "sum_{x<p} 3F2(1/2,1/2,-x;1,1;1)^2 = I(g^2) == (-1)^n mod p^3, p >= 3",
    },
    ClaimInfo {
        id: "conj-kw",
        params: &["p"],
        summary: "sum_{k<p} J2(k)^2 == (-1)^((p-1)/2) mod p^3 via the defining sum, p >= 3",
    },
    ClaimInfo {
        id: "kw-thm62",
        params: &["p", "m", "r"],
        summary: "J2(m p^r) == J2(m p^(r-1)) mod p^r",
    },
    ClaimInfo {
        id: "gen-p3r",
        params: &["p", "r"],
        summary: "sum_{x<p^r} J2(x)^2 == (-1)^n sum_{x<p^(r-1)} J2(x)^2 mod p^(3r) (conjectural for r >= 2)",
    },
    ClaimInfo {
        id: "eq-three",
        params: &["p"],
        summary: "I(f_n g) == I(f_n^2) mod p^3, with coefficient congruences mod p^2",
    },
    ClaimInfo {
        id: "lem5",
        params: &["p", "j"],
        summary: "I(f_n binom(x,j)) expansions: all j mod p^2, j < n mod p^3, j = n mod p^3",
    },
    ClaimInfo {
        id: "facp",
        params: &["p", "j", "k"],
        summary: "(p-j)_{j+k+1}/(j!k!) == p(-1)^j(1 + p(H_k - H_j)) mod p^3",
    },
    ClaimInfo {
        id: "lem-rutkowski",
        params: &["n", "j"],
        summary: "sum_k (-1)^k/(j+k+1) binom(n+k,k) binom(n,k) = 0 (j < n), (-1)^n/((2n+1) binom(2n,n)) (j = n)",
    },
    ClaimInfo {
        id: "lem-morley",
        params: &["p"],
        summary: "binom(-1/2,n)^2 == (-1)^n binom(2n,n) mod p^3",
    },
    ClaimInfo {
        id: "lem7",
        params: &["p"],
        summary: "p sum_{j>n} binom(-1/2,j)^2 sum_k (-1)^k/(j+k+1) binom(n,k) binom(n+k,k) == 0 mod p^3",
    },
    ClaimInfo {
        id: "split-symmetry",
        params: &["p"],
        summary: "symmetric double sum with H_k - H_j vanishes; I(f_n^2) == (-1)^n + p^2 (-1)^n S mod p^3",
    },
    ClaimInfo {
        id: "lem2",
        params: &["m", "j", "k"],
        summary: "sum_{x<m} (x-j+1)_{j+k} = (m-j)_{j+k+1}/(j+k+1)",
    },
    ClaimInfo {
        id: "cor4",
        params: &["m", "j", "p"],
        summary: "I(f_m binom(x,j)) equals its closed Pochhammer form",
    },
    ClaimInfo {
        id: "f-recursion",
        params: &["n"],
        summary: "(n+1)^2 f_{n+1} = (2n+1)(2x+1) f_n + n^2 f_{n-1}",
    },
    ClaimInfo {
        id: "h-membership",
        params: &["p"],
        summary: "g - f_n = p^2 h with h in x Z_p[x] of degree p-1",
    },
    ClaimInfo {
        id: "three-route",
        params: &["n"],
        summary: "J2(n) by defining sum = by recurrence = by 3F2",
    },
    ClaimInfo {
        id: "transform-357",
        params: &["seed"],
        summary: "3F2(-m,a,b;d,e;1) = (e-a)_m/(e)_m 3F2(-m,a,d-b;d,a+1-m-e;1) on a seeded sample",
    },
    ClaimInfo {
        id: "pfaff-saalschutz",
        params: &["seed"],
        summary: "3F2(-n,a,b;c,1+a+b-c-n;1) = (c-a)_n(c-b)_n/((c)_n(c-a-b)_n) on a seeded sample",
    },
    ClaimInfo {
        id: "eta-param",
        params: &["order"],
        summary: "eta(2z)^22/(eta(z)^12 eta(4z)^8) = sum J2(n) t^n through q^order, integral coefficients",
    },
];

pub fn lookup(id: &str) -> Option<&'static ClaimInfo> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Only the mod `p^{3r}` generalization with `r >= 2` is unproven.
pub fn is_conjectural(claim_id: &str, params: &Params) -> bool {
    claim_id == "gen-p3r" && params.get("r").is_some_and(|&r| r >= 2)
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn require_prime_gt3(p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    if p <= 3 {
        return Err(precondition(format!("p > 3 required, got p = {p}")));
    }
    Ok((p - 1) / 2)
}

fn labeled(v: CongruenceVerdict, label: impl Into<String>) -> CongruenceVerdict {
    v.with_label(label)
}

/// `binom(n,k) binom(n+k,k)` for `k = 0..=n`.
fn apery_coeffs(n: u64) -> Vec<Rat> {
    (0..=n)
        .map(|k| Rat::from_int(binom_int(n, k) * binom_int(n + k, k)))
        .collect()
}

/// `Σ_k (-1)^k binom(n,k) binom(n+k,k) / (j+k+1)`.
fn rutkowski_sum(n: u64, j: u64) -> Rat {
    apery_coeffs(n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| Rat::sign_power(k as u64) * c / Rat::from(j + k as u64 + 1))
        .sum()
}

/// `Σ_k binom(n,k) binom(n+k,k) (-1)^k (H_k - H_j) / (j+k+1)`; `harm` must reach `max(n, j)`.
fn harmonic_weighted_sum(n: u64, j: u64, harm: &[Rat]) -> Rat {
    apery_coeffs(n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            Rat::sign_power(k as u64) * c * (&harm[k] - &harm[j as usize])
                / Rat::from(j + k as u64 + 1)
        })
        .sum()
}

/// Objects shared by every claim at a fixed prime.
#[derive(Default)]
struct PrimeData {
    f_n: OnceLock<Poly>,
    g: OnceLock<Poly>,
    f_values: OnceLock<Vec<Rat>>,
    i_f_squared: OnceLock<Rat>,
}

/// Per-run cache of polynomials keyed by `p`. Each entry is written once;
/// concurrent readers block on initialization and then share the value.
#[derive(Default)]
pub struct ClaimContext {
    primes: Mutex<HashMap<u64, Arc<PrimeData>>>,
}

impl ClaimContext {
    pub fn new() -> ClaimContext {
        ClaimContext::default()
    }

    fn prime(&self, p: u64) -> Arc<PrimeData> {
        let mut map = self.primes.lock().expect("cache poisoned");
        map.entry(p).or_default().clone()
    }

    fn f_n(&self, p: u64) -> Poly {
        self.prime(p)
            .f_n
            .get_or_init(|| f_poly((p - 1) / 2))
            .clone()
    }

    fn g(&self, p: u64) -> Result<Poly> {
        let data = self.prime(p);
        if let Some(g) = data.g.get() {
            return Ok(g.clone());
        }
        let g = g_poly(p)?;
        Ok(data.g.get_or_init(|| g).clone())
    }

    fn f_values(&self, p: u64) -> Vec<Rat> {
        let data = self.prime(p);
        data.f_values
            .get_or_init(|| {
                let f = data.f_n.get_or_init(|| f_poly((p - 1) / 2));
                (0..p as i64).map(|x| f.eval_int(x)).collect()
            })
            .clone()
    }

    fn i_f_squared(&self, p: u64) -> Rat {
        let data = self.prime(p);
        data.i_f_squared
            .get_or_init(|| {
                let f = data.f_n.get_or_init(|| f_poly((p - 1) / 2));
                i_sum_unchecked(&(f * f), p)
            })
            .clone()
    }

    /// `I(f_n(x) binom(x, j))` by pointwise evaluation.
    fn i_fn_binom(&self, p: u64, j: u64) -> Rat {
        self.f_values(p)
            .iter()
            .enumerate()
            .map(|(x, fx)| fx * binom_rat(&Rat::from(x as u64), j))
            .sum()
    }

    pub fn verify_main1(&self, p: u64) -> Result<ClaimResult> {
        let n = require_prime_gt3(p)?;
        let v = congruent(&self.i_f_squared(p), &Rat::sign_power(n), p, 3)?;
        Ok(ClaimResult::new(
            "thm-main1",
            &[("p", p as i64)],
            vec![labeled(v, "I(f_n^2) == (-1)^n")],
        ))
    }

    pub fn verify_main2(&self, p: u64) -> Result<ClaimResult> {
        require_odd_prime(p)?;
        let g = self.g(p)?;
        let lhs = i_sum_unchecked(&(&g * &g), p);
        let v = congruent(&lhs, &Rat::sign_power((p - 1) / 2), p, 3)?;
        Ok(ClaimResult::new(
            "thm-main2",
            &[("p", p as i64)],
            vec![labeled(v, "I(g^2) == (-1)^n")],
        ))
    }

    pub fn verify_kw_conjecture(&self, p: u64) -> Result<ClaimResult> {
        require_odd_prime(p)?;
        let lhs: Rat = (0..p).map(|k| j2_by_sum(k).pow(2)).sum();
        let v = congruent(&lhs, &Rat::sign_power((p - 1) / 2), p, 3)?;
        Ok(ClaimResult::new(
            "conj-kw",
            &[("p", p as i64)],
            vec![labeled(v, "sum_{k<p} J2(k)^2 == (-1)^n")],
        ))
    }

    pub fn verify_kw_theorem62(&self, p: u64, m: u64, r: u32) -> Result<ClaimResult> {
        require_odd_prime(p)?;
        if m == 0 || r == 0 {
            return Err(precondition("m, r >= 1 required"));
        }
        let hi = m * p.pow(r);
        let lo = m * p.pow(r - 1);
        let v = congruent(&j2_by_sum(hi), &j2_by_sum(lo), p, r)?;
        Ok(ClaimResult::new(
            "kw-thm62",
            &[("p", p as i64), ("m", m as i64), ("r", r as i64)],
            vec![labeled(v, format!("J2({hi}) == J2({lo})"))],
        ))
    }

    pub fn verify_generalization(&self, p: u64, r: u32) -> Result<ClaimResult> {
        require_odd_prime(p)?;
        if r == 0 {
            return Err(precondition("r >= 1 required"));
        }
        let top = p.pow(r);
        let squares: Vec<Rat> = (0..top).map(|x| j2_by_sum(x).pow(2)).collect();
        let lhs: Rat = squares.iter().sum();
        let inner: Rat = squares[..p.pow(r - 1) as usize].iter().sum();
        let rhs = Rat::sign_power((p - 1) / 2) * inner;
        let v = congruent(&lhs, &rhs, p, 3 * r)?;
        Ok(ClaimResult::new(
            "gen-p3r",
            &[("p", p as i64), ("r", r as i64)],
            vec![labeled(
                v,
                format!("sum_{{x<{top}}} J2^2 == (-1)^n sum_{{x<{}}} J2^2", top / p),
            )],
        ))
    }

    pub fn verify_eq_three(&self, p: u64) -> Result<ClaimResult> {
        let n = require_prime_gt3(p)?;
        let f = self.f_n(p);
        let g = self.g(p)?;
        let lhs = i_sum_unchecked(&(&f * &g), p);
        let mut verdicts = vec![labeled(
            congruent(&lhs, &self.i_f_squared(p), p, 3)?,
            "I(f_n g) == I(f_n^2)",
        )];
        let weights = central_weights(n);
        for (j, (w, c)) in weights.iter().zip(apery_coeffs(n)).enumerate() {
            let v = congruent(w, &c, p, 2)?;
            verdicts.push(labeled(
                v,
                format!("(-1)^j binom(-1/2,j)^2 == binom(n,j)binom(n+j,j), j={j}"),
            ));
        }
        Ok(ClaimResult::new("eq-three", &[("p", p as i64)], verdicts))
    }

    pub fn verify_lem5(&self, p: u64, j: u64) -> Result<ClaimResult> {
        let n = require_prime_gt3(p)?;
        if j >= p {
            return Err(precondition(format!(
                "j must lie in [0, {}], got {j}",
                p - 1
            )));
        }
        let harm = harmonic_prefix(j.max(n));
        let lhs = self.i_fn_binom(p, j);
        let pr = Rat::from(p);
        let p2 = &pr * &pr;
        let sign = Rat::sign_power(n + j);
        let s1 = rutkowski_sum(n, j);
        let s2 = harmonic_weighted_sum(n, j, &harm);

        let all_j = &sign * &pr * &s1 + &sign * &p2 * &s2;
        let mut verdicts = vec![labeled(congruent(&lhs, &all_j, p, 2)?, "all j (mod p^2)")];
        if j < n {
            let rhs = &sign * &p2 * &s2;
            verdicts.push(labeled(congruent(&lhs, &rhs, p, 3)?, "j < n (mod p^3)"));
        } else if j == n {
            let rhs = Rat::sign_power(n) / Rat::from_int(binom_int(2 * n, n)) + &p2 * &s2;
            verdicts.push(labeled(congruent(&lhs, &rhs, p, 3)?, "j = n (mod p^3)"));
        }
        Ok(ClaimResult::new(
            "lem5",
            &[("p", p as i64), ("j", j as i64)],
            verdicts,
        ))
    }

    pub fn verify_facp(&self, p: u64, j: u64, k: u64) -> Result<ClaimResult> {
        let n = require_prime_gt3(p)?;
        if j >= p || k > n {
            return Err(precondition(format!("need 0 <= j < {p} and 0 <= k <= {n}")));
        }
        let harm = harmonic_prefix(j.max(k));
        let pr = Rat::from(p);
        let den = Rat::from_int(factorial(j) * factorial(k));
        let lhs = pochhammer(&Rat::from(p - j), j + k + 1) / den;
        let rhs =
            Rat::sign_power(j) * &pr * (Rat::one() + &pr * (&harm[k as usize] - &harm[j as usize]));
        let mut verdicts = vec![labeled(congruent(&lhs, &rhs, p, 3)?, "facp (mod p^3)")];
        if j == n && k == n {
            let lhs = pochhammer(&Rat::from(p - n), 2 * n + 1) / Rat::from_int(factorial(n).pow(2));
            let rhs = Rat::sign_power(n) * &pr;
            verdicts.push(labeled(congruent(&lhs, &rhs, p, 3)?, "k = n (mod p^3)"));
        }
        Ok(ClaimResult::new(
            "facp",
            &[("p", p as i64), ("j", j as i64), ("k", k as i64)],
            verdicts,
        ))
    }

    pub fn verify_rutkowski(&self, n: u64, j: u64) -> Result<ClaimResult> {
        if n == 0 || j > n {
            return Err(precondition(format!(
                "need n >= 1 and 0 <= j <= n, got n={n}, j={j}"
            )));
        }
        let lhs = rutkowski_sum(n, j);
        let rhs = if j < n {
            Rat::zero()
        } else {
            Rat::sign_power(n) / (Rat::from(2 * n + 1) * Rat::from_int(binom_int(2 * n, n)))
        };
        // Pfaff-Saalschütz route: 1/(j+1) (-n)_n (-j)_n / ((1)_n (-1-n-j)_n)
        let neg = |x: u64| -Rat::from(x);
        let via_ps = pochhammer(&neg(n), n) * pochhammer(&neg(j), n)
            / (Rat::from(j + 1) * pochhammer(&Rat::one(), n) * pochhammer(&(neg(1 + n + j)), n));
        let label = if j < n {
            "Rut1: sum = 0"
        } else {
            "Rut2: sum = (-1)^n/((2n+1)binom(2n,n))"
        };
        Ok(ClaimResult::new(
            "lem-rutkowski",
            &[("n", n as i64), ("j", j as i64)],
            vec![
                CongruenceVerdict::exact(label, lhs.clone(), rhs),
                CongruenceVerdict::exact("Pfaff-Saalschutz evaluation", lhs, via_ps),
            ],
        ))
    }

    pub fn verify_morley(&self, p: u64) -> Result<ClaimResult> {
        let n = require_prime_gt3(p)?;
        let lhs = binom_rat(&Rat::new(-1, 2), n).pow(2);
        let rhs = Rat::sign_power(n) * Rat::from_int(binom_int(2 * n, n));
        let v = congruent(&lhs, &rhs, p, 3)?;
        Ok(ClaimResult::new(
            "lem-morley",
            &[("p", p as i64)],
            vec![labeled(v, "binom(-1/2,n)^2 == (-1)^n binom(2n,n)")],
        ))
    }

    pub fn verify_lem7(&self, p: u64) -> Result<ClaimResult> {
        let n = require_prime_gt3(p)?;
        let half = Rat::new(-1, 2);
        let inner: Rat = (n + 1..p)
            .map(|j| binom_rat(&half, j).pow(2) * rutkowski_sum(n, j))
            .sum();
        let lhs = Rat::from(p) * inner;
        let squares: Rat = (1..=n).map(|i| Rat::new(1, i * i)).sum();
        Ok(ClaimResult::new(
            "lem7",
            &[("p", p as i64)],
            vec![
                labeled(
                    congruent(&lhs, &Rat::zero(), p, 3)?,
                    "double sum == 0 (mod p^3)",
                ),
                labeled(
                    congruent(&squares, &Rat::zero(), p, 1)?,
                    "sum_{i<=n} 1/i^2 == 0 (mod p)",
                ),
            ],
        ))
    }

    pub fn verify_split_symmetry(&self, p: u64) -> Result<ClaimResult> {
        let n = require_prime_gt3(p)?;
        let total = split_double_sum(n);
        let p2 = Rat::from(p * p);
        let sign = Rat::sign_power(n);
        let rhs = &sign + &p2 * &sign * &total;
        Ok(ClaimResult::new(
            "split-symmetry",
            &[("p", p as i64)],
            vec![
                CongruenceVerdict::exact("symmetric double sum = 0", total, Rat::zero()),
                labeled(
                    congruent(&self.i_f_squared(p), &rhs, p, 3)?,
                    "split (mod p^3)",
                ),
            ],
        ))
    }

    pub fn verify_lem2(&self, m: u64, j: u64, k: u64) -> Result<ClaimResult> {
        if m == 0 {
            return Err(precondition("m >= 1 required"));
        }
        let (lhs, rhs) = rising_sum_sides(m, j, k);
        Ok(ClaimResult::new(
            "lem2",
            &[("m", m as i64), ("j", j as i64), ("k", k as i64)],
            vec![CongruenceVerdict::exact("rising-factorial sum", lhs, rhs)],
        ))
    }

    pub fn verify_cor4(&self, m: u64, j: u64, p: u64) -> Result<ClaimResult> {
        require_odd_prime(p)?;
        if m == 0 {
            return Err(precondition("m >= 1 required"));
        }
        let f = f_poly(m);
        let direct: Rat = (0..p)
            .map(|x| f.eval_int(x as i64) * binom_rat(&Rat::from(x), j))
            .sum();
        let closed = i_f_binom_closed(m, j, p);
        let mut verdicts = vec![CongruenceVerdict::exact(
            "direct = closed form",
            direct,
            closed,
        )];
        // the alternate expansion of f_m used to derive the closed form
        for x in 0..p as i64 {
            verdicts.push(CongruenceVerdict::exact(
                format!("f_m({x}) alternate form"),
                f.eval_int(x),
                f_alternate(m, x),
            ));
        }
        Ok(ClaimResult::new(
            "cor4",
            &[("m", m as i64), ("j", j as i64), ("p", p as i64)],
            verdicts,
        ))
    }

    pub fn verify_f_recursion(&self, n: u64) -> Result<ClaimResult> {
        if n == 0 {
            return Err(precondition("n >= 1 required"));
        }
        let (prev, cur, next) = (f_poly(n - 1), f_poly(n), f_poly(n + 1));
        let n_ = n as i64;
        let lhs = next.scale(&Rat::from((n_ + 1) * (n_ + 1)));
        let rhs = &(&Poly::from_ints(&[1, 2]) * &cur).scale(&Rat::from(2 * n_ + 1))
            + &prev.scale(&Rat::from(n_ * n_));
        let len = lhs.coeffs().len().max(rhs.coeffs().len());
        let verdicts = (0..len)
            .map(|i| CongruenceVerdict::exact(format!("[x^{i}]"), lhs.coeff(i), rhs.coeff(i)))
            .collect();
        Ok(ClaimResult::new("f-recursion", &[("n", n_)], verdicts))
    }

    pub fn verify_h_membership(&self, p: u64) -> Result<ClaimResult> {
        require_odd_prime(p)?;
        let g = self.g(p)?;
        let f = self.f_n(p);
        let ok = match h_from(&g, &f, p) {
            Ok(h) => h.degree() == Some(p as usize - 1),
            Err(Error::HNotIntegral(_)) => false,
            Err(e) => return Err(e),
        };
        Ok(ClaimResult::new(
            "h-membership",
            &[("p", p as i64)],
            vec![CongruenceVerdict::exact(
                "h in xZ_p[x], deg h = p-1",
                Rat::from(ok as i64),
                Rat::one(),
            )],
        ))
    }

    pub fn verify_three_route(&self, n: u64) -> Result<ClaimResult> {
        let by_sum = j2_by_sum(n);
        let by_rec = j2_by_recurrence(n).values.pop().expect("nonempty");
        let by_hyp = j2_by_3f2(n);
        Ok(ClaimResult::new(
            "three-route",
            &[("n", n as i64)],
            vec![
                CongruenceVerdict::exact("sum = recurrence", by_sum.clone(), by_rec),
                CongruenceVerdict::exact("sum = 3F2", by_sum, by_hyp),
            ],
        ))
    }

    pub fn verify_transform_357(&self, seed: u64) -> Result<ClaimResult> {
        let (m, a, b, d, e) = sample_transform_357(seed);
        let (lhs, rhs) = transform_357_sides(m, &a, &b, &d, &e)?;
        let label = format!("m={m}, a={a}, b={b}, d={d}, e={e}");
        Ok(ClaimResult::new(
            "transform-357",
            &[("seed", seed as i64)],
            vec![CongruenceVerdict::exact(label, lhs, rhs)],
        ))
    }

    pub fn verify_pfaff_saalschutz(&self, seed: u64) -> Result<ClaimResult> {
        let (n, a, b, c) = sample_pfaff_saalschutz(seed);
        let (lhs, rhs) = pfaff_saalschutz_sides(n, &a, &b, &c)?;
        let label = format!("n={n}, a={a}, b={b}, c={c}");
        Ok(ClaimResult::new(
            "pfaff-saalschutz",
            &[("seed", seed as i64)],
            vec![CongruenceVerdict::exact(label, lhs, rhs)],
        ))
    }

    pub fn verify_eta_parametrization(&self, order: u64) -> Result<ClaimResult> {
        if order == 0 {
            return Err(precondition("order >= 1 required"));
        }
        let (lhs, rhs) = parametrization_sides(order as usize)?;
        let mut verdicts = Vec::new();
        for i in 0..=order as usize {
            let (a, b) = (lhs.coeff(i).cloned(), rhs.coeff(i).cloned());
            let (a, b) = (
                a.unwrap_or_else(Rat::zero),
                b.unwrap_or_else(|| Rat::from(-1)),
            );
            verdicts.push(CongruenceVerdict::exact(
                format!("[q^{i}] integral"),
                Rat::from_int(a.denom().clone()),
                Rat::one(),
            ));
            verdicts.push(CongruenceVerdict::exact(format!("[q^{i}]"), a, b));
        }
        Ok(ClaimResult::new(
            "eta-param",
            &[("order", order as i64)],
            verdicts,
        ))
    }

    /// Dispatch by registry identifier.
    pub fn run_claim(&self, claim_id: &str, params: &Params) -> Result<ClaimResult> {
        let info = lookup(claim_id).ok_or_else(|| Error::UnknownClaim(claim_id.to_string()))?;
        let malformed = |reason: String| Error::MalformedParams {
            claim: claim_id.to_string(),
            reason,
        };
        if let Some(extra) = params.keys().find(|k| !info.params.contains(&k.as_str())) {
            return Err(malformed(format!("unexpected parameter '{extra}'")));
        }
        let mut values = Vec::with_capacity(info.params.len());
        for name in info.params {
            let v = *params
                .get(*name)
                .ok_or_else(|| malformed(format!("missing parameter '{name}'")))?;
            let v = u64::try_from(v).map_err(|_| malformed(format!("'{name}' must be >= 0")))?;
            values.push(v);
        }
        let small = |v: u64| u32::try_from(v).map_err(|_| malformed("exponent too large".into()));
        match (claim_id, values.as_slice()) {
            ("thm-main1", &[p]) => self.verify_main1(p),
            ("thm-main2", &[p]) => self.verify_main2(p),
            ("conj-kw", &[p]) => self.verify_kw_conjecture(p),
            ("kw-thm62", &[p, m, r]) => self.verify_kw_theorem62(p, m, small(r)?),
            ("gen-p3r", &[p, r]) => self.verify_generalization(p, small(r)?),
            ("eq-three", &[p]) => self.verify_eq_three(p),
            ("lem5", &[p, j]) => self.verify_lem5(p, j),
            ("facp", &[p, j, k]) => self.verify_facp(p, j, k),
            ("lem-rutkowski", &[n, j]) => self.verify_rutkowski(n, j),
            ("lem-morley", &[p]) => self.verify_morley(p),
            ("lem7", &[p]) => self.verify_lem7(p),
            ("split-symmetry", &[p]) => self.verify_split_symmetry(p),
            ("lem2", &[m, j, k]) => self.verify_lem2(m, j, k),
            ("cor4", &[m, j, p]) => self.verify_cor4(m, j, p),
            ("f-recursion", &[n]) => self.verify_f_recursion(n),
            ("h-membership", &[p]) => self.verify_h_membership(p),
            ("three-route", &[n]) => self.verify_three_route(n),
            ("transform-357", &[s]) => self.verify_transform_357(s),
            ("pfaff-saalschutz", &[s]) => self.verify_pfaff_saalschutz(s),
            ("eta-param", &[o]) => self.verify_eta_parametrization(o),
            _ => unreachable!("registry and dispatch table disagree on '{claim_id}'"),
        }
    }
}

fn i_sum_unchecked(f: &Poly, p: u64) -> Rat {
    (0..p as i64).map(|x| f.eval_int(x)).sum()
}

/// Summand of the symmetric double sum at `(j, k)`.
pub fn split_summand(j: u64, k: u64, coeffs: &[Rat], harm: &[Rat]) -> Rat {
    let (ju, ku) = (j as usize, k as usize);
    Rat::sign_power(j + k) * &coeffs[ju] * &coeffs[ku] * (&harm[ku] - &harm[ju])
        / Rat::from(j + k + 1)
}

/// `Σ_{j,k<=n} C_j C_k (-1)^{j+k} (H_k - H_j) / (j+k+1)` with `C_j = binom(n,j) binom(n+j,j)`.
pub fn split_double_sum(n: u64) -> Rat {
    let coeffs = apery_coeffs(n);
    let harm = harmonic_prefix(n);
    let mut total = Rat::zero();
    for j in 0..=n {
        for k in 0..=n {
            total += split_summand(j, k, &coeffs, &harm);
        }
    }
    total
}

/// `binom(n,j) binom(n+j,j)` for `j = 0..=n`, exposed for tests and examples.
pub fn split_coefficients(n: u64) -> Vec<Rat> {
    apery_coeffs(n)
}

macro_rules! free_verifier {
    ($(#[$doc:meta])* $name:ident($($arg:ident: $ty:ty),*)) => {
        $(#[$doc])*
        pub fn $name($($arg: $ty),*) -> Result<ClaimResult> {
            ClaimContext::new().$name($($arg),*)
        }
    };
}

free_verifier!(verify_main1(p: u64));
free_verifier!(verify_main2(p: u64));
free_verifier!(verify_kw_conjecture(p: u64));
free_verifier!(verify_kw_theorem62(p: u64, m: u64, r: u32));
free_verifier!(
    /// Conjectural for `r >= 2`: a failure there is a finding.
    verify_generalization(p: u64, r: u32)
);
free_verifier!(verify_eq_three(p: u64));
free_verifier!(verify_lem5(p: u64, j: u64));
free_verifier!(verify_facp(p: u64, j: u64, k: u64));
free_verifier!(verify_rutkowski(n: u64, j: u64));
free_verifier!(verify_morley(p: u64));
free_verifier!(verify_lem7(p: u64));
free_verifier!(verify_split_symmetry(p: u64));
free_verifier!(verify_lem2(m: u64, j: u64, k: u64));
free_verifier!(verify_cor4(m: u64, j: u64, p: u64));

pub fn run_claim(claim_id: &str, params: &Params) -> Result<ClaimResult> {
    ClaimContext::new().run_claim(claim_id, params)
}

/// Convenience for building [`Params`] literals.
pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// `binom(x,j) binom(-1-x,k) = (-1)^k (x-j+1)_{j+k}/(j!k!)` as an exact verdict.
pub fn binom_product_verdict(x: i64, j: u64, k: u64) -> CongruenceVerdict {
    let (lhs, rhs) = binom_product_sides(x, j, k);
    CongruenceVerdict::exact(format!("x={x}, j={j}, k={k}"), lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::PadicVal;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn main_theorem_small_primes() {
        for p in [5u64, 7, 13] {
            assert!(verify_main1(p).unwrap().passed, "main1 p={p}");
        }
        assert_eq!(verify_main1(13).unwrap().verdicts[0].rhs, Rat::one());
        assert!(matches!(verify_main1(3), Err(Error::Precondition(_))));
        for p in [3u64, 5, 11] {
            let res = verify_main2(p).unwrap();
            assert!(res.passed, "main2 p={p}");
            if p != 5 {
                assert_eq!(res.verdicts[0].rhs, -Rat::one());
            }
        }
        assert_eq!(verify_main2(5).unwrap().verdicts[0].rhs, Rat::one());
        assert!(verify_main2(2).is_err());
    }

    #[test]
    fn p3_spot_value() {
        let res = verify_main2(3).unwrap();
        let lhs = r(1, 1) + r(9, 16) + r(1681, 4096);
        assert_eq!(res.verdicts[0].lhs, lhs);
        assert!(res.passed);
        assert_eq!(verify_kw_conjecture(3).unwrap().verdicts[0].lhs, lhs);
    }

    #[test]
    fn kw_routes_agree() {
        for p in crate::exact::primes_in(3, 50) {
            let a = verify_kw_conjecture(p).unwrap();
            let b = verify_main2(p).unwrap();
            assert_eq!(a.verdicts[0].lhs, b.verdicts[0].lhs, "p = {p}");
            assert!(a.passed && b.passed);
        }
    }

    #[test]
    fn kw_theorem62_examples() {
        assert!(verify_kw_theorem62(3, 1, 1).unwrap().passed);
        assert!(verify_kw_theorem62(5, 2, 1).unwrap().passed);
        assert!(verify_kw_theorem62(3, 1, 2).unwrap().passed);
    }

    #[test]
    fn generalization_r1_reduces_to_conjecture() {
        let g = verify_generalization(3, 1).unwrap();
        let c = verify_kw_conjecture(3).unwrap();
        assert_eq!(g.verdicts[0].lhs, c.verdicts[0].lhs);
        assert_eq!(g.verdicts[0].rhs, c.verdicts[0].rhs);
        assert!(g.passed);
        assert!(!g.is_conjectural());
        assert!(verify_generalization(3, 2).unwrap().is_conjectural());
    }

    #[test]
    fn eq_three_examples() {
        let res = verify_eq_three(5).unwrap();
        assert!(res.passed);
        // j = 2 coefficient check: 9/64 vs 6, difference -375/64
        let v = &res.verdicts[3];
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (r(9, 64), r(6, 1)));
        assert_eq!(v.diff_valuation, Some(PadicVal::Finite(3)));
        assert!(verify_eq_three(11).unwrap().passed);
    }

    #[test]
    fn lem5_examples() {
        let res = verify_lem5(5, 0).unwrap();
        assert_eq!(res.verdicts.len(), 2);
        assert!(res.passed);
        let res = verify_lem5(5, 2).unwrap();
        assert!(res.passed);
        assert_eq!(res.verdicts[1].label, "j = n (mod p^3)");
        let res = verify_lem5(7, 6).unwrap();
        assert_eq!(res.verdicts.len(), 1);
        assert!(res.passed);
        assert!(verify_lem5(7, 7).is_err());
    }

    #[test]
    fn facp_examples() {
        let res = verify_facp(5, 0, 0).unwrap();
        assert_eq!(res.verdicts[0].lhs, r(5, 1));
        assert!(res.passed);
        let res = verify_facp(5, 2, 2).unwrap();
        assert_eq!(res.verdicts[1].lhs, r(630, 1));
        assert_eq!(res.verdicts[1].rhs, r(5, 1));
        assert_eq!(res.verdicts[1].diff_valuation, Some(PadicVal::Finite(4)));
        assert!(res.passed);
        assert!(verify_facp(7, 3, 1).unwrap().passed);
        assert!(verify_facp(7, 3, 4).is_err());
    }

    #[test]
    fn rutkowski_examples() {
        let res = verify_rutkowski(1, 0).unwrap();
        assert_eq!(res.verdicts[0].lhs, Rat::zero());
        assert!(res.passed);
        let res = verify_rutkowski(1, 1).unwrap();
        assert_eq!(res.verdicts[0].lhs, r(-1, 6));
        assert!(res.passed);
        assert!(verify_rutkowski(4, 2).unwrap().passed);
        assert!(verify_rutkowski(0, 0).is_err());
    }

    #[test]
    fn morley_examples() {
        let res = verify_morley(5).unwrap();
        assert_eq!(res.verdicts[0].lhs, r(9, 64));
        assert!(res.passed);
        let res = verify_morley(7).unwrap();
        assert_eq!(res.verdicts[0].rhs, r(-20, 1));
        assert!(res.passed);
        assert!(verify_morley(13).unwrap().passed);
    }

    #[test]
    fn lem7_examples() {
        let res = verify_lem7(5).unwrap();
        assert_eq!(res.verdicts[1].lhs, r(5, 4));
        assert!(res.passed);
        assert!(verify_lem7(7).unwrap().passed);
        assert!(verify_lem7(31).unwrap().passed);
    }

    #[test]
    fn split_symmetry_examples() {
        for p in [5u64, 7] {
            let res = verify_split_symmetry(p).unwrap();
            assert!(res.passed);
            assert_eq!(res.verdicts[0].lhs, Rat::zero());
        }
    }

    #[test]
    fn split_summand_antisymmetric() {
        for n in [2u64, 3] {
            let c = split_coefficients(n);
            let h = harmonic_prefix(n);
            for j in 0..=n {
                for k in 0..=n {
                    assert_eq!(split_summand(j, k, &c, &h), -split_summand(k, j, &c, &h));
                }
            }
        }
    }

    #[test]
    fn dispatch() {
        assert!(run_claim("thm-main2", &params(&[("p", 5)])).unwrap().passed);
        assert!(
            run_claim("lem-rutkowski", &params(&[("n", 1), ("j", 1)]))
                .unwrap()
                .passed
        );
        assert_eq!(
            run_claim("bogus", &Params::new()),
            Err(Error::UnknownClaim("bogus".into()))
        );
        assert!(matches!(
            run_claim("thm-main2", &Params::new()),
            Err(Error::MalformedParams { .. })
        ));
        assert!(matches!(
            run_claim("thm-main2", &params(&[("p", 5), ("q", 1)])),
            Err(Error::MalformedParams { .. })
        ));
        assert!(matches!(
            run_claim("thm-main2", &params(&[("p", -5)])),
            Err(Error::MalformedParams { .. })
        ));
        assert!(matches!(
            run_claim("thm-main1", &params(&[("p", 3)])),
            Err(Error::Precondition(_))
        ));
        assert_eq!(
            run_claim("thm-main2", &params(&[("p", 9)])),
            Err(Error::NotPrime(9))
        );
    }

    #[test]
    fn every_registry_entry_dispatches() {
        let ctx = ClaimContext::new();
        let sample = |name: &str| match name {
            "p" => 5,
            "r" => 1,
            "order" => 4,
            "m" | "n" => 2,
            _ => 1,
        };
        for info in REGISTRY {
            let ps: Params = info
                .params
                .iter()
                .map(|k| (k.to_string(), sample(k)))
                .collect();
            let res = ctx.run_claim(info.id, &ps).unwrap();
            assert!(res.passed, "{}", info.id);
            assert_eq!(res.claim_id, info.id);
        }
    }
}
