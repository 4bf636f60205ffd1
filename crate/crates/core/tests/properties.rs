use apery_congruence::claims::{params, ClaimResult};
use apery_congruence::eta::{eta_quotient_series, EtaQuotient};
use apery_congruence::exact::{binom_rat, factorial, pochhammer};
use apery_congruence::harness::{SuiteConfig, VerificationReport};
use apery_congruence::hypergeom::{terminating_pfq, truncated_pfq, HypParams};
use apery_congruence::{congruent, vp, PSeries, PadicVal, Rat};
use proptest::prelude::*;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn rat() -> impl Strategy<Value = Rat> {
    (-100_000i64..100_000, 1i64..100_000).prop_map(|(n, d)| Rat::new(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// Positive rationals never hit a denominator pole.
fn positive_rat() -> impl Strategy<Value = Rat> {
    (1i64..50, 1i64..20).prop_map(|(n, d)| Rat::new(n, d))
}

fn series(precision: usize) -> impl Strategy<Value = PSeries> {
    prop::collection::vec(-20i64..20, precision + 1)
        .prop_map(move |c| PSeries::from_ints(&c, precision))
}

proptest! {
    #[test]
    fn valuation_is_multiplicative(a in nonzero_rat(), b in nonzero_rat(), i in 0usize..6) {
        let p = PRIMES[i];
        let lhs = vp(&(&a * &b), p).unwrap();
        prop_assert_eq!(lhs, vp(&a, p).unwrap() + vp(&b, p).unwrap());
    }

    #[test]
    fn valuation_is_ultrametric(a in rat(), b in rat(), i in 0usize..6) {
        let p = PRIMES[i];
        let sum = vp(&(&a + &b), p).unwrap();
        prop_assert!(sum >= vp(&a, p).unwrap().min(vp(&b, p).unwrap()));
        prop_assert_eq!(vp(&Rat::zero(), p).unwrap(), PadicVal::Infinite);
    }

    #[test]
    fn congruence_is_an_equivalence(
        a in rat(),
        u in -50i64..50,
        w in -50i64..50,
        i in 1usize..6,
        m in 1u32..5,
    ) {
        let p = PRIMES[i];
        let pm = Rat::from(p).pow(m);
        let b = &a + &pm * Rat::from(u);
        let c = &b + &pm * Rat::from(w);
        prop_assert!(congruent(&a, &a, p, m).unwrap().holds);
        prop_assert!(congruent(&a, &b, p, m).unwrap().holds);
        prop_assert!(congruent(&b, &a, p, m).unwrap().holds);
        prop_assert!(congruent(&a, &c, p, m).unwrap().holds);
        // a shift by a p-adic unit times p^(m-1) is detected
        let off = &a + Rat::from(p).pow(m - 1);
        prop_assert!(!congruent(&a, &off, p, m).unwrap().holds);
    }

    #[test]
    fn pochhammer_splits(a in rat(), j in 0u64..12, k in 0u64..12) {
        let whole = pochhammer(&a, j + k);
        let split = pochhammer(&a, j) * pochhammer(&(&a + Rat::from(j)), k);
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn half_binomial_matches_pochhammer(k in 0u64..=50) {
        let lhs = Rat::sign_power(k) * binom_rat(&Rat::new(-1, 2), k);
        let rhs = pochhammer(&Rat::new(1, 2), k) / Rat::from_int(factorial(k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hypergeometric_is_symmetric_in_parameters(
        n in 0i64..15,
        a in positive_rat(),
        b in positive_rat(),
        d in positive_rat(),
        e in positive_rat(),
        z in rat(),
    ) {
        let num = vec![Rat::from(-n), a.clone(), b.clone()];
        let base = terminating_pfq(&HypParams::new(num, vec![d.clone(), e.clone()], z.clone()).unwrap()).unwrap();
        let permuted = HypParams::new(vec![b, Rat::from(-n), a], vec![e, d], z).unwrap();
        prop_assert_eq!(&base, &terminating_pfq(&permuted).unwrap());
        prop_assert_eq!(permuted.termination_index(), Some(n as u64));
        prop_assert_eq!(&base, &truncated_pfq(&permuted, n as u64).unwrap());
        prop_assert_eq!(base, truncated_pfq(&permuted, n as u64 + 7).unwrap());
    }

    #[test]
    fn series_ring_laws(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), PSeries::new(Vec::new(), 8));
    }

    #[test]
    fn series_inverse(tail in prop::collection::vec(-20i64..20, 8), lead in 1i64..5) {
        let mut coeffs = vec![lead];
        coeffs.extend(tail);
        let s = PSeries::from_ints(&coeffs, 8);
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv), PSeries::one(8));
        prop_assert_eq!(s.pow(-3).unwrap(), inv.pow(3).unwrap());
    }

    #[test]
    fn eta_quotients_multiply(i in 0usize..6, j in 0usize..6, order in 1usize..16) {
        let quotients = [
            EtaQuotient::new(&[(1, 24)]),
            EtaQuotient::new(&[(2, 12)]),
            EtaQuotient::new(&[(4, 6)]),
            EtaQuotient::new(&[(1, 8), (2, 8)]),
            EtaQuotient::apery_generating(),
            EtaQuotient::hauptmodul(),
        ];
        let (x, y) = (&quotients[i], &quotients[j]);
        let mut joined = x.factors.clone();
        joined.extend(y.factors.iter().copied());
        let together = eta_quotient_series(&EtaQuotient::new(&joined), order).unwrap();
        let apart = eta_quotient_series(x, order).unwrap().mul(&eta_quotient_series(y, order).unwrap());
        prop_assert_eq!(together, apart);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn report_json_round_trips(
        rows in prop::collection::vec((rat(), rat(), 0usize..6, 1u32..5, any::<bool>()), 0..12),
    ) {
        let results: Vec<ClaimResult> = rows
            .into_iter()
            .enumerate()
            .map(|(idx, (a, b, i, m, exact))| {
                let v = if exact {
                    apery_congruence::CongruenceVerdict::exact("x", a, b)
                } else {
                    congruent(&a, &b, PRIMES[i], m).unwrap()
                };
                ClaimResult {
                    claim_id: "three-route".into(),
                    params: params(&[("n", idx as i64)]),
                    passed: v.holds,
                    verdicts: vec![v],
                }
            })
            .collect();
        let report = VerificationReport::assemble(SuiteConfig::default().echo(), results);
        let json = report.to_json();
        let back = VerificationReport::from_json(&json).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(back.to_json(), json);
    }
}
