//! Library results checked against values computed here by unrelated means:
//! machine-integer modular arithmetic, direct summation, hand-expanded sums.

use apery_congruence::apery::{
    f_alternate, f_poly, g_poly, h_poly, i_f_binom, j2_by_recurrence, rising_sum_sides,
};
use apery_congruence::claims::{binom_product_verdict, ClaimContext};
use apery_congruence::exact::{binom_int, is_prime};
use apery_congruence::Rat;

/// `a / b mod m` for `gcd(b, m) = 1`, by search.
fn mod_div(a: i128, b: i128, m: i128) -> i128 {
    let b = b.rem_euclid(m);
    let inv = (1..m).find(|i| b * i % m == 1).expect("invertible");
    (a.rem_euclid(m) * inv) % m
}

fn residue(r: &Rat, m: i128) -> i128 {
    let num: i128 = r.numer().try_into().expect("fits");
    let den: i128 = r.denom().try_into().expect("fits");
    mod_div(num, den, m)
}

#[test]
fn spot_value_p3_residue() {
    // J2(0..2) = 1, 3/4, 41/64 from the defining sum by hand.
    let j = j2_by_recurrence(2).values;
    assert_eq!(j, vec![Rat::one(), Rat::new(3, 4), Rat::new(41, 64)]);
    let s: Rat = j.iter().map(|x| x.pow(2)).sum();
    assert_eq!(residue(&s, 27), 26);
}

#[test]
fn truncated_square_sum_residues() {
    // (-1)^((p-1)/2) mod p^3 against residues of sum_{k<p} J2(k)^2 for p = 5, 7
    for p in [5i128, 7] {
        let m = p * p * p;
        let j = j2_by_recurrence(p as u64 - 1).values;
        let total = j
            .iter()
            .fold(0i128, |acc, x| (acc + residue(&x.pow(2), m)) % m);
        let want = if (p - 1) / 2 % 2 == 0 { 1 } else { m - 1 };
        assert_eq!(total, want, "p={p}");
    }
}

#[test]
fn rising_sum_sweep() {
    for m in 1..=20 {
        for j in 0..=10 {
            for k in 0..=10 {
                let (lhs, rhs) = rising_sum_sides(m, j, k);
                assert_eq!(lhs, rhs, "m={m} j={j} k={k}");
                if m <= j {
                    assert!(lhs.is_zero(), "degenerate m={m} j={j} k={k}");
                }
            }
        }
    }
}

#[test]
fn f_alternate_form() {
    for n in 0..=20 {
        let f = f_poly(n);
        for x in -10..=10 {
            assert_eq!(f.eval_int(x), f_alternate(n, x), "n={n} x={x}");
        }
    }
}

#[test]
fn f_at_small_points() {
    // f_n(0) = 1 and f_n(1) = 1 + n(n+1) from two terms of the sum.
    for n in 0..=15u64 {
        let f = f_poly(n);
        assert_eq!(f.eval_int(0), Rat::one());
        assert_eq!(f.eval_int(1), Rat::from(1 + n * (n + 1)));
        assert_eq!(f.eval_int(-1), Rat::sign_power(n));
    }
}

#[test]
fn binomial_product_identity() {
    for x in -6..=12 {
        for j in 0..=6 {
            for k in 0..=6 {
                assert!(binom_product_verdict(x, j, k).holds, "x={x} j={j} k={k}");
            }
        }
    }
}

#[test]
fn polynomial_degrees() {
    for p in [5u64, 7, 11, 13] {
        let n = (p - 1) / 2;
        assert_eq!(f_poly(n).degree(), Some(n as usize));
        assert_eq!(g_poly(p).unwrap().degree(), Some(p as usize - 1));
        let h = h_poly(p).unwrap();
        assert_eq!(h.degree(), Some(p as usize - 1));
        assert!(h.coeff(0).is_zero());
    }
}

#[test]
fn i_f_binom_direct_sum() {
    // I(f_m binom(x, j)) over x < p, summed with machine integers
    for p in [3u64, 5, 7] {
        for m in 1..=4u64 {
            for j in 0..=4u64 {
                let (direct, closed) = i_f_binom(m, j, p).unwrap();
                assert_eq!(direct, closed);
                let mut acc: i128 = 0;
                for x in 0..p {
                    let mut fx: i128 = 0;
                    for i in 0..=m {
                        let t = binom_int(m, i) * binom_int(m + i, i) * binom_int(x, i);
                        fx += i128::try_from(t).unwrap();
                    }
                    acc += fx * i128::try_from(binom_int(x, j)).unwrap();
                }
                assert_eq!(direct, Rat::from_int(acc), "p={p} m={m} j={j}");
            }
        }
    }
}

#[test]
fn main2_across_primes_below_60() {
    let ctx = ClaimContext::new();
    for p in (3..60).filter(|&p| is_prime(p)) {
        assert!(ctx.verify_main2(p).unwrap().passed, "p={p}");
        assert!(ctx.verify_h_membership(p).unwrap().passed, "p={p}");
    }
}
