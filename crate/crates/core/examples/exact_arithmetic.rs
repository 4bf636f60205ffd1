//! Rationals, p-adic valuations and congruences.
//!
//! ```bash
//! cargo run --example exact_arithmetic
//! ```

use apery_congruence::exact::{binom_rat, harmonic, pochhammer};
use apery_congruence::{congruent, vp, Rat};

fn main() -> apery_congruence::Result<()> {
    let a: Rat = "27/4".parse()?;
    let b = Rat::new(-9, 8);
    println!(
        "a = {a}, b = {b}, a*b = {}, a/b = {}",
        &a * &b,
        a.try_div(&b)?
    );
    println!(
        "v_3(a) = {}, v_2(a) = {}, v_5(0) = {}",
        vp(&a, 3)?,
        vp(&a, 2)?,
        vp(&Rat::zero(), 5)?
    );

    let half = Rat::new(-1, 2);
    for k in 0..5 {
        println!(
            "binom(-1/2, {k}) = {:>8}   (1/2)_{k} = {:>6}",
            binom_rat(&half, k),
            pochhammer(&Rat::new(1, 2), k)
        );
    }

    // Wolstenholme: H_{p-1} == 0 mod p^2 for p >= 5
    for p in [5u64, 7, 11, 13] {
        let v = congruent(&harmonic(p - 1), &Rat::zero(), p, 2)?;
        println!(
            "H_{} == 0 mod {p}^2: {} (valuation {})",
            p - 1,
            v.holds,
            v.diff_valuation.unwrap()
        );
    }

    // the verdict type is what every claim reports
    let v = congruent(&Rat::new(1, 2), &Rat::new(5, 2), 2, 1)?;
    println!("{}", serde_json::to_string(&v).expect("serializable"));
    Ok(())
}
