//! Terminating hypergeometric sums and the two classical identities used for
//! the lemma suite, on random rational parameters.
//!
//! ```bash
//! cargo run --example hypergeometric -- 11
//! ```

use apery_congruence::hypergeom::{
    pfaff_saalschutz_sides, sample_pfaff_saalschutz, sample_transform_357, terminating_pfq,
    transform_357_sides, HypParams,
};
use apery_congruence::Rat;

fn main() -> apery_congruence::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);

    // 3F2(1/2, 1/2, -4; 1, 1; 1) = J2(4)
    let half = Rat::new(1, 2);
    let params = HypParams::f32(
        half.clone(),
        half,
        Rat::from(-4),
        Rat::one(),
        Rat::one(),
        Rat::one(),
    );
    println!("3F2(1/2,1/2,-4;1,1;1) = {}", terminating_pfq(&params)?);

    let (n, a, b, c) = sample_pfaff_saalschutz(seed);
    let (lhs, rhs) = pfaff_saalschutz_sides(n, &a, &b, &c)?;
    println!("Pfaff-Saalschutz n={n} a={a} b={b} c={c}\n  {lhs}\n  {rhs}");
    assert_eq!(lhs, rhs);

    let (m, a, b, d, e) = sample_transform_357(seed);
    let (lhs, rhs) = transform_357_sides(m, &a, &b, &d, &e)?;
    println!("3F2 transformation m={m} a={a} b={b} d={d} e={e}\n  {lhs}\n  {rhs}");
    assert_eq!(lhs, rhs);

    let bad = HypParams::f32(
        Rat::one(),
        Rat::one(),
        Rat::from(-3),
        Rat::from(-1),
        Rat::one(),
        Rat::one(),
    );
    println!("denominator pole: {:?}", terminating_pfq(&bad));
    Ok(())
}
