//! Empirical look at how far the "all j" congruence for I(f_n(x) binom(x, j))
//! holds beyond p^2.
//!
//! For j < n no j+k+1 (k <= n) is divisible by p; for j >= n some is. The
//! table reports, per prime, how many j in each group also satisfy the
//! congruence mod p^3. Nothing here is asserted.
//!
//! ```bash
//! cargo run --release --example lemma_probe -- 31
//! ```

use apery_congruence::claims::ClaimContext;
use apery_congruence::exact::primes_in;

fn main() -> apery_congruence::Result<()> {
    let hi: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(23);
    let ctx = ClaimContext::new();
    println!(
        "{:>4} {:>16} {:>16}",
        "p", "p never divides", "p divides some"
    );
    for p in primes_in(5, hi) {
        let n = (p - 1) / 2;
        let (mut coprime, mut coprime_ok, mut divisible, mut divisible_ok) = (0, 0, 0, 0);
        for j in 0..p {
            let res = ctx.verify_lem5(p, j)?;
            let all_j = res
                .verdicts
                .iter()
                .find(|v| v.label.starts_with("all j"))
                .expect("all j verdict");
            let mod_p3 = all_j.diff_valuation.is_some_and(|v| v.at_least(3));
            if j < n {
                coprime += 1;
                coprime_ok += mod_p3 as u32;
            } else {
                divisible += 1;
                divisible_ok += mod_p3 as u32;
            }
        }
        println!(
            "{p:>4} {:>16} {:>16}",
            format!("{coprime_ok}/{coprime}"),
            format!("{divisible_ok}/{divisible}")
        );
    }
    Ok(())
}
