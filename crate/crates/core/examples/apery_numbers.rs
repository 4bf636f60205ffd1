//! The numbers J2(n) by their three routes, and the Kimoto-Wakayama
//! congruence J2(m p^r) == J2(m p^(r-1)) mod p^r.
//!
//! ```bash
//! cargo run --example apery_numbers -- 12
//! ```

use apery_congruence::apery::{f_poly, j2_by_3f2, j2_by_recurrence, j2_by_sum};
use apery_congruence::claims::verify_kw_theorem62;

fn main() -> apery_congruence::Result<()> {
    let upto: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let seq = j2_by_recurrence(upto);
    for (n, value) in seq.values.iter().enumerate() {
        let n = n as u64;
        assert_eq!(value, &j2_by_sum(n));
        assert_eq!(value, &j2_by_3f2(n));
        println!("J2({n:>2}) = {value}");
    }

    for n in 0..4 {
        println!("f_{n}(x) = {}", f_poly(n));
    }

    for (p, m, r) in [(3, 1, 2), (5, 2, 1), (7, 1, 2)] {
        let res = verify_kw_theorem62(p, m, r)?;
        let v = &res.verdicts[0];
        println!(
            "{}: holds={} v_{p}(diff)={}",
            v.label,
            v.holds,
            v.diff_valuation.unwrap()
        );
    }
    Ok(())
}
