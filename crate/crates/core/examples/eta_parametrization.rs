//! q-expansions of eta quotients and the identity
//! eta(2z)^22 / (eta(z)^12 eta(4z)^8) = sum J2(n) t^n.
//!
//! ```bash
//! cargo run --example eta_parametrization -- 20
//! ```

use apery_congruence::eta::{eta_quotient_series, parametrization_sides, t_series, EtaQuotient};

fn main() -> apery_congruence::Result<()> {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);

    let delta = eta_quotient_series(&EtaQuotient::new(&[(1, 24)]), 8)?;
    println!("Delta  = {delta}");
    println!("t      = {}", t_series(order.min(8))?);

    let (lhs, rhs) = parametrization_sides(order)?;
    for (i, (a, b)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
        println!(
            "q^{i:<3} {a:>14} {b:>14}{}",
            if a == b { "" } else { "  MISMATCH" }
        );
    }
    println!("agree through q^{order}: {}", lhs == rhs);
    Ok(())
}
