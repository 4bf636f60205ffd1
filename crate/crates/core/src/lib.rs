//! Exact verification of supercongruences for the Apéry-like numbers
//! `J2(n) = Σ_k (-1)^k binom(-1/2, k)^2 binom(n, k)`.
//!
//! All arithmetic is over exact rationals; a congruence `a ≡ b (mod p^m)`
//! between rationals means `v_p(a - b) >= m`.

pub mod apery;
pub mod claims;
pub mod cli;
pub mod error;
pub mod eta;
pub mod exact;
pub mod harness;
pub mod hypergeom;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
pub use exact::{congruent, vp, CongruenceVerdict, PadicVal, Rat};
pub use poly::Poly;
pub use series::PSeries;
