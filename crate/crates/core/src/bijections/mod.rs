//! Maps between pattern classes, Dyck words and binary words.
//!
//! | map | domain | codomain |
//! |-----|--------|----------|
//! | [`phi231`] | `S_n(231)` | `D_n` |
//! | [`psi321`] | `S_n(321)` | `D_n` |
//! | [`psi_hat`] | `S_n(321)` | `I_{n+1}` |
//! | [`zeta`] | `S_n(312)` | `S_n(321)` |
//! | [`iota`] | `D_n` | `D_n` (involution) |
//! | [`enc_132_213`], [`enc_213_231`], [`enc_123_132`] | two-pattern classes | words of length `n - 1` |
//!
//! Every forward map checks its avoidance precondition before doing any work.

mod encodings;
mod iota;
mod phi;
mod psi;
mod zeta;

pub use encodings::{
    dec_123_132, dec_132_213, dec_213_231, enc_123_132, enc_132_213, enc_213_231,
    predicted_stat_123_132, predicted_stat_132_213, predicted_stat_213_231, Bits,
};
pub use iota::iota;
pub use phi::{phi231, phi231_inv};
pub use psi::{psi321, psi321_inv, psi_hat};
pub use zeta::{zeta, zeta_inv};

use alloc::string::ToString;

use crate::error::{Error, Result};
use crate::perm::{PatternSet, Perm};

fn require_avoids(map: &'static str, p: &Perm, basis: &str) -> Result<()> {
    let basis: PatternSet = basis.parse().expect("static basis");
    match p.first_contained(&basis) {
        Some(pattern) => Err(Error::Precondition {
            map,
            pattern: pattern.to_string(),
        }),
        None => Ok(()),
    }
}
