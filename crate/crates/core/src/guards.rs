//! Resource guards.
//!
//! Every limit here is checked before work starts, so a refused request
//! costs nothing. `STERN_LAB_MAX_N` overrides the cap on direct-summation
//! `L_n` (the only guard that trades memory for range).

use crate::error::{Error, Result};

/// Longest Stern triangle row; row `r` has `2^(r+1) - 1` entries.
pub const MAX_TRIANGLE_ROW: u32 = 30;
/// Largest `n` for `L_n` by direct summation of `2^n` b-polynomials.
pub const MAX_LPOLY_DEF_N: u32 = 22;
/// `STERN_LAB_MAX_N` may not push the summation cap past this.
pub const HARD_MAX_LPOLY_DEF_N: u32 = 26;
/// Largest row for the generating-function comparison.
pub const MAX_GF_ROW: u32 = 14;
/// Largest poset handed to linear-extension enumeration.
pub const MAX_POSET_SIZE: usize = 40;
/// Most linear extensions enumerated before refusing.
pub const MAX_EXTENSIONS: u64 = 1_000_000;
/// Largest index accepted by the recurrence-based CLI verbs.
pub const MAX_INDEX: u64 = 5_000;
/// Largest Hankel matrix size accepted by the CLI.
pub const MAX_HANKEL_SIZE: u64 = 12;

pub const MAX_N_ENV: &str = "STERN_LAB_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub max_lpoly_def_n: u32,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_lpoly_def_n: MAX_LPOLY_DEF_N,
        }
    }
}

impl Guards {
    /// Defaults, with `STERN_LAB_MAX_N` applied when set.
    pub fn from_env() -> Result<Guards> {
        match std::env::var(MAX_N_ENV) {
            Ok(v) => Self::with_max_n(&v),
            Err(_) => Ok(Guards::default()),
        }
    }

    pub fn with_max_n(value: &str) -> Result<Guards> {
        let n: u32 = value
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_N_ENV} must be a positive integer, got {value:?}")))?;
        if n == 0 {
            return Err(Error::OutOfRange {
                what: MAX_N_ENV,
                value: 0,
                min: 1,
            });
        }
        check_max("STERN_LAB_MAX_N", n as u64, "HARD_MAX_LPOLY_DEF_N", HARD_MAX_LPOLY_DEF_N as u64)?;
        Ok(Guards { max_lpoly_def_n: n })
    }
}

pub fn check_max(what: &'static str, value: u64, guard: &'static str, limit: u64) -> Result<()> {
    if value > limit {
        return Err(Error::Guard {
            what,
            value,
            guard,
            limit,
        });
    }
    Ok(())
}

pub fn check_min(what: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        return Err(Error::OutOfRange { what, value, min });
    }
    Ok(())
}
