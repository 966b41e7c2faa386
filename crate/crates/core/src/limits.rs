//! Size guards for the exhaustive kernels.
//!
//! Each kernel has a default bound on `n`. The environment variable
//! `KERNEL_MAX_N` replaces every default; nothing checks that the larger
//! computation will fit in memory or finish, so raising it is at the
//! caller's risk.

use crate::error::{Error, Result};

/// Hard ceiling for statically cached per-`n` data.
pub const HARD_MAX_N: usize = 10;

pub const PERM_MAX_N: usize = 8;
pub const TRACE_MAX_N: usize = 7;
pub const KL_MAX_N: usize = 6;
pub const CHAIN_MAX_N: usize = 5;

fn env_override() -> Option<usize> {
    std::env::var("KERNEL_MAX_N").ok()?.trim().parse().ok()
}

pub fn check(what: &'static str, n: usize, default_max: usize) -> Result<()> {
    let max = env_override().unwrap_or(default_max).min(HARD_MAX_N);
    if n > max {
        return Err(Error::GuardExceeded { what, n, max });
    }
    Ok(())
}
