//! Size caps shared by the enumerators and the spectrum engines.

use crate::error::{Error, Result};

/// Environment variable that raises every cap to the given value.
pub const CAP_OVERRIDE_ENV: &str = "ACSPEC_CAP_OVERRIDE";

/// Hard upper bound on any cap, override included: `20!` is the largest
/// factorial that fits a `u64` term index.
pub const ABSOLUTE_MAX_N: usize = 20;

/// Caps on `n` for enumeration and counting.
///
/// The defaults keep every call at desk scale. An override only ever raises
/// a cap, never lowers it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub cap_override: Option<usize>,
}

impl Limits {
    /// Default cap for the bracketing / full-linear-term enumerators.
    pub const ENUMERATION_CAP: usize = 12;
    /// Materializing a fine partition is refused beyond this many terms.
    pub const FINE_TERM_CAP: u64 = 1_000_000;

    pub fn with_override(n: usize) -> Self {
        Limits { cap_override: Some(n) }
    }

    /// Reads [`CAP_OVERRIDE_ENV`]; an unset or empty variable means no override.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_OVERRIDE_ENV) {
            Ok(v) if !v.trim().is_empty() => {
                let n: usize = v.trim().parse().map_err(|_| {
                    Error::validation(format!("{CAP_OVERRIDE_ENV} must be a positive integer, got {v:?}"))
                })?;
                Ok(Limits::with_override(n))
            }
            _ => Ok(Limits::default()),
        }
    }

    /// Applies the override (if any) to a default cap.
    pub fn raise(&self, default_cap: usize) -> usize {
        match self.cap_override {
            Some(o) => default_cap.max(o).min(ABSOLUTE_MAX_N),
            None => default_cap,
        }
    }

    pub fn enumeration_cap(&self) -> usize {
        self.raise(Self::ENUMERATION_CAP)
    }

    pub(crate) fn check(&self, what: &'static str, n: usize, default_cap: usize) -> Result<()> {
        let cap = self.raise(default_cap);
        if n > cap {
            Err(Error::Size { what, n, cap })
        } else {
            Ok(())
        }
    }
}
