//! Size bounds for the combinatorially explosive computations.
//!
//! Defaults keep everything at desk scale. Setting `INVINT_MAX_DIM` raises the
//! matrix-size bound used by the Cayley operator, the Gram matrix
//! construction and the dense tensor limit (each scaled from that one value).
//! Raised bounds are not guarded against runaway memory or time.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DIM: usize = 4;
pub const DEFAULT_MAX_DET_POWER: usize = 4;
pub const DEFAULT_MAX_TENSOR_ENTRIES: usize = 1 << 21;
pub const DEFAULT_MAX_ORACLE_SPACE: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_dim: usize,
    pub max_det_power: usize,
    pub max_tensor_entries: usize,
    pub max_oracle_space: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: DEFAULT_MAX_DIM,
            max_det_power: DEFAULT_MAX_DET_POWER,
            max_tensor_entries: DEFAULT_MAX_TENSOR_ENTRIES,
            max_oracle_space: DEFAULT_MAX_ORACLE_SPACE,
        }
    }
}

impl Limits {
    /// Limits with `INVINT_MAX_DIM` applied if it is set to a larger value.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(d) = std::env::var("INVINT_MAX_DIM")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
        {
            if d > limits.max_dim {
                let scale = d / limits.max_dim + 1;
                limits.max_dim = d;
                limits.max_det_power = limits.max_det_power.max(d);
                limits.max_tensor_entries = limits.max_tensor_entries.saturating_mul(scale.pow(4));
                limits.max_oracle_space = limits.max_oracle_space.saturating_mul(scale.pow(4));
            }
        }
        limits
    }

    pub fn check(value: usize, max: usize, what: &'static str) -> Result<()> {
        if value > max {
            Err(Error::BoundExceeded { what, value, max })
        } else {
            Ok(())
        }
    }
}

/// Process-wide limits, read from the environment once.
pub fn limits() -> &'static Limits {
    static LIMITS: OnceLock<Limits> = OnceLock::new();
    LIMITS.get_or_init(Limits::from_env)
}
