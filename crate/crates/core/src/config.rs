//! Size caps for user-facing entry points.
//!
//! Defaults can be overridden with the environment variables
//! `WEYLCOH_MAX_RANK`, `WEYLCOH_MAX_N` and `WEYLCOH_MAX_TABLE`.

use crate::error::{Error, Result};
use crate::weyl::CartanType;

pub const ENV_MAX_RANK: &str = "WEYLCOH_MAX_RANK";
pub const ENV_MAX_N: &str = "WEYLCOH_MAX_N";
pub const ENV_MAX_TABLE: &str = "WEYLCOH_MAX_TABLE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_rank: usize,
    pub max_n: usize,
    /// Largest `m` for which an `S_m` character table is built.
    pub max_table: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_rank: 12,
            max_n: 16,
            max_table: 10,
        }
    }
}

impl Limits {
    /// Defaults, overridden by any parseable environment variable.
    pub fn from_env() -> Self {
        Self::from_lookup(|key| std::env::var(key).ok())
    }

    pub fn from_lookup<F>(lookup: F) -> Self
    where
        F: Fn(&str) -> Option<String>,
    {
        let d = Self::default();
        let read = |key: &str, fallback: usize| {
            lookup(key)
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(fallback)
        };
        Self {
            max_rank: read(ENV_MAX_RANK, d.max_rank),
            max_n: read(ENV_MAX_N, d.max_n),
            max_table: read(ENV_MAX_TABLE, d.max_table),
        }
    }

    pub fn check_rank(&self, cartan: CartanType) -> Result<()> {
        cap("rank", cartan.rank(), self.max_rank)
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        cap("n", n, self.max_n)
    }

    pub fn check_table(&self, m: usize) -> Result<()> {
        cap("m", m, self.max_table)
    }
}

fn cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_overrides() {
        let l = Limits::from_lookup(|k| match k {
            ENV_MAX_N => Some("40".into()),
            ENV_MAX_RANK => Some("junk".into()),
            _ => None,
        });
        assert_eq!(l.max_n, 40);
        assert_eq!(l.max_rank, 12);
        assert!(l.check_n(40).is_ok());
        assert!(l.check_n(41).is_err());
        let big: CartanType = "A13".parse().unwrap();
        assert!(matches!(
            l.check_rank(big),
            Err(Error::CapExceeded { what: "rank", value: 13, cap: 12 })
        ));
    }
}
