use crate::error::{Error, Result};

/// Guards on the size of exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set accepted by `build_system` and the exact searches.
    pub max_ground: usize,
    /// Largest inner universe for `powerset-union` systems.
    pub max_powerset_inner: usize,
    /// Subset-enumeration budget per check.
    pub budget: u64,
    /// Blocks up to this size get their ideal materialized explicitly.
    pub explicit_ideal: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ground: 20,
            max_powerset_inner: 4,
            budget: 1 << 16,
            explicit_ideal: 12,
        }
    }
}

impl Limits {
    pub fn with_budget(self, budget: u64) -> Self {
        Limits { budget, ..self }
    }

    /// Fails unless enumerating all subsets of a `bits`-element set fits.
    pub fn check_subsets(&self, bits: usize) -> Result<()> {
        self.check_count(if bits >= 64 { u64::MAX } else { 1u64 << bits })
    }

    pub fn check_count(&self, needed: u64) -> Result<()> {
        if needed > self.budget {
            Err(Error::LimitExceeded {
                needed,
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_ground(&self, size: usize) -> Result<()> {
        if size > self.max_ground {
            Err(Error::GroundTooLarge {
                size,
                max: self.max_ground,
            })
        } else {
            Ok(())
        }
    }
}
