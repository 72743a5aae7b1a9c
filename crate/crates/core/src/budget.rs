//! Resource limits that convert runaway computations into typed errors.

use crate::error::{Error, Result};

/// Caps on the Gröbner engine and the searches built on top of it.
///
/// The defaults are sized for desk-scale inputs (a handful of variables,
/// degrees in the tens). Every long-running loop in the crate checks one of
/// these caps and fails with [`Error::BudgetExceeded`] instead of spinning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs processed in a single Buchberger run.
    pub max_pairs: usize,
    /// Maximum basis size in a single Buchberger run.
    pub max_basis: usize,
    /// Maximum reduction steps applied to a single polynomial.
    pub max_reductions: usize,
    /// Cap on vanishing-order searches when no Lemma-style bound is known.
    pub max_order: u32,
    /// Largest k tried when extending a trace table to find stabilization.
    pub max_table: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 200_000,
            max_basis: 4_000,
            max_reductions: 2_000_000,
            max_order: 48,
            max_table: 24,
        }
    }
}

impl Budget {
    pub fn check(&self, stage: &'static str, used: usize, cap: usize) -> Result<()> {
        if used > cap {
            Err(Error::BudgetExceeded {
                stage,
                detail: format!("{used} > {cap}"),
            })
        } else {
            Ok(())
        }
    }

    /// Environment override used by the CLI (`FLATLIMIT_BUDGET=pairs,basis`).
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Ok(spec) = std::env::var("FLATLIMIT_BUDGET") {
            let parts: Vec<_> = spec.split(',').collect();
            if let Some(p) = parts.first().and_then(|s| s.trim().parse().ok()) {
                b.max_pairs = p;
            }
            if let Some(p) = parts.get(1).and_then(|s| s.trim().parse().ok()) {
                b.max_basis = p;
            }
        }
        b
    }
}
