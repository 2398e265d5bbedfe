//! Work metering for the potentially explosive enumerations.

use core::fmt;

/// Budget for enumeration work, counted in abstract units.
///
/// One unit is one elementary enumeration step: a candidate hypergraph
/// examined during exhaustive generation, or one root-placement table
/// processed by the moment evaluator. Long-running entry points take a
/// `&mut CostGuard` and fail with [`GuardExceeded`] instead of running
/// away; the same guard can be threaded through several calls to give
/// them a shared budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostGuard {
    limit: u64,
    used: u64,
}

impl CostGuard {
    /// Default budget, enough for every desk-scale computation in the
    /// test suite with two orders of magnitude to spare.
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    /// Guard with an explicit unit budget.
    pub fn new(limit: u64) -> Self {
        CostGuard { limit, used: 0 }
    }

    /// Guard that never trips.
    pub fn unlimited() -> Self {
        CostGuard::new(u64::MAX)
    }

    /// Units consumed so far.
    pub fn used(&self) -> u64 {
        self.used
    }

    /// Configured budget.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Consume `units`, failing once the total would pass the budget.
    pub fn charge(&mut self, units: u64) -> Result<(), GuardExceeded> {
        let attempted = self.used.saturating_add(units);
        if attempted > self.limit {
            self.used = self.limit;
            return Err(GuardExceeded {
                limit: self.limit,
                attempted,
            });
        }
        self.used = attempted;
        Ok(())
    }
}

impl Default for CostGuard {
    fn default() -> Self {
        CostGuard::new(Self::DEFAULT_LIMIT)
    }
}

/// Error raised when a [`CostGuard`] budget is exhausted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GuardExceeded {
    /// The budget that was in force.
    pub limit: u64,
    /// Units that would have been consumed by the rejected step.
    pub attempted: u64,
}

impl fmt::Display for GuardExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cost guard exceeded: {} units requested against a limit of {}",
            self.attempted, self.limit
        )
    }
}

impl core::error::Error for GuardExceeded {}
