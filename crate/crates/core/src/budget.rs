//! Resource limits and cancellation shared by every long-running kernel.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard limits applied to Gröbner and resolution computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum total degree of any polynomial entering a Gröbner computation.
    pub max_degree: u32,
    /// Maximum number of elements in a Gröbner basis under construction.
    pub max_basis: usize,
    /// Maximum number of S-pair reductions in one Gröbner computation.
    pub max_spairs: u64,
    /// Maximum number of generators of a Frobenius pushforward presentation.
    pub max_pushforward_gens: usize,
    /// Maximum number of minors enumerated for Fitting ideals and ranks.
    pub max_minors: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 200,
            max_basis: 20_000,
            max_spairs: 1_000_000,
            max_pushforward_gens: 128,
            max_minors: 20_000,
        }
    }
}

impl Limits {
    /// Reads `FROBCHECK_MAX_DEGREE`, `FROBCHECK_MAX_BASIS`, `FROBCHECK_MAX_SPAIRS`,
    /// `FROBCHECK_MAX_PUSHFORWARD` and `FROBCHECK_MAX_MINORS` on top of the defaults.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        fn read<T: std::str::FromStr>(name: &str) -> Result<Option<T>> {
            match std::env::var(name) {
                Ok(v) => v.trim().parse::<T>().map(Some).map_err(|_| {
                    Error::argument(format!("{name} must be a non-negative integer, got {v:?}"))
                }),
                Err(_) => Ok(None),
            }
        }
        if let Some(v) = read("FROBCHECK_MAX_DEGREE")? {
            limits.max_degree = v;
        }
        if let Some(v) = read("FROBCHECK_MAX_BASIS")? {
            limits.max_basis = v;
        }
        if let Some(v) = read("FROBCHECK_MAX_SPAIRS")? {
            limits.max_spairs = v;
        }
        if let Some(v) = read("FROBCHECK_MAX_PUSHFORWARD")? {
            limits.max_pushforward_gens = v;
        }
        if let Some(v) = read("FROBCHECK_MAX_MINORS")? {
            limits.max_minors = v;
        }
        Ok(limits)
    }
}

/// Budget token: limits, a cancellation flag and usage counters.
///
/// Cloning shares the flag and the counters, so a caller can keep one clone
/// and cancel computations running on another thread.
#[derive(Debug, Clone, Default)]
pub struct Budget {
    limits: Limits,
    cancelled: Arc<AtomicBool>,
    spairs: Arc<AtomicU64>,
    groebner_runs: Arc<AtomicU64>,
}

/// Snapshot of the counters of a [`Budget`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct Usage {
    pub spairs: u64,
    pub groebner_runs: u64,
}

impl Budget {
    pub fn new(limits: Limits) -> Self {
        Budget {
            limits,
            ..Default::default()
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn check_cancelled(&self) -> Result<()> {
        if self.cancelled.load(Ordering::Relaxed) {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }

    pub(crate) fn record_run(&self, spairs: u64) {
        self.spairs.fetch_add(spairs, Ordering::Relaxed);
        self.groebner_runs.fetch_add(1, Ordering::Relaxed);
    }

    pub fn usage(&self) -> Usage {
        Usage {
            spairs: self.spairs.load(Ordering::Relaxed),
            groebner_runs: self.groebner_runs.load(Ordering::Relaxed),
        }
    }
}
