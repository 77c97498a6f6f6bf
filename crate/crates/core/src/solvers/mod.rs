//! Optimal-schedule computation.
//!
//! * [`brute_force`] and [`enumerate_sfs_oracle`] scan all `n!` orders with
//!   plain rational arithmetic. They are the reference the other solvers
//!   are tested against.
//! * [`greedy_sequential`] builds one sequential feasible order from the
//!   farthest position down.
//! * [`sequential_search`] enumerates exactly the sequential feasible
//!   orders by backtracking, returning the best one and their count.

mod brute;
mod greedy;
mod search;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::model::{AirplaneId, Schedule};

pub use brute::{brute_force, brute_force_counted, enumerate_sfs_oracle};
pub use greedy::greedy_sequential;
pub(crate) use greedy::greedy_fill;
pub use search::sequential_search;

/// A drop-out order, first drop to farthest flyer.
pub type Permutation = Vec<AirplaneId>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Greedy,
    SequentialSearch,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute",
            Method::Greedy => "greedy",
            Method::SequentialSearch => "sequential",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SearchMode {
    OptimizeOnly,
    CountOnly,
    #[default]
    OptimizeAndCount,
    /// Optimize, count, and collect every sequential feasible order.
    EnumerateAll,
}

impl SearchMode {
    fn optimizes(self) -> bool {
        !matches!(self, SearchMode::CountOnly)
    }

    fn counts(self) -> bool {
        !matches!(self, SearchMode::OptimizeOnly)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Largest `n` the factorial oracles accept.
    pub max_n_guard: usize,
    /// Threads for the first search level; `1` stays on the caller's thread.
    pub worker_hint: usize,
}

impl SearchOptions {
    pub const DEFAULT_GUARD: usize = 10;

    pub fn with_mode(mode: SearchMode) -> Self {
        SearchOptions {
            mode,
            ..SearchOptions::default()
        }
    }
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::default(),
            max_n_guard: Self::DEFAULT_GUARD,
            worker_hint: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Best order found; `None` only for a count-only search.
    pub schedule: Option<Schedule>,
    pub method: Method,
    /// Number of sequential feasible orders, when counted.
    pub q_count: Option<BigUint>,
    /// Admitted search-tree nodes (permutations scored for brute force).
    pub visited_nodes: u64,
    /// Every sequential feasible order, for [`SearchMode::EnumerateAll`].
    pub feasible_set: Option<BTreeSet<Permutation>>,
}

impl Solution {
    /// The schedule; panics for a count-only search.
    pub fn best(&self) -> &Schedule {
        self.schedule
            .as_ref()
            .expect("count-only searches carry no schedule")
    }
}
