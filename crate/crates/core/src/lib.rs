//! Exact solver and complexity toolkit for the Airplane Refueling Problem.
//!
//! `n` airplanes take off together and share fuel in flight; each one drops
//! out after topping up the others, and the last flies as far as it can.
//! Airplane `A_i` carries `v_i` tanks and burns `c_i` tanks per kilometre.
//! A drop-out order `π` (position 1 leaves first) takes the last airplane
//!
//! ```text
//! S_π = Σ_i v_π(i) / (c_π(i) + … + c_π(n))
//! ```
//!
//! kilometres. Every quantity is an exact rational [`Scalar`], so every
//! comparison that decides feasibility or optimality is exact.
//!
//! ```
//! use arp_core::{sequential_search, Instance, Scalar, SearchOptions};
//!
//! let fleet = Instance::from_pairs(&[("4", "2"), ("7", "3"), ("19", "5")])?;
//! let sol = sequential_search(&fleet, &SearchOptions::default());
//! assert_eq!(sol.best().total, Scalar::from_ratio(379, 70));
//! assert_eq!(sol.q_count.unwrap(), 2u32.into());
//! # Ok::<(), arp_core::ArpError>(())
//! ```
//!
//! The guide in `book/` walks through the model, the solvers and the
//! complexity estimators.

pub mod classify;
pub mod complexity;
mod error;
pub mod feasibility;
pub mod generator;
mod kernel;
pub mod model;
pub mod objective;
pub mod scalar;
pub mod solvers;

pub use classify::classify;
pub use complexity::{
    estimate_m, heuristic_m, q_m_bound, q_m_exact, q_star, BigCount, ComplexityReport, Regime,
};
pub use error::{ArpError, Result};
pub use feasibility::is_sequential_feasible;
pub use generator::{random_cro, random_general, random_subset, table4_family, GeneratorParams};
pub use model::{Airplane, AirplaneId, AssumptionParams, ClassKind, Instance, InstanceClass, Schedule};
pub use objective::{crossing_point, delta, phi, total_distance};
pub use scalar::Scalar;
pub use solvers::{
    brute_force, enumerate_sfs_oracle, greedy_sequential, sequential_search, Method, SearchMode,
    SearchOptions, Solution,
};

// The guide's code blocks run as doctests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/model.md")]
    mod model {}
    #[doc = include_str!("../../../book/src/feasibility.md")]
    mod feasibility {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
    #[doc = include_str!("../../../book/src/complexity.md")]
    mod complexity {}
    #[doc = include_str!("../../../book/src/generator.md")]
    mod generator {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
