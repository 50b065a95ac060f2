//! Exact solver for the unbounded knapsack problem with bounded
//! coefficients.
//!
//! When every profit and weight lies in `[1, R]`, the optimum can be found
//! with time and table sizes polynomial in `R` alone — the knapsack
//! capacity only enters through a handful of arbitrary-precision
//! operations, so capacities with thousands of digits are routine.
//!
//! The solver splits the types at the maximum profit density: lower-density
//! types are handled by a dynamic program over a window of `R^3`, while the
//! maximum-density group reduces to reaching the largest representable
//! multiple of its weight gcd, answered by a small table plus a repeating
//! block. Reference oracles (exhaustive enumeration and a full-capacity
//! DP) and a seeded instance generator support verification at desk scale.

pub mod bounds;
pub mod dp;
pub mod error;
pub mod frobenius;
pub mod generate;
pub mod model;
pub mod oracle;
pub mod preprocess;
pub mod solver;

pub use error::{Error, Result};
pub use model::{evaluate, parse_capacity, Instance, ItemType, Solution};
pub use solver::{solve, solve_with_report, SolveOutcome, SolveStats};
