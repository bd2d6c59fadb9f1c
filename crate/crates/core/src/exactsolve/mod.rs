//! Deciding and bounding `c(u)`: the complete one-round analysis, the
//! bounded solver, and assembly of the best known interval for `c(u)`.

pub mod badset;
pub mod solver;
pub mod verdict;

use thiserror::Error;

pub use badset::{bad_set, wins_in_one, BadSet};
pub use solver::{bounded_value, replay_win, ReplayReport, SolveVerdict, Solver, SolverConfig};
pub use verdict::{complexity_interval, ComplexityInterval, LowerMethod, Upper, UpperMethod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("position is already lost")]
    AlreadyLost,
    #[error("node budget of {0} exhausted before the search finished")]
    NodeBudgetExhausted(u64),
    #[error("invalid solver configuration: {0}")]
    BadConfig(String),
}
