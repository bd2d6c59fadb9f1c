//! The power-of-2 game: exact and bounded solving, constructive strategies,
//! lower-bound certificates and closed-form upper bounds.
//!
//! Challenger names a positive integer `x`, Powerator answers with `u` such
//! that `u <= x < 2u`. Challenger wins once three answers (not necessarily
//! distinct) satisfy `u_i * u_j < u_h < 2 * u_i * u_j`. Powerator survives
//! forever by answering powers of two; for any other starting value `u`,
//! `c(u)` is the number of rounds Challenger needs.

pub mod numtheory;
pub(crate) mod ser;

pub use numtheory::{Natural, PowerDecomposition};
pub mod axioms;
pub mod bounds;
pub mod certify;
pub mod exactsolve;
pub mod expr;
pub mod game;
pub mod strategies;
pub mod suites;
