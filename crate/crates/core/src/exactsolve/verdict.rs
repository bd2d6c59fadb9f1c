//! The best known interval for `c(u)`.

use serde::Serialize;

use crate::bounds::{combine_upper, BoundEntry, BoundReport};
use crate::certify::{best_single_certificate, SymbolicPow, MAX_K};
use crate::game::Position;
use crate::numtheory::{is_oddless, Natural};
use crate::strategies::{challenger_c2, verify_round_bound, Adversary, ChallengerStrategy};

use super::{bounded_value, wins_in_one, SolveError, SolveVerdict, SolverConfig};

pub use crate::bounds::Upper;

/// Exhaustive verification of a two-round strategy gives up past this.
pub const STRATEGY_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerMethod {
    Trivial,
    ExactDepth1,
    Certificate,
    /// Powerator survives forever on powers of two.
    PowerOfTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperMethod {
    Solver,
    Strategy,
    Thm56,
    Eq28,
    Eq29,
    Eq30,
    PowerOfTwo,
}

impl UpperMethod {
    fn from_name(name: &str) -> Self {
        match name {
            "solver" => UpperMethod::Solver,
            "strategy" => UpperMethod::Strategy,
            "thm56" => UpperMethod::Thm56,
            "eq28" => UpperMethod::Eq28,
            "eq29" => UpperMethod::Eq29,
            "eq30" => UpperMethod::Eq30,
            other => unreachable!("unknown bound {other}"),
        }
    }
}

impl LowerMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            LowerMethod::Trivial => "trivial",
            LowerMethod::ExactDepth1 => "exact_depth1",
            LowerMethod::Certificate => "certificate",
            LowerMethod::PowerOfTwo => "power_of_two",
        }
    }
}

impl UpperMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            UpperMethod::Solver => "solver",
            UpperMethod::Strategy => "strategy",
            UpperMethod::Thm56 => "thm56",
            UpperMethod::Eq28 => "eq28",
            UpperMethod::Eq29 => "eq29",
            UpperMethod::Eq30 => "eq30",
            UpperMethod::PowerOfTwo => "power_of_two",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityInterval {
    #[serde(serialize_with = "crate::ser::natural")]
    pub u: Natural,
    pub lower: Upper,
    pub lower_method: LowerMethod,
    pub upper: Upper,
    pub upper_method: UpperMethod,
    pub exact: bool,
    #[serde(serialize_with = "crate::ser::natural_opt")]
    pub witness_opening: Option<Natural>,
    pub bounds: BoundReport,
}

/// `c(u)` bracketed by the one-round analysis, certificates, the solver
/// searching up to `solver_rounds`, the two-round strategy and the
/// closed forms.
pub fn complexity_interval(
    u: &Natural,
    cfg: &SolverConfig,
    solver_rounds: u32,
) -> Result<ComplexityInterval, SolveError> {
    let pos = Position::new([u.clone()]).map_err(|e| SolveError::BadConfig(e.to_string()))?;
    if is_oddless(u) {
        return Ok(ComplexityInterval {
            u: u.clone(),
            lower: Upper::Infinite,
            lower_method: LowerMethod::PowerOfTwo,
            upper: Upper::Infinite,
            upper_method: UpperMethod::PowerOfTwo,
            exact: true,
            witness_opening: None,
            bounds: combine_upper(u, &[]),
        });
    }

    let (mut lower, mut lower_method) = (1, LowerMethod::Trivial);
    if wins_in_one(&pos)?.is_none() {
        (lower, lower_method) = (2, LowerMethod::ExactDepth1);
    }
    let s = SymbolicPow::from_natural(u).expect("not a power of two");
    let certified = best_single_certificate(&s, MAX_K).expect("valid base") as u64;
    if certified > lower {
        (lower, lower_method) = (certified, LowerMethod::Certificate);
    }

    let mut proven = Vec::new();
    let mut openings = Vec::new();
    if let SolveVerdict::ChallengerWins { rounds, opening } = bounded_value(&pos, solver_rounds, cfg)? {
        let w = opening
            .as_ref()
            .map(|x| format!("opening={x}"))
            .unwrap_or_default();
        proven.push(BoundEntry::hit("solver", rounds as u64, w));
        openings.push(opening);
    }
    if let Ok(c2) = challenger_c2(u) {
        let verified = verify_round_bound(&c2, &pos, 2, &Adversary::Exhaustive, STRATEGY_NODE_BUDGET)
            .is_ok_and(|r| r.passed());
        if verified {
            let opening = match c2.next_move(&pos, &[]) {
                Ok(crate::strategies::Move::Challenge(x)) => Some(x),
                _ => None,
            };
            proven.push(BoundEntry::hit("strategy", 2, c2.name()));
            openings.push(opening);
        }
    }

    let bounds = combine_upper(u, &proven);
    let name = bounds.best_name.clone().expect("closed forms always apply");
    let upper_method = UpperMethod::from_name(&name);
    let witness_opening = match upper_method {
        UpperMethod::Solver => openings[0].clone(),
        UpperMethod::Strategy => openings[proven.len() - 1].clone(),
        _ => None,
    };
    let upper = bounds.best;
    Ok(ComplexityInterval {
        u: u.clone(),
        lower: Upper::Finite(lower),
        lower_method,
        upper,
        upper_method,
        exact: upper == Upper::Finite(lower),
        witness_opening,
        bounds,
    })
}
