//! Executable strategies for both players and harnesses that check their
//! round guarantees.
//!
//! A Challenger strategy is a pure function of the starting position and the
//! responses received so far. Strategies are written as straight-line code
//! against a [`Script`]: each [`Script::ask`] either returns the recorded
//! response to that challenge or, once the history is exhausted, stops the
//! program and reports the challenge as the next move. Forking a game tree
//! is therefore just calling the strategy again with a longer history.

pub mod challenger;
pub mod harness;
pub mod powerator;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::game::{check_response, GameError, Outcome, Position, Round, Transcript};
use crate::numtheory::Natural;

pub use challenger::{
    best_challenger, challenger_binary_search, challenger_boost, challenger_c2, challenger_c2_case,
    challenger_halving, challenger_root_probe, BinarySearch, Boost, C2Case, Continuation, Halving, RootProbe,
    SolverChallenger, C2,
};
pub use harness::{verify_round_bound, Adversary, RoundBoundReport};
pub use powerator::{
    powerator_pow2, survivor_2304, BadSetAvoiding, Pow2Powerator, RandomPowerator, Survivor2304,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("strategy finished its plan without a win at {0}")]
    Exhausted(String),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// What a running program wants next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flow {
    /// The next challenge.
    Next(Natural),
    /// The plan is complete; the position should be lost.
    Done,
    /// The plan cannot proceed.
    Fail(StrategyError),
}

/// Replays a history of responses through a strategy program.
pub struct Script<'a> {
    responses: &'a [Natural],
    used: usize,
    pos: Position,
}

impl<'a> Script<'a> {
    pub fn new(start: &Position, responses: &'a [Natural]) -> Self {
        Script {
            responses,
            used: 0,
            pos: start.clone(),
        }
    }

    /// Plays `x`. Returns the recorded response, or stops the program with
    /// `x` as the next move.
    pub fn ask(&mut self, x: Natural) -> Result<Natural, Flow> {
        if x.is_zero() {
            return Err(Flow::Fail(StrategyError::Game(GameError::ZeroChallenge)));
        }
        match self.responses.get(self.used) {
            Some(r) => {
                self.used += 1;
                self.pos = self.pos.apply(r).map_err(|e| Flow::Fail(e.into()))?;
                Ok(r.clone())
            }
            None => Err(Flow::Next(x)),
        }
    }

    pub fn position(&self) -> &Position {
        &self.pos
    }

    pub fn rounds_played(&self) -> usize {
        self.used
    }

    /// Ends the plan; succeeds only if the position is lost.
    pub fn finish(&self) -> Result<(), Flow> {
        if self.pos.is_lost() {
            Err(Flow::Done)
        } else {
            Err(Flow::Fail(StrategyError::Exhausted(self.pos.to_string())))
        }
    }

    pub fn fail<T>(&self, msg: impl Into<String>) -> Result<T, Flow> {
        Err(Flow::Fail(StrategyError::Precondition(msg.into())))
    }
}

/// Next action of a Challenger strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Challenge(Natural),
    Victory,
}

pub trait ChallengerStrategy: Send + Sync {
    fn name(&self) -> String;

    /// Rounds within which the strategy promises a win, when it promises one.
    fn claimed_bound(&self) -> Option<u32>;

    /// The strategy program. Returns `Err(Flow::Next)` via [`Script::ask`]
    /// when it needs a move, `Err(Flow::Done)` via [`Script::finish`].
    fn program(&self, sc: &mut Script<'_>) -> Result<(), Flow>;

    /// Next move after `responses` from `start`.
    fn next_move(&self, start: &Position, responses: &[Natural]) -> Result<Move, StrategyError> {
        let mut sc = Script::new(start, responses);
        if responses.is_empty() && start.is_lost() {
            return Ok(Move::Victory);
        }
        let flow = match self.program(&mut sc) {
            Ok(()) => sc.finish().unwrap_err(),
            Err(f) => f,
        };
        if sc.rounds_played() < responses.len() {
            return Err(StrategyError::Exhausted(format!(
                "program stopped after {} of {} responses",
                sc.rounds_played(),
                responses.len()
            )));
        }
        match flow {
            _ if sc.position().is_lost() => Ok(Move::Victory),
            Flow::Next(x) => Ok(Move::Challenge(x)),
            Flow::Done => Ok(Move::Victory),
            Flow::Fail(e) => Err(e),
        }
    }
}

pub trait PoweratorStrategy: Send + Sync {
    fn name(&self) -> String;
    fn respond(&self, pos: &Position, challenge: &Natural) -> Natural;
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchError {
    #[error("challenger error: {0}")]
    Challenger(StrategyError),
    #[error("powerator played illegally: {0}")]
    Powerator(GameError),
}

/// Alternates moves until the position is lost or `max_rounds` rounds were
/// played. Every move is checked for legality.
pub fn play_match(
    c: &dyn ChallengerStrategy,
    p: &dyn PoweratorStrategy,
    max_rounds: usize,
    start: &Position,
) -> Result<Transcript, MatchError> {
    let mut pos = start.clone();
    let mut rounds: Vec<Round> = Vec::new();
    let mut responses: Vec<Natural> = Vec::new();
    while !pos.is_lost() && rounds.len() < max_rounds {
        let x = match c.next_move(start, &responses).map_err(MatchError::Challenger)? {
            Move::Victory => break,
            Move::Challenge(x) => x,
        };
        if x.is_zero() {
            return Err(MatchError::Challenger(GameError::ZeroChallenge.into()));
        }
        let u = p.respond(&pos, &x);
        check_response(&x, &u).map_err(MatchError::Powerator)?;
        pos = pos.apply(&u).map_err(MatchError::Powerator)?;
        rounds.push(Round {
            round: rounds.len(),
            challenge: x,
            response: u.clone(),
        });
        responses.push(u);
    }
    let outcome = if pos.is_lost() {
        Outcome::ChallengerWins
    } else {
        Outcome::PoweratorSurvives
    };
    let rounds_used = rounds.len();
    Ok(Transcript {
        start: start.clone(),
        rounds,
        outcome,
        rounds_used,
    })
}

/// Short description used in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyInfo {
    pub name: String,
    pub claimed_bound: Option<u32>,
}

pub fn info(c: &dyn ChallengerStrategy) -> StrategyInfo {
    StrategyInfo {
        name: c.name(),
        claimed_bound: c.claimed_bound(),
    }
}
