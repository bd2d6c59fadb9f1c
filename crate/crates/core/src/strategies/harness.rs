//! Checks a Challenger strategy's round guarantee against Powerator
//! opponents.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::game::{response_interval, Outcome, Position};
use crate::numtheory::Natural;

use super::powerator::{BadSetAvoiding, RandomPowerator};
use super::{play_match, ChallengerStrategy, Move, StrategyError};

/// Keep reports readable when a strategy is badly broken.
const MAX_VIOLATIONS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Adversary {
    /// Every legal response at every node.
    Exhaustive,
    /// Responses outside the bad set whenever possible.
    BadSetAvoiding,
    /// Uniform random responses; trial `t` uses seed `seed + t`.
    Random { seed: u64, trials: u64 },
}

impl Adversary {
    pub fn mode(&self) -> String {
        match self {
            Adversary::Exhaustive => "exhaustive".into(),
            Adversary::BadSetAvoiding => "bad_set_avoiding".into(),
            Adversary::Random { seed, trials } => format!("random(seed={seed}, trials={trials})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(serialize_with = "crate::ser::naturals")]
    pub responses: Vec<Natural>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundBoundReport {
    pub strategy: String,
    pub start: Position,
    pub bound: u32,
    pub mode: String,
    pub branches_checked: u64,
    pub max_rounds_seen: u32,
    pub violations: Vec<Violation>,
}

impl RoundBoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(&mut self, other: Partial) {
        self.branches_checked += other.branches;
        self.max_rounds_seen = self.max_rounds_seen.max(other.max_rounds);
        for v in other.violations {
            if self.violations.len() < MAX_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("exhaustive check exceeds the node budget of {0}; use a non-exhaustive adversary")]
    NodeBudgetExceeded(u64),
}

#[derive(Default)]
struct Partial {
    branches: u64,
    max_rounds: u32,
    violations: Vec<Violation>,
}

impl Partial {
    fn violation(&mut self, responses: &[Natural], reason: String) {
        self.branches += 1;
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Violation {
                responses: responses.to_vec(),
                reason,
            });
        }
    }
}

struct Exhaustive<'a> {
    c: &'a dyn ChallengerStrategy,
    start: &'a Position,
    bound: u32,
    budget: u64,
    nodes: AtomicU64,
}

enum Step {
    Leaf(Partial),
    Branch(Vec<Natural>),
}

impl Exhaustive<'_> {
    fn charge(&self, n: u64) -> Result<(), HarnessError> {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.budget {
            Err(HarnessError::NodeBudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    /// Either settles the node or lists the responses to expand.
    fn step(&self, pos: &Position, responses: &[Natural]) -> Result<Step, HarnessError> {
        let mut part = Partial::default();
        let rounds = responses.len() as u32;
        if pos.is_lost() {
            part.branches = 1;
            part.max_rounds = rounds;
            return Ok(Step::Leaf(part));
        }
        if rounds >= self.bound {
            part.max_rounds = rounds;
            part.violation(responses, format!("not won after {rounds} rounds at {pos}"));
            return Ok(Step::Leaf(part));
        }
        let x = match self.c.next_move(self.start, responses) {
            Ok(Move::Challenge(x)) => x,
            Ok(Move::Victory) => {
                part.violation(responses, format!("declared victory at unlost {pos}"));
                return Ok(Step::Leaf(part));
            }
            Err(e) => {
                part.violation(responses, e.to_string());
                return Ok(Step::Leaf(part));
            }
        };
        let (lo, hi) = match response_interval(&x) {
            Ok(iv) => iv,
            Err(e) => {
                part.violation(responses, e.to_string());
                return Ok(Step::Leaf(part));
            }
        };
        let width = &hi - &lo + 1u32;
        let fan = u64::try_from(&width).unwrap_or(u64::MAX);
        self.charge(fan)?;
        let mut out = Vec::with_capacity(fan as usize);
        let mut u = lo;
        while u <= hi {
            out.push(u.clone());
            u += 1u32;
        }
        Ok(Step::Branch(out))
    }

    fn dfs(
        &self,
        pos: &Position,
        responses: &mut Vec<Natural>,
        acc: &mut Partial,
    ) -> Result<(), HarnessError> {
        match self.step(pos, responses)? {
            Step::Leaf(p) => {
                acc.branches += p.branches;
                acc.max_rounds = acc.max_rounds.max(p.max_rounds);
                acc.violations.extend(p.violations);
            }
            Step::Branch(children) => {
                for u in children {
                    let child = pos.apply(&u).expect("positive response");
                    responses.push(u);
                    self.dfs(&child, responses, acc)?;
                    responses.pop();
                    if acc.violations.len() >= MAX_VIOLATIONS {
                        break;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Plays `c` from `start` against `adversary` and reports every line that
/// is not won within `bound` rounds. Exhaustive mode fails once more than
/// `node_budget` positions would be expanded.
pub fn verify_round_bound(
    c: &dyn ChallengerStrategy,
    start: &Position,
    bound: u32,
    adversary: &Adversary,
    node_budget: u64,
) -> Result<RoundBoundReport, HarnessError> {
    let mut report = RoundBoundReport {
        strategy: c.name(),
        start: start.clone(),
        bound,
        mode: adversary.mode(),
        branches_checked: 0,
        max_rounds_seen: 0,
        violations: Vec::new(),
    };
    match adversary {
        Adversary::Exhaustive => {
            let ex = Exhaustive {
                c,
                start,
                bound,
                budget: node_budget,
                nodes: AtomicU64::new(0),
            };
            match ex.step(start, &[])? {
                Step::Leaf(p) => report.merge(p),
                Step::Branch(children) => {
                    // one subtree per first response, merged in response order
                    let parts: Vec<Result<Partial, HarnessError>> = children
                        .into_par_iter()
                        .map(|u| {
                            let mut acc = Partial::default();
                            let child = start.apply(&u).expect("positive response");
                            let mut responses = vec![u];
                            ex.dfs(&child, &mut responses, &mut acc)?;
                            Ok(acc)
                        })
                        .collect();
                    for p in parts {
                        report.merge(p?);
                    }
                }
            }
        }
        Adversary::BadSetAvoiding => {
            report.merge(one_game(c, &BadSetAvoiding, start, bound));
        }
        Adversary::Random { seed, trials } => {
            let parts: Vec<Partial> = (0..*trials)
                .into_par_iter()
                .map(|t| one_game(c, &RandomPowerator::new(seed.wrapping_add(t)), start, bound))
                .collect();
            for p in parts {
                report.merge(p);
            }
        }
    }
    Ok(report)
}

fn one_game(
    c: &dyn ChallengerStrategy,
    p: &dyn super::PoweratorStrategy,
    start: &Position,
    bound: u32,
) -> Partial {
    let mut part = Partial::default();
    match play_match(c, p, bound as usize, start) {
        Ok(t) => {
            let responses: Vec<Natural> = t.rounds.iter().map(|r| r.response.clone()).collect();
            part.max_rounds = t.rounds_used as u32;
            if t.outcome == Outcome::ChallengerWins {
                part.branches = 1;
            } else {
                part.violation(&responses, format!("not won within {bound} rounds"));
            }
        }
        Err(e) => part.violation(&[], e.to_string()),
    }
    part
}

/// Convenience for callers that only want pass/fail.
pub fn holds(
    c: &dyn ChallengerStrategy,
    start: &Position,
    bound: u32,
    adversary: &Adversary,
    node_budget: u64,
) -> Result<bool, HarnessError> {
    Ok(verify_round_bound(c, start, bound, adversary, node_budget)?.passed())
}

impl From<HarnessError> for StrategyError {
    fn from(e: HarnessError) -> Self {
        StrategyError::Precondition(e.to_string())
    }
}
