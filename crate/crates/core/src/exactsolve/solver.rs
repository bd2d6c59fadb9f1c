//! Bounded-depth minimax over Challenger moves.
//!
//! Depth one is decided completely by [`wins_in_one_sorted`]. Deeper levels
//! try a finite candidate list (structural moves first, then a sweep of
//! small challenges) against every legal Powerator response. A found win is
//! always genuine; failing to find one proves nothing beyond depth one.

use std::num::NonZeroUsize;

use lru::LruCache;
use serde::Serialize;

use crate::game::{is_lost_sorted, Position, Word};
use crate::numtheory::Natural;

use super::badset::{bad_runs, Runs};
use super::SolveError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolverConfig {
    /// Largest challenge swept at depth two and beyond. `None` means
    /// `2 * max(start)^2`.
    #[serde(serialize_with = "crate::ser::natural_opt")]
    pub challenge_bound: Option<Natural>,
    /// Sweep only even challenges (an odd `2m+1` never beats `2m`).
    pub even_only: bool,
    /// Try moves derived from the position before the sweep.
    pub structural_moves: bool,
    /// Maximum number of memoized positions (LRU eviction beyond that).
    pub memo_limit: usize,
    /// Maximum number of positions expanded before giving up with an error.
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            challenge_bound: None,
            even_only: true,
            structural_moves: true,
            memo_limit: 1 << 20,
            node_budget: 1 << 32,
        }
    }
}

impl SolverConfig {
    pub fn with_bound(bound: u64) -> Self {
        SolverConfig {
            challenge_bound: Some(Natural::from(bound)),
            ..Default::default()
        }
    }

    /// The sweep limit used for a search starting at `pos`.
    pub fn effective_bound(&self, pos: &Position) -> Natural {
        match &self.challenge_bound {
            Some(b) => b.clone(),
            None => {
                let m = pos.max().cloned().unwrap_or_else(|| Natural::from(1u32));
                let b: Natural = &m * &m * 2u32;
                b.max(Natural::from(2u32))
            }
        }
    }
}

/// What is known about a memoized position.
#[derive(Debug, Clone, Copy, Default)]
struct Known {
    /// Challenger wins within this many rounds.
    win_within: Option<u32>,
    /// No candidate line wins within this many rounds.
    no_win_within: Option<u32>,
}

pub struct Solver<W: Word> {
    cfg: SolverConfig,
    bound: W,
    memo: LruCache<Vec<W>, Known>,
    nodes: u64,
}

impl<W: Word> Solver<W> {
    pub fn new(cfg: SolverConfig, bound: W) -> Self {
        let cap = NonZeroUsize::new(cfg.memo_limit.max(1)).unwrap();
        Solver {
            cfg,
            bound,
            memo: LruCache::new(cap),
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Whether Challenger can force a loss within `depth` rounds from the
    /// sorted position `s`, using the candidate moves.
    pub fn wins(&mut self, s: &[W], depth: u32) -> Result<bool, SolveError> {
        if is_lost_sorted(s) {
            return Ok(true);
        }
        Ok(self.winning_move(s, depth)?.is_some())
    }

    /// A challenge that wins within `depth` rounds from the unlost `s`.
    pub fn winning_move(&mut self, s: &[W], depth: u32) -> Result<Option<W>, SolveError> {
        if depth == 0 {
            return Ok(None);
        }
        let bad = bad_runs(s);
        if let Some(x) = bad.winning_challenge() {
            self.record(s, Some(1), None);
            return Ok(Some(x));
        }
        if depth == 1 {
            return Ok(None);
        }
        if let Some(k) = self.memo.get(s).copied() {
            if k.no_win_within.is_some_and(|d| d >= depth) {
                return Ok(None);
            }
        }
        self.nodes += 1;
        if self.nodes > self.cfg.node_budget {
            return Err(SolveError::NodeBudgetExhausted(self.cfg.node_budget));
        }
        let structural: Vec<W> = self.structural_candidates(s);
        for x in &structural {
            if self.challenge_wins(s, &bad, x, depth)? {
                self.record(s, Some(depth), None);
                return Ok(Some(x.clone()));
            }
        }
        let mut tried = structural.clone();
        tried.sort();
        let step = if self.cfg.even_only { 2 } else { 1 };
        let mut x = W::from_u64(if self.cfg.even_only { 2 } else { 1 });
        while x <= self.bound {
            if tried.binary_search(&x).is_err() && self.challenge_wins(s, &bad, &x, depth)? {
                self.record(s, Some(depth), None);
                return Ok(Some(x));
            }
            x = x.add(&W::from_u64(step));
        }
        self.record(s, None, Some(depth));
        Ok(None)
    }

    fn record(&mut self, s: &[W], win: Option<u32>, no_win: Option<u32>) {
        let entry = self.memo.get_or_insert_mut(s.to_vec(), Known::default);
        if let Some(w) = win {
            entry.win_within = Some(entry.win_within.map_or(w, |old| old.min(w)));
        }
        if let Some(n) = no_win {
            entry.no_win_within = Some(entry.no_win_within.map_or(n, |old| old.max(n)));
        }
    }

    /// Every legal response to `x` either loses at once or leaves a position
    /// won within `depth - 1` rounds.
    fn challenge_wins(&mut self, s: &[W], bad: &Runs<W>, x: &W, depth: u32) -> Result<bool, SolveError> {
        let mut child: Vec<W> = Vec::with_capacity(s.len() + 1);
        for u in ordered_responses(s, bad, x) {
            child.clear();
            child.extend_from_slice(s);
            if let Err(at) = child.binary_search(&u) {
                child.insert(at, u);
            }
            if let Some(k) = self.memo.get(child.as_slice()).copied() {
                if k.win_within.is_some_and(|d| d < depth) {
                    continue;
                }
            }
            if !self.wins(&child, depth - 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Moves suggested by the structure of `s`, deduplicated, in a fixed
    /// order.
    pub fn structural_candidates(&self, s: &[W]) -> Vec<W> {
        let mut out: Vec<W> = Vec::new();
        let push = |x: W, out: &mut Vec<W>| {
            if x.is_nil() {
                return;
            }
            let x = if self.cfg.even_only && x > W::unit() && !is_even(&x) {
                x.dec()
            } else {
                x
            };
            if !out.contains(&x) {
                out.push(x);
            }
        };
        push(W::unit(), &mut out);
        if !self.cfg.structural_moves {
            return out;
        }
        for c in [2u64, 4, 6, 8] {
            push(W::from_u64(c), &mut out);
        }
        for e in s {
            // Powers of two next to each element, and small multiples.
            let mut t = e.clone();
            for _ in 0..6 {
                t = t.shl1();
                push(t.clone(), &mut out);
            }
            let mut t = e.clone();
            while is_even(&t) && t > W::unit() {
                t = t.shr1();
                push(t.clone(), &mut out);
            }
            push(e.clone(), &mut out);
            // Forcing the response `e * 2^k` or `e / 2^k`.
            let mut t = e.clone();
            for _ in 0..4 {
                push(t.shl1().dec(), &mut out);
                t = t.shl1();
            }
            let two = W::from_u64(2);
            // 2^(nu_2(e) + 1)
            let mut v = W::unit();
            let mut rest = e.clone();
            while is_even(&rest) {
                rest = rest.shr1();
                v = v.shl1();
            }
            push(v.mul(&two), &mut out);
            for d in 2..=5u32 {
                push(nth_root(e, d), &mut out);
            }
        }
        for (a, ea) in s.iter().enumerate() {
            for eb in &s[a..] {
                // Force the product of two responses.
                push(ea.mul(eb).shl1().dec(), &mut out);
            }
            for eb in &s[a + 1..] {
                if *ea > W::unit() {
                    // ceil(eb / ea) - 1
                    let q = eb.div(ea);
                    let ceil = if q.mul(ea) == *eb { q } else { q.inc() };
                    push(ceil.dec(), &mut out);
                }
            }
        }
        if let Some(cap) = W::cap() {
            out.retain(|x| *x <= cap);
        }
        out
    }
}

fn is_even<W: Word>(x: &W) -> bool {
    x.shr1().shl1() == *x
}

fn nth_root<W: Word>(x: &W, d: u32) -> W {
    // Binary search; small values only ever reach this.
    let mut lo = W::unit();
    let mut hi = x.clone();
    while lo < hi {
        let mid = lo.add(&hi).inc().shr1();
        let mut p = W::unit();
        let mut over = false;
        for _ in 0..d {
            p = p.mul(&mid);
            if p > *x {
                over = true;
                break;
            }
        }
        if over {
            hi = mid.dec();
        } else {
            lo = mid;
        }
    }
    lo
}

/// Legal responses to `x` that do not lose on the spot: first the power of
/// two, then `e * 2^k` shapes of existing elements, then the rest ascending.
fn ordered_responses<'a, W: Word>(s: &'a [W], bad: &'a Runs<W>, x: &W) -> impl Iterator<Item = W> + 'a {
    let lo = x.shr1().inc();
    let hi = x.clone();
    let mut first: Vec<W> = vec![x.floor_pow2()];
    for e in s {
        let mut t = e.clone();
        while t < lo {
            t = t.shl1();
        }
        if t <= hi && !first.contains(&t) {
            first.push(t);
        }
        let mut t = e.clone();
        while t > hi && is_even(&t) {
            t = t.shr1();
        }
        if t >= lo && t <= hi && !first.contains(&t) {
            first.push(t);
        }
    }
    first.retain(|u| !bad.contains(u));
    let skip = first.clone();
    let rest = AscendingOutside::new(bad, lo, hi).filter(move |u| !skip.contains(u));
    first.into_iter().chain(rest)
}

/// Integers in `[lo, hi]` outside every run, ascending.
struct AscendingOutside<'a, W: Word> {
    runs: &'a [(W, W)],
    next: W,
    hi: W,
    run: usize,
}

impl<'a, W: Word> AscendingOutside<'a, W> {
    fn new(bad: &'a Runs<W>, lo: W, hi: W) -> Self {
        let run = bad.runs.partition_point(|(_, b)| *b < lo);
        AscendingOutside {
            runs: &bad.runs,
            next: lo,
            hi,
            run,
        }
    }
}

impl<W: Word> Iterator for AscendingOutside<'_, W> {
    type Item = W;
    fn next(&mut self) -> Option<W> {
        loop {
            if self.next > self.hi {
                return None;
            }
            if let Some((a, b)) = self.runs.get(self.run) {
                if *a <= self.next {
                    self.next = b.inc();
                    self.run += 1;
                    continue;
                }
            }
            let out = self.next.clone();
            self.next = self.next.inc();
            return Some(out);
        }
    }
}

/// Result of the bounded search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SolveVerdict {
    /// Challenger wins within `rounds`; `opening` is the first winning
    /// challenge (`None` when the start is already lost).
    ChallengerWins {
        rounds: u32,
        #[serde(serialize_with = "crate::ser::natural_opt")]
        opening: Option<Natural>,
    },
    /// Powerator survives `rounds` rounds; only produced by complete
    /// procedures (at most one round).
    PoweratorSurvivesProven { rounds: u32 },
    /// No win found within `depth` rounds using challenges up to `bound`.
    Unknown {
        depth: u32,
        #[serde(serialize_with = "crate::ser::natural")]
        bound: Natural,
    },
}

impl SolveVerdict {
    pub fn win_rounds(&self) -> Option<u32> {
        match self {
            SolveVerdict::ChallengerWins { rounds, .. } => Some(*rounds),
            _ => None,
        }
    }
}

fn bounded_value_in<W: Word>(
    s: &[W],
    max_rounds: u32,
    cfg: &SolverConfig,
    bound: W,
) -> Result<SolveVerdict, SolveError> {
    if is_lost_sorted(s) {
        return Ok(SolveVerdict::ChallengerWins {
            rounds: 0,
            opening: None,
        });
    }
    let mut solver = Solver::new(cfg.clone(), bound.clone());
    for depth in 1..=max_rounds {
        if let Some(x) = solver.winning_move(s, depth)? {
            return Ok(SolveVerdict::ChallengerWins {
                rounds: depth,
                opening: Some(x.to_natural()),
            });
        }
    }
    if max_rounds <= 1 {
        Ok(SolveVerdict::PoweratorSurvivesProven { rounds: max_rounds })
    } else {
        Ok(SolveVerdict::Unknown {
            depth: max_rounds,
            bound: bound.to_natural(),
        })
    }
}

/// Iterative deepening up to `max_rounds`.
pub fn bounded_value(
    pos: &Position,
    max_rounds: u32,
    cfg: &SolverConfig,
) -> Result<SolveVerdict, SolveError> {
    let bound = cfg.effective_bound(pos);
    if cfg
        .challenge_bound
        .as_ref()
        .is_some_and(|b| *b < Natural::from(2u32))
    {
        return Err(SolveError::BadConfig("challenge_bound must be at least 2".into()));
    }
    let fast_bound = bound.clone().min(Natural::from(crate::game::FAST_LIMIT - 1));
    match pos.as_fast() {
        Some(fast) if bound == fast_bound => {
            let b = u128::from_natural(&bound).expect("bound fits");
            bounded_value_in(&fast, max_rounds, cfg, b)
        }
        _ => bounded_value_in(pos.elements(), max_rounds, cfg, bound),
    }
}

/// Exhaustive replay of a claimed win.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub claimed_rounds: u32,
    pub branches: u64,
    pub max_rounds_seen: u32,
    pub violations: Vec<String>,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Plays the solver's own moves against every legal response and checks,
/// with the plain loss predicate, that every branch is lost within
/// `rounds`. Fails if the tree exceeds `max_branches` leaves.
pub fn replay_win(
    pos: &Position,
    rounds: u32,
    cfg: &SolverConfig,
    max_branches: u64,
) -> Result<ReplayReport, SolveError> {
    let bound = cfg.effective_bound(pos);
    let mut report = ReplayReport {
        claimed_rounds: rounds,
        branches: 0,
        max_rounds_seen: 0,
        violations: Vec::new(),
    };
    match pos.as_fast() {
        Some(fast) if bound < Natural::from(crate::game::FAST_LIMIT) => {
            let b = u128::from_natural(&bound).unwrap();
            let mut solver = Solver::new(cfg.clone(), b);
            replay_rec(&mut solver, fast, rounds, 0, max_branches, &mut report)?;
        }
        _ => {
            let mut solver = Solver::new(cfg.clone(), bound);
            replay_rec(
                &mut solver,
                pos.elements().to_vec(),
                rounds,
                0,
                max_branches,
                &mut report,
            )?;
        }
    }
    Ok(report)
}

fn replay_rec<W: Word>(
    solver: &mut Solver<W>,
    s: Vec<W>,
    left: u32,
    used: u32,
    max_branches: u64,
    report: &mut ReplayReport,
) -> Result<(), SolveError> {
    let naturals: Vec<Natural> = s.iter().map(Word::to_natural).collect();
    if Position::new(naturals.clone()).expect("positive").is_lost() {
        report.branches += 1;
        report.max_rounds_seen = report.max_rounds_seen.max(used);
        if report.branches > max_branches {
            return Err(SolveError::NodeBudgetExhausted(max_branches));
        }
        return Ok(());
    }
    let Some(x) = solver.winning_move(&s, left)? else {
        report.branches += 1;
        report.violations.push(format!(
            "no winning move from {:?} with {left} rounds left",
            naturals.iter().map(|e| e.to_string()).collect::<Vec<_>>()
        ));
        return Ok(());
    };
    let mut u = x.shr1().inc();
    while u <= x {
        let mut child = s.clone();
        if let Err(at) = child.binary_search(&u) {
            child.insert(at, u.clone());
        }
        replay_rec(solver, child, left - 1, used + 1, max_branches, report)?;
        if !report.violations.is_empty() {
            return Ok(());
        }
        u = u.inc();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn three_needs_two_rounds_opening_one() {
        let v = bounded_value(&Position::from_u64s(&[3]), 2, &SolverConfig::default()).unwrap();
        assert_eq!(
            v,
            SolveVerdict::ChallengerWins {
                rounds: 2,
                opening: Some(n(1))
            }
        );
    }

    #[test]
    fn five_wins_in_one() {
        let v = bounded_value(&Position::from_u64s(&[5]), 3, &SolverConfig::default()).unwrap();
        assert_eq!(
            v,
            SolveVerdict::ChallengerWins {
                rounds: 1,
                opening: Some(n(2))
            }
        );
    }

    #[test]
    fn powers_of_two_stay_unknown() {
        let v = bounded_value(&Position::from_u64s(&[8]), 3, &SolverConfig::default()).unwrap();
        assert!(matches!(v, SolveVerdict::Unknown { depth: 3, .. }));
        let v = bounded_value(&Position::from_u64s(&[8]), 1, &SolverConfig::default()).unwrap();
        assert_eq!(v, SolveVerdict::PoweratorSurvivesProven { rounds: 1 });
    }

    #[test]
    fn lost_start_needs_zero_rounds() {
        let v = bounded_value(&Position::from_u64s(&[2, 5]), 2, &SolverConfig::default()).unwrap();
        assert_eq!(
            v,
            SolveVerdict::ChallengerWins {
                rounds: 0,
                opening: None
            }
        );
    }

    #[test]
    fn node_budget_is_reported() {
        let cfg = SolverConfig {
            node_budget: 3,
            ..SolverConfig::with_bound(5000)
        };
        let r = bounded_value(&Position::from_u64s(&[16]), 3, &cfg);
        assert_eq!(r, Err(SolveError::NodeBudgetExhausted(3)));
    }

    #[test]
    fn rejects_tiny_bound() {
        let cfg = SolverConfig::with_bound(1);
        assert!(matches!(
            bounded_value(&Position::from_u64s(&[3]), 2, &cfg),
            Err(SolveError::BadConfig(_))
        ));
    }

    #[test]
    fn ascending_outside_skips_runs() {
        let bad = Runs::from_intervals(vec![(3u128, 4), (7, 7)]);
        let got: Vec<u128> = AscendingOutside::new(&bad, 2, 9).collect();
        assert_eq!(got, vec![2, 5, 6, 8, 9]);
    }

    #[test]
    fn responses_cover_complement_once() {
        let s = [3u128, 40];
        let bad = bad_runs(&s);
        for x in 1..200u128 {
            let mut got: Vec<u128> = ordered_responses(&s, &bad, &x).collect();
            got.sort();
            let expect: Vec<u128> = ((x / 2 + 1)..=x).filter(|u| !bad.contains(u)).collect();
            assert_eq!(got, expect, "x={x}");
        }
    }

    #[test]
    fn replay_confirms_small_wins() {
        for u in [3u64, 5, 12, 24, 48, 100] {
            let pos = Position::from_u64s(&[u]);
            let cfg = SolverConfig::default();
            let v = bounded_value(&pos, 2, &cfg).unwrap();
            let rounds = v.win_rounds().expect("c <= 2 below 2304");
            let rep = replay_win(&pos, rounds, &cfg, 1_000_000).unwrap();
            assert!(rep.passed(), "{u}: {rep:?}");
            assert!(rep.max_rounds_seen <= rounds);
        }
    }

    #[test]
    fn integer_roots() {
        assert_eq!(nth_root(&2304u128, 3), 13);
        assert_eq!(nth_root(&81u128, 4), 3);
        assert_eq!(nth_root(&80u128, 4), 2);
    }
}
