//! Challenger strategies.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactsolve::{bounded_value, SolveVerdict, SolverConfig};
use crate::game::{forcing_challenge, nondivisor_punish, Position};
use crate::numtheory::{
    ceil_log2_u64, factorize, floor_log2_u64, integer_root, least_nondivisor, odd_part, pow, power_decompose,
    Natural, PowerDecomposition,
};

use super::{ChallengerStrategy, Flow, Script, StrategyError};

fn nat(x: u64) -> Natural {
    Natural::from(x)
}

fn precondition<T>(msg: impl Into<String>) -> Result<T, StrategyError> {
    Err(StrategyError::Precondition(msg.into()))
}

/// `ceil(log floor(log n)) + 1`, the binary-search round bound.
pub fn binary_search_bound(n: u64) -> u32 {
    (ceil_log2_u64(floor_log2_u64(n)) + 1) as u32
}

/// `ceil(log floor(log d)) + 4`, the root-probe round bound.
pub fn root_probe_bound(d: u64) -> u32 {
    (ceil_log2_u64(floor_log2_u64(d)) + 4) as u32
}

fn sqr(x: &Natural) -> Natural {
    x * x
}

/// Binary search on the exponent: from a position holding `u` and `pivot`
/// with `u^n < pivot < 2 u^n`.
fn run_binary_search(sc: &mut Script<'_>, u: &Natural, n: u64, pivot: &Natural) -> Result<(), Flow> {
    if n == 0 {
        return sc.fail("exponent must be positive");
    }
    let t = pow(u, n);
    if !(*pivot > t && *pivot < &t << 1u32) || !sc.position().contains(pivot) {
        return sc.fail(format!("{pivot} is not strictly between {u}^{n} and twice that"));
    }
    if n == 1 {
        // u < pivot < 2u: one more element 1 finishes it.
        sc.ask(Natural::one())?;
        return sc.finish();
    }
    let k = floor_log2_u64(n);
    let e = |m: u64| n >> m;
    let (mut i, mut j) = (0u64, k);
    while j - i > 1 {
        let mid = (i + j) / 2;
        let t = pow(u, e(mid));
        let w = sc.ask(forcing_challenge(&t))?;
        if w == t {
            j = mid;
        } else {
            i = mid;
        }
    }
    // Now u^e(j) is on the board and some v' has u^e(i) < v' < 2 u^e(i).
    if e(i) == 2 * e(j) {
        return sc.finish();
    }
    // e(i) = 2 e(j) + 1: force u'' in [u'^2, 2u'^2) with u' = u^e(j). Either
    // u'^2 < u'' or u'' = u'^2 and then u * u'' = u^e(i) traps v'.
    let t = pow(u, e(j));
    sc.ask(forcing_challenge(&sqr(&t)))?;
    sc.finish()
}

/// First element `v` of the position with `u^n < v < 2u^n`.
fn find_pivot(pos: &Position, u: &Natural, n: u64) -> Option<Natural> {
    let t = pow(u, n);
    let hi: Natural = &t << 1;
    pos.elements().iter().find(|v| **v > t && **v < hi).cloned()
}

/// Exponent binary search for a position containing `u` and some `v` with
/// `u^n < v < 2u^n`.
#[derive(Debug, Clone)]
pub struct BinarySearch {
    pub u: Natural,
    pub n: u64,
}

pub fn challenger_binary_search(u: &Natural, n: u64) -> Result<BinarySearch, StrategyError> {
    if *u < nat(2) || n < 1 {
        return precondition("binary search needs u >= 2 and n >= 1");
    }
    Ok(BinarySearch { u: u.clone(), n })
}

impl ChallengerStrategy for BinarySearch {
    fn name(&self) -> String {
        format!("binary_search(u={}, n={})", self.u, self.n)
    }

    fn claimed_bound(&self) -> Option<u32> {
        Some(binary_search_bound(self.n))
    }

    fn program(&self, sc: &mut Script<'_>) -> Result<(), Flow> {
        if !sc.position().contains(&self.u) {
            return sc.fail(format!("position lacks {}", self.u));
        }
        let Some(v) = find_pivot(sc.position(), &self.u, self.n) else {
            return sc.fail(format!(
                "no element strictly between {0}^{1} and 2*{0}^{1}",
                self.u, self.n
            ));
        };
        run_binary_search(sc, &self.u, self.n, &v)
    }
}

/// What [`Boost`] does when Powerator answers exactly `u^n`.
pub enum Continuation {
    /// The position must already be lost.
    Finish,
    /// Hand over to another strategy for the enlarged position.
    Then(Box<dyn ChallengerStrategy>),
}

impl Continuation {
    fn bound(&self) -> Option<u32> {
        match self {
            Continuation::Finish => Some(0),
            Continuation::Then(s) => s.claimed_bound(),
        }
    }

    fn run(&self, sc: &mut Script<'_>) -> Result<(), Flow> {
        match self {
            Continuation::Finish => sc.finish(),
            Continuation::Then(s) => s.program(sc),
        }
    }
}

fn run_boost(sc: &mut Script<'_>, u: &Natural, n: u64, cont: &Continuation) -> Result<(), Flow> {
    let t = pow(u, n);
    let w = sc.ask(forcing_challenge(&t))?;
    if w == t {
        cont.run(sc)
    } else {
        run_binary_search(sc, u, n, &w)
    }
}

/// Forces an element in `[u^n, 2u^n)`: either exactly `u^n`, handled by the
/// continuation, or a pivot for [`BinarySearch`].
pub struct Boost {
    pub u: Natural,
    pub n: u64,
    pub continuation: Continuation,
}

pub fn challenger_boost(u: &Natural, n: u64, continuation: Continuation) -> Result<Boost, StrategyError> {
    if *u < nat(2) || n < 1 {
        return precondition("boost needs u >= 2 and n >= 1");
    }
    Ok(Boost {
        u: u.clone(),
        n,
        continuation,
    })
}

impl ChallengerStrategy for Boost {
    fn name(&self) -> String {
        format!("boost(u={}, n={})", self.u, self.n)
    }

    fn claimed_bound(&self) -> Option<u32> {
        let cont = self.continuation.bound()?;
        Some((cont + 1).max(binary_search_bound(self.n) + 1))
    }

    fn program(&self, sc: &mut Script<'_>) -> Result<(), Flow> {
        if !sc.position().contains(&self.u) {
            return sc.fail(format!("position lacks {}", self.u));
        }
        run_boost(sc, &self.u, self.n, &self.continuation)
    }
}

/// Root probe for `u = 2^l v^r` that is not a power of two: challenge the
/// `d`-th root for the least `d` not dividing `r`, then split on the power
/// of two below `u / w^d`.
#[derive(Debug, Clone)]
pub struct RootProbe {
    pub u: Natural,
    pub d: u64,
}

pub fn challenger_root_probe(u: &Natural) -> Result<RootProbe, StrategyError> {
    let dec = power_decompose(u).map_err(|e| StrategyError::Precondition(e.to_string()))?;
    let r = match dec {
        PowerDecomposition::PowerOfTwo(_) => return precondition(format!("{u} is a power of two")),
        PowerDecomposition::Odd { exponent, .. } => exponent,
    };
    let d = least_nondivisor(&Natural::from(r)).map_err(|e| StrategyError::Precondition(e.to_string()))?;
    Ok(RootProbe { u: u.clone(), d })
}

impl RootProbe {
    pub fn opening(&self) -> Natural {
        integer_root(&self.u, self.d as u32).expect("d >= 2")
    }
}

impl ChallengerStrategy for RootProbe {
    fn name(&self) -> String {
        format!("root_probe(u={}, d={})", self.u, self.d)
    }

    fn claimed_bound(&self) -> Option<u32> {
        Some(root_probe_bound(self.d))
    }

    fn program(&self, sc: &mut Script<'_>) -> Result<(), Flow> {
        if !sc.position().contains(&self.u) {
            return sc.fail(format!("position lacks {}", self.u));
        }
        let d = self.d;
        let w = sc.ask(self.opening())?;
        // 2^i w^d < u < 2^(i+1) w^d
        let q = &self.u / pow(&w, d);
        let i = q.bits() - 1;
        let low = Natural::one() << i;
        let z = sc.ask((&low << 1u32) - 1u32)?;
        if z == low {
            // 2^i w^d < u < 2 * 2^i w^d: forcing w^d wins outright
            run_boost(sc, &w, d, &Continuation::Finish)
        } else {
            // 2^i < z < 2^(i+1): z is a pivot for the powers of 2
            sc.ask(nat(2))?;
            run_binary_search(sc, &nat(2), i, &z)
        }
    }
}

/// Halving: challenge `u - 1`; a response other than `u/2` does not divide
/// `u` and is punished, while `u/2` hands over to the inner strategy.
pub struct Halving {
    pub u: Natural,
    pub inner: Option<Box<dyn ChallengerStrategy>>,
}

/// Halving with repeated halving as the inner strategy.
pub fn challenger_halving(u: &Natural) -> Result<Halving, StrategyError> {
    if *u < nat(2) {
        return precondition("halving needs u >= 2");
    }
    Ok(Halving {
        u: u.clone(),
        inner: None,
    })
}

impl Halving {
    pub fn opening(&self) -> Natural {
        &self.u - 1u32
    }
}

impl ChallengerStrategy for Halving {
    fn name(&self) -> String {
        format!("halving(u={})", self.u)
    }

    fn claimed_bound(&self) -> Option<u32> {
        match &self.inner {
            Some(s) if self.u.is_even() => s.claimed_bound().map(|b| b + 1),
            Some(_) => Some(2),
            None => {
                if self.u.is_zero() || (self.u.clone() & (&self.u - 1u32)).is_zero() {
                    None
                } else {
                    Some(self.u.trailing_zeros().unwrap_or(0) as u32 + 2)
                }
            }
        }
    }

    fn program(&self, sc: &mut Script<'_>) -> Result<(), Flow> {
        if !sc.position().contains(&self.u) {
            return sc.fail(format!("position lacks {}", self.u));
        }
        let v = sc.ask(self.opening())?;
        if self.u.is_even() && v == &self.u >> 1u32 {
            return match &self.inner {
                Some(s) => s.program(sc),
                None if v < nat(2) => sc.fail("halving reached 1"),
                None => Halving { u: v, inner: None }.program(sc),
            };
        }
        let x = nondivisor_punish(&v, &self.u).map_err(|e| Flow::Fail(e.into()))?;
        sc.ask(x)?;
        sc.finish()
    }
}

/// The four sufficient conditions for a two-round win.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum C2Case {
    /// `u > 8` and `16` does not divide `u`.
    NotDivisibleBy16,
    /// The odd part of `u` is not a square.
    OddPartNotSquare,
    /// `u < 2304` and not a power of two.
    Small,
    /// Some prime `p_i > 2 * prod_{j<i} p_j^{e_j}`.
    PrimeGap,
}

impl C2Case {
    pub const ALL: [C2Case; 4] = [
        C2Case::NotDivisibleBy16,
        C2Case::OddPartNotSquare,
        C2Case::Small,
        C2Case::PrimeGap,
    ];
}

/// Two-round strategy for one of the [`C2Case`] families.
#[derive(Debug, Clone)]
pub struct C2 {
    pub u: Natural,
    pub case: C2Case,
    plan: C2Plan,
}

#[derive(Debug, Clone)]
enum C2Plan {
    /// Force 8, then `ceil(u/8) - 1`.
    EightThenEighth,
    /// `floor(sqrt u)`, then `ceil(u/v) - 1`.
    RootThenQuotient,
    /// Challenge `2x`, then punish the non-divisor.
    Gap(Natural),
    /// u = 3: force 1, then 2.
    ForceOneTwo,
    /// 4 < u < 8: force 2.
    ForceTwo,
    /// Force 8.
    ForceEight,
    /// Force 4, then challenge the given value.
    FourThen(u64),
    /// Force 8, then challenge the given value.
    EightThen(u64),
}

fn is_square(n: &Natural) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

fn not_div_16_applies(u: &Natural) -> bool {
    *u > nat(8) && !(u % 16u32).is_zero()
}

fn odd_part_not_square_applies(u: &Natural) -> bool {
    !u.is_zero() && !is_square(&odd_part(u))
}

fn is_power_of_two(u: &Natural) -> bool {
    !u.is_zero() && (u.clone() & (u - 1u32)).is_zero()
}

/// `prod_{j<i} p_j^{e_j}` for the first prime with `p_i` above twice it.
fn prime_gap_prefix(u: &Natural) -> Option<Natural> {
    if *u < nat(2) {
        return None;
    }
    let mut f = factorize(u).factors;
    f.sort();
    let mut prefix = Natural::one();
    for (p, e) in f {
        if p > &prefix << 1u32 {
            return Some(prefix);
        }
        prefix *= pow(&p, e as u64);
    }
    None
}

fn small_plan(u: &Natural) -> Option<C2Plan> {
    if *u >= nat(2304) || is_power_of_two(u) || u.is_zero() {
        return None;
    }
    let x = u.to_u64_digits().first().copied().unwrap_or(0);
    Some(match x {
        3 => C2Plan::ForceOneTwo,
        5..=7 => C2Plan::ForceTwo,
        9..=63 if x != 48 => C2Plan::EightThenEighth,
        48 => C2Plan::RootThenQuotient,
        65..=127 => C2Plan::ForceEight,
        129..=255 => C2Plan::FourThen(32),
        257..=511 => C2Plan::FourThen(31),
        513..=1023 => C2Plan::EightThen(127),
        1025..=2047 => C2Plan::FourThen(32),
        _ => {
            if not_div_16_applies(u) {
                C2Plan::EightThenEighth
            } else if odd_part_not_square_applies(u) {
                C2Plan::RootThenQuotient
            } else {
                return None;
            }
        }
    })
}

fn plan_for(u: &Natural, case: C2Case) -> Option<C2Plan> {
    match case {
        C2Case::NotDivisibleBy16 => not_div_16_applies(u).then_some(C2Plan::EightThenEighth),
        C2Case::OddPartNotSquare => odd_part_not_square_applies(u).then_some(C2Plan::RootThenQuotient),
        C2Case::Small => small_plan(u),
        C2Case::PrimeGap => prime_gap_prefix(u).map(C2Plan::Gap),
    }
}

/// The two-round strategy, trying the cases in the order
/// not-divisible-by-16, odd-part-not-square, prime gap, small table.
pub fn challenger_c2(u: &Natural) -> Result<C2, StrategyError> {
    for case in [
        C2Case::NotDivisibleBy16,
        C2Case::OddPartNotSquare,
        C2Case::PrimeGap,
        C2Case::Small,
    ] {
        if let Ok(s) = challenger_c2_case(u, case) {
            return Ok(s);
        }
    }
    precondition(format!("no two-round case applies to {u}"))
}

pub fn challenger_c2_case(u: &Natural, case: C2Case) -> Result<C2, StrategyError> {
    match plan_for(u, case) {
        Some(plan) => Ok(C2 {
            u: u.clone(),
            case,
            plan,
        }),
        None => precondition(format!("case {case:?} does not apply to {u}")),
    }
}

/// Challenge 8; answers 5, 6, 7 lose to a follow-up 2.
fn force_eight(sc: &mut Script<'_>) -> Result<(), Flow> {
    if sc.ask(nat(8))? != nat(8) {
        sc.ask(nat(2))?;
        return sc.finish();
    }
    Ok(())
}

/// Challenge 6; answers 5, 6 lose to a follow-up 2.
fn force_four(sc: &mut Script<'_>) -> Result<(), Flow> {
    if sc.ask(nat(6))? != nat(4) {
        sc.ask(nat(2))?;
        return sc.finish();
    }
    Ok(())
}

fn ceil_div(a: &Natural, b: &Natural) -> Natural {
    a.div_ceil(b)
}

impl ChallengerStrategy for C2 {
    fn name(&self) -> String {
        format!("c2(u={}, case={:?})", self.u, self.case)
    }

    fn claimed_bound(&self) -> Option<u32> {
        Some(2)
    }

    fn program(&self, sc: &mut Script<'_>) -> Result<(), Flow> {
        let u = &self.u;
        if !sc.position().contains(u) {
            return sc.fail(format!("position lacks {u}"));
        }
        match &self.plan {
            C2Plan::EightThenEighth => {
                force_eight(sc)?;
                sc.ask(ceil_div(u, &nat(8)) - 1u32)?;
            }
            C2Plan::RootThenQuotient => {
                let v = sc.ask(u.sqrt())?;
                let v2 = sqr(&v);
                if !(v2 < *u && *u < &v2 << 1u32) {
                    sc.ask(ceil_div(u, &v) - 1u32)?;
                }
            }
            C2Plan::Gap(x) => {
                let v = sc.ask(x << 1u32)?;
                let punish = nondivisor_punish(&v, u).map_err(|e| Flow::Fail(e.into()))?;
                sc.ask(punish)?;
            }
            C2Plan::ForceOneTwo => {
                sc.ask(nat(1))?;
                sc.ask(nat(2))?;
            }
            C2Plan::ForceTwo => {
                sc.ask(nat(2))?;
            }
            C2Plan::ForceEight => force_eight(sc)?,
            C2Plan::FourThen(y) => {
                force_four(sc)?;
                sc.ask(nat(*y))?;
            }
            C2Plan::EightThen(y) => {
                force_eight(sc)?;
                sc.ask(nat(*y))?;
            }
        }
        sc.finish()
    }
}

/// Follows the bounded solver: at every step plays the first challenge that
/// wins within the fewest rounds, sweeping up to a bound fixed at the start.
#[derive(Debug, Clone)]
pub struct SolverChallenger {
    cfg: SolverConfig,
    rounds: u32,
}

impl SolverChallenger {
    /// `None` when no win within `max_rounds` is found.
    pub fn new(start: &Position, max_rounds: u32, cfg: &SolverConfig) -> Result<Option<Self>, StrategyError> {
        let mut cfg = cfg.clone();
        cfg.challenge_bound = Some(cfg.effective_bound(start));
        let verdict =
            bounded_value(start, max_rounds, &cfg).map_err(|e| StrategyError::Precondition(e.to_string()))?;
        Ok(match verdict {
            SolveVerdict::ChallengerWins { rounds, .. } => Some(SolverChallenger { cfg, rounds }),
            _ => None,
        })
    }
}

impl ChallengerStrategy for SolverChallenger {
    fn name(&self) -> String {
        "solver".into()
    }

    fn claimed_bound(&self) -> Option<u32> {
        Some(self.rounds)
    }

    fn program(&self, sc: &mut Script<'_>) -> Result<(), Flow> {
        let mut left = self.rounds;
        while !sc.position().is_lost() {
            let verdict = bounded_value(sc.position(), left, &self.cfg)
                .map_err(|e| Flow::Fail(StrategyError::Precondition(e.to_string())))?;
            match verdict {
                SolveVerdict::ChallengerWins {
                    rounds,
                    opening: Some(x),
                } => {
                    sc.ask(x)?;
                    left = rounds - 1;
                }
                _ => return sc.fail(format!("solver lost track at {}", sc.position())),
            }
        }
        sc.finish()
    }
}

/// Solver when it finds a win within `solver_rounds`, otherwise the two-round
/// strategy when applicable, otherwise the root probe on the largest element
/// that is not a power of two.
pub fn best_challenger(
    start: &Position,
    solver_rounds: u32,
    cfg: &SolverConfig,
) -> Result<Box<dyn ChallengerStrategy>, StrategyError> {
    if let Some(s) = SolverChallenger::new(start, solver_rounds, cfg)? {
        return Ok(Box::new(s));
    }
    if let [u] = start.elements() {
        if let Ok(s) = challenger_c2(u) {
            return Ok(Box::new(s));
        }
    }
    match start.elements().iter().rev().find(|u| !is_power_of_two(u)) {
        Some(u) => Ok(Box::new(challenger_root_probe(u)?)),
        None => precondition("every element is a power of two"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{harness::verify_round_bound, play_match, Adversary, Move, Pow2Powerator};
    use super::*;

    fn p(xs: &[u64]) -> Position {
        Position::from_u64s(xs)
    }

    fn opening(s: &dyn ChallengerStrategy, start: &Position) -> Natural {
        match s.next_move(start, &[]).unwrap() {
            Move::Challenge(x) => x,
            Move::Victory => panic!("already won"),
        }
    }

    #[test]
    fn bounds_arithmetic() {
        assert_eq!(binary_search_bound(2), 1);
        assert_eq!(binary_search_bound(4), 2);
        assert_eq!(binary_search_bound(16), 3);
        assert_eq!(root_probe_bound(2), 4);
        assert_eq!(root_probe_bound(3), 4);
        assert_eq!(root_probe_bound(4), 5);
        assert_eq!(root_probe_bound(17), 6);
    }

    #[test]
    fn openings() {
        let rp = challenger_root_probe(&nat(2304)).unwrap();
        assert_eq!(rp.d, 3);
        assert_eq!(opening(&rp, &p(&[2304])), nat(13));
        let rp = challenger_root_probe(&nat(48)).unwrap();
        assert_eq!(opening(&rp, &p(&[48])), nat(6));
        let b = challenger_boost(&nat(3), 2, Continuation::Finish).unwrap();
        assert_eq!(opening(&b, &p(&[3])), nat(17));
        let b = challenger_boost(&nat(2), 4, Continuation::Finish).unwrap();
        assert_eq!(opening(&b, &p(&[2])), nat(31));
        assert_eq!(challenger_halving(&nat(10)).unwrap().opening(), nat(9));
        assert_eq!(challenger_halving(&nat(2)).unwrap().opening(), nat(1));
        assert!(challenger_root_probe(&nat(16)).is_err());
    }

    #[test]
    fn boost_hands_over_on_exact_power() {
        let b = challenger_boost(&nat(2), 4, Continuation::Finish).unwrap();
        // {2, 16} is not lost, so the bare continuation reports exhaustion.
        assert!(b.next_move(&p(&[2]), &[nat(16)]).is_err());
        let inner = challenger_c2(&nat(3)).unwrap();
        let b = challenger_boost(&nat(3), 1, Continuation::Then(Box::new(inner))).unwrap();
        assert_eq!(b.next_move(&p(&[3]), &[nat(3)]).unwrap(), Move::Challenge(nat(1)));
    }

    #[test]
    fn c2_openings() {
        let s = challenger_c2(&nat(24)).unwrap();
        assert_eq!(s.case, C2Case::NotDivisibleBy16);
        assert_eq!(opening(&s, &p(&[24])), nat(8));
        assert_eq!(
            s.next_move(&p(&[24]), &[nat(8)]).unwrap(),
            Move::Challenge(nat(2))
        );
        let s = challenger_c2_case(&nat(75), C2Case::OddPartNotSquare).unwrap();
        assert_eq!(opening(&s, &p(&[75])), nat(8));
        let s = challenger_c2_case(&nat(484), C2Case::PrimeGap).unwrap();
        assert_eq!(opening(&s, &p(&[484])), nat(8));
        assert!(challenger_c2(&nat(2304)).is_err());
        assert!(challenger_c2(&nat(256)).is_err());
    }

    #[test]
    fn halving_branches() {
        let h = challenger_halving(&nat(10)).unwrap();
        for v in 6..=9 {
            assert_eq!(
                h.next_move(&p(&[10]), &[nat(v)]).unwrap(),
                Move::Challenge(nat(1))
            );
        }
        // v = 5 recurses: halving 5 opens with 4
        assert_eq!(
            h.next_move(&p(&[10]), &[nat(5)]).unwrap(),
            Move::Challenge(nat(4))
        );
        let rep = verify_round_bound(&h, &p(&[10]), 3, &Adversary::Exhaustive, 1 << 20).unwrap();
        assert!(rep.violations.is_empty(), "{rep:?}");
    }

    #[test]
    fn play_root_probe_five() {
        let rp = challenger_root_probe(&nat(5)).unwrap();
        let t = play_match(&rp, &Pow2Powerator, 10, &p(&[5])).unwrap();
        assert!(t.rounds_used <= 4);
        assert!(t.final_position().is_lost());
        let rep = verify_round_bound(&rp, &p(&[5]), 4, &Adversary::Exhaustive, 1 << 20).unwrap();
        assert!(rep.violations.is_empty(), "{rep:?}");
    }

    #[test]
    fn play_binary_search_from_lost_start() {
        let bs = challenger_binary_search(&nat(2), 2).unwrap();
        let t = play_match(&bs, &Pow2Powerator, 5, &p(&[2, 5])).unwrap();
        assert_eq!(t.rounds_used, 0);
    }

    #[test]
    fn binary_search_needs_pivot() {
        let bs = challenger_binary_search(&nat(3), 4).unwrap();
        assert!(matches!(
            bs.next_move(&p(&[3, 50]), &[]),
            Err(StrategyError::Precondition(_))
        ));
    }
}
