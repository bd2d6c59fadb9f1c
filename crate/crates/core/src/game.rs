//! Rules of the game: positions, legal responses, loss detection and the two
//! forcing constructions Challenger uses everywhere.

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::numtheory::Natural;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("challenge must be positive")]
    ZeroChallenge,
    #[error("responses must be positive")]
    ZeroResponse,
    #[error("response {response} is illegal for challenge {challenge}: must lie in [{lo}, {hi}]")]
    IllegalResponse {
        challenge: Natural,
        response: Natural,
        lo: Natural,
        hi: Natural,
    },
    #[error("{divisor} divides {value}; punishing needs a non-divisor")]
    Divides { divisor: Natural, value: Natural },
    #[error("punishing needs a first argument of at least 2")]
    TrivialDivisor,
}

/// Integer type the search kernels run on. `u128` is used whenever every
/// element is below `2^62`, so that products and their doubles cannot
/// overflow; `Natural` covers everything else.
pub trait Word: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    fn from_u64(x: u64) -> Self;
    fn from_natural(n: &Natural) -> Option<Self>;
    fn to_natural(&self) -> Natural;
    fn mul(&self, other: &Self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn shl1(&self) -> Self;
    fn shr1(&self) -> Self;
    fn isqrt(&self) -> Self;
    fn is_nil(&self) -> bool;
    fn is_power_of_two(&self) -> bool;
    /// `2^floor(log2 self)` for `self >= 1`.
    fn floor_pow2(&self) -> Self;
    /// Largest value search code may introduce, if the type is bounded.
    fn cap() -> Option<Self>;

    fn unit() -> Self {
        Self::from_u64(1)
    }
    fn inc(&self) -> Self {
        self.add(&Self::unit())
    }
    fn dec(&self) -> Self {
        self.sub(&Self::unit())
    }
}

/// Elements below this bound keep all kernel arithmetic inside `u128`.
pub const FAST_LIMIT: u128 = 1 << 62;

impl Word for u128 {
    fn from_u64(x: u64) -> Self {
        x as u128
    }
    fn from_natural(n: &Natural) -> Option<Self> {
        n.to_u128()
    }
    fn to_natural(&self) -> Natural {
        Natural::from(*self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn shl1(&self) -> Self {
        self << 1
    }
    fn shr1(&self) -> Self {
        self >> 1
    }
    fn isqrt(&self) -> Self {
        num_integer::Roots::sqrt(self)
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_power_of_two(&self) -> bool {
        u128::is_power_of_two(*self)
    }
    fn floor_pow2(&self) -> Self {
        1u128 << (127 - self.leading_zeros())
    }
    fn cap() -> Option<Self> {
        Some(FAST_LIMIT - 1)
    }
}

impl Word for Natural {
    fn from_u64(x: u64) -> Self {
        Natural::from(x)
    }
    fn from_natural(n: &Natural) -> Option<Self> {
        Some(n.clone())
    }
    fn to_natural(&self) -> Natural {
        self.clone()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn shl1(&self) -> Self {
        self << 1u32
    }
    fn shr1(&self) -> Self {
        self >> 1u32
    }
    fn isqrt(&self) -> Self {
        self.sqrt()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_power_of_two(&self) -> bool {
        crate::numtheory::is_oddless(self)
    }
    fn floor_pow2(&self) -> Self {
        Natural::one() << (self.bits() - 1)
    }
    fn cap() -> Option<Self> {
        None
    }
}

/// True when some `h, i, j` (repetition allowed) give
/// `s_i * s_j < s_h < 2 * s_i * s_j`. `sorted` must be ascending.
pub fn is_lost_sorted<W: Word>(sorted: &[W]) -> bool {
    loss_triple_sorted(sorted).is_some()
}

/// Indices `(h, i, j)` of a winning triple, if any.
pub fn loss_triple_sorted<W: Word>(sorted: &[W]) -> Option<(usize, usize, usize)> {
    let max = sorted.last()?;
    for i in 0..sorted.len() {
        for j in i..sorted.len() {
            let p = sorted[i].mul(&sorted[j]);
            if &p >= max {
                // Larger j only makes p bigger.
                break;
            }
            let upper = p.shl1();
            // First element strictly above p.
            let h = sorted.partition_point(|x| x <= &p);
            if h < sorted.len() && sorted[h] < upper {
                return Some((h, i, j));
            }
        }
    }
    None
}

/// A game position: the set of Powerator responses so far.
///
/// Kept sorted and deduplicated, since the winning condition lets indices
/// repeat and so multiplicity never matters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Position {
    elems: Vec<Natural>,
}

impl Position {
    pub fn new<I: IntoIterator<Item = Natural>>(items: I) -> Result<Self, GameError> {
        let mut elems: Vec<Natural> = items.into_iter().collect();
        if elems.iter().any(Zero::is_zero) {
            return Err(GameError::ZeroResponse);
        }
        elems.sort();
        elems.dedup();
        Ok(Position { elems })
    }

    pub fn from_u64s(items: &[u64]) -> Self {
        Position::new(items.iter().map(|&x| Natural::from(x))).expect("positive entries")
    }

    pub fn empty() -> Self {
        Position::default()
    }

    pub fn elements(&self) -> &[Natural] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max(&self) -> Option<&Natural> {
        self.elems.last()
    }

    pub fn contains(&self, u: &Natural) -> bool {
        self.elems.binary_search(u).is_ok()
    }

    /// The position with `u` adjoined.
    pub fn apply(&self, u: &Natural) -> Result<Position, GameError> {
        if u.is_zero() {
            return Err(GameError::ZeroResponse);
        }
        let mut elems = self.elems.clone();
        if let Err(at) = elems.binary_search(u) {
            elems.insert(at, u.clone());
        }
        Ok(Position { elems })
    }

    pub fn is_lost(&self) -> bool {
        match self.as_fast() {
            Some(fast) => is_lost_sorted(&fast),
            None => is_lost_sorted(&self.elems),
        }
    }

    /// A triple `(u_h, u_i, u_j)` with `u_i u_j < u_h < 2 u_i u_j`.
    pub fn loss_witness(&self) -> Option<(Natural, Natural, Natural)> {
        loss_triple_sorted(&self.elems).map(|(h, i, j)| {
            (
                self.elems[h].clone(),
                self.elems[i].clone(),
                self.elems[j].clone(),
            )
        })
    }

    /// Elements as `u128` when all are below [`FAST_LIMIT`].
    pub fn as_fast(&self) -> Option<Vec<u128>> {
        self.elems
            .iter()
            .map(|e| e.to_u128().filter(|&x| x < FAST_LIMIT))
            .collect()
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.elems.iter().map(|e| e.to_string()))
            .finish()
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elems.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::ser::naturals(&self.elems, s)
    }
}

/// Legal responses to `x`: the integers `u` with `u <= x < 2u`.
pub fn response_interval(x: &Natural) -> Result<(Natural, Natural), GameError> {
    if x.is_zero() {
        return Err(GameError::ZeroChallenge);
    }
    Ok(((x >> 1u32) + 1u32, x.clone()))
}

pub fn is_legal_response(x: &Natural, u: &Natural) -> bool {
    !x.is_zero() && u <= x && *x < (u << 1u32)
}

pub fn check_response(x: &Natural, u: &Natural) -> Result<(), GameError> {
    let (lo, hi) = response_interval(x)?;
    if *u < lo || *u > hi {
        return Err(GameError::IllegalResponse {
            challenge: x.clone(),
            response: u.clone(),
            lo,
            hi,
        });
    }
    Ok(())
}

pub fn is_lost(pos: &Position) -> bool {
    pos.is_lost()
}

pub fn apply(pos: &Position, u: &Natural) -> Result<Position, GameError> {
    pos.apply(u)
}

/// `2t - 1`: every legal response lies in `[t, 2t)`.
pub fn forcing_challenge(target: &Natural) -> Natural {
    assert!(!target.is_zero(), "forcing target must be positive");
    (target << 1u32) - 1u32
}

/// `floor(u_j / u_i)`: every response `u_h` satisfies
/// `u_h u_i < u_j < 2 u_h u_i`, provided `u_i` does not divide `u_j`.
pub fn nondivisor_punish(u_i: &Natural, u_j: &Natural) -> Result<Natural, GameError> {
    if *u_i <= Natural::one() {
        return Err(GameError::TrivialDivisor);
    }
    if u_j.is_multiple_of(u_i) {
        return Err(GameError::Divides {
            divisor: u_i.clone(),
            value: u_j.clone(),
        });
    }
    Ok(u_j / u_i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    ChallengerWins,
    PoweratorSurvives,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Round {
    pub round: usize,
    #[serde(serialize_with = "crate::ser::natural")]
    pub challenge: Natural,
    #[serde(serialize_with = "crate::ser::natural")]
    pub response: Natural,
}

/// Record of a played game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transcript {
    pub start: Position,
    pub rounds: Vec<Round>,
    pub outcome: Outcome,
    pub rounds_used: usize,
}

impl Transcript {
    pub fn final_position(&self) -> Position {
        let mut pos = self.start.clone();
        for r in &self.rounds {
            pos = pos.apply(&r.response).expect("responses are positive");
        }
        pos
    }

    /// Re-checks legality of every round and that the outcome matches the
    /// final position.
    pub fn validate(&self) -> Result<(), String> {
        for r in &self.rounds {
            check_response(&r.challenge, &r.response).map_err(|e| e.to_string())?;
        }
        let lost = self.final_position().is_lost();
        match (self.outcome, lost) {
            (Outcome::ChallengerWins, true) | (Outcome::PoweratorSurvives, false) => {}
            _ => {
                return Err(format!(
                    "outcome {:?} inconsistent with final position",
                    self.outcome
                ))
            }
        }
        if self.rounds_used != self.rounds.len() {
            return Err("rounds_used does not match the number of rounds".into());
        }
        Ok(())
    }
}
