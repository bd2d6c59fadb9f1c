//! Powerator strategies.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Mutex;

use crate::exactsolve::bad_set;
use crate::game::{response_interval, Position};
use crate::numtheory::{floor_log2, pow, Natural};

use super::PoweratorStrategy;

/// The power of two `u` with `u <= x < 2u`.
pub fn powerator_pow2(x: &Natural) -> Natural {
    assert!(x.bits() > 0, "challenge must be positive");
    Natural::one() << floor_log2(x)
}

/// Always answers with the power of two. Never loses.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pow2Powerator;

impl PoweratorStrategy for Pow2Powerator {
    fn name(&self) -> String {
        "pow2".into()
    }

    fn respond(&self, _pos: &Position, challenge: &Natural) -> Natural {
        powerator_pow2(challenge)
    }
}

/// Largest member of `{2304^n 2^l : |l| <= 4} u {48 * 2304^n 2^l : |l| <= 1}`
/// that is a legal answer to `x`, or the power of two when none is.
pub fn survivor_2304(x: &Natural) -> Natural {
    let (lo, hi) = response_interval(x).expect("challenge must be positive");
    let base = Natural::from(2304u32);
    let mut best: Option<Natural> = None;
    let mut consider = |m: Natural| {
        if m >= lo && m <= hi && best.as_ref().is_none_or(|b| m > *b) {
            best = Some(m);
        }
    };
    let mut n = 0u64;
    loop {
        let p = pow(&base, n);
        // 2304^n / 16 exceeds x once n is large enough.
        if (&p >> 4u32) > hi {
            break;
        }
        for l in -4i32..=4 {
            if l >= 0 {
                consider(&p << l as u32);
            } else if n > 0 {
                consider(&p >> (-l) as u32);
            }
        }
        let h = &p * 48u32;
        for l in -1i32..=1 {
            if l >= 0 {
                consider(&h << l as u32);
            } else {
                consider(&h >> 1u32);
            }
        }
        n += 1;
    }
    best.unwrap_or_else(|| powerator_pow2(x))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Survivor2304;

impl PoweratorStrategy for Survivor2304 {
    fn name(&self) -> String {
        "survivor_2304".into()
    }

    fn respond(&self, _pos: &Position, challenge: &Natural) -> Natural {
        survivor_2304(challenge)
    }
}

/// Prefers answers outside the bad set, so it survives the next round
/// whenever that is possible: the power of two if it is safe, then the
/// largest safe answer, then the power of two.
#[derive(Debug, Clone, Copy, Default)]
pub struct BadSetAvoiding;

impl PoweratorStrategy for BadSetAvoiding {
    fn name(&self) -> String {
        "bad_set_avoiding".into()
    }

    fn respond(&self, pos: &Position, challenge: &Natural) -> Natural {
        let p2 = powerator_pow2(challenge);
        let Ok(bad) = bad_set(pos) else {
            return p2;
        };
        if !bad.contains(&p2) {
            return p2;
        }
        let (lo, hi) = response_interval(challenge).expect("positive challenge");
        // Walk down from hi, jumping over bad runs.
        let mut w = hi;
        while w >= lo {
            match bad.runs.iter().find(|(a, b)| *a <= w && w <= *b) {
                None => return w,
                Some((a, _)) => {
                    if *a <= lo {
                        break;
                    }
                    w = a - 1u32;
                }
            }
        }
        p2
    }
}

/// Uniformly random legal answers from a seeded generator.
pub struct RandomPowerator {
    rng: Mutex<ChaCha8Rng>,
}

impl RandomPowerator {
    pub fn new(seed: u64) -> Self {
        RandomPowerator {
            rng: Mutex::new(ChaCha8Rng::seed_from_u64(seed)),
        }
    }
}

impl PoweratorStrategy for RandomPowerator {
    fn name(&self) -> String {
        "random".into()
    }

    fn respond(&self, _pos: &Position, challenge: &Natural) -> Natural {
        use num_bigint::RandBigInt;
        let (lo, hi) = response_interval(challenge).expect("positive challenge");
        let mut rng = self.rng.lock().expect("rng lock");
        rng.gen_biguint_range(&lo, &(hi + 1u32))
    }
}

/// Uniform random challenge in `[1, max]`, for randomized play-outs.
pub fn random_challenge(rng: &mut impl Rng, max: u64) -> Natural {
    Natural::from(rng.gen_range(1..=max.max(1)))
}
