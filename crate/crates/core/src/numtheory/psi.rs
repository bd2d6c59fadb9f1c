//! Chebyshev's `psi(n) = sum over prime powers p^k <= n of ln p = ln lcm{1..n}`.
//!
//! Two independent routes are provided. [`PsiTable`] accumulates rigorous
//! fixed-point brackets of `ln p` over prime powers, which makes sweeping
//! every `n` up to a million cheap. [`chebyshev_psi`] takes the logarithm of
//! `lcm_range(n)` directly. [`psi_exceeds_k_ln2`] avoids logarithms
//! altogether: `psi(n) > k ln 2` iff `L(n) > 2^k`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::exactlog::{ln_natural, Bracket};
use super::{lcm_range, sieve_primes, Natural};

/// Bracketed value of `psi(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psi {
    pub n: u64,
    pub value: Bracket,
}

impl Psi {
    /// Compares `psi(n)` with `a * n + b`; `None` when the bracket is too
    /// wide to decide. Rounding is directed so any `Some` answer is certain.
    pub fn cmp_linear(&self, a: &BigRational, b: &BigRational) -> Option<Ordering> {
        let target = a * BigRational::from_integer(BigInt::from(self.n)) + b;
        cmp_bracket_rational(&self.value, &target)
    }

    pub fn approx(&self) -> f64 {
        self.value.to_f64()
    }
}

fn cmp_bracket_rational(value: &Bracket, target: &BigRational) -> Option<Ordering> {
    let scale = BigInt::one() << value.bits;
    let numer = target.numer() * &scale;
    let denom = target.denom();
    // value < target  <=>  hi * denom < numer (denominators are positive)
    if &value.hi * denom < numer {
        Some(Ordering::Less)
    } else if &value.lo * denom > numer {
        Some(Ordering::Greater)
    } else if value.lo == value.hi && &value.lo * denom == numer {
        Some(Ordering::Equal)
    } else {
        None
    }
}

/// `psi(n)` as `ln lcm_range(n)`, at `bits` fractional bits.
pub fn chebyshev_psi(n: u64, bits: u64) -> Psi {
    let l = lcm_range(n);
    Psi {
        n,
        value: ln_natural(&l, bits),
    }
}

/// `psi(n) > k ln 2`, decided exactly as `lcm_range(n) > 2^k`.
pub fn psi_exceeds_k_ln2(n: u64, k: u64) -> bool {
    lcm_range(n) > (Natural::one() << k)
}

/// Incremental brackets of `psi(n)` for every `n` up to a fixed limit.
pub struct PsiTable {
    limit: u64,
    bits: u64,
    /// `(q, ln p)` for every prime power `q = p^k <= limit`, sorted by `q`.
    jumps: Vec<(u64, Bracket)>,
}

impl PsiTable {
    pub fn new(limit: u64, bits: u64) -> Self {
        let mut jumps = Vec::new();
        for p in sieve_primes(limit) {
            let lnp = ln_natural(&Natural::from(p), bits);
            let mut q = p;
            loop {
                jumps.push((q, lnp.clone()));
                match q.checked_mul(p) {
                    Some(next) if next <= limit => q = next,
                    _ => break,
                }
            }
        }
        jumps.sort_by_key(|(q, _)| *q);
        PsiTable { limit, bits, jumps }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Calls `visit` with `psi(n)` for `n = 1..=limit` in increasing order.
    pub fn for_each(&self, mut visit: impl FnMut(&Psi)) {
        let mut acc = Bracket::exact(BigInt::from(0), self.bits);
        let mut next = 0;
        for n in 1..=self.limit {
            while next < self.jumps.len() && self.jumps[next].0 == n {
                acc = acc.add(&self.jumps[next].1);
                next += 1;
            }
            visit(&Psi {
                n,
                value: acc.clone(),
            });
        }
    }

    /// `psi(n)` for a single `n <= limit`.
    pub fn at(&self, n: u64) -> Psi {
        assert!(n <= self.limit);
        let mut acc = Bracket::exact(BigInt::from(0), self.bits);
        for (q, lnp) in &self.jumps {
            if *q > n {
                break;
            }
            acc = acc.add(lnp);
        }
        Psi { n, value: acc }
    }
}

/// Outcome of checking `lower_a * n + lower_b < psi(n) < upper_a * n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub checked: u64,
    pub lower_violations: Vec<u64>,
    pub upper_violations: Vec<u64>,
    pub undecided: Vec<u64>,
}

impl SandwichReport {
    pub fn passed(&self) -> bool {
        self.lower_violations.is_empty() && self.upper_violations.is_empty() && self.undecided.is_empty()
    }
}

/// Nagura's constants: `0.916 n - 2.318 < psi(n) < 1.086 n`.
pub fn nagura_bounds() -> (BigRational, BigRational, BigRational) {
    let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    (r(916, 1000), r(-2318, 1000), r(1086, 1000))
}

/// Checks the sandwich at every `n` in `2..=limit` accepted by `filter`.
pub fn check_sandwich(table: &PsiTable, filter: impl Fn(u64) -> bool) -> SandwichReport {
    let (la, lb, ua) = nagura_bounds();
    let zero = BigRational::from_integer(BigInt::from(0));
    let mut report = SandwichReport {
        checked: 0,
        lower_violations: Vec::new(),
        upper_violations: Vec::new(),
        undecided: Vec::new(),
    };
    table.for_each(|psi| {
        if psi.n < 2 || !filter(psi.n) {
            return;
        }
        report.checked += 1;
        match psi.cmp_linear(&la, &lb) {
            Some(Ordering::Greater) => {}
            Some(_) => report.lower_violations.push(psi.n),
            None => report.undecided.push(psi.n),
        }
        match psi.cmp_linear(&ua, &zero) {
            Some(Ordering::Less) => {}
            Some(_) => report.upper_violations.push(psi.n),
            None => report.undecided.push(psi.n),
        }
    });
    report
}
