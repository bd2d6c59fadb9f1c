//! Numbers `u = 2^l v^r` whose exponents may be too large to expand into
//! `u` itself, with factorial exponents kept in factorial form so their
//! prime valuations come from Legendre's formula.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::numtheory::{
    factorial, is_perfect_power, least_nondivisor, nu_p, nu_p_factorial, pow, power_decompose, Natural,
    PowerDecomposition,
};

/// Largest `m` for which `m!` may be expanded.
pub const MAX_EXPANDED_FACTORIAL: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("base {0} must be odd, at least 3 and not a perfect power")]
    BadBase(String),
    #[error("{0} is a power of two")]
    PowerOfTwo(String),
    #[error("exponent r must be positive")]
    ZeroExponent,
    #[error("{0}! is too large to expand")]
    TooLarge(u64),
    #[error("value has {0} bits, too many to expand")]
    TooManyBits(u64),
}

/// A nonnegative exponent, either given outright or as `m!`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exponent {
    Value(Natural),
    Factorial(u64),
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Value(n) => write!(f, "{n}"),
            Exponent::Factorial(m) => write!(f, "fact({m})"),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<u64> for Exponent {
    fn from(x: u64) -> Self {
        Exponent::Value(Natural::from(x))
    }
}

impl From<Natural> for Exponent {
    fn from(x: Natural) -> Self {
        Exponent::Value(x)
    }
}

impl Exponent {
    pub fn is_zero(&self) -> bool {
        matches!(self, Exponent::Value(n) if n.is_zero())
    }

    pub fn value(&self) -> Result<Natural, SymbolicError> {
        match self {
            Exponent::Value(n) => Ok(n.clone()),
            Exponent::Factorial(m) if *m <= MAX_EXPANDED_FACTORIAL => Ok(factorial(*m)),
            Exponent::Factorial(m) => Err(SymbolicError::TooLarge(*m)),
        }
    }

    /// `nu_p` of the exponent for a prime `p`; zero is treated as having
    /// infinite valuation and reported as `u64::MAX`.
    pub fn nu_p(&self, p: u64) -> u64 {
        match self {
            Exponent::Value(n) if n.is_zero() => u64::MAX,
            Exponent::Value(n) => nu_p(&Natural::from(p), n).expect("nonzero"),
            Exponent::Factorial(m) => nu_p_factorial(p, *m),
        }
    }

    /// Whether `d` divides the exponent, decided prime by prime.
    pub fn divisible_by(&self, d: u64) -> bool {
        match self {
            Exponent::Value(n) => (n % d).is_zero(),
            Exponent::Factorial(_) => small_factors(d).iter().all(|&(p, e)| self.nu_p(p) >= e),
        }
    }

    /// Least `d >= 2` not dividing the exponent.
    pub fn least_nondivisor(&self) -> u64 {
        match self {
            Exponent::Value(n) => least_nondivisor(n).expect("positive exponent"),
            Exponent::Factorial(_) => (2..).find(|&d| !self.divisible_by(d)).expect("unbounded search"),
        }
    }

    /// Compares with `x`, expanding factorials only as far as needed.
    pub fn cmp_natural(&self, x: &Natural) -> Ordering {
        match self {
            Exponent::Value(n) => n.cmp(x),
            Exponent::Factorial(m) => {
                let mut acc = Natural::one();
                for i in 2..=*m {
                    acc *= i;
                    if acc > *x {
                        return Ordering::Greater;
                    }
                }
                acc.cmp(x)
            }
        }
    }
}

/// Prime factorization of a machine word by trial division.
pub fn small_factors(mut d: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            let mut e = 0;
            while d.is_multiple_of(p) {
                d /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

/// `u = 2^l v^r` with `v` odd, at least 3 and not a perfect power, `r > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicPow {
    #[serde(serialize_with = "crate::ser::natural")]
    pub v: Natural,
    pub l: Exponent,
    pub r: Exponent,
}

impl fmt::Display for SymbolicPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{} * {}^{}", self.l, self.v, self.r)
    }
}

impl SymbolicPow {
    pub fn new(v: Natural, l: Exponent, r: Exponent) -> Result<Self, SymbolicError> {
        if v.is_even() || v < Natural::from(3u32) || is_perfect_power(&v) {
            return Err(SymbolicError::BadBase(v.to_string()));
        }
        if r.is_zero() {
            return Err(SymbolicError::ZeroExponent);
        }
        Ok(SymbolicPow { v, l, r })
    }

    /// Decomposes a concrete `u`; powers of two are rejected.
    pub fn from_natural(u: &Natural) -> Result<Self, SymbolicError> {
        match power_decompose(u) {
            Ok(PowerDecomposition::Odd {
                two_adic,
                base,
                exponent,
            }) => Ok(SymbolicPow {
                v: base,
                l: Exponent::from(two_adic),
                r: Exponent::from(exponent),
            }),
            _ => Err(SymbolicError::PowerOfTwo(u.to_string())),
        }
    }

    /// Expands `u` when it has at most `max_bits` bits.
    pub fn materialize(&self, max_bits: u64) -> Result<Natural, SymbolicError> {
        let l = self.l.value()?;
        let r = self.r.value()?;
        let (Some(l), Some(r)) = (l.to_u64(), r.to_u64()) else {
            return Err(SymbolicError::TooManyBits(u64::MAX));
        };
        let estimate = l.saturating_add(r.saturating_mul(self.v.bits()));
        if estimate > max_bits {
            return Err(SymbolicError::TooManyBits(estimate));
        }
        Ok(pow(&self.v, r) << l)
    }
}
