//! Arbitrary-precision number theory used throughout the game analysis.
//!
//! Everything here is exact: valuations, `lcm{1..n}`, perfect-power
//! decomposition and integer roots never touch floating point. Real-valued
//! logarithms are handled by [`exactlog`], which produces rigorous
//! fixed-point brackets instead of rounded values.

pub mod exactlog;
pub mod primes;
pub mod psi;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

pub use primes::{factorize, is_prime, sieve_primes, Factorization};
pub use psi::{chebyshev_psi, psi_exceeds_k_ln2, Psi, PsiTable};

/// Nonnegative arbitrary-precision integer.
pub type Natural = BigUint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("valuation of zero is infinite")]
    InfiniteValuation,
    #[error("{0} is not a valid prime")]
    NotPrime(String),
    #[error("argument must be positive")]
    Zero,
    #[error("root degree must be at least 1")]
    ZeroDegree,
}

/// `u = 2^l * v^r` with `v` odd and not a perfect power, or a pure power of two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerDecomposition {
    PowerOfTwo(u64),
    Odd {
        two_adic: u64,
        #[serde(serialize_with = "crate::ser::natural")]
        base: Natural,
        exponent: u64,
    },
}

impl PowerDecomposition {
    pub fn is_power_of_two(&self) -> bool {
        matches!(self, PowerDecomposition::PowerOfTwo(_))
    }

    pub fn two_adic(&self) -> u64 {
        match self {
            PowerDecomposition::PowerOfTwo(l) => *l,
            PowerDecomposition::Odd { two_adic, .. } => *two_adic,
        }
    }

    /// Rebuilds `u`.
    pub fn materialize(&self) -> Natural {
        match self {
            PowerDecomposition::PowerOfTwo(l) => Natural::one() << *l,
            PowerDecomposition::Odd {
                two_adic,
                base,
                exponent,
            } => pow(base, *exponent) << *two_adic,
        }
    }
}

/// `p`-adic valuation of `n`.
pub fn nu_p(p: &Natural, n: &Natural) -> Result<u64, NumError> {
    if n.is_zero() {
        return Err(NumError::InfiniteValuation);
    }
    if *p < Natural::from(2u32) {
        return Err(NumError::NotPrime(p.to_string()));
    }
    if *p == Natural::from(2u32) {
        return Ok(n.trailing_zeros().unwrap_or(0));
    }
    let mut count = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(count);
        }
        m = q;
        count += 1;
    }
}

/// `nu_p(m!)` by Legendre's sum `sum_i floor(m / p^i)`.
pub fn nu_p_factorial(p: u64, m: u64) -> u64 {
    assert!(p >= 2, "p must be prime");
    let mut total = 0;
    let mut q = m;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

/// Exact `base^exp` for a `u64` exponent.
pub fn pow(base: &Natural, exp: u64) -> Natural {
    let mut result = Natural::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

/// Balanced product, much faster than a left fold for long lists of bignums.
pub fn product(mut items: Vec<Natural>) -> Natural {
    if items.is_empty() {
        return Natural::one();
    }
    while items.len() > 1 {
        let mut next = Vec::with_capacity(items.len().div_ceil(2));
        let mut it = items.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        items = next;
    }
    items.pop().unwrap()
}

/// `m!` via a product tree.
pub fn factorial(m: u64) -> Natural {
    product((2..=m).map(Natural::from).collect())
}

/// Largest `e` with `p^e <= n` for `p >= 2`, `n >= 1`.
pub fn floor_log(p: u64, n: u64) -> u32 {
    let mut e = 0;
    let mut acc: u128 = 1;
    while acc * p as u128 <= n as u128 {
        acc *= p as u128;
        e += 1;
    }
    e
}

/// `lcm{1, ..., n}` as the product of `p^floor(log_p n)` over primes `p <= n`.
pub fn lcm_range(n: u64) -> Natural {
    if n < 2 {
        return Natural::one();
    }
    let parts = sieve_primes(n)
        .into_iter()
        .map(|p| pow(&Natural::from(p), floor_log(p, n) as u64))
        .collect();
    product(parts)
}

/// Splits `u` as `2^l * v^r` with `v` not a perfect power.
///
/// The odd part is peeled by repeated exact prime-degree roots, so no
/// factorization is needed even when `u` has large prime factors.
pub fn power_decompose(u: &Natural) -> Result<PowerDecomposition, NumError> {
    if u.is_zero() {
        return Err(NumError::Zero);
    }
    let l = u.trailing_zeros().unwrap_or(0);
    let mut odd = u >> l;
    if odd.is_one() {
        return Ok(PowerDecomposition::PowerOfTwo(l));
    }
    let mut r: u64 = 1;
    'outer: loop {
        let bits = odd.bits();
        // An odd q-th power >= 3 needs at least q * log2(3) bits.
        for q in sieve_primes(bits) {
            if let Some(root) = exact_root(&odd, q as u32) {
                odd = root;
                r *= q;
                continue 'outer;
            }
        }
        break;
    }
    Ok(PowerDecomposition::Odd {
        two_adic: l,
        base: odd,
        exponent: r,
    })
}

/// `Some(x)` when `n == x^d` exactly.
pub fn exact_root(n: &Natural, d: u32) -> Option<Natural> {
    let root = n.nth_root(d);
    (pow(&root, d as u64) == *n).then_some(root)
}

/// True when `n = x^k` for some `k >= 2`.
pub fn is_perfect_power(n: &Natural) -> bool {
    if *n <= Natural::one() {
        return true;
    }
    sieve_primes(n.bits())
        .into_iter()
        .any(|q| exact_root(n, q as u32).is_some())
}

/// Smallest `d >= 2` that does not divide `r`.
pub fn least_nondivisor(r: &Natural) -> Result<u64, NumError> {
    if r.is_zero() {
        return Err(NumError::Zero);
    }
    let mut d = 2u64;
    while (r % d).is_zero() {
        d += 1;
    }
    Ok(d)
}

/// `floor(u^(1/d))`.
pub fn integer_root(u: &Natural, d: u32) -> Result<Natural, NumError> {
    if d == 0 {
        return Err(NumError::ZeroDegree);
    }
    Ok(u.nth_root(d))
}

/// No odd divisor above 1; over the naturals this is exactly the powers of two.
pub fn is_oddless(u: &Natural) -> bool {
    if u.is_zero() {
        return false;
    }
    let tz = u.trailing_zeros().unwrap_or(0);
    (u >> tz).is_one()
}

/// `floor(log2 x)` for `x >= 1`; 0 for `x <= 1`.
pub fn floor_log2(x: &Natural) -> u64 {
    x.bits().saturating_sub(1)
}

/// `ceil(log2 x)` with the convention `log x = 0` for `x <= 1`.
pub fn ceil_log2(x: &Natural) -> u64 {
    if *x <= Natural::one() {
        0
    } else {
        (x - 1u32).bits()
    }
}

pub fn ceil_log2_u64(x: u64) -> u64 {
    ceil_log2(&Natural::from(x))
}

pub fn floor_log2_u64(x: u64) -> u64 {
    floor_log2(&Natural::from(x))
}

/// `ceil(log^(t) x)`: the `t`-fold iterated `log2` with the clamp at 0,
/// rounded up. Because every ceiling threshold `2^c` is an integer,
/// `ceil(log(log x)) == ceil(log(ceil(log x)))` and the chain stays in
/// integers.
pub fn ceil_iterated_log2(x: &Natural, times: u32) -> u64 {
    if times == 0 {
        return x.to_u64().unwrap_or(u64::MAX);
    }
    let mut v = ceil_log2(x);
    for _ in 1..times {
        v = ceil_log2_u64(v);
    }
    v
}

/// Least `c` with `base^c >= x`, i.e. `ceil(log_base x)` for `x >= 1`.
pub fn ceil_log(base: u64, x: &Natural) -> u64 {
    let b = Natural::from(base);
    let mut acc = Natural::one();
    let mut c = 0;
    while acc < *x {
        acc *= &b;
        c += 1;
    }
    c
}

/// Odd part of `n > 0`.
pub fn odd_part(n: &Natural) -> Natural {
    n >> n.trailing_zeros().unwrap_or(0)
}
