//! Sieving, primality and factorization.
//!
//! Inputs in this project almost always have small prime factors, so
//! factorization is trial division up to a fixed bound followed by
//! Pollard–Brent on whatever cofactor remains.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::Natural;

const TRIAL_LIMIT: u64 = 1 << 16;

/// Bases that make Miller–Rabin deterministic below 3.3 * 10^24, and a
/// strong probabilistic test above that.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// All primes `<= n`.
pub fn sieve_primes(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "crate::ser::natural_pairs")]
    pub factors: Vec<(Natural, u32)>,
}

impl Factorization {
    pub fn product(&self) -> Natural {
        self.factors
            .iter()
            .fold(Natural::one(), |acc, (p, e)| acc * super::pow(p, *e as u64))
    }
}

pub fn is_prime(n: &Natural) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    MR_BASES.iter().all(|&a| miller_rabin_round(n, &BigUint::from(a)))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let n128 = n as u128;
    let d0 = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'bases: for &a in &MR_BASES[..12] {
        let mut x = powmod_u64(a, d0, n) as u128;
        if x == 1 || x == n128 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n128;
            if x == n128 - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn powmod_u64(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut r: u128 = 1;
    let mut b = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

fn miller_rabin_round(n: &Natural, a: &Natural) -> bool {
    let one = Natural::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

fn pollard_brent(n: &Natural, c: u64) -> Option<Natural> {
    let one = Natural::one();
    let c = Natural::from(c);
    let f = |x: &Natural| (x * x + &c) % n;
    let m = 128u64;
    let mut y = Natural::from(2u32);
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if g == *n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g != one {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

fn split_large(n: Natural, out: &mut Vec<Natural>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    if let Some(root) = super::exact_root(&n, 2) {
        split_large(root.clone(), out);
        split_large(root, out);
        return;
    }
    for c in 1.. {
        if let Some(d) = pollard_brent(&n, c) {
            let other = &n / &d;
            split_large(d, out);
            split_large(other, out);
            return;
        }
        assert!(c < 64, "Pollard-Brent failed to split {n}");
    }
}

/// Factorization of `n >= 1` (`1` gives the empty factorization).
pub fn factorize(n: &Natural) -> Factorization {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut m = n.clone();
    let mut factors: Vec<(Natural, u32)> = Vec::new();
    let tz = m.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        factors.push((Natural::from(2u32), tz as u32));
        m >>= tz;
    }
    let mut p = 3u64;
    while p < TRIAL_LIMIT {
        if m.is_one() {
            break;
        }
        if let Some(small) = m.to_u64() {
            if p * p > small {
                break;
            }
        }
        let mut e = 0u32;
        loop {
            let (q, r) = m.div_rem(&Natural::from(p));
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            factors.push((Natural::from(p), e));
        }
        p += 2;
    }
    if !m.is_one() {
        let mut rest = Vec::new();
        split_large(m, &mut rest);
        rest.sort();
        for q in rest {
            match factors.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => factors.push((q, 1)),
            }
        }
    }
    Factorization { factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small() {
        assert_eq!(sieve_primes(1), Vec::<u64>::new());
        assert_eq!(sieve_primes(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(sieve_primes(100_000).len(), 9592);
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let primes = sieve_primes(200_000);
        let mut idx = 0;
        for n in 0..=200_000u64 {
            let expected = idx < primes.len() && primes[idx] == n;
            if expected {
                idx += 1;
            }
            assert_eq!(is_prime_u64(n), expected, "n={n}");
        }
    }

    #[test]
    fn large_primes_and_composites() {
        let m61 = (Natural::one() << 61u32) - 1u32;
        let m89 = (Natural::one() << 89u32) - 1u32;
        assert!(is_prime(&m61));
        assert!(is_prime(&m89));
        assert!(!is_prime(&(&m61 * &m89)));
        // Carmichael number
        assert!(!is_prime(&Natural::from(3_215_031_751u64)));
    }

    #[test]
    fn factorization_reconstructs() {
        for n in 1..=20_000u64 {
            let f = factorize(&Natural::from(n));
            assert_eq!(f.product(), Natural::from(n));
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors.iter().all(|(p, e)| is_prime(p) && *e > 0));
        }
    }

    #[test]
    fn factorization_with_large_cofactors() {
        let p = Natural::from(1_000_000_007u64);
        let q = Natural::from(998_244_353u64);
        let n = &p * &p * &q * 12u32;
        let f = factorize(&n);
        assert_eq!(
            f.factors,
            vec![
                (Natural::from(2u32), 2),
                (Natural::from(3u32), 1),
                (q.clone(), 1),
                (p.clone(), 2)
            ]
        );
    }
}
