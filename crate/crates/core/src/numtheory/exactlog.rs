//! Rigorous logarithm brackets in fixed point.
//!
//! A [`Bracket`] is a pair of integers `lo <= hi` together with a precision
//! `W`, asserting `lo * 2^-W <= value <= hi * 2^-W`. Natural logarithms are
//! built from the series `atanh(z) = sum z^(2i+1) / (2i+1)`, truncated with
//! every rounding directed outward, so each bracket is a proof and not an
//! approximation. Decisions that feed discrete bounds refine the precision
//! until the bracket no longer straddles the threshold.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Natural;

/// Closed interval `[lo, hi] * 2^-bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u64,
}

impl Bracket {
    pub fn exact(value: BigInt, bits: u64) -> Self {
        Bracket {
            lo: value.clone(),
            hi: value,
            bits,
        }
    }

    pub fn add(&self, other: &Bracket) -> Bracket {
        assert_eq!(self.bits, other.bits);
        Bracket {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            bits: self.bits,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Bracket {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            Bracket {
                lo: b,
                hi: a,
                bits: self.bits,
            }
        } else {
            Bracket {
                lo: a,
                hi: b,
                bits: self.bits,
            }
        }
    }

    /// `self / other` for a strictly positive `other`.
    pub fn div_positive(&self, other: &Bracket) -> Bracket {
        assert_eq!(self.bits, other.bits);
        assert!(other.lo.is_positive(), "divisor bracket must be positive");
        let shift = |x: &BigInt| x << self.bits;
        let lo_den = if self.lo.is_negative() {
            &other.lo
        } else {
            &other.hi
        };
        let hi_den = if self.hi.is_negative() {
            &other.hi
        } else {
            &other.lo
        };
        Bracket {
            lo: shift(&self.lo).div_floor(lo_den),
            hi: ceil_div(&shift(&self.hi), hi_den),
            bits: self.bits,
        }
    }

    /// Outward rounding to a coarser precision.
    pub fn round_to(&self, bits: u64) -> Bracket {
        assert!(bits <= self.bits);
        let d = self.bits - bits;
        Bracket {
            lo: &self.lo >> d,
            hi: ceil_div(&self.hi, &(BigInt::one() << d)),
            bits,
        }
    }

    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// Floor of the lower end and ceiling of the upper end, as integers.
    pub fn floor_lo(&self) -> BigInt {
        self.lo.div_floor(&(BigInt::one() << self.bits))
    }

    pub fn ceil_hi(&self) -> BigInt {
        ceil_div(&self.hi, &(BigInt::one() << self.bits))
    }

    /// Compares the bracketed value with the integer `c`, or `None` when the
    /// bracket contains `c`.
    pub fn cmp_int(&self, c: &BigInt) -> Option<Ordering> {
        let scaled = c << self.bits;
        if self.hi < scaled {
            Some(Ordering::Less)
        } else if self.lo > scaled {
            Some(Ordering::Greater)
        } else if self.lo == self.hi {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mid: BigInt = (&self.lo + &self.hi) >> 1u32;
        let shift = mid.bits().saturating_sub(60);
        let top = (&mid >> shift).to_string().parse::<f64>().unwrap_or(0.0);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// `atanh(a/b)` for `0 <= a/b <= 1/2`, at precision `bits`.
fn atanh_nonneg(a: &Natural, b: &Natural, bits: u64) -> Bracket {
    assert!(a * 2u32 <= *b, "atanh argument too large");
    if a.is_zero() {
        return Bracket::exact(BigInt::zero(), bits);
    }
    let a2 = a * a;
    let b2 = b * b;
    // t_i approximates 2^bits (a/b)^(2i+1) from below, with error < i+1.
    let mut t: Natural = (a << bits) / b;
    let mut lo = Natural::zero();
    let mut i: u64 = 0;
    while !t.is_zero() {
        lo += &t / (2 * i + 1);
        t = (&t * &a2) / &b2;
        i += 1;
    }
    // Each truncated term loses less than 2 units; the tail after the first
    // vanishing iterate is below 2(i+1) since (a/b)^2 <= 1/4.
    let slack = Natural::from(4 * i + 4);
    let hi = &lo + slack;
    Bracket {
        lo: BigInt::from(lo),
        hi: BigInt::from(hi),
        bits,
    }
}

fn atanh_signed(a: &BigInt, b: &Natural, bits: u64) -> Bracket {
    let mag = atanh_nonneg(a.magnitude(), b, bits);
    if a.sign() == Sign::Minus {
        Bracket {
            lo: -mag.hi,
            hi: -mag.lo,
            bits,
        }
    } else {
        mag
    }
}

/// `ln 2 = 2 atanh(1/3)`.
pub fn ln2(bits: u64) -> Bracket {
    let b = atanh_nonneg(&Natural::one(), &Natural::from(3u32), bits);
    b.scale(&BigInt::from(2))
}

/// `ln(num/den)` for positive `num`, `den`.
pub fn ln_ratio(num: &Natural, den: &Natural, bits: u64) -> Bracket {
    assert!(!num.is_zero() && !den.is_zero(), "logarithm of zero");
    // Pick k so that num / (den 2^k) lies in [2/3, 4/3], keeping |z| <= 1/7.
    let mut k: i64 = num.bits() as i64 - den.bits() as i64;
    let (mut n2, mut d2) = rescale(num, den, k);
    while &n2 * 3u32 > &d2 * 4u32 {
        k += 1;
        (n2, d2) = rescale(num, den, k);
    }
    while &n2 * 3u32 < &d2 * 2u32 {
        k -= 1;
        (n2, d2) = rescale(num, den, k);
    }
    let z_num = BigInt::from(n2.clone()) - BigInt::from(d2.clone());
    let z_den = &n2 + &d2;
    // Guard bits so that the error in ln 2, multiplied by k, stays below one unit.
    let work = bits + 16 + 64 - (k.unsigned_abs().leading_zeros() as u64);
    let series = atanh_signed(&z_num, &z_den, work).scale(&BigInt::from(2));
    ln2(work).scale(&BigInt::from(k)).add(&series).round_to(bits)
}

fn rescale(num: &Natural, den: &Natural, k: i64) -> (Natural, Natural) {
    if k >= 0 {
        (num.clone(), den << (k as u64))
    } else {
        (num << ((-k) as u64), den.clone())
    }
}

/// `ln x` for `x >= 1`. Very large inputs are truncated to their leading
/// bits first; the truncation error is absorbed into the bracket.
pub fn ln_natural(x: &Natural, bits: u64) -> Bracket {
    assert!(!x.is_zero(), "logarithm of zero");
    let keep = bits + 16;
    if x.bits() <= keep {
        return ln_ratio(x, &Natural::one(), bits);
    }
    let shift = x.bits() - keep;
    let top = x >> shift;
    let top1 = &top + 1u32;
    let work = bits + 16 + 64 - shift.leading_zeros() as u64;
    let ln2b = ln2(work).scale(&BigInt::from(shift));
    let lo = ln_ratio(&top, &Natural::one(), work).add(&ln2b);
    let hi = ln_ratio(&top1, &Natural::one(), work).add(&ln2b);
    Bracket {
        lo: lo.lo,
        hi: hi.hi,
        bits: work,
    }
    .round_to(bits)
}

/// `log2 x` for `x >= 1`.
pub fn log2_natural(x: &Natural, bits: u64) -> Bracket {
    if x.is_one() {
        return Bracket::exact(BigInt::zero(), bits);
    }
    let tz = x.trailing_zeros().unwrap_or(0);
    if (x >> tz).is_one() {
        return Bracket::exact(BigInt::from(tz) << bits, bits);
    }
    // Guard bits absorb the loss in the division.
    let work = bits + 8;
    let q = ln_natural(x, work).div_positive(&ln2(work));
    Bracket {
        lo: q.lo >> 8u32,
        hi: ceil_div(&q.hi, &BigInt::from(256)),
        bits,
    }
}

/// Compares `m * log2 v` against the integer `c`, refining precision until
/// the answer is certain. Terminates whenever `m log2 v != c`, which holds
/// automatically for `v` that is not a power of two and `m > 0`.
pub fn cmp_mul_log2(m: &Natural, v: &Natural, c: &BigInt) -> Ordering {
    let mut bits = 64 + m.bits();
    loop {
        let b = log2_natural(v, bits).scale(&BigInt::from(m.clone()));
        if let Some(ord) = b.cmp_int(c) {
            return ord;
        }
        bits *= 2;
    }
}

/// `ceil(m * log2 v)` for `m >= 0`, `v >= 1`.
pub fn ceil_mul_log2(m: &Natural, v: &Natural) -> Natural {
    if m.is_zero() || v.is_one() {
        return Natural::zero();
    }
    let tz = v.trailing_zeros().unwrap_or(0);
    if (v >> tz).is_one() {
        return m * tz;
    }
    let mut bits = 64 + m.bits();
    loop {
        let b = log2_natural(v, bits).scale(&BigInt::from(m.clone()));
        let up = b.ceil_hi();
        // The ceiling is settled once both ends round up to the same integer.
        if ceil_div(&b.lo, &(BigInt::one() << bits)) == up {
            return up.to_biguint().expect("nonnegative");
        }
        bits *= 2;
    }
}

/// `floor(m * log2 v)`.
pub fn floor_mul_log2(m: &Natural, v: &Natural) -> Natural {
    if m.is_zero() || v.is_one() {
        return Natural::zero();
    }
    let tz = v.trailing_zeros().unwrap_or(0);
    if (v >> tz).is_one() {
        return m * tz;
    }
    // Non-integer because log2 v is irrational.
    ceil_mul_log2(m, v) - 1u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::ToBigInt;

    fn n(x: u64) -> Natural {
        Natural::from(x)
    }

    fn contains(b: &Bracket, x: f64) -> bool {
        let scale = 2f64.powi(b.bits as i32);
        let lo = b.lo.to_string().parse::<f64>().unwrap() / scale;
        let hi = b.hi.to_string().parse::<f64>().unwrap() / scale;
        let tol = 1e-12 * x.abs().max(1.0);
        lo - tol <= x && x <= hi + tol
    }

    #[test]
    fn ln2_digits() {
        let b = ln2(200);
        // ln 2 = 0.693147180559945309417232121458176568...
        let expect: BigInt = "693147180559945309417232121458176568".parse().unwrap();
        let ten36 = BigInt::from(10u32).pow(36);
        assert!((&b.lo * &ten36) >> 200u32 <= expect);
        assert!(ceil_div(&(&b.hi * &ten36), &(BigInt::one() << 200u32)) >= expect);
        assert!(b.width() < BigInt::from(1000));
    }

    #[test]
    fn ln_brackets_contain_float_values() {
        for x in 1..2000u64 {
            let b = ln_natural(&n(x), 60);
            assert!(contains(&b, (x as f64).ln()), "x={x}");
            assert!(b.lo <= b.hi);
        }
        let b = ln_ratio(&n(7), &n(1000), 60);
        assert!(contains(&b, (0.007f64).ln()));
    }

    #[test]
    fn ln_of_huge_values() {
        let x = super::super::pow(&n(3), 5000);
        let b = ln_natural(&x, 80);
        assert!(contains(&b, 5000.0 * 3f64.ln()));
        assert!(b.width() < BigInt::from(16));
    }

    #[test]
    fn log2_brackets() {
        for x in 1..5000u64 {
            let b = log2_natural(&n(x), 70);
            assert!(contains(&b, (x as f64).log2()), "x={x}");
        }
        assert_eq!(log2_natural(&n(1024), 10).lo, BigInt::from(10 << 10));
    }

    #[test]
    fn ceiling_of_scaled_logs_matches_exact_powers() {
        // ceil(m log2 v) is the least c with 2^c >= v^m.
        for v in [3u64, 5, 7, 9, 15, 17, 255] {
            for m in 0..200u64 {
                let vm = super::super::pow(&n(v), m);
                let expect = super::super::ceil_log2(&vm);
                assert_eq!(ceil_mul_log2(&n(m), &n(v)), n(expect), "v={v} m={m}");
                if m > 0 {
                    assert_eq!(floor_mul_log2(&n(m), &n(v)), n(super::super::floor_log2(&vm)));
                }
            }
        }
        assert_eq!(ceil_mul_log2(&n(5), &n(8)), n(15));
        assert_eq!(ceil_mul_log2(&n(15120), &n(3)), n(23965));
    }

    #[test]
    fn comparisons_against_integers() {
        let c = 100_000_000u64.to_bigint().unwrap();
        // 63092 * log2 3 = 99998.45..., 63093 * log2 3 = 100000.039...
        assert_eq!(
            cmp_mul_log2(&n(63092), &n(3), &BigInt::from(100_000)),
            Ordering::Less
        );
        assert_eq!(
            cmp_mul_log2(&n(63093), &n(3), &BigInt::from(100_000)),
            Ordering::Greater
        );
        assert_eq!(cmp_mul_log2(&n(100_000_000), &n(3), &c), Ordering::Greater);
    }

    #[test]
    fn refinement_never_changes_answers() {
        for v in [3u64, 5, 11] {
            for m in [1u64, 17, 1000, 123_457] {
                let low = log2_natural(&n(v), 64).scale(&BigInt::from(m));
                let high = log2_natural(&n(v), 640).scale(&BigInt::from(m));
                let a = low.floor_lo();
                let b = high.floor_lo();
                if low.ceil_hi() - &a == BigInt::one() {
                    assert_eq!(a, b);
                }
            }
        }
    }
}
