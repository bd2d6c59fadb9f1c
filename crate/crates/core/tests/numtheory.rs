use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use powg::numtheory::exactlog::{ceil_mul_log2, floor_mul_log2};
use powg::numtheory::primes::is_prime_u64;
use powg::numtheory::{
    ceil_iterated_log2, ceil_log2, factorize, floor_log2, is_oddless, is_perfect_power, lcm_range,
    least_nondivisor, nu_p, nu_p_factorial, power_decompose, sieve_primes,
};
use powg::{Natural, PowerDecomposition};
use proptest::prelude::*;

fn n(x: u64) -> Natural {
    Natural::from(x)
}

fn trial_prime(x: u64) -> bool {
    x >= 2 && (2..).take_while(|d| d * d <= x).all(|d| !x.is_multiple_of(d))
}

/// `x = b^e` for some `b >= 2, e >= 2`, by searching bases.
fn perfect_power_oracle(x: u64) -> bool {
    if x < 4 {
        return x <= 1;
    }
    (2u64..).take_while(|b| b * b <= x).any(|b| {
        let mut p = b * b;
        while p < x {
            match p.checked_mul(b) {
                Some(q) => p = q,
                None => return false,
            }
        }
        p == x
    })
}

#[test]
fn sieve_matches_trial_division() {
    let primes = sieve_primes(5000);
    let expected: Vec<u64> = (0..=5000).filter(|&x| trial_prime(x)).collect();
    assert_eq!(primes, expected);
}

#[test]
fn lcm_range_matches_pairwise_lcm() {
    let mut acc = BigUint::from(1u32);
    for m in 1..=300u64 {
        acc = acc.lcm(&n(m));
        assert_eq!(lcm_range(m), acc, "m = {m}");
    }
}

#[test]
fn factorial_valuations_match_direct_sum() {
    for p in [2u64, 3, 5, 7, 13] {
        let mut total = 0;
        for m in 1..=2000u64 {
            let mut x = m;
            while x % p == 0 {
                x /= p;
                total += 1;
            }
            assert_eq!(nu_p_factorial(p, m), total, "p = {p}, m = {m}");
        }
    }
}

#[test]
fn ceil_mul_log2_small_cases() {
    for v in [3u64, 5, 7, 9, 15, 27] {
        for m in 1..=60u64 {
            let power = num_traits::pow(n(v), m as usize);
            // least c with 2^c >= v^m
            let c = if power.count_ones() == 1 {
                power.bits() - 1
            } else {
                power.bits()
            };
            assert_eq!(ceil_mul_log2(&n(m), &n(v)), n(c), "v = {v}, m = {m}");
            assert_eq!(floor_mul_log2(&n(m), &n(v)), n(power.bits() - 1));
        }
    }
}

proptest! {
    #[test]
    fn decomposition_rebuilds_and_is_primitive(x in 1u64..u64::MAX) {
        let d = power_decompose(&n(x)).unwrap();
        prop_assert_eq!(d.materialize(), n(x));
        prop_assert_eq!(d.two_adic(), x.trailing_zeros() as u64);
        match d {
            PowerDecomposition::PowerOfTwo(_) => prop_assert!(x.is_power_of_two()),
            PowerDecomposition::Odd { base, exponent, .. } => {
                prop_assert!(base.is_odd());
                prop_assert!(!is_perfect_power(&base));
                let odd = x >> x.trailing_zeros();
                // the exponent is maximal: the odd part is an e-th power only for e | exponent
                for e in 2..=64u64 {
                    let root = (odd as f64).powf(1.0 / e as f64).round() as u64;
                    let is_pow = (root.saturating_sub(1)..=root + 1)
                        .any(|b| b > 1 && b.checked_pow(e as u32) == Some(odd));
                    prop_assert_eq!(is_pow, exponent % e == 0, "odd = {}, e = {}", odd, e);
                }
            }
        }
    }

    #[test]
    fn perfect_power_detection(x in 1u64..2_000_000) {
        prop_assert_eq!(is_perfect_power(&n(x)), perfect_power_oracle(x));
    }

    #[test]
    fn two_power_logs(x in 1u64..u64::MAX) {
        let fl = 63 - x.leading_zeros() as u64;
        prop_assert_eq!(floor_log2(&n(x)), fl);
        let cl = if x.is_power_of_two() { fl } else { fl + 1 };
        prop_assert_eq!(ceil_log2(&n(x)), cl);
        prop_assert_eq!(is_oddless(&n(x)), x.is_power_of_two());
    }

    #[test]
    fn iterated_log_matches_real_chain(x in 2u64..1 << 50, t in 1u32..4) {
        // the chain in f64 with clamping, rounded up; skip values where
        // rounding noise could move a ceiling
        let mut v = x as f64;
        for _ in 0..t {
            v = if v <= 1.0 { 0.0 } else { v.log2() };
        }
        let frac = v - v.floor();
        prop_assume!(frac > 1e-9 && frac < 1.0 - 1e-9 || v == 0.0);
        prop_assert_eq!(ceil_iterated_log2(&n(x), t), v.ceil() as u64);
    }

    #[test]
    fn factorization_multiplies_back(x in 2u64..1_000_000_000_000) {
        let f = factorize(&n(x));
        prop_assert_eq!(f.product(), n(x));
        for (p, e) in &f.factors {
            prop_assert!(*e >= 1);
            prop_assert!(trial_prime(p.to_u64().unwrap()));
        }
    }

    #[test]
    fn primality(x in 0u64..3_000_000) {
        prop_assert_eq!(is_prime_u64(x), trial_prime(x));
    }

    #[test]
    fn valuation(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), a in 0u32..20, m in 1u64..1000) {
        prop_assume!(m % p != 0);
        let x = n(m) * num_traits::pow(n(p), a as usize);
        prop_assert_eq!(nu_p(&n(p), &x).unwrap(), a as u64);
    }

    #[test]
    fn least_nondivisor_is_least(r in 1u64..1 << 40) {
        let d = least_nondivisor(&n(r)).unwrap();
        prop_assert!(r % d != 0);
        prop_assert!((2..d).all(|e| r % e == 0));
    }
}
