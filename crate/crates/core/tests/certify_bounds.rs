use num_bigint::BigUint;
use num_integer::Integer;
use powg::bounds::{combine_upper, upper_cor57, upper_thm56, Upper};
use powg::certify::{
    check_certificate, d_k, dnb_table, l1_ball_size, CertificateQuery, Exponent, SymbolicPow,
};
use powg::exactsolve::{bounded_value, wins_in_one, SolveVerdict, SolverConfig};
use powg::game::Position;
use powg::Natural;
use proptest::prelude::*;

fn n(x: u64) -> Natural {
    Natural::from(x)
}

/// `D_k` and `N_k` from the recurrences `N_1 = 3, N_{k+1} = N_k^2`,
/// `D_1 = 1, D_{k+1} = D_k lcm(1..N_k)`.
fn d_and_n(k: usize) -> (BigUint, u64) {
    let mut d = BigUint::from(1u32);
    let mut nk = 3u64;
    for _ in 1..k {
        let mut l = BigUint::from(1u32);
        for m in 1..=nk {
            l = l.lcm(&n(m));
        }
        d *= l;
        nk *= nk;
    }
    (d, nk)
}

/// `B_1 = 0, B_{k+1} = 2 N_k B_k + N_k^2 ceil(D_k log2 v)`, the ceiling found
/// from the bit length of `v^{D_k}`.
fn b_oracle(k: usize, v: u64) -> BigUint {
    let mut b = BigUint::from(0u32);
    for j in 1..k {
        let (d, nj) = d_and_n(j);
        let power = num_traits::pow(n(v), usize::try_from(&d).unwrap());
        let c = if power.count_ones() == 1 {
            power.bits() - 1
        } else {
            power.bits()
        };
        b = n(2 * nj) * &b + n(nj * nj) * n(c);
    }
    b
}

/// All integer vectors with `|x|_1 <= radius`.
fn ball(t: usize, radius: i64) -> Vec<Vec<i64>> {
    if t == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for x in -radius..=radius {
        for mut rest in ball(t - 1, radius - x.abs()) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn lattice_oracle(l: &[u64], r: &[u64], radius: i64, b: &BigUint) -> bool {
    let b = num_bigint::BigInt::from(b.clone());
    ball(l.len(), radius).iter().all(|x| {
        let dot = |ys: &[u64]| -> num_bigint::BigInt {
            ys.iter()
                .zip(x)
                .map(|(&y, &c)| num_bigint::BigInt::from(y) * c)
                .sum()
        };
        dot(r) <= 0.into() || dot(l) >= b
    })
}

fn least_nondivisor(r: u64) -> u64 {
    (2..).find(|d| !r.is_multiple_of(*d)).unwrap()
}

/// `(l, v, r)` with `u = 2^l v^r` and `v` not a perfect power.
fn decompose(u: u64) -> (u64, u64, u64) {
    let l = u.trailing_zeros() as u64;
    let odd = u >> l;
    for e in (2..64u32).rev() {
        let root = (odd as f64).powf(1.0 / e as f64).round() as u64;
        for b in root.saturating_sub(1)..=root + 1 {
            if b > 1 && b.checked_pow(e) == Some(odd) {
                return (l, b, e as u64);
            }
        }
    }
    (l, odd, 1)
}

#[test]
fn dnb_rows_match_recurrences() {
    for v in [3u64, 5, 7] {
        let t = dnb_table(&n(v), 4).unwrap();
        for k in 1..=4 {
            let (d, nk) = d_and_n(k);
            let row = t.row(k);
            assert_eq!(row.d.value.as_ref(), Some(&d), "D_{k}");
            assert_eq!(row.n, n(nk), "N_{k}");
            assert_eq!(row.b, b_oracle(k, v), "B_{k}, v = {v}");
        }
    }
    assert_eq!(dnb_table(&n(3), 4).unwrap().row(4).bprime, n(99_353_223));
}

#[test]
fn unexpanded_d6_divides_like_its_value() {
    let d6 = d_k(6);
    assert!(d6.value.is_none());
    let (d5, _) = d_and_n(5);
    for p in [2u64, 3, 5, 7, 43, 101] {
        let mut e = 0;
        let mut x = d5.clone();
        while (&x % p) == n(0) {
            x /= p;
            e += 1;
        }
        // D_6 = D_5 lcm(1..N_5) adds floor(log_p N_5)
        let n5 = 43_046_721u64;
        let extra = (1..)
            .take_while(|&i| p.checked_pow(i).is_some_and(|q| q <= n5))
            .count() as u64;
        assert_eq!(d6.nu_p(p), e + extra, "p = {p}");
    }
    assert!(d6.divides(&Exponent::Factorial(43_046_721)));
    assert!(!d6.divides(&Exponent::Factorial(1_000)));
}

#[test]
fn l1_ball_counts() {
    for t in 1..=4 {
        for radius in 0..=6 {
            assert_eq!(
                l1_ball_size(t, radius),
                ball(t, radius as i64).len() as u128,
                "t = {t}, r = {radius}"
            );
        }
    }
}

#[test]
fn certificates_are_sound_for_two_rounds() {
    // c >= 2 certified means no challenge wins in one round
    let b2 = b_oracle(2, 3);
    assert_eq!(b2, n(18));
    for l in 18..=40u64 {
        for r in [6u64, 12, 18] {
            let q = CertificateQuery {
                v: n(3),
                l: vec![l.into()],
                r: vec![r.into()],
                k: 2,
            };
            assert_eq!(check_certificate(&q).unwrap().certified_lower, Some(2));
            let u = n(3).pow(r as u32) << l;
            assert_eq!(
                wins_in_one(&Position::new([u]).unwrap()).unwrap(),
                None,
                "l = {l}, r = {r}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multi_value_lattice_condition(
        k in 1usize..=3,
        l in prop::collection::vec(0u64..3000, 2),
        m in prop::collection::vec(0u64..4, 2),
    ) {
        let (d, nk) = d_and_n(k);
        let d: u64 = (&d).try_into().unwrap();
        let r: Vec<u64> = m.iter().map(|x| x * d).collect();
        prop_assume!(r.iter().any(|&x| x > 0));
        let q = CertificateQuery {
            v: n(3),
            l: l.iter().map(|&x| x.into()).collect(),
            r: r.iter().map(|&x| x.into()).collect(),
            k,
        };
        let got = check_certificate(&q).unwrap();
        prop_assert!(got.divisibility);
        prop_assert_eq!(got.lattice, lattice_oracle(&l, &r, nk as i64, &b_oracle(k, 3)));
    }

    #[test]
    fn factorial_exponents_agree_with_their_values(m in 0u64..40, x in 0u64..1 << 40, d in 2u64..50) {
        let e = Exponent::Factorial(m);
        let value = (1..=m).fold(n(1), |acc, i| acc * i);
        prop_assert_eq!(e.value().unwrap(), value.clone());
        prop_assert_eq!(e.cmp_natural(&n(x)), value.cmp(&n(x)));
        prop_assert_eq!(e.divisible_by(d), (&value % d) == n(0));
    }

    #[test]
    fn thm56_uses_the_least_nondivisor(u in 3u64..1 << 40) {
        prop_assume!(!u.is_power_of_two());
        let (_, v, r) = decompose(u);
        let s = SymbolicPow::from_natural(&n(u)).unwrap();
        prop_assert_eq!(&s.v, &n(v));
        let d = least_nondivisor(r);
        let fl = 63 - d.leading_zeros() as u64;
        let expect = (fl as f64).log2().ceil() as u64 + 4;
        prop_assert_eq!(upper_thm56(&s).value, Some(expect));
        let it = upper_cor57(&s);
        prop_assert!(it.eq29.value <= it.eq28.value);
    }

    #[test]
    fn combined_bound_is_the_least_entry(u in 1u64..1 << 48) {
        let rep = combine_upper(&n(u), &[]);
        if u.is_power_of_two() {
            prop_assert_eq!(rep.best, Upper::Infinite);
        } else {
            let least = rep.entries.iter().filter_map(|e| e.value).min().unwrap();
            prop_assert_eq!(rep.best, Upper::Finite(least));
        }
    }
}

#[test]
fn closed_forms_dominate_solved_values() {
    let cfg = SolverConfig::default();
    for u in 3..=300u64 {
        if u.is_power_of_two() {
            continue;
        }
        let c = match bounded_value(&Position::from_u64s(&[u]), 2, &cfg).unwrap() {
            SolveVerdict::ChallengerWins { rounds, .. } => rounds as u64,
            _ => continue,
        };
        let rep = combine_upper(&n(u), &[]);
        for e in rep.entries.iter().filter(|e| e.applicable) {
            assert!(e.value.unwrap() >= c, "u = {u}: {} = {:?} < {c}", e.name, e.value);
        }
    }
}

#[test]
fn best_single_certificate_is_the_largest_k() {
    for (l, r) in [
        (0u64, 6u64),
        (18, 6),
        (18, 5),
        (1134, 15120),
        (1133, 15120),
        (200_000_000, 30240),
    ] {
        let s = SymbolicPow::new(n(3), l.into(), r.into()).unwrap();
        let best = powg::certify::best_single_certificate(&s, 4).unwrap();
        let holds = |k: usize| {
            let (d, _) = d_and_n(k);
            (n(r) % d) == n(0) && n(l) >= b_oracle(k, 3)
        };
        let expect = (1..=4).take_while(|&k| holds(k)).last().unwrap_or(0);
        assert_eq!(best, expect, "l = {l}, r = {r}");
        assert!(best as u64 <= upper_thm56(&s).value.unwrap());
    }
}
