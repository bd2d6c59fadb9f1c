use powg::axioms::{
    check_eq26, check_model, check_p2_axioms, divisor_windows_cover, oddless_by_definition, SegmentModel,
};
use powg::expr::Expr;
use powg::Natural;
use proptest::prelude::*;

#[test]
fn standard_models_pass() {
    for n in [4u64, 5, 100, 1 << 12, 100_000] {
        let r = check_p2_axioms(n);
        assert!(r.passed(), "n = {n}: {:?}", r.failed());
    }
    assert!(check_eq26(2000).passed);
}

#[test]
fn oddless_matches_powers_of_two() {
    for u in 0..5000u64 {
        assert_eq!(oddless_by_definition(u), u.is_power_of_two(), "u = {u}");
    }
}

proptest! {
    #[test]
    fn adding_a_non_power_breaks_uniqueness(x in 3u64..4096) {
        prop_assume!(!x.is_power_of_two());
        let m = SegmentModel::standard(4096).with_added(x);
        let r = check_model(&m);
        prop_assert!(r.failed().contains(&"eq6"), "{:?}", r.failed());
    }

    #[test]
    fn removing_a_power_breaks_existence(k in 0u32..12) {
        let m = SegmentModel::standard(4096).with_removed(1 << k);
        let r = check_model(&m);
        let eq4 = r.results.iter().find(|a| a.axiom == "eq4").unwrap();
        prop_assert!(!eq4.passed);
        prop_assert_eq!(eq4.counterexample.clone(), Some(vec![1u64 << k]));
    }

    #[test]
    fn divisor_windows(u in 1u64..5000, x in 1u64..300) {
        let divisors: Vec<u64> = (1..=u).filter(|d| u % d == 0).collect();
        let oracle = (1..x).all(|y| divisors.iter().any(|&v| v <= y && y < 2 * v));
        prop_assert_eq!(divisor_windows_cover(u, x), oracle);
    }
}

#[test]
fn zero_in_the_model_is_caught() {
    let r = check_model(&SegmentModel::standard(64).with_added(0));
    assert!(r.failed().contains(&"eq7"));
}

/// Small expression trees paired with their value, `None` past `u128`.
fn expr_tree() -> impl Strategy<Value = (String, Option<u128>)> {
    let leaf = (0u128..50).prop_map(|v| (v.to_string(), Some(v)));
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (0u128..8).prop_map(|m| (format!("fact({m})"), Some((1..=m).product()))),
            (inner.clone(), 0u32..4)
                .prop_map(|((s, v), e)| (format!("pow({s}, {e})"), v.and_then(|v| v.checked_pow(e)))),
            prop::collection::vec(inner, 2..4).prop_map(|xs| {
                let s = xs
                    .iter()
                    .map(|(s, _)| format!("({s})"))
                    .collect::<Vec<_>>()
                    .join(" * ");
                let v = xs.iter().try_fold(1u128, |acc, (_, v)| acc.checked_mul((*v)?));
                (s, v)
            }),
        ]
    })
}

proptest! {
    #[test]
    fn expressions_evaluate_and_round_trip((src, value) in expr_tree()) {
        let e: Expr = src.parse().unwrap();
        let again: Expr = e.to_string().parse().unwrap();
        if let Some(value) = value {
            prop_assert_eq!(e.eval(1 << 12).unwrap(), Natural::from(value));
            prop_assert_eq!(again.eval(1 << 12).unwrap(), Natural::from(value));
        } else {
            prop_assert_eq!(e.eval(1 << 16).ok(), again.eval(1 << 16).ok());
        }
    }
}
