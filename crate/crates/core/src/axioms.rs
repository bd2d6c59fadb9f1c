//! The powers-of-two axioms checked in the standard model on an initial
//! segment `[0, N)`.
//!
//! Universal variables range over `[0, N)`; existential witnesses are
//! sought in `[0, 2N)` so that nothing fails only because a witness lies
//! just past the segment.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::numtheory::{is_oddless, Natural};

/// An interpretation of `P2` on `[0, 2N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentModel {
    pub n: u64,
    members: Vec<u64>,
}

impl SegmentModel {
    /// The powers of two below `2N`.
    pub fn standard(n: u64) -> Self {
        let members = (0..64)
            .map(|k| 1u64 << k)
            .take_while(|&p| p < n.saturating_mul(2))
            .collect();
        SegmentModel { n, members }
    }

    pub fn from_members(n: u64, members: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = members.into_iter().filter(|&m| m < n.saturating_mul(2)).collect();
        SegmentModel {
            n,
            members: set.into_iter().collect(),
        }
    }

    pub fn with_added(&self, x: u64) -> Self {
        Self::from_members(self.n, self.members.iter().copied().chain([x]))
    }

    pub fn with_removed(&self, x: u64) -> Self {
        Self::from_members(self.n, self.members.iter().copied().filter(|&m| m != x))
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Members in the closed range `[lo, hi]`.
    fn count_in(&self, lo: u64, hi: u64) -> usize {
        let a = self.members.partition_point(|&m| m < lo);
        let b = self.members.partition_point(|&m| m <= hi);
        b.saturating_sub(a)
    }

    fn below_n(&self) -> &[u64] {
        let k = self.members.partition_point(|&m| m < self.n);
        &self.members[..k]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub passed: bool,
    /// Values of the universally quantified variables at the first failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<u64>>,
}

impl AxiomResult {
    fn from_failure(axiom: &'static str, failure: Option<Vec<u64>>) -> Self {
        AxiomResult {
            axiom,
            passed: failure.is_none(),
            counterexample: failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub n: u64,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.axiom)
            .collect()
    }
}

/// `x > 0 -> exists u (P2(u) and u <= x < 2u)`.
fn eq4(m: &SegmentModel) -> Option<Vec<u64>> {
    (1..m.n)
        .into_par_iter()
        .find_first(|&x| m.count_in(x / 2 + 1, x) == 0)
        .map(|x| vec![x])
}

/// `P2(u) and P2(v) and u <= v -> exists w (P2(w) and uw = v)`.
fn eq5(m: &SegmentModel) -> Option<Vec<u64>> {
    let p = m.below_n();
    for (i, &u) in p.iter().enumerate() {
        for &v in &p[i..] {
            let ok = if u == 0 {
                v == 0 && !m.members.is_empty()
            } else {
                v % u == 0 && m.contains(v / u)
            };
            if !ok {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

/// `x > 0 -> exists! u (P2(u) and u <= x < 2u)`.
fn eq6(m: &SegmentModel) -> Option<Vec<u64>> {
    (1..m.n)
        .into_par_iter()
        .find_first(|&x| m.count_in(x / 2 + 1, x) != 1)
        .map(|x| vec![x])
}

/// `not P2(0)`.
fn eq7(m: &SegmentModel) -> Option<Vec<u64>> {
    m.contains(0).then(Vec::new)
}

/// `P2(u) and P2(v) -> P2(uv)`, for products inside the witness range.
fn eq8(m: &SegmentModel) -> Option<Vec<u64>> {
    let p = m.below_n();
    let limit = m.n.saturating_mul(2);
    for &u in p {
        for &v in p {
            match u.checked_mul(v) {
                Some(w) if w < limit && !m.contains(w) => return Some(vec![u, v]),
                _ => {}
            }
        }
    }
    None
}

/// `P2(u) and P2(v) and P2(w) -> not (uv < w < 2uv)`.
fn eq11(m: &SegmentModel) -> Option<Vec<u64>> {
    let p = m.below_n();
    for &u in p {
        for &v in p {
            let uv = u as u128 * v as u128;
            for &w in p {
                let w = w as u128;
                if uv < w && w < 2 * uv {
                    return Some(vec![u, v, w as u64]);
                }
            }
        }
    }
    None
}

pub fn check_model(m: &SegmentModel) -> AxiomReport {
    let results = vec![
        AxiomResult::from_failure("eq4", eq4(m)),
        AxiomResult::from_failure("eq5", eq5(m)),
        AxiomResult::from_failure("eq6", eq6(m)),
        AxiomResult::from_failure("eq7", eq7(m)),
        AxiomResult::from_failure("eq8", eq8(m)),
        AxiomResult::from_failure("eq11", eq11(m)),
    ];
    AxiomReport { n: m.n, results }
}

/// All axioms on the standard powers of two below `n` (`n >= 4`).
pub fn check_p2_axioms(n: u64) -> AxiomReport {
    check_model(&SegmentModel::standard(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq26Report {
    pub x_max: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<u64>,
    /// How many `x` needed a witness other than the next power of two.
    pub non_dyadic_witnesses: u64,
}

fn divisors(u: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= u {
        if u.is_multiple_of(d) {
            small.push(d);
            if d * d != u {
                large.push(u / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Whether the windows `[d, 2d - 1]` over divisors `d` of `u` cover
/// `[1, x - 1]`, i.e. every `0 < y < x` has a divisor `v <= y < 2v`.
pub fn divisor_windows_cover(u: u64, x: u64) -> bool {
    let mut covered = 0u64; // [1, covered] is covered
    for d in divisors(u) {
        if covered + 1 >= x {
            break;
        }
        if d > covered + 1 {
            return false;
        }
        covered = covered.max(2 * d - 1);
    }
    covered + 1 >= x
}

/// `forall x exists u >= x forall y (0 < y < x -> exists v (v <= y < 2v and v | u))`
/// for `x <= x_max`, with `u` sought in `[x, 2x)`.
pub fn check_eq26(x_max: u64) -> Eq26Report {
    let outcomes: Vec<Option<bool>> = (1..=x_max)
        .into_par_iter()
        .map(|x| {
            let dyadic = x.next_power_of_two();
            if divisor_windows_cover(dyadic, x) {
                Some(false)
            } else if (x..2 * x).any(|u| divisor_windows_cover(u, x)) {
                Some(true)
            } else {
                None
            }
        })
        .collect();
    let first_failure = outcomes.iter().position(Option::is_none).map(|i| i as u64 + 1);
    Eq26Report {
        x_max,
        passed: first_failure.is_none(),
        first_failure,
        non_dyadic_witnesses: outcomes.iter().filter(|o| **o == Some(true)).count() as u64,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pow2EquivReport {
    pub n: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<u64>,
}

/// `x | u -> x = 1 or 2 | x`, straight from the definition: no odd
/// divisor above 1. Every `x` divides 0, so 0 is not oddless.
pub fn oddless_by_definition(u: u64) -> bool {
    if u == 0 {
        return false;
    }
    let mut x = 3;
    while x * x <= u {
        if u.is_multiple_of(x) {
            return false;
        }
        x += 2;
    }
    // u itself, or its cofactor, may be an odd prime above sqrt(u)
    let odd = u >> u.trailing_zeros();
    odd == 1
}

/// `is_oddless(u)` agrees with membership in the standard powers of two
/// for every `u < n`.
pub fn check_pow2_equiv(n: u64) -> Pow2EquivReport {
    let first_mismatch = (0..n).into_par_iter().find_first(|&u| {
        let standard = u.is_power_of_two();
        is_oddless(&Natural::from(u)) != standard || oddless_by_definition(u) != standard
    });
    Pow2EquivReport {
        n,
        passed: first_mismatch.is_none(),
        first_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_segments() {
        assert!(check_p2_axioms(4).passed());
        assert!(check_p2_axioms(1000).passed());
        assert_eq!(SegmentModel::standard(4).members(), &[1, 2, 4]);
    }

    #[test]
    fn mutations_are_caught() {
        let m = SegmentModel::standard(1000);
        let r = check_model(&m.with_added(12));
        assert!(r.failed().contains(&"eq6"));
        assert!(r.failed().contains(&"eq11"));
        let r = check_model(&m.with_removed(8));
        assert_eq!(r.results[0].counterexample, Some(vec![8]));
        assert!(!check_model(&m.with_added(0)).results[3].passed);
    }

    #[test]
    fn divisor_windows() {
        assert!(divisor_windows_cover(128, 100));
        assert!(divisor_windows_cover(1, 1));
        assert!(!divisor_windows_cover(9, 3));
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn oddless_small() {
        assert!(oddless_by_definition(1));
        assert!(!oddless_by_definition(6));
        assert!(!oddless_by_definition(0));
        assert!(!oddless_by_definition(2 * 101));
    }
}
