//! Closed-form upper bounds on `c(u)` for `u = 2^l v^r`, `v` odd and not a
//! perfect power, all logs base 2 with `log x = 0` for `x <= 1`:
//!
//! * `thm56`: `ceil(log floor(log d)) + 4` with `d` the least non-divisor of `r`;
//! * `eq28`:  `ceil(log log log log u) + 4`;
//! * `eq29`:  `ceil(log log log r) + 4`;
//! * `eq30`:  `ceil(log log log l) + 5`, when `2^(l+1) < u`.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::certify::{Exponent, SymbolicPow};
use crate::numtheory::exactlog::ceil_mul_log2;
use crate::numtheory::{
    ceil_iterated_log2, ceil_log2_u64, factorize, floor_log2_u64, is_oddless, pow, Natural,
};

/// An upper bound on `c`, infinite exactly for powers of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Upper {
    Finite(u64),
    Infinite,
}

impl Upper {
    pub fn finite(self) -> Option<u64> {
        match self {
            Upper::Finite(v) => Some(v),
            Upper::Infinite => None,
        }
    }
}

impl fmt::Display for Upper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Upper::Finite(v) => write!(f, "{v}"),
            Upper::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Upper {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Upper::Finite(v) => s.serialize_u64(*v),
            Upper::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub applicable: bool,
    pub value: Option<u64>,
    /// The quantity the formula was evaluated at, e.g. `d=3`.
    pub witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl BoundEntry {
    pub fn hit(name: &str, value: u64, witness: String) -> Self {
        BoundEntry {
            name: name.into(),
            applicable: true,
            value: Some(value),
            witness,
            reason: None,
        }
    }

    pub fn skip(name: &str, witness: String, reason: String) -> Self {
        BoundEntry {
            name: name.into(),
            applicable: false,
            value: None,
            witness,
            reason: Some(reason),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub best: Upper,
    /// Name of the entry achieving `best`, first in entry order on ties.
    pub best_name: Option<String>,
}

/// `ceil(log floor(log d)) + 4` with `d` the least non-divisor of `r`.
pub fn upper_thm56(s: &SymbolicPow) -> BoundEntry {
    let d = s.r.least_nondivisor();
    let value = ceil_log2_u64(floor_log2_u64(d)) + 4;
    BoundEntry::hit("thm56", value, format!("d={d}"))
}

/// `ceil(log^(t) x)` for `x = 2^l v^r`, deciding from the cheap bracket
/// `l + r (bits(v) - 1) <= log u <= l + r bits(v)` when it suffices.
fn ceil_iterated_log_symbolic(s: &SymbolicPow, times: u32) -> u64 {
    assert!(times >= 1);
    let l = exponent_value(&s.l);
    let r = exponent_value(&s.r);
    let vb = s.v.bits();
    let lo = &l + &r * (vb - 1);
    let hi = &l + &r * vb;
    let a = ceil_iterated_log2(&lo, times - 1);
    let b = ceil_iterated_log2(&hi, times - 1);
    if times > 1 && a == b {
        return a;
    }
    let ceil_log_u = l + ceil_mul_log2(&r, &s.v);
    ceil_iterated_log2(&ceil_log_u, times - 1)
}

fn exponent_value(e: &Exponent) -> Natural {
    e.value().expect("exponent small enough to expand")
}

/// The three bounds of the iterated-log family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IteratedBounds {
    pub eq28: BoundEntry,
    pub eq29: BoundEntry,
    pub eq30: BoundEntry,
}

pub fn upper_cor57(s: &SymbolicPow) -> IteratedBounds {
    let c = ceil_iterated_log_symbolic(s, 4);
    let eq28 = BoundEntry::hit("eq28", c + 4, format!("4-fold log2 of u <= {c}"));
    let r = exponent_value(&s.r);
    let eq29 = BoundEntry::hit("eq29", ceil_iterated_log2(&r, 3) + 4, format!("r={}", s.r));
    let l = exponent_value(&s.l);
    // 2^(l+1) < 2^l v^r  iff  v^r > 2, which holds for v >= 3, r >= 1
    let applicable = !s.r.is_zero() && s.v > Natural::from(2u32);
    let witness = format!("nu2={}", s.l);
    let eq30 = if applicable {
        BoundEntry::hit("eq30", ceil_iterated_log2(&l, 3) + 5, witness)
    } else {
        BoundEntry::skip("eq30", witness, "requires 2^(nu2(u)+1) < u".into())
    };
    IteratedBounds { eq28, eq29, eq30 }
}

/// The minimizing term of `log nu_q(nu_p(u)) + log log q` over odd primes
/// `p | u` and primes `q`. Only the raw term is reported; the additive
/// constant of this bound is not known.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NuNuTerm {
    #[serde(serialize_with = "crate::ser::natural")]
    pub p: Natural,
    /// `nu_p(u)`.
    pub e: u64,
    pub q: u64,
    /// `nu_q(e)`.
    pub nu: u64,
    /// `log2(max(nu, 1)) + log2(log2 q)`.
    pub value: f64,
}

/// Terms compare as `q^max(nu, 1)`, since the term is the log of
/// `max(nu, 1) log q`.
fn nu_nu_key(q: u64, nu: u64) -> Natural {
    pow(&Natural::from(q), nu.max(1))
}

pub fn upper_nu_nu(u: &Natural) -> Option<NuNuTerm> {
    if u.is_zero() || is_oddless(u) {
        return None;
    }
    let mut best: Option<(Natural, NuNuTerm)> = None;
    for (p, e) in factorize(u).factors {
        if p == Natural::from(2u32) {
            continue;
        }
        let e = e as u64;
        let mut candidates: Vec<(u64, u64)> = crate::certify::symbolic::small_factors(e);
        let free = (2u64..)
            .filter(|&q| crate::numtheory::primes::is_prime_u64(q))
            .find(|q| !e.is_multiple_of(*q))
            .expect("some prime does not divide e");
        candidates.push((free, 0));
        for (q, nu) in candidates {
            let key = nu_nu_key(q, nu);
            if best.as_ref().is_some_and(|(k, _)| *k <= key) {
                continue;
            }
            let value = (nu.max(1) as f64).log2() + (q as f64).log2().log2();
            let term = NuNuTerm {
                p: p.clone(),
                e,
                q,
                nu,
                value,
            };
            best = Some((key, term));
        }
    }
    best.map(|(_, t)| t)
}

/// Minimum over the closed forms and any externally proven win depths,
/// listed first so they take precedence on ties.
pub fn combine_upper(u: &Natural, proven: &[BoundEntry]) -> BoundReport {
    if is_oddless(u) {
        return BoundReport {
            entries: proven.to_vec(),
            best: Upper::Infinite,
            best_name: None,
        };
    }
    let s = SymbolicPow::from_natural(u).expect("not a power of two");
    combine_upper_symbolic(&s, proven)
}

pub fn combine_upper_symbolic(s: &SymbolicPow, proven: &[BoundEntry]) -> BoundReport {
    let IteratedBounds { eq28, eq29, eq30 } = upper_cor57(s);
    let mut entries = proven.to_vec();
    entries.extend([upper_thm56(s), eq28, eq29, eq30]);
    let mut best: Option<(u64, &str)> = None;
    for e in &entries {
        if let (true, Some(v)) = (e.applicable, e.value) {
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, &e.name));
            }
        }
    }
    let (best, best_name) = match best {
        Some((v, n)) => (Upper::Finite(v), Some(n.to_string())),
        None => (Upper::Infinite, None),
    };
    BoundReport {
        entries,
        best,
        best_name,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Natural {
        Natural::from(x)
    }

    fn sym(u: u64) -> SymbolicPow {
        SymbolicPow::from_natural(&n(u)).unwrap()
    }

    #[test]
    fn thm56_values() {
        assert_eq!(upper_thm56(&sym(2304)).value, Some(4));
        assert_eq!(upper_thm56(&sym(12)).value, Some(4));
        let e = Exponent::Factorial(16);
        let s = SymbolicPow::new(n(3), e.clone(), e).unwrap();
        assert_eq!(upper_thm56(&s).value, Some(6));
    }

    #[test]
    fn iterated_values() {
        let b = upper_cor57(&sym(2304));
        assert_eq!(
            (b.eq28.value, b.eq29.value, b.eq30.value),
            (Some(5), Some(4), Some(6))
        );
        assert_eq!(upper_cor57(&sym(3)).eq28.value, Some(4));
        let s = SymbolicPow::new(n(3), Exponent::from(1), Exponent::from(420)).unwrap();
        assert_eq!(upper_cor57(&s).eq29.value, Some(6));
    }

    #[test]
    fn symbolic_eq28_matches_expansion() {
        for u in [3u64, 6, 12, 2304, 3 * 65536, 1_000_001, 59049 * 1024] {
            let direct = ceil_iterated_log2(&n(u), 4) + 4;
            assert_eq!(upper_cor57(&sym(u)).eq28.value, Some(direct), "u = {u}");
        }
    }

    #[test]
    fn nu_nu_terms() {
        let t = upper_nu_nu(&pow(&n(3), 8)).unwrap();
        assert_eq!((t.q, t.nu), (3, 0));
        assert!((t.value - 3f64.log2().log2()).abs() < 1e-12);
        let t = upper_nu_nu(&pow(&n(3), 6)).unwrap();
        assert_eq!((t.q, t.nu, t.value), (2, 1, 0.0));
        let t = upper_nu_nu(&pow(&n(5), 12)).unwrap();
        assert_eq!((t.q, t.nu), (3, 1));
        assert!(upper_nu_nu(&n(64)).is_none());
    }

    #[test]
    fn combined() {
        let solver = BoundEntry::hit("solver", 1, "opening=2".into());
        let r = combine_upper(&n(5), &[solver]);
        assert_eq!(
            (r.best, r.best_name.as_deref()),
            (Upper::Finite(1), Some("solver"))
        );
        assert_eq!(combine_upper(&n(16), &[]).best, Upper::Infinite);
        let solver = BoundEntry::hit("solver", 3, String::new());
        assert_eq!(combine_upper(&n(2304), &[solver]).best, Upper::Finite(3));
        let r = combine_upper(&n(2304), &[]);
        assert_eq!(
            (r.best, r.best_name.as_deref()),
            (Upper::Finite(4), Some("thm56"))
        );
    }
}
