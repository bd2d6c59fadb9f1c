//! Lower-bound certificates for `c`.
//!
//! With `D_1 = 1`, `N_1 = 3`, `B_1 = 0` and
//! `D_{k+1} = D_k L(N_k)`, `N_{k+1} = N_k^2`,
//! `B_{k+1} = 2 N_k B_k + N_k^2 ceil(D_k log2 v)`, a position of values
//! `u_i = 2^{l_i} v^{r_i}` needs at least `k` rounds whenever every `r_i`
//! is a multiple of `D_k` and `sum n_i l_i >= B_k` for every integer vector
//! `n` with `|n|_1 <= N_k` and `sum n_i r_i > 0`.

pub mod symbolic;

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::numtheory::exactlog::ceil_mul_log2;
use crate::numtheory::{
    ceil_log, ceil_log2, ceil_log2_u64, floor_log, floor_log2_u64, is_perfect_power, lcm_range, pow,
    sieve_primes, Natural,
};

pub use symbolic::{Exponent, SymbolicError, SymbolicPow};

/// Rows beyond this need `D_7`, whose size is out of reach.
pub const MAX_K: usize = 6;

/// Largest `k` whose `D_k` is expanded; `D_6 = D_5 L(3^16)` has about
/// 62 million bits and is kept as its list of lcm arguments.
pub const MAX_EXPANDED_D: usize = 5;

/// Default cap on the number of vectors enumerated for the general
/// condition.
pub const ENUMERATION_BUDGET: u128 = 1_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("k = {0} is outside the supported range 1..={MAX_K}")]
    KOutOfRange(usize),
    #[error("base {0} must be odd and at least 3")]
    BadBase(String),
    #[error("exponent vectors must be nonempty and of equal length")]
    Shape,
    #[error("enumerating {0} vectors exceeds the budget")]
    Budget(u128),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// `N_k = 3^(2^(k-1))`.
pub fn n_k(k: usize) -> Natural {
    assert!(k >= 1);
    pow(&Natural::from(3u32), 1u64 << (k - 1))
}

fn n_k_u64(k: usize) -> u64 {
    n_k(k).to_u64().expect("N_k fits for k <= 6")
}

/// `D_k` as the product `L(N_1) ... L(N_{k-1})`, expanded when small.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DValue {
    pub k: usize,
    /// The arguments `N_1, ..., N_{k-1}` of the lcm factors.
    pub lcm_args: Vec<u64>,
    pub value: Option<Natural>,
}

impl DValue {
    /// `nu_p(D_k) = sum_i floor(log_p N_i)`.
    pub fn nu_p(&self, p: u64) -> u64 {
        self.lcm_args.iter().map(|&n| floor_log(p, n) as u64).sum()
    }

    /// Primes dividing `D_k` are exactly those up to `N_{k-1}`.
    pub fn largest_prime_bound(&self) -> u64 {
        self.lcm_args.last().copied().unwrap_or(1)
    }

    /// Whether `D_k` divides the exponent, prime by prime.
    pub fn divides(&self, r: &Exponent) -> bool {
        if let (Some(d), Exponent::Value(r)) = (&self.value, r) {
            return (r % d).is_zero();
        }
        if r.is_zero() {
            return true;
        }
        sieve_primes(self.largest_prime_bound())
            .par_iter()
            .all(|&p| r.nu_p(p) >= self.nu_p(p))
    }
}

impl Serialize for DValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("DValue", 2)?;
        st.serialize_field("value", &self.value.as_ref().map(|v| v.to_string()))?;
        st.serialize_field("lcm_args", &self.lcm_args)?;
        st.end()
    }
}

fn expanded_d() -> &'static [Natural] {
    static D: OnceLock<Vec<Natural>> = OnceLock::new();
    D.get_or_init(|| {
        let mut out = vec![Natural::one()];
        for k in 1..MAX_EXPANDED_D {
            let next = &out[k - 1] * lcm_range(n_k_u64(k));
            out.push(next);
        }
        out
    })
}

pub fn d_k(k: usize) -> DValue {
    assert!((1..=MAX_K).contains(&k));
    DValue {
        k,
        lcm_args: (1..k).map(n_k_u64).collect(),
        value: (k <= MAX_EXPANDED_D).then(|| expanded_d()[k - 1].clone()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DnbRow {
    pub k: usize,
    pub d: DValue,
    #[serde(serialize_with = "crate::ser::natural")]
    pub n: Natural,
    #[serde(serialize_with = "crate::ser::natural")]
    pub b: Natural,
    #[serde(serialize_with = "crate::ser::natural")]
    pub bprime: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DnbTable {
    #[serde(serialize_with = "crate::ser::natural")]
    pub v: Natural,
    pub rows: Vec<DnbRow>,
}

impl DnbTable {
    pub fn row(&self, k: usize) -> &DnbRow {
        &self.rows[k - 1]
    }
}

fn check_base(v: &Natural) -> Result<(), CertifyError> {
    if v < &Natural::from(3u32) || (v % 2u32).is_zero() {
        return Err(CertifyError::BadBase(v.to_string()));
    }
    Ok(())
}

/// The table of `D_k, N_k, B_k, B'_k` for `k = 1..=kmax`, where
/// `B'_k = N_k sum_{i<k} 2^(k-1-i) (D_i + 1)`.
pub fn dnb_table(v: &Natural, kmax: usize) -> Result<DnbTable, CertifyError> {
    check_base(v)?;
    if !(1..=MAX_K).contains(&kmax) {
        return Err(CertifyError::KOutOfRange(kmax));
    }
    let d = expanded_d();
    let mut rows: Vec<DnbRow> = Vec::with_capacity(kmax);
    let mut b = Natural::zero();
    for k in 1..=kmax {
        if k > 1 {
            let nk = n_k(k - 1);
            let ceil = ceil_mul_log2(&d[k - 2], v);
            b = ((&nk * &b) << 1u32) + &nk * &nk * ceil;
        }
        let nk = n_k(k);
        let mut sum = Natural::zero();
        for i in 1..k {
            sum += (&d[i - 1] + 1u32) << (k - 1 - i);
        }
        rows.push(DnbRow {
            k,
            d: d_k(k),
            n: nk.clone(),
            b: b.clone(),
            bprime: nk * sum,
        });
    }
    Ok(DnbTable { v: v.clone(), rows })
}

/// Exponent vectors for the positions `u_i = 2^{l_i} v^{r_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateQuery {
    pub v: Natural,
    pub l: Vec<Exponent>,
    pub r: Vec<Exponent>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateResult {
    /// Every `r_i` is a multiple of `D_k`.
    pub divisibility: bool,
    /// The lattice condition on `l`.
    pub lattice: bool,
    pub certified_lower: Option<usize>,
}

/// Number of integer vectors of dimension `t` with `|n|_1 <= radius`.
pub fn l1_ball_size(t: usize, radius: u64) -> u128 {
    // sum_j 2^j C(t, j) C(radius, j)
    let mut total: u128 = 1;
    let mut c_t: u128 = 1;
    let mut c_r: u128 = 1;
    for j in 1..=(t as u128).min(radius as u128) {
        c_t = c_t * (t as u128 + 1 - j) / j;
        c_r = c_r * (radius as u128 + 1 - j) / j;
        total += (1u128 << j) * c_t * c_r;
    }
    total
}

/// Checks both certificate conditions. For a single value the lattice
/// condition reduces to `l >= B_k`.
pub fn check_certificate(q: &CertificateQuery) -> Result<CertificateResult, CertifyError> {
    check_certificate_with_budget(q, ENUMERATION_BUDGET)
}

pub fn check_certificate_with_budget(
    q: &CertificateQuery,
    budget: u128,
) -> Result<CertificateResult, CertifyError> {
    if q.l.is_empty() || q.l.len() != q.r.len() {
        return Err(CertifyError::Shape);
    }
    let table = dnb_table(&q.v, q.k.max(1))?;
    let row = table.row(q.k.max(1));
    let divisibility = q.r.iter().all(|r| row.d.divides(r));
    let lattice = if q.l.len() == 1 {
        q.r[0].is_zero() || q.l[0].cmp_natural(&row.b) != Ordering::Less
    } else {
        let radius = row.n.to_u64().expect("N_k fits");
        let size = l1_ball_size(q.l.len(), radius);
        if size > budget {
            return Err(CertifyError::Budget(size));
        }
        let l: Vec<BigInt> =
            q.l.iter()
                .map(|e| e.value().map(BigInt::from))
                .collect::<Result<_, _>>()?;
        let r: Vec<BigInt> =
            q.r.iter()
                .map(|e| e.value().map(BigInt::from))
                .collect::<Result<_, _>>()?;
        lattice_condition(&l, &r, radius as i64, &BigInt::from(row.b.clone()))
    };
    Ok(CertificateResult {
        divisibility,
        lattice,
        certified_lower: (divisibility && lattice).then_some(q.k),
    })
}

/// `|n|_1 <= radius and n.r > 0  implies  n.l >= b`, by enumeration.
fn lattice_condition(l: &[BigInt], r: &[BigInt], radius: i64, b: &BigInt) -> bool {
    let small = |xs: &[BigInt]| xs.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>();
    if let (Some(l), Some(r), Some(b)) = (small(l), small(r), b.to_i128()) {
        let mut n = vec![0i64; l.len()];
        return enumerate_small(&l, &r, b, radius, 0, 0, 0, &mut n);
    }
    let mut n = vec![0i64; l.len()];
    enumerate_big(l, r, b, radius, 0, &mut n)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_small(
    l: &[i64],
    r: &[i64],
    b: i128,
    left: i64,
    at: usize,
    dot_l: i128,
    dot_r: i128,
    n: &mut Vec<i64>,
) -> bool {
    if at == l.len() {
        return dot_r <= 0 || dot_l >= b;
    }
    for x in -left..=left {
        n[at] = x;
        let ok = enumerate_small(
            l,
            r,
            b,
            left - x.abs(),
            at + 1,
            dot_l + x as i128 * l[at] as i128,
            dot_r + x as i128 * r[at] as i128,
            n,
        );
        if !ok {
            return false;
        }
    }
    true
}

fn enumerate_big(l: &[BigInt], r: &[BigInt], b: &BigInt, left: i64, at: usize, n: &mut Vec<i64>) -> bool {
    if at == l.len() {
        let dot = |xs: &[BigInt]| -> BigInt { xs.iter().zip(n.iter()).map(|(x, &c)| x * c).sum() };
        return dot(r).sign() != Sign::Plus || dot(l) >= *b;
    }
    for x in -left..=left {
        n[at] = x;
        if !enumerate_big(l, r, b, left - x.abs(), at + 1, n) {
            return false;
        }
    }
    true
}

/// Largest `k <= kmax` certified for the single value `2^l v^r`.
pub fn best_single_certificate(s: &SymbolicPow, kmax: usize) -> Result<usize, CertifyError> {
    let table = dnb_table(&s.v, kmax)?;
    let mut best = 0;
    for row in &table.rows {
        if row.d.divides(&s.r) && s.l.cmp_natural(&row.b) != Ordering::Less {
            best = row.k;
        } else {
            break;
        }
    }
    Ok(best)
}

/// Evaluation of the closed-form lower bound
/// `min( {floor(log ceil(log3 d)) + 1 : d not dividing r}
///       u {floor(log log3 log4 (l / log v)) + 3} )`,
/// which requires `l / log2 v >= 10^8`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerFormula {
    pub guard: bool,
    /// Least non-divisor of `r`, which minimizes the first family.
    pub d: u64,
    pub d_term: u64,
    /// `ceil(log log3 d)`, a weaker replacement for `d_term`.
    pub d_term_ceil_log_log3: u64,
    /// `floor(log ceil(log d))`, another weaker replacement.
    pub d_term_floor_log_ceil_log: u64,
    pub l_term: Option<u64>,
    pub value: Option<u64>,
}

/// Upper bound on the bit length of the exponent, without expanding
/// factorials (`m! <= m^m`).
fn exponent_bits_upper(e: &Exponent) -> u64 {
    match e {
        Exponent::Value(n) => n.bits(),
        Exponent::Factorial(m) => m.saturating_mul(64 - m.leading_zeros() as u64),
    }
}

/// `l >= x log2 v` for the irrational right-hand side.
fn exponent_at_least_mul_log2(l: &Exponent, x: &Natural, v: &Natural) -> bool {
    let c = ceil_mul_log2(x, v);
    l.cmp_natural(&c) != Ordering::Less
}

pub fn lower_bound_formula(s: &SymbolicPow) -> LowerFormula {
    let d = s.r.least_nondivisor();
    let dn = Natural::from(d);
    let c3 = ceil_log(3, &dn);
    let d_term = floor_log2_u64(c3) + 1;
    let d_term_ceil_log_log3 = ceil_log2_u64(c3);
    let d_term_floor_log_ceil_log = floor_log2_u64(ceil_log2(&dn));
    let guard = exponent_at_least_mul_log2(&s.l, &Natural::from(100_000_000u64), &s.v);
    let (l_term, value) = if guard {
        // floor(log log3 log4 X) >= m  iff  l >= 4^(3^(2^m)) log2 v
        let l_bits = exponent_bits_upper(&s.l);
        let mut m = 0u64;
        loop {
            let next = m + 1;
            let e = 3u64.checked_pow(1 << next).and_then(|x| x.checked_mul(2));
            match e {
                Some(e) if e < l_bits && exponent_at_least_mul_log2(&s.l, &(Natural::one() << e), &s.v) => {
                    m = next
                }
                _ => break,
            }
        }
        let l_term = m + 3;
        (Some(l_term), Some(d_term.min(l_term)))
    } else {
        (None, None)
    };
    LowerFormula {
        guard,
        d,
        d_term,
        d_term_ceil_log_log3,
        d_term_floor_log_ceil_log,
        l_term,
        value,
    }
}

/// `alpha_j = sum_{i<=j} 3^(2^i - 2^j)`.
pub fn alpha(j: u32) -> BigRational {
    assert!(j <= 8, "alpha is tabulated for j <= 8");
    let top = BigInt::from(3u32).pow(1u32 << j);
    let mut num = BigInt::zero();
    for i in 0..=j {
        num += BigInt::from(3u32).pow(1u32 << i);
    }
    BigRational::new(num, top)
}

/// Proves `log2 log3 log4 x < p/q` by exhibiting rationals
/// `a <= 2^(p/q)` and `b <= 3^a` with `x < 4^b`, each step checked with
/// exact integer powers. `false` means the chain could not be closed.
pub fn proves_log_log3_log4_below(x: &Natural, p: u64, q: u64) -> bool {
    const DEN: u64 = 10_000;
    let t = p as f64 / q as f64;
    // a = an / DEN slightly below 2^t
    let an = ((t.exp2() * DEN as f64).floor() as u64).saturating_sub(1);
    // an^q < 2^p DEN^q  iff  (an/DEN)^q < 2^p
    let lhs = pow(&Natural::from(an), q);
    let rhs = pow(&Natural::from(DEN), q) << p;
    if lhs >= rhs {
        return false;
    }
    // b = bn / DEN slightly below 3^a
    let a = an as f64 / DEN as f64;
    let bn = ((3f64.powf(a) * DEN as f64).floor() as u64).saturating_sub(1);
    // (bn/DEN)^DEN < 3^an
    let lhs = pow(&Natural::from(bn), DEN);
    let rhs = pow(&Natural::from(3u32), an) * pow(&Natural::from(DEN), DEN);
    if lhs >= rhs {
        return false;
    }
    // x < 4^(bn/DEN)  iff  x^DEN < 2^(2 bn)
    if x.bits().saturating_sub(1).saturating_mul(DEN) >= 2 * bn {
        return false;
    }
    pow(x, DEN) < (Natural::one() << (2 * bn))
}

/// Per-prime check of `D_{k+1} | (2^(2^k))!`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCheck {
    pub p: u64,
    pub nu_d: u64,
    pub nu_r: u64,
}

/// Both sides of `k + 1 <= c(6^((2^(2^k))!)) <= k + 4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorialExampleReport {
    pub k: u32,
    pub m: u64,
    pub prime_checks: Vec<PrimeCheck>,
    pub divisibility: bool,
    pub exponent_at_least_b: bool,
    #[serde(serialize_with = "crate::ser::natural")]
    pub b: Natural,
    pub certified_lower: Option<u64>,
    /// For the two smallest cases, `c >= 2` from the complete one-round
    /// analysis of the expanded value.
    pub depth_one_lower: Option<u64>,
    pub d: u64,
    pub upper: u64,
}

impl FactorialExampleReport {
    pub fn passed(&self) -> bool {
        self.certified_lower == Some(self.k as u64 + 1) && self.upper == self.k as u64 + 4
    }
}

/// `u = 6^m` with `m = (2^(2^k))!`, i.e. `v = 3`, `l = r = m`.
pub fn example_613(k: u32) -> Result<FactorialExampleReport, CertifyError> {
    if k > 4 {
        return Err(CertifyError::KOutOfRange(k as usize + 1));
    }
    let m = 1u64 << (1u64 << k);
    let e = Exponent::Factorial(m);
    let s = SymbolicPow::new(Natural::from(3u32), e.clone(), e.clone())?;
    let kk = k as usize + 1;
    let table = dnb_table(&s.v, kk)?;
    let row = table.row(kk);
    let primes = sieve_primes(row.d.largest_prime_bound());
    let prime_checks: Vec<PrimeCheck> = primes
        .par_iter()
        .map(|&p| PrimeCheck {
            p,
            nu_d: row.d.nu_p(p),
            nu_r: e.nu_p(p),
        })
        .collect();
    let divisibility = prime_checks.iter().all(|c| c.nu_d <= c.nu_r);
    let exponent_at_least_b = e.cmp_natural(&row.b) != Ordering::Less;
    let certified_lower = (divisibility && exponent_at_least_b).then_some(kk as u64);
    let depth_one_lower = if k <= 1 {
        let u = s.materialize(1 << 12)?;
        let pos = crate::game::Position::new([u]).expect("positive");
        match crate::exactsolve::wins_in_one(&pos) {
            Ok(None) => Some(2),
            _ => None,
        }
    } else {
        None
    };
    let upper = crate::bounds::upper_thm56(&s);
    Ok(FactorialExampleReport {
        k,
        m,
        prime_checks,
        divisibility,
        exponent_at_least_b,
        b: row.b.clone(),
        certified_lower,
        depth_one_lower,
        d: s.r.least_nondivisor(),
        upper: upper.value.expect("thm56 always applies"),
    })
}

/// Whether `v` may serve as a certificate base.
pub fn is_valid_base(v: &Natural) -> bool {
    check_base(v).is_ok() && !is_perfect_power(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::factorial;

    fn n(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn first_rows_for_three() {
        let t = dnb_table(&n(3), 4).unwrap();
        let r = |k: usize| {
            let row = t.row(k);
            (row.d.value.clone().unwrap(), row.n.clone(), row.b.clone())
        };
        assert_eq!(r(1), (n(1), n(3), n(0)));
        assert_eq!(r(2), (n(6), n(9), n(18)));
        assert_eq!(r(3), (n(15120), n(81), n(1134)));
        assert_eq!(t.row(4).bprime, n(99_353_223));
    }

    #[test]
    fn ceiling_matches_exact_powers() {
        // 2^c >= 3^D > 2^(c-1) with D = D_3
        let d = n(15120);
        let c = ceil_mul_log2(&d, &n(3)).to_u64().unwrap();
        let p = pow(&n(3), 15120);
        assert!(Natural::one() << c >= p);
        assert!(Natural::one() << (c - 1) < p);
    }

    #[test]
    fn factored_and_expanded_d_agree() {
        for k in 1..=4 {
            let d = d_k(k);
            let value = d.value.clone().unwrap();
            let mut rebuilt = Natural::one();
            for p in sieve_primes(d.largest_prime_bound()) {
                rebuilt *= pow(&n(p), d.nu_p(p));
            }
            assert_eq!(rebuilt, value, "k = {k}");
        }
    }

    #[test]
    fn single_certificates() {
        let q = |l: u64, r: u64, k: usize| CertificateQuery {
            v: n(3),
            l: vec![Exponent::from(l)],
            r: vec![Exponent::from(r)],
            k,
        };
        assert_eq!(check_certificate(&q(18, 6, 2)).unwrap().certified_lower, Some(2));
        assert_eq!(check_certificate(&q(17, 6, 2)).unwrap().certified_lower, None);
        assert_eq!(check_certificate(&q(0, 1, 1)).unwrap().certified_lower, Some(1));
        assert!(check_certificate(&q(0, 1, 7)).is_err());
    }

    #[test]
    fn pair_certificate_matches_single_form() {
        // with l = (L, L) and r = (R, R) the pair condition is the single one
        for (l, r) in [(18u64, 6u64), (17, 6), (40, 12)] {
            let single = check_certificate(&CertificateQuery {
                v: n(3),
                l: vec![Exponent::from(l)],
                r: vec![Exponent::from(r)],
                k: 2,
            })
            .unwrap();
            let pair = check_certificate(&CertificateQuery {
                v: n(3),
                l: vec![Exponent::from(l), Exponent::from(l)],
                r: vec![Exponent::from(r), Exponent::from(r)],
                k: 2,
            })
            .unwrap();
            assert_eq!(single, pair, "l = {l}, r = {r}");
        }
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(l1_ball_size(1, 3), 7);
        assert_eq!(l1_ball_size(2, 1), 5);
        assert_eq!(l1_ball_size(2, 3), 25);
        assert_eq!(l1_ball_size(3, 1), 7);
    }

    #[test]
    fn alpha_values() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(alpha(1), r(4, 3));
        assert_eq!(alpha(3), r(2218, 2187));
        assert!(alpha(4) < alpha(3));
    }

    #[test]
    fn formula_guard_and_terms() {
        let f = lower_bound_formula(&SymbolicPow::from_natural(&n(2304)).unwrap());
        assert!(!f.guard);
        assert_eq!(f.value, None);
        let e = Exponent::Factorial(16);
        let s = SymbolicPow::new(n(3), e.clone(), e).unwrap();
        let f = lower_bound_formula(&s);
        assert!(f.guard);
        assert_eq!((f.d, f.d_term, f.l_term, f.value), (17, 2, Some(4), Some(2)));
        assert!(f.d_term_ceil_log_log3 <= f.d_term && f.d_term_floor_log_ceil_log <= f.d_term);
    }

    #[test]
    fn nested_log_chain() {
        let b5 = dnb_table(&n(3), 5).unwrap().row(5).bprime.clone();
        assert!(proves_log_log3_log4_below(&b5, 19865, 10000));
        assert!(!proves_log_log3_log4_below(&b5, 19864, 10000));
    }

    #[test]
    fn factorial_example_small() {
        for k in 0..=2 {
            let rep = example_613(k).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
        let rep = example_613(2).unwrap();
        assert_eq!(rep.d, 17);
        let nu: Vec<(u64, u64, u64)> = rep.prime_checks.iter().map(|c| (c.p, c.nu_d, c.nu_r)).collect();
        assert_eq!(nu, vec![(2, 4, 15), (3, 3, 6), (5, 1, 3), (7, 1, 2)]);
        assert_eq!(example_613(0).unwrap().depth_one_lower, Some(2));
        assert!((factorial(16) % n(15120)).is_zero());
    }
}
