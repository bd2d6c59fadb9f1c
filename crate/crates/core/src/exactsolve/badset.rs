//! Responses that lose on the spot, and the complete one-round decision.

use serde::Serialize;

use crate::game::{is_lost_sorted, Position, Word, FAST_LIMIT};
use crate::numtheory::Natural;

use super::SolveError;

/// Sorted, disjoint, maximal closed intervals `[a, b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Runs<W> {
    pub runs: Vec<(W, W)>,
}

impl<W: Word> Runs<W> {
    pub fn from_intervals(mut ivs: Vec<(W, W)>) -> Self {
        ivs.retain(|(a, b)| a <= b);
        ivs.sort();
        let mut runs: Vec<(W, W)> = Vec::with_capacity(ivs.len());
        for (a, b) in ivs {
            if let Some(last) = runs.last_mut() {
                // Merge overlapping and adjacent runs.
                if a <= last.1.inc() {
                    if b > last.1 {
                        last.1 = b;
                    }
                    continue;
                }
            }
            runs.push((a, b));
        }
        Runs { runs }
    }

    pub fn contains(&self, w: &W) -> bool {
        let idx = self.runs.partition_point(|(_, b)| b < w);
        idx < self.runs.len() && &self.runs[idx].0 <= w
    }

    /// The run containing `w`, if any.
    pub fn run_of(&self, w: &W) -> Option<&(W, W)> {
        let idx = self.runs.partition_point(|(_, b)| b < w);
        self.runs.get(idx).filter(|(a, _)| a <= w)
    }

    /// Least `m >= 1` with `[m+1, 2m]` inside one run, as the challenge `2m`;
    /// `1` when the run structure already contains 1.
    pub fn winning_challenge(&self) -> Option<W> {
        let one = W::unit();
        for (a, b) in &self.runs {
            if *a == one {
                return Some(one);
            }
            let m = a.dec();
            if b.shr1() >= m {
                return Some(m.shl1());
            }
        }
        None
    }
}

/// Intervals of responses `w` such that `S + {w}` is lost. `s` must be
/// sorted and not lost.
pub fn bad_runs<W: Word>(s: &[W]) -> Runs<W> {
    let mut ivs = Vec::with_capacity(s.len() * s.len() * 2 + s.len());
    let one = W::unit();
    for i in 0..s.len() {
        for j in i..s.len() {
            // w takes the role of u_h.
            let p = s[i].mul(&s[j]);
            ivs.push((p.inc(), p.shl1().dec()));
        }
    }
    for h in s {
        for j in s {
            // w u_j < u_h < 2 w u_j
            if j >= h {
                break;
            }
            let lo = h.div(&j.shl1()).inc();
            let hi = h.dec().div(j);
            ivs.push((lo, hi));
        }
        // w^2 < u_h < 2 w^2
        if *h > one {
            let lo = h.shr1().isqrt().inc();
            let hi = h.dec().isqrt();
            ivs.push((lo, hi));
        }
    }
    Runs::from_intervals(ivs)
}

/// Complete decision whether Challenger wins in one round from `s`.
pub fn wins_in_one_sorted<W: Word>(s: &[W]) -> Option<W> {
    bad_runs(s).winning_challenge()
}

/// Public bad-set view over arbitrary-precision values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadSet {
    #[serde(serialize_with = "serialize_runs")]
    pub runs: Vec<(Natural, Natural)>,
}

fn serialize_runs<S: serde::Serializer>(runs: &[(Natural, Natural)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(runs.len()))?;
    for (a, b) in runs {
        seq.serialize_element(&(a.to_string(), b.to_string()))?;
    }
    seq.end()
}

impl BadSet {
    pub fn contains(&self, w: &Natural) -> bool {
        let idx = self.runs.partition_point(|(_, b)| b < w);
        idx < self.runs.len() && &self.runs[idx].0 <= w
    }

    pub fn max(&self) -> Option<&Natural> {
        self.runs.last().map(|(_, b)| b)
    }
}

fn to_natural_runs<W: Word>(runs: Runs<W>) -> BadSet {
    BadSet {
        runs: runs
            .runs
            .into_iter()
            .map(|(a, b)| (a.to_natural(), b.to_natural()))
            .collect(),
    }
}

pub fn bad_set(pos: &Position) -> Result<BadSet, SolveError> {
    if pos.is_lost() {
        return Err(SolveError::AlreadyLost);
    }
    Ok(match pos.as_fast() {
        Some(fast) => to_natural_runs(bad_runs(&fast)),
        None => to_natural_runs(bad_runs(pos.elements())),
    })
}

/// A challenge after which every legal response loses, if one exists.
pub fn wins_in_one(pos: &Position) -> Result<Option<Natural>, SolveError> {
    if pos.is_lost() {
        return Err(SolveError::AlreadyLost);
    }
    Ok(match pos.as_fast() {
        Some(fast) => wins_in_one_sorted(&fast).map(Natural::from),
        None => wins_in_one_sorted(pos.elements()),
    })
}

/// Brute-force reference: tries challenges up to `limit` against every
/// legal response, using only the loss predicate. A surviving response `w`
/// refutes every challenge in `[w, 2w - 1]`, so the scan jumps past them.
/// Used by tests and the verification suites.
pub fn wins_in_one_brute(s: &[u128], limit: u128) -> Option<u128> {
    let mut buf: Vec<u128> = Vec::with_capacity(s.len() + 1);
    let mut x = 1;
    'x: while x <= limit {
        // highest responses first, so a survivor lets the scan jump furthest
        for u in ((x / 2 + 1)..=x).rev() {
            buf.clear();
            buf.extend_from_slice(s);
            if let Err(at) = buf.binary_search(&u) {
                buf.insert(at, u);
            }
            if !is_lost_sorted(&buf) {
                x = 2 * u;
                continue 'x;
            }
        }
        return Some(x);
    }
    None
}

/// Whether every element is small enough for the `u128` kernels.
pub fn fits_fast(s: &[Natural]) -> bool {
    s.iter().all(|e| e < &Natural::from(FAST_LIMIT))
}
