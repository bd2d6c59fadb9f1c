//! Serde helpers: big integers travel as decimal strings.

use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::numtheory::Natural;

pub fn natural<S: Serializer>(n: &Natural, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

pub fn natural_opt<S: Serializer>(n: &Option<Natural>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_some(&n.to_string()),
        None => s.serialize_none(),
    }
}

pub fn naturals<S: Serializer>(ns: &[Natural], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(ns.len()))?;
    for n in ns {
        seq.serialize_element(&n.to_string())?;
    }
    seq.end()
}

pub fn natural_pairs<S: Serializer>(ps: &[(Natural, u32)], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(ps.len()))?;
    for (p, e) in ps {
        seq.serialize_element(&(p.to_string(), e))?;
    }
    seq.end()
}
