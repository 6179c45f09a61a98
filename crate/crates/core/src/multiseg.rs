//! Segments and multisegments of rationals, their canonical ordering, and the
//! multisegment attached to a pair of weights.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::rat::{fmt_rat, fmt_rat_short, fmt_tuple, frac, is_integer, parse_rat, rat, Rat};
use crate::exactlin::Mat;
use crate::weights::{tensor_datum, Weight};

/// The run `{start, start+1, ..., start+length-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub start: Rat,
    pub length: usize,
}

impl Segment {
    pub fn new(start: Rat, length: usize) -> Self {
        assert!(length > 0, "segments have positive length");
        Segment { start, length }
    }

    pub fn entries(&self) -> Vec<Rat> {
        (0..self.length).map(|j| &self.start + rat(j as i64)).collect()
    }

    pub fn end(&self) -> Rat {
        &self.start + rat(self.length as i64 - 1)
    }

    pub fn center(&self) -> Rat {
        &self.start + frac(self.length as i64 - 1, 2)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries().iter().map(fmt_rat_short).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

/// An ordered collection of segments.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multisegment {
    pub segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(segments: Vec<Segment>) -> Self {
        Multisegment { segments }
    }

    /// Parses `"[(-1/2,2),(1/2,1)]"`: a list of `(start, length)` pairs.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a multisegment literal: {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
        let mut segments = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let (a, b) = body[..close].split_once(',').ok_or_else(bad)?;
            let start = parse_rat(a)?;
            let length: usize = b.parse().map_err(|_| bad())?;
            if length == 0 {
                return Err(bad());
            }
            segments.push(Segment::new(start, length));
            rest = &body[close + 1..];
            rest = rest.strip_prefix(',').unwrap_or(rest);
        }
        Ok(Multisegment { segments })
    }

    pub fn total_length(&self) -> usize {
        self.segments.iter().map(|s| s.length).sum()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.length).collect()
    }

    pub fn canonical(&self) -> MultisegmentClass {
        let mut segs = self.segments.clone();
        segs.sort_by(|a, b| {
            b.center()
                .cmp(&a.center())
                .then_with(|| b.start.cmp(&a.start))
                .then_with(|| b.length.cmp(&a.length))
        });
        MultisegmentClass { canonical: Multisegment { segments: segs } }
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Multisegment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(String, usize)> = self.segments.iter().map(|g| (fmt_rat(&g.start), g.length)).collect();
        v.serialize(s)
    }
}

/// A multisegment up to reordering, held in canonical order: centers
/// decreasing, ties by start decreasing, then length decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultisegmentClass {
    canonical: Multisegment,
}

impl MultisegmentClass {
    pub fn segments(&self) -> &[Segment] {
        &self.canonical.segments
    }

    pub fn multisegment(&self) -> &Multisegment {
        &self.canonical
    }

    pub fn total_length(&self) -> usize {
        self.canonical.total_length()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.canonical.lengths()
    }

    /// Ordering used for class lists: more segments first, then lexicographic.
    fn order_key(&self) -> (std::cmp::Reverse<usize>, &[Segment]) {
        (std::cmp::Reverse(self.segments().len()), self.segments())
    }
}

impl PartialOrd for MultisegmentClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultisegmentClass {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for MultisegmentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

impl Serialize for MultisegmentClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical.serialize(s)
    }
}

/// All entries with multiplicity, in decreasing order.
pub fn support(tau: &Multisegment) -> Vec<Rat> {
    let mut v: Vec<Rat> = tau.segments.iter().flat_map(Segment::entries).collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// All multisegment classes whose support is the multiset `values`.
pub fn ms_classes(values: &[Rat]) -> Result<Vec<MultisegmentClass>> {
    if values.windows(2).any(|p| !is_integer(&(&p[0] - &p[1]))) {
        return Err(Error::NotIntegralSpaced(fmt_tuple(values)));
    }
    let mut remaining = values.to_vec();
    remaining.sort();
    let mut found = BTreeSet::new();
    let mut current = Vec::new();
    partitions(&mut remaining, &mut current, &mut found);
    Ok(found.into_iter().collect())
}

/// Peels a segment starting at the smallest remaining value, in every possible length.
fn partitions(remaining: &mut Vec<Rat>, current: &mut Vec<Segment>, out: &mut BTreeSet<MultisegmentClass>) {
    if remaining.is_empty() {
        out.insert(Multisegment::new(current.clone()).canonical());
        return;
    }
    let start = remaining[0].clone();
    let mut taken = Vec::new();
    let mut next = start.clone();
    while let Some(pos) = remaining.iter().position(|x| *x == next) {
        taken.push(remaining.remove(pos));
        current.push(Segment::new(start.clone(), taken.len()));
        partitions(remaining, current, out);
        current.pop();
        next += Rat::one();
    }
    for x in taken {
        let pos = remaining.partition_point(|y| *y < x);
        remaining.insert(pos, x);
    }
}

/// The multisegment with segments starting at `(μ+ρ)_i` of length `ℓ_i`,
/// where `λ - μ ≡ Σ ℓ_i ε_i`. Empty segments are dropped.
pub fn delta(lam: &Weight, mu: &Weight, l: usize) -> Result<MultisegmentClass> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(fmt_tuple(&lam.plus_rho())));
    }
    let datum = tensor_datum(lam, mu, l).ok_or(Error::NoTensorDatum { l })?;
    let starts = mu.plus_rho();
    let segs = starts
        .into_iter()
        .zip(&datum.counts)
        .filter(|(_, &c)| c > 0)
        .map(|(s, &c)| Segment::new(s, c))
        .collect();
    Ok(Multisegment::new(segs).canonical())
}

/// Concatenation of the segments' entries, each in increasing order.
pub fn zeta_weight(tau: &MultisegmentClass) -> Vec<Rat> {
    tau.segments().iter().flat_map(Segment::entries).collect()
}

/// The nilpotent matrix with a 1 at `(i, i+1)` for each `i` strictly inside a
/// segment block of the concatenated index range.
pub fn nilpotent_rep(tau: &MultisegmentClass) -> Mat {
    let n = tau.total_length();
    let mut m = Mat::zeros(n, n);
    let mut pos = 0;
    for s in tau.segments() {
        for i in pos..pos + s.length - 1 {
            m.set(i, i + 1, Rat::one());
        }
        pos += s.length;
    }
    m
}

/// Sum of the support.
pub fn support_sum(tau: &Multisegment) -> Rat {
    support(tau).iter().fold(Rat::zero(), |a, b| a + b)
}
