use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::perm::{all_perms, Perm};
use crate::error::{Error, Result};

/// A set of simple reflection indices (1-based), generating a parabolic subgroup.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParabolicSet {
    indices: BTreeSet<usize>,
}

impl ParabolicSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        ParabolicSet { indices: indices.into_iter().collect() }
    }

    pub fn full(m: usize) -> Self {
        Self::new(1..m)
    }

    /// Young subgroup for consecutive blocks of the given sizes.
    pub fn from_block_sizes(sizes: &[usize]) -> Self {
        let mut idx = Vec::new();
        let mut start = 0;
        for &s in sizes {
            idx.extend(start + 1..start + s);
            start += s;
        }
        Self::new(idx)
    }

    /// Parses `"1,3"`; the empty string is the empty set.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" || t == "none" {
            return Ok(Self::empty());
        }
        let vals = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("not a simple-index list: {s:?}")))?;
        if vals.contains(&0) {
            return Err(Error::Parse(format!("simple indices are 1-based: {s:?}")));
        }
        Ok(Self::new(vals))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn fits(&self, m: usize) -> bool {
        self.indices.iter().all(|&i| i >= 1 && i < m)
    }

    /// Partition of `0..m` into maximal runs connected by the simple indices.
    pub fn blocks(&self, m: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for k in 0..m {
            if k > 0 && self.contains(k) {
                out.last_mut().unwrap().push(k);
            } else {
                out.push(vec![k]);
            }
        }
        out
    }

    /// Elements of the parabolic subgroup inside `S_m`.
    pub fn elements(&self, m: usize) -> Vec<Perm> {
        let mut seen = BTreeSet::from([Perm::identity(m)]);
        let mut queue = VecDeque::from([Perm::identity(m)]);
        while let Some(w) = queue.pop_front() {
            for i in self.iter() {
                let v = w.right_mul_simple(i);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl fmt::Display for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// A double coset `W_left w W_right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DoubleCoset {
    pub left: ParabolicSet,
    pub right: ParabolicSet,
    pub longest_rep: Perm,
    pub size: usize,
}

impl DoubleCoset {
    pub fn members(&self) -> Vec<Perm> {
        coset_closure(&self.longest_rep, &self.left, &self.right)
    }

    pub fn contains(&self, w: &Perm) -> bool {
        longest_in_coset(w, &self.left, &self.right) == self.longest_rep
    }

    pub fn is_identity_coset(&self) -> bool {
        self.contains(&Perm::identity(self.longest_rep.degree()))
    }
}

fn coset_closure(w: &Perm, left: &ParabolicSet, right: &ParabolicSet) -> Vec<Perm> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(v) = queue.pop_front() {
        let nbrs = left.iter().map(|i| v.left_mul_simple(i)).chain(right.iter().map(|i| v.right_mul_simple(i)));
        for u in nbrs.collect::<Vec<_>>() {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// The unique element of maximal length in `W_left w W_right`.
pub fn longest_in_coset(w: &Perm, left: &ParabolicSet, right: &ParabolicSet) -> Perm {
    // Climb: a left or right ascent inside the parabolics always stays in the coset.
    let mut cur = w.clone();
    loop {
        let up = left
            .iter()
            .find(|&i| !cur.has_left_descent(i))
            .map(|i| cur.left_mul_simple(i))
            .or_else(|| right.iter().find(|&i| !cur.has_right_descent(i)).map(|i| cur.right_mul_simple(i)));
        match up {
            Some(next) => cur = next,
            None => return cur,
        }
    }
}

/// The unique element of minimal length in `W_left w W_right`.
pub fn shortest_in_coset(w: &Perm, left: &ParabolicSet, right: &ParabolicSet) -> Perm {
    let mut cur = w.clone();
    loop {
        let down = left
            .iter()
            .find(|&i| cur.has_left_descent(i))
            .map(|i| cur.left_mul_simple(i))
            .or_else(|| right.iter().find(|&i| cur.has_right_descent(i)).map(|i| cur.right_mul_simple(i)));
        match down {
            Some(next) => cur = next,
            None => return cur,
        }
    }
}

/// Partition of `S_m` into `W_left \ S_m / W_right` double cosets, ordered by
/// the one-line notation of their longest representatives.
pub fn double_cosets(left: &ParabolicSet, right: &ParabolicSet, m: usize) -> Vec<DoubleCoset> {
    let mut assigned = BTreeSet::new();
    let mut out = Vec::new();
    for w in all_perms(m) {
        if assigned.contains(&w) {
            continue;
        }
        let members = coset_closure(&w, left, right);
        let longest = members.iter().max_by_key(|p| p.length()).unwrap().clone();
        out.push(DoubleCoset {
            left: left.clone(),
            right: right.clone(),
            longest_rep: longest,
            size: members.len(),
        });
        assigned.extend(members);
    }
    out.sort_by(|a, b| a.longest_rep.cmp(&b.longest_rep));
    out
}

/// Minimal-length representatives of the left cosets `w W_J`, i.e. the
/// permutations with no right descent in `J`.
pub fn minimal_left_coset_reps(j: &ParabolicSet, m: usize) -> Vec<Perm> {
    all_perms(m).into_iter().filter(|w| j.iter().all(|i| !w.has_right_descent(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_counts() {
        let e = ParabolicSet::empty();
        assert_eq!(double_cosets(&e, &e, 3).len(), 6);
        let one = ParabolicSet::new([1]);
        let whole = double_cosets(&one, &one, 2);
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].longest_rep, Perm::simple(1, 2));
        // W_1 \ S_3 / W_1 has the cosets {e, s1} and a 4-element coset.
        let cs = double_cosets(&one, &one, 3);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs.iter().map(|c| c.size).sum::<usize>(), 6);
    }

    #[test]
    fn longest_examples() {
        let e = ParabolicSet::empty();
        let one = ParabolicSet::new([1]);
        assert_eq!(longest_in_coset(&Perm::identity(3), &e, &e), Perm::identity(3));
        assert_eq!(longest_in_coset(&Perm::identity(2), &one, &e), Perm::simple(1, 2));
        let s2 = Perm::simple(2, 3);
        let s1s2s1 = Perm::longest(3);
        assert_eq!(longest_in_coset(&s2, &one, &one), s1s2s1);
    }

    #[test]
    fn blocks_and_reps() {
        let j = ParabolicSet::from_block_sizes(&[2, 1]);
        assert_eq!(j, ParabolicSet::new([1]));
        assert_eq!(j.blocks(3), vec![vec![0, 1], vec![2]]);
        assert_eq!(minimal_left_coset_reps(&j, 3).len(), 3);
        assert_eq!(j.elements(3).len(), 2);
    }
}
