use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Permutation of `{1..m}` in one-line notation, stored zero-based.
///
/// Composition is as functions: `(w * v)(i) = w(v(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm { images: (0..m).collect() }
    }

    /// The simple transposition `s_i` (1-based `i`, swapping `i` and `i+1`).
    pub fn simple(i: usize, m: usize) -> Self {
        assert!(i >= 1 && i < m, "simple reflection index out of range");
        let mut p = Perm::identity(m);
        p.images.swap(i - 1, i);
        p
    }

    pub fn longest(m: usize) -> Self {
        Perm { images: (0..m).rev().collect() }
    }

    /// From zero-based images; panics if not a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        Self::try_from_images(images).expect("not a permutation")
    }

    fn try_from_images(images: Vec<usize>) -> Option<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm { images })
    }

    /// From one-line notation with values in `1..=m`.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        let images = line
            .iter()
            .map(|&x| x.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .and_then(Self::try_from_images);
        images.ok_or_else(|| Error::Parse(format!("not a permutation: {line:?}")))
    }

    /// Parses `"3,1,4,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let vals = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("not a permutation literal: {s:?}")))?;
        Self::from_one_line(&vals)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of zero-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `s_i * self` (swaps the values `i` and `i+1`, 1-based).
    pub fn left_mul_simple(&self, i: usize) -> Perm {
        let images = self
            .images
            .iter()
            .map(|&x| if x == i - 1 { i } else if x == i { i - 1 } else { x })
            .collect();
        Perm { images }
    }

    /// `self * s_i` (swaps the positions `i` and `i+1`, 1-based).
    pub fn right_mul_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// Whether `s_i * self < self`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }

    /// Whether `self * s_i < self`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word `[i_1, ..., i_k]` with `self = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.right_mul_simple(i);
        }
        word.reverse();
        word
    }

    /// Bruhat order by the tableau criterion: `x <= w` iff for every `k` the
    /// sorted first `k` values of `x` are dominated entrywise by those of `w`.
    pub fn bruhat_leq(&self, w: &Perm) -> bool {
        assert_eq!(self.degree(), w.degree());
        let m = self.degree();
        for k in 1..m {
            let mut a: Vec<usize> = self.images[..k].to_vec();
            let mut b: Vec<usize> = w.images[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

/// All permutations of `{1..m}` in lexicographic order of one-line notation.
pub fn all_perms(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = (0..m).collect::<Vec<_>>();
    loop {
        out.push(Perm { images: cur.clone() });
        // Next lexicographic permutation.
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn length(w: &Perm) -> usize {
    w.length()
}

pub fn bruhat_leq(x: &Perm, w: &Perm) -> bool {
    x.bruhat_leq(w)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}
