use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactlin::rat::{is_integer, rat, Rat};
use crate::weights::Weight;

/// Sparse vector over PBW monomials (exponent vectors over the negative roots).
pub type VermaVec = BTreeMap<Vec<u32>, Rat>;

pub(crate) fn add_into<K: Ord + Clone>(acc: &mut BTreeMap<K, Rat>, key: K, c: Rat) {
    if c.is_zero() {
        return;
    }
    let sum = acc.remove(&key).map_or(c.clone(), |x| x + &c);
    if !sum.is_zero() {
        acc.insert(key, sum);
    }
}

/// Negative roots `E_{ba}` (`a < b`, zero-based), in lexicographic order of `(a, b)`.
pub fn negative_roots(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((b, a));
        }
    }
    out
}

/// Product of negative root vectors in the fixed root order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PbwMonomial {
    pub exponents: Vec<u32>,
}

/// The monomials of `M(μ)` of weight `γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VermaBlock {
    pub mu: Weight,
    pub gamma: Weight,
    pub basis: Vec<PbwMonomial>,
}

/// Coordinates of a sum-zero difference in the simple roots, if they are
/// nonnegative integers.
pub(crate) fn simple_root_coords(diff: &[Rat]) -> Option<Vec<u32>> {
    let n = diff.len();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    let mut acc = Rat::zero();
    for d in &diff[..n.saturating_sub(1)] {
        acc += d;
        if !is_integer(&acc) || acc < Rat::zero() {
            return None;
        }
        out.push(u32::try_from(acc.to_integer()).ok()?);
    }
    if diff.iter().fold(Rat::zero(), |a, b| a + b) != Rat::zero() {
        return None;
    }
    Some(out)
}

/// All exponent vectors over the negative roots summing to the element of
/// `Q+` with the given simple-root coordinates, in lexicographic order.
pub fn kostant_partitions(n: usize, coords: &[u32]) -> Vec<Vec<u32>> {
    let roots = negative_roots(n);
    let mut out = Vec::new();
    let mut cur = vec![0u32; roots.len()];
    let mut rem = coords.to_vec();
    fn rec(r: usize, roots: &[(usize, usize)], rem: &mut [u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r == roots.len() {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let (b, a) = roots[r];
        let max = (a..b).map(|i| rem[i]).min().unwrap_or(0);
        for k in 0..=max {
            for i in a..b {
                rem[i] -= k;
            }
            cur[r] = k;
            rec(r + 1, roots, rem, cur, out);
            for i in a..b {
                rem[i] += k;
            }
        }
        cur[r] = 0;
    }
    rec(0, &roots, &mut rem, &mut cur, &mut out);
    out.sort();
    out
}

pub fn verma_basis(mu: &Weight, gamma: &Weight) -> VermaBlock {
    let n = mu.n();
    let diff = (mu - gamma).coords().to_vec();
    let basis = simple_root_coords(&diff)
        .map(|c| kostant_partitions(n, &c).into_iter().map(|e| PbwMonomial { exponents: e }).collect())
        .unwrap_or_default();
    VermaBlock { mu: mu.clone(), gamma: gamma.clone(), basis }
}

/// The Verma module of `gl_n` with highest weight given in `gl` coordinates,
/// with a memoized action of matrix units on PBW monomials.
pub struct Verma {
    n: usize,
    weight: Vec<Rat>,
    roots: Vec<(usize, usize)>,
    root_index: HashMap<(usize, usize), usize>,
    memo: RefCell<HashMap<((usize, usize), Vec<u32>), VermaVec>>,
}

impl Verma {
    pub fn new(weight: Vec<Rat>) -> Self {
        let n = weight.len();
        let roots = negative_roots(n);
        let root_index = roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        Verma { n, weight, roots, root_index, memo: RefCell::new(HashMap::new()) }
    }

    pub fn from_weight(mu: &Weight) -> Self {
        Self::new(mu.coords().to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn highest_weight(&self) -> &[Rat] {
        &self.weight
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn empty_monomial(&self) -> Vec<u32> {
        vec![0; self.roots.len()]
    }

    /// `gl` weight of a monomial applied to the highest weight vector.
    pub fn weight_of(&self, exps: &[u32]) -> Vec<Rat> {
        let mut w = self.weight.clone();
        for (&(b, a), &k) in self.roots.iter().zip(exps) {
            if k > 0 {
                w[b] += rat(i64::from(k));
                w[a] -= rat(i64::from(k));
            }
        }
        w
    }

    /// `E_{cd}` applied to a monomial vector.
    pub fn act(&self, c: usize, d: usize, exps: &[u32]) -> VermaVec {
        if c == d {
            let mut out = VermaVec::new();
            add_into(&mut out, exps.to_vec(), self.weight_of(exps)[c].clone());
            return out;
        }
        let key = ((c, d), exps.to_vec());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let out = self.act_uncached(c, d, exps);
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn act_uncached(&self, c: usize, d: usize, exps: &[u32]) -> VermaVec {
        let mut out = VermaVec::new();
        let first = exps.iter().position(|&k| k > 0);
        let x_index = (c > d).then(|| self.root_index[&(c, d)]);
        let Some(r0) = first else {
            // Highest weight vector: raising operators kill it.
            if let Some(xi) = x_index {
                let mut e = exps.to_vec();
                e[xi] += 1;
                out.insert(e, Rat::one());
            }
            return out;
        };
        if let Some(xi) = x_index {
            if xi <= r0 {
                let mut e = exps.to_vec();
                e[xi] += 1;
                out.insert(e, Rat::one());
                return out;
            }
        }
        // x f v = f (x v) + [x, f] v with f the leading factor.
        let (b, a) = self.roots[r0];
        let mut rest = exps.to_vec();
        rest[r0] -= 1;
        for (m, coef) in self.act(c, d, &rest) {
            for (m2, c2) in self.act(b, a, &m) {
                add_into(&mut out, m2, &coef * c2);
            }
        }
        // [E_cd, E_ba] = δ_db E_ca - δ_ac E_bd
        if d == b {
            for (m, coef) in self.act(c, a, &rest) {
                add_into(&mut out, m, coef);
            }
        }
        if a == c {
            for (m, coef) in self.act(b, d, &rest) {
                add_into(&mut out, m, -coef);
            }
        }
        out
    }

    /// `E_{cd}` applied to a sparse vector.
    pub fn act_vec(&self, c: usize, d: usize, v: &VermaVec) -> VermaVec {
        let mut out = VermaVec::new();
        for (m, coef) in v {
            for (m2, c2) in self.act(c, d, m) {
                add_into(&mut out, m2, coef * &c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat::frac;

    #[test]
    fn kostant_counts() {
        let mu = Weight::zero(3);
        assert_eq!(verma_basis(&mu, &mu).basis.len(), 1);
        // μ - γ = α_1 + α_2
        let gamma = Weight::from_i64(&[-1, 0, 1]);
        assert_eq!(verma_basis(&mu, &gamma).basis.len(), 2);
        let g2 = Weight::from_i64(&[-2, 2]);
        assert_eq!(verma_basis(&Weight::zero(2), &g2).basis.len(), 1);
        assert!(verma_basis(&Weight::zero(2), &Weight::from_i64(&[1, -1])).basis.is_empty());
    }

    #[test]
    fn sl2_raising_after_lowering() {
        let mu = vec![frac(3, 2), frac(-3, 2)];
        let v = Verma::new(mu);
        let f = v.act(1, 0, &v.empty_monomial());
        let ef = v.act_vec(0, 1, &f);
        let mut expected = VermaVec::new();
        expected.insert(v.empty_monomial(), rat(3));
        assert_eq!(ef, expected);
    }
}
