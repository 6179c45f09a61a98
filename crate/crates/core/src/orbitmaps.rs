//! Graded nilpotent classes and parabolic double cosets: the map sending a
//! multisegment (an orbit in the degree-one piece of the grading by `λ+ρ`)
//! to the double coset `P (1+Nᵗ) P`, and its partial inverse.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::rat::{fmt_tuple, is_integer, Rat};
use crate::exactlin::Mat;
use crate::multiseg::{ms_classes, support, Multisegment, MultisegmentClass, Segment};
use crate::weights::{stabilizer, Weight};
use crate::weyl::{double_cosets, DoubleCoset, ParabolicSet, Perm};

/// The grading of `C^n` by the eigenvalues of `σ = λ+ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedStructure {
    #[serde(skip)]
    pub sigma: Vec<Rat>,
    /// Zero-based positions in each block, blocks ordered by decreasing value.
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    pub block_values: Vec<Rat>,
    pub parabolic: ParabolicSet,
}

impl GradedStructure {
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn block_of(&self, pos: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&pos)).expect("position out of range")
    }

    fn block_with_value(&self, v: &Rat) -> Option<usize> {
        self.block_values.iter().position(|x| x == v)
    }

    /// Whether blocks `i..=j` have values decreasing by exactly one at each step.
    pub fn is_unit_chain(&self, i: usize, j: usize) -> bool {
        i <= j && j < self.blocks.len() && (i..j).all(|b| &self.block_values[b] - &self.block_values[b + 1] == Rat::one())
    }
}

pub fn graded_structure(lam: &Weight) -> Result<GradedStructure> {
    let parabolic = stabilizer(lam)?;
    let sigma = lam.plus_rho();
    if sigma.windows(2).any(|p| !is_integer(&(&p[0] - &p[1]))) {
        return Err(Error::NotIntegralSpaced(fmt_tuple(&sigma)));
    }
    let blocks = parabolic.blocks(sigma.len());
    let block_values = blocks.iter().map(|b| sigma[b[0]].clone()).collect();
    Ok(GradedStructure { sigma, blocks, block_values, parabolic })
}

fn check_support(tau: &MultisegmentClass, gs: &GradedStructure) -> Result<()> {
    let mut sig = gs.sigma.clone();
    sig.sort_by(|a, b| b.cmp(a));
    let sup = support(tau.multisegment());
    if sup != sig {
        return Err(Error::SupportMismatch { tau: tau.to_string(), sigma: fmt_tuple(&gs.sigma) });
    }
    Ok(())
}

/// A representative `N ∈ g_1` of the orbit of `τ`: each segment is a string
/// of basis vectors, one per block, with `N` raising the value by one.
pub fn graded_rep(tau: &MultisegmentClass, gs: &GradedStructure) -> Result<Mat> {
    check_support(tau, gs)?;
    let n = gs.n();
    let mut used = vec![0usize; gs.blocks.len()];
    let mut m = Mat::zeros(n, n);
    for seg in tau.segments() {
        let mut prev: Option<usize> = None;
        for v in seg.entries() {
            let b = gs.block_with_value(&v).expect("support checked");
            let pos = gs.blocks[b][used[b]];
            used[b] += 1;
            if let Some(p) = prev {
                m.set(pos, p, Rat::one());
            }
            prev = Some(pos);
        }
    }
    Ok(m)
}

/// Block corner ranks: `(i, j) ↦ rank g[rows in blocks ≥ i, cols in blocks ≤ j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetRankTable {
    pub corner_ranks: BTreeMap<(usize, usize), usize>,
}

pub fn coset_rank_table(g: &Mat, gs: &GradedStructure) -> CosetRankTable {
    let k = gs.blocks.len();
    let mut corner_ranks = BTreeMap::new();
    for i in 0..k {
        let rows: Vec<usize> = gs.blocks[i..].concat();
        for j in 0..k {
            let cols: Vec<usize> = gs.blocks[..=j].concat();
            corner_ranks.insert((i, j), g.select(&rows, &cols).rank());
        }
    }
    CosetRankTable { corner_ranks }
}

/// Corner ranks of the permutation matrix `e_c ↦ e_{w(c)}`, counted directly.
pub fn perm_rank_table(w: &Perm, gs: &GradedStructure) -> CosetRankTable {
    let k = gs.blocks.len();
    let block: Vec<usize> = (0..gs.n()).map(|p| gs.block_of(p)).collect();
    let mut corner_ranks = BTreeMap::new();
    for i in 0..k {
        for j in 0..k {
            let r = (0..gs.n()).filter(|&c| block[c] <= j && block[w.apply(c)] >= i).count();
            corner_ranks.insert((i, j), r);
        }
    }
    CosetRankTable { corner_ranks }
}

pub fn perm_matrix(w: &Perm) -> Mat {
    let n = w.degree();
    let mut m = Mat::zeros(n, n);
    for c in 0..n {
        m.set(w.apply(c), c, Rat::one());
    }
    m
}

/// The double coset `W_λ w W_λ` with `P (1+Nᵗ) P = P w P` for `N` representing `τ`.
pub fn phi(tau: &MultisegmentClass, gs: &GradedStructure) -> Result<DoubleCoset> {
    let nmat = graded_rep(tau, gs)?;
    let g = &Mat::identity(gs.n()) + &nmat.transpose();
    let table = coset_rank_table(&g, gs);
    double_cosets(&gs.parabolic, &gs.parabolic, gs.n())
        .into_iter()
        .find(|q| perm_rank_table(&q.longest_rep, gs) == table)
        .ok_or_else(|| Error::NoMatchingCoset(format!("{:?}", table.corner_ranks)))
}

/// The multisegment class mapping to `q`, or `None` when `q` is off the image.
pub fn psi(q: &DoubleCoset, gs: &GradedStructure) -> Result<Option<MultisegmentClass>> {
    for tau in ms_classes(&gs.sigma)? {
        if phi(&tau, gs)?.longest_rep == q.longest_rep {
            return Ok(Some(tau));
        }
    }
    Ok(None)
}

/// Ranks of the composed block maps `N_{i,i+1} ∘ ... ∘ N_{j-1,j}` along unit chains `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub chain_ranks: BTreeMap<(usize, usize), usize>,
}

pub fn rank_profile(nmat: &Mat, gs: &GradedStructure) -> Result<RankProfile> {
    let n = gs.n();
    for r in 0..n {
        for c in 0..n {
            if !nmat.get(r, c).is_zero() && &gs.sigma[r] - &gs.sigma[c] != Rat::one() {
                return Err(Error::NotGradedOne(r, c));
            }
        }
    }
    let k = gs.blocks.len();
    let mut chain_ranks = BTreeMap::new();
    for i in 0..k {
        let mut composed: Option<Mat> = None;
        for j in i + 1..k {
            if !gs.is_unit_chain(i, j) {
                break;
            }
            let step = nmat.select(&gs.blocks[j - 1], &gs.blocks[j]);
            let next = match composed {
                None => step,
                Some(c) => &c * &step,
            };
            chain_ranks.insert((i, j), next.rank());
            composed = Some(next);
        }
    }
    Ok(RankProfile { chain_ranks })
}

/// Recovers the multisegment from chain ranks by inclusion-exclusion: the
/// number of strings spanning exactly blocks `i..=j` is
/// `r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1)`, where `r(i,i)` is the block
/// dimension and ranks along non-chains are zero.
pub fn reconstruct_multisegment(profile: &RankProfile, gs: &GradedStructure) -> MultisegmentClass {
    let k = gs.blocks.len() as isize;
    let r = |i: isize, j: isize| -> i64 {
        if i < 0 || j >= k || !gs.is_unit_chain(i as usize, j as usize) {
            return 0;
        }
        if i == j {
            return gs.blocks[i as usize].len() as i64;
        }
        profile.chain_ranks.get(&(i as usize, j as usize)).map_or(0, |&x| x as i64)
    };
    let mut segs = Vec::new();
    for i in 0..k {
        for j in i..k {
            let c = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
            for _ in 0..c.max(0) {
                let start = gs.block_values[j as usize].clone();
                segs.push(Segment::new(start, (j - i + 1) as usize));
            }
        }
    }
    Multisegment::new(segs).canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat::{frac, rat};
    use crate::weyl::Perm;

    #[test]
    fn graded_examples() {
        let gs = graded_structure(&Weight::zero(2)).unwrap();
        assert_eq!(gs.blocks, vec![vec![0], vec![1]]);
        assert_eq!(gs.sigma, vec![frac(1, 2), frac(-1, 2)]);
        let flat = graded_structure(&Weight::from_lambda_rho(vec![rat(0); 3])).unwrap();
        assert_eq!(flat.blocks.len(), 1);
        let g = graded_structure(&Weight::from_lambda_rho(vec![rat(1), rat(0), rat(0)])).unwrap();
        assert_eq!(g.blocks, vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn phi_examples() {
        let gs = graded_structure(&Weight::zero(2)).unwrap();
        let classes = ms_classes(&gs.sigma).unwrap();
        assert!(phi(&classes[0], &gs).unwrap().longest_rep.is_identity());
        assert_eq!(phi(&classes[1], &gs).unwrap().longest_rep, Perm::simple(1, 2));

        let gs3 = graded_structure(&Weight::zero(3)).unwrap();
        let full = Multisegment::new(vec![Segment::new(rat(-1), 3)]).canonical();
        assert_eq!(phi(&full, &gs3).unwrap().longest_rep, Perm::parse("2,3,1").unwrap());
    }

    #[test]
    fn psi_off_image() {
        let gs = graded_structure(&Weight::from_lambda_rho(vec![rat(1), rat(-1)])).unwrap();
        let cosets = double_cosets(&gs.parabolic, &gs.parabolic, 2);
        assert!(psi(&cosets[0], &gs).unwrap().is_some());
        assert!(psi(&cosets[1], &gs).unwrap().is_none());
    }

    #[test]
    fn profile_examples() {
        let gs3 = graded_structure(&Weight::zero(3)).unwrap();
        let zero = rank_profile(&Mat::zeros(3, 3), &gs3).unwrap();
        assert!(zero.chain_ranks.values().all(|&r| r == 0));
        let full = Multisegment::new(vec![Segment::new(rat(-1), 3)]).canonical();
        let nmat = graded_rep(&full, &gs3).unwrap();
        let p = rank_profile(&nmat, &gs3).unwrap();
        assert_eq!(p.chain_ranks.get(&(0, 1)), Some(&1));
        assert_eq!(p.chain_ranks.get(&(1, 2)), Some(&1));
        assert_eq!(p.chain_ranks.get(&(0, 2)), Some(&1));
        assert_eq!(reconstruct_multisegment(&p, &gs3), full);
        assert!(matches!(rank_profile(&Mat::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]), &gs3), Err(Error::NotGradedOne(0, 2))));
    }
}
