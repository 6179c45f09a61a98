use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::rat::{fmt_rat, fmt_tuple, rat, Rat};
use crate::exactlin::{joint_generalized_eigenspaces, Mat, Subspace};
use crate::weyl::Perm;

/// A finite-dimensional module over the graded affine Hecke algebra on `ℓ`
/// strands, given by the matrices of `s_1..s_{ℓ-1}` and `ε_1..ε_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub dim: usize,
    pub strands: usize,
    pub s_mats: Vec<Mat>,
    pub eps_mats: Vec<Mat>,
    pub basis_labels: Option<Vec<Perm>>,
}

/// Joint generalized `ε`-eigenvalues with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightSpectrum {
    pub entries: BTreeMap<Vec<Rat>, usize>,
}

impl WeightSpectrum {
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    /// Sorted coordinates of one weight: the `S_ℓ`-orbit label shared by all
    /// weights of a module with a central character. `None` if the weights
    /// lie in different orbits or the spectrum is empty.
    pub fn central_character(&self) -> Option<Vec<Rat>> {
        let mut orbits = self.entries.keys().map(|w| {
            let mut s = w.clone();
            s.sort_by(|a, b| b.cmp(a));
            s
        });
        let first = orbits.next()?;
        orbits.all(|o| o == first).then_some(first)
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|(w, m)| format!("{}x{m}", fmt_tuple(w))).collect();
        parts.join(" ")
    }
}

impl Serialize for WeightSpectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            weight: Vec<String>,
            multiplicity: usize,
        }
        let v: Vec<Entry> = self
            .entries
            .iter()
            .map(|(w, &m)| Entry { weight: w.iter().map(fmt_rat).collect(), multiplicity: m })
            .collect();
        v.serialize(s)
    }
}

/// `⟨α_i, ε_j⟩ = δ_{ij} - δ_{i+1,j}` (1-based).
pub fn pairing(i: usize, j: usize) -> i64 {
    i64::from(i == j) - i64::from(i + 1 == j)
}

impl HModule {
    pub fn new(s_mats: Vec<Mat>, eps_mats: Vec<Mat>) -> Self {
        let strands = eps_mats.len();
        let dim = eps_mats.first().map_or(0, Mat::rows);
        HModule { dim, strands, s_mats, eps_mats, basis_labels: None }
    }

    pub fn zero(strands: usize) -> Self {
        HModule {
            dim: 0,
            strands,
            s_mats: vec![Mat::zeros(0, 0); strands.saturating_sub(1)],
            eps_mats: vec![Mat::zeros(0, 0); strands],
            basis_labels: None,
        }
    }

    /// All generator matrices: the `s_i` followed by the `ε_k`.
    pub fn generators(&self) -> Vec<Mat> {
        self.s_mats.iter().chain(&self.eps_mats).cloned().collect()
    }

    /// Checks every defining relation as an exact matrix identity.
    pub fn check_relations(&self) -> Result<()> {
        let d = self.dim;
        let id = Mat::identity(d);
        let fail = |msg: String| Err(Error::RelationCheckFailed(msg));
        if self.s_mats.len() + 1 != self.strands.max(1) || self.eps_mats.len() != self.strands {
            return fail("wrong number of generators".into());
        }
        for m in self.generators() {
            if m.rows() != d || m.cols() != d {
                return fail("generator has wrong shape".into());
            }
        }
        let s = &self.s_mats;
        let e = &self.eps_mats;
        for i in 0..s.len() {
            if !(&s[i] * &s[i]).is_identity() {
                return fail(format!("s_{}^2 != 1", i + 1));
            }
            for j in i + 1..s.len() {
                let ok = if j == i + 1 {
                    &(&s[i] * &s[j]) * &s[i] == &(&s[j] * &s[i]) * &s[j]
                } else {
                    s[i].commutator(&s[j]).is_zero()
                };
                if !ok {
                    return fail(format!("braid relation fails for s_{}, s_{}", i + 1, j + 1));
                }
            }
        }
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                if !e[a].commutator(&e[b]).is_zero() {
                    return fail(format!("eps_{} and eps_{} do not commute", a + 1, b + 1));
                }
            }
        }
        for i in 1..=s.len() {
            for j in 1..=e.len() {
                let sj = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                let lhs = &(&s[i - 1] * &e[j - 1]) - &(&e[sj - 1] * &s[i - 1]);
                if lhs != id.scale(&rat(pairing(i, j))) {
                    return fail(format!("cross relation fails for s_{i}, eps_{j}"));
                }
            }
        }
        Ok(())
    }

    /// `Σ ε_k`, which is central.
    pub fn eps_sum(&self) -> Mat {
        self.eps_mats.iter().fold(Mat::zeros(self.dim, self.dim), |acc, m| &acc + m)
    }

    /// The scalar by which `Σ ε_k` acts, if it acts by a scalar.
    pub fn central_scalar(&self) -> Option<Rat> {
        let s = self.eps_sum();
        if self.dim == 0 {
            return Some(Rat::zero());
        }
        let c = s.get(0, 0).clone();
        (s == Mat::scalar(self.dim, &c)).then_some(c)
    }

    pub fn weight_spectrum(&self) -> Result<WeightSpectrum> {
        let parts = joint_generalized_eigenspaces(&self.eps_mats, self.dim)?;
        Ok(WeightSpectrum { entries: parts.into_iter().map(|(w, s)| (w, s.dim())).collect() })
    }

    /// The submodule on an invariant subspace, in its echelon basis.
    pub fn submodule(&self, sub: &Subspace) -> HModule {
        HModule {
            dim: sub.dim(),
            strands: self.strands,
            s_mats: self.s_mats.iter().map(|m| sub.restrict(m)).collect(),
            eps_mats: self.eps_mats.iter().map(|m| sub.restrict(m)).collect(),
            basis_labels: None,
        }
    }

    pub fn quotient(&self, sub: &Subspace) -> HModule {
        HModule {
            dim: self.dim - sub.dim(),
            strands: self.strands,
            s_mats: self.s_mats.iter().map(|m| sub.quotient_action(m)).collect(),
            eps_mats: self.eps_mats.iter().map(|m| sub.quotient_action(m)).collect(),
            basis_labels: None,
        }
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        self.generators().iter().all(|g| sub.is_invariant(g))
    }

    /// Direct sum, block diagonal.
    pub fn direct_sum(&self, other: &HModule) -> HModule {
        let blk = |a: &Mat, b: &Mat| {
            let d = a.rows() + b.rows();
            let mut m = Mat::zeros(d, d);
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    m.set(i, j, a.get(i, j).clone());
                }
            }
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
                }
            }
            m
        };
        HModule {
            dim: self.dim + other.dim,
            strands: self.strands,
            s_mats: self.s_mats.iter().zip(&other.s_mats).map(|(a, b)| blk(a, b)).collect(),
            eps_mats: self.eps_mats.iter().zip(&other.eps_mats).map(|(a, b)| blk(a, b)).collect(),
            basis_labels: None,
        }
    }

    /// A one-dimensional module: `s_i ↦ signs[i]`, `ε_k ↦ weight[k]`.
    pub fn character(signs: &[i64], weight: &[Rat]) -> HModule {
        let s_mats = signs.iter().map(|&x| Mat::from_i64(&[&[x]])).collect();
        let eps_mats = weight.iter().map(|w| Mat::from_rows(vec![vec![w.clone()]])).collect();
        HModule { dim: 1, strands: weight.len(), s_mats, eps_mats, basis_labels: None }
    }

    /// Conjugate by an invertible change of basis: generators become `t g t⁻¹`.
    pub fn conjugate(&self, t: &Mat) -> Option<HModule> {
        let inv = t.inverse()?;
        let c = |m: &Mat| &(t * m) * &inv;
        Some(HModule {
            dim: self.dim,
            strands: self.strands,
            s_mats: self.s_mats.iter().map(c).collect(),
            eps_mats: self.eps_mats.iter().map(c).collect(),
            basis_labels: None,
        })
    }
}
