use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use super::pbw::{add_into, kostant_partitions, simple_root_coords, Verma};
use crate::error::{Error, Result};
use crate::exactlin::rat::{frac, rat, Rat};
use crate::exactlin::{generalized_kernel, Mat, Subspace};
use crate::weights::{dot_orbit, Weight};

/// Basis key of `M(μ) ⊗ V^{⊗ℓ}`: a PBW monomial and a word of tensor letters.
pub type TensorKey = (Vec<u32>, Vec<u8>);

/// Sparse vector in `M(μ) ⊗ V^{⊗ℓ}`.
pub type TensorVec = BTreeMap<TensorKey, Rat>;

/// Scalars by which central elements act on a Verma module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralCharData {
    /// Quadratic Casimir of `sl_n` for the trace form.
    #[serde(serialize_with = "ser_rat")]
    pub casimir_value: Rat,
    /// Gelfand invariants `Σ E_{a1 a2} E_{a2 a3} ... E_{ak a1}` of degrees `2..=n`.
    #[serde(serialize_with = "ser_rats")]
    pub higher_values: Vec<Rat>,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exactlin::rat::fmt_rat(r))
}

fn ser_rats<S: serde::Serializer>(r: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for x in r {
        seq.serialize_element(&crate::exactlin::rat::fmt_rat(x))?;
    }
    seq.end()
}

fn sum_zero_norm(w: &[Rat]) -> Rat {
    let n = rat(w.len() as i64);
    let total: Rat = w.iter().sum();
    let sq: Rat = w.iter().map(|x| x * x).sum();
    sq - &total * &total / n
}

/// `E_{a1 a2} E_{a2 a3} ... E_{ak a1}` summed over all index sequences, applied
/// through `act`, which must apply `E_{cd}` to a vector.
pub(crate) fn gelfand_apply<K: Ord + Clone>(
    n: usize,
    k: usize,
    v: &BTreeMap<K, Rat>,
    act: &dyn Fn(usize, usize, &BTreeMap<K, Rat>) -> BTreeMap<K, Rat>,
) -> BTreeMap<K, Rat> {
    let mut total = BTreeMap::new();
    for a1 in 0..n {
        // z[c] = E_{c a1} v, then repeatedly z'[c] = Σ_d E_{cd} z[d].
        let mut z: Vec<BTreeMap<K, Rat>> = (0..n).map(|c| act(c, a1, v)).collect();
        for _ in 1..k {
            z = (0..n)
                .map(|c| {
                    let mut acc = BTreeMap::new();
                    for (d, zd) in z.iter().enumerate() {
                        for (key, coef) in act(c, d, zd) {
                            add_into(&mut acc, key, coef);
                        }
                    }
                    acc
                })
                .collect();
        }
        for (key, coef) in std::mem::take(&mut z[a1]) {
            add_into(&mut total, key, coef);
        }
    }
    total
}

/// Central character data of `M(μ)` for a `gl_n` weight, computed by acting
/// on the highest weight vector.
pub fn central_data_gl(weight: &[Rat]) -> CentralCharData {
    let n = weight.len();
    let verma = Verma::new(weight.to_vec());
    let top = verma.empty_monomial();
    let mut v = BTreeMap::new();
    v.insert(top.clone(), Rat::one());
    let act = |c: usize, d: usize, x: &BTreeMap<Vec<u32>, Rat>| verma.act_vec(c, d, x);
    let scalar = |x: BTreeMap<Vec<u32>, Rat>| x.get(&top).cloned().unwrap_or_else(Rat::zero);
    let mut off = Rat::zero();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                off += scalar(act(a, b, &act(b, a, &v)));
            }
        }
    }
    let casimir_value = off + sum_zero_norm(weight);
    let higher_values = (2..=n).map(|k| scalar(gelfand_apply(n, k, &v, &act))).collect();
    CentralCharData { casimir_value, higher_values }
}

pub fn casimir_data(mu: &Weight, n: usize) -> CentralCharData {
    assert_eq!(mu.n(), n);
    central_data_gl(mu.coords())
}

/// The weight space of `M(μ) ⊗ V^{⊗ℓ}` of total weight `λ`.
pub struct TensorBlock {
    pub n: usize,
    pub l: usize,
    pub mu: Weight,
    pub lam: Weight,
    pub basis: Vec<TensorKey>,
    index: HashMap<TensorKey, usize>,
    verma: Verma,
}

fn words(n: usize, l: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u8).map(move |x| {
                    let mut w2 = w.clone();
                    w2.push(x);
                    w2
                })
            })
            .collect();
    }
    out
}

fn word_weight(n: usize, w: &[u8]) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    for &x in w {
        v[x as usize] += Rat::one();
    }
    v
}

impl TensorBlock {
    pub fn new(mu: &Weight, lam: &Weight, l: usize) -> Self {
        let n = mu.n();
        assert_eq!(lam.n(), n);
        let verma = Verma::from_weight(mu);
        let shift = frac(l as i64, n as i64);
        let lam_gl: Vec<Rat> = lam.coords().iter().map(|x| x + &shift).collect();
        let mut basis = Vec::new();
        for w in words(n, l) {
            let nu = word_weight(n, &w);
            // μ - (λ_gl - ν) must lie in Q+.
            let diff: Vec<Rat> = (0..n).map(|i| &mu.coords()[i] - &lam_gl[i] + &nu[i]).collect();
            if let Some(coords) = simple_root_coords(&diff) {
                for m in kostant_partitions(n, &coords) {
                    basis.push((m, w.clone()));
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        TensorBlock { n, l, mu: mu.clone(), lam: lam.clone(), basis, index, verma }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn verma(&self) -> &Verma {
        &self.verma
    }

    pub fn basis_vector(&self, i: usize) -> TensorVec {
        let mut v = TensorVec::new();
        v.insert(self.basis[i].clone(), Rat::one());
        v
    }

    /// `gl` weight of a basis key.
    pub fn key_weight(&self, key: &TensorKey) -> Vec<Rat> {
        let mut w = self.verma.weight_of(&key.0);
        for &x in &key.1 {
            w[x as usize] += Rat::one();
        }
        w
    }

    /// `E_{cd}` acting on `M(μ) ⊗ V^{⊗ℓ}` by the Leibniz rule.
    pub fn act(&self, c: usize, d: usize, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::new();
        for ((m, w), coef) in v {
            for (m2, c2) in self.verma.act(c, d, m) {
                add_into(&mut out, (m2, w.clone()), coef * c2);
            }
            for j in 0..w.len() {
                if w[j] as usize == d {
                    let mut w2 = w.clone();
                    w2[j] = c as u8;
                    add_into(&mut out, (m.clone(), w2), coef.clone());
                }
            }
        }
        out
    }

    /// `Ω_{j,k}` for slots `0 ≤ j < k ≤ ℓ`, slot 0 being the Verma factor:
    /// `Σ_{a,b} E_{ab}^{(j)} E_{ba}^{(k)}`. On two tensor slots it is the flip.
    pub fn omega_vec(&self, j: usize, k: usize, v: &TensorVec) -> TensorVec {
        assert!(j < k && k <= self.l);
        let mut out = TensorVec::new();
        for ((m, w), coef) in v {
            if j == 0 {
                let x = w[k - 1] as usize;
                for b in 0..self.n {
                    let mut w2 = w.clone();
                    w2[k - 1] = b as u8;
                    for (m2, c2) in self.verma.act(x, b, m) {
                        add_into(&mut out, (m2, w2.clone()), coef * c2);
                    }
                }
            } else {
                let mut w2 = w.clone();
                w2.swap(j - 1, k - 1);
                add_into(&mut out, (m.clone(), w2), coef.clone());
            }
        }
        out
    }

    /// `Θ(s_i) = -Ω_{i,i+1}`.
    pub fn theta_s_vec(&self, i: usize, v: &TensorVec) -> TensorVec {
        self.omega_vec(i, i + 1, v).into_iter().map(|(k, c)| (k, -c)).collect()
    }

    /// `Θ(ε_k) = (n-1)/2 + Σ_{0≤j<k} Ω_{j,k}`.
    pub fn theta_eps_vec(&self, k: usize, v: &TensorVec) -> TensorVec {
        let shift = frac(self.n as i64 - 1, 2);
        let mut out: TensorVec = v.iter().map(|(key, c)| (key.clone(), c * &shift)).filter(|(_, c)| !c.is_zero()).collect();
        for j in 0..k {
            for (key, c) in self.omega_vec(j, k, v) {
                add_into(&mut out, key, c);
            }
        }
        out
    }

    /// Quadratic `sl_n` Casimir on arbitrary vectors.
    pub fn casimir_vec(&self, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::new();
        for (key, c) in v {
            add_into(&mut out, key.clone(), c * sum_zero_norm(&self.key_weight(key)));
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b {
                    for (key, c) in self.act(a, b, &self.act(b, a, v)) {
                        add_into(&mut out, key, c);
                    }
                }
            }
        }
        out
    }

    pub fn gelfand_vec(&self, k: usize, v: &TensorVec) -> TensorVec {
        gelfand_apply(self.n, k, v, &|c, d, x| self.act(c, d, x))
    }

    /// Coordinates of a vector that must lie in this block.
    pub fn coords(&self, v: &TensorVec) -> Result<Vec<Rat>> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (key, c) in v {
            let i = self.index.get(key).ok_or_else(|| {
                Error::BlockRangeExceeded(format!("weight {:?}", crate::exactlin::rat::fmt_tuple(&self.key_weight(key))))
            })?;
            out[*i] = c.clone();
        }
        Ok(out)
    }

    /// Matrix of a weight-preserving operator on the block.
    pub fn matrix_of(&self, op: impl Fn(&TensorVec) -> TensorVec) -> Result<Mat> {
        let cols = (0..self.dim()).map(|i| self.coords(&op(&self.basis_vector(i)))).collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_cols(self.dim(), &cols))
    }

    pub fn omega(&self, j: usize, k: usize) -> Result<Mat> {
        self.matrix_of(|v| self.omega_vec(j, k, v))
    }

    pub fn theta_s(&self, i: usize) -> Result<Mat> {
        self.matrix_of(|v| self.theta_s_vec(i, v))
    }

    pub fn theta_eps(&self, k: usize) -> Result<Mat> {
        self.matrix_of(|v| self.theta_eps_vec(k, v))
    }

    pub fn casimir(&self) -> Result<Mat> {
        self.matrix_of(|v| self.casimir_vec(v))
    }

    /// `gl` weights `μ + ν` of the Verma subquotients of `M(μ) ⊗ V^{⊗ℓ}` that
    /// have `λ` as a weight, each with the multiplicity of `ν` in `V^{⊗ℓ}`.
    pub fn filtration_weights(&self) -> Vec<(Vec<Rat>, usize)> {
        let shift = frac(self.l as i64, self.n as i64);
        let lam_gl: Vec<Rat> = self.lam.coords().iter().map(|x| x + &shift).collect();
        let mut counts: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
        for w in words(self.n, self.l) {
            let top: Vec<Rat> = self.mu.coords().iter().zip(word_weight(self.n, &w)).map(|(a, b)| a + b).collect();
            let diff: Vec<Rat> = top.iter().zip(&lam_gl).map(|(a, b)| a - b).collect();
            if simple_root_coords(&diff).is_some() {
                *counts.entry(top).or_default() += 1;
            }
        }
        counts.into_iter().collect()
    }
}

/// Sum-zero projection of a `gl` weight.
fn project(w: &[Rat]) -> Weight {
    Weight::new(w.to_vec())
}

/// Projection of the block onto the summand with the central character of `λ`.
///
/// Uses the generalized eigenspace of the quadratic Casimir, refined by
/// higher Gelfand invariants only when a filtration weight outside `W•λ`
/// shares the Casimir eigenvalue.
pub fn block_projection(tb: &TensorBlock) -> Result<Subspace> {
    let orbit: Vec<Weight> = dot_orbit(&tb.lam).into_iter().map(|(_, w)| w).collect();
    let candidates = tb.filtration_weights();
    let in_orbit = |w: &[Rat]| orbit.contains(&project(w));
    let Some((target, _)) = candidates.iter().find(|(w, _)| in_orbit(w)) else {
        return Ok(Subspace::zero(tb.dim()));
    };
    let target_data = central_data_gl(target);
    let data: Vec<(bool, CentralCharData)> =
        candidates.iter().map(|(w, _)| (in_orbit(w), central_data_gl(w))).collect();

    let mut colliding: Vec<&CentralCharData> = data
        .iter()
        .filter(|(inside, d)| !inside && d.casimir_value == target_data.casimir_value)
        .map(|(_, d)| d)
        .collect();
    let mut degrees = Vec::new();
    let mut deg = 3;
    while !colliding.is_empty() {
        if deg > tb.n {
            return Err(Error::UnresolvedCollision(tb.n));
        }
        colliding.retain(|d| d.higher_values[deg - 2] == target_data.higher_values[deg - 2]);
        degrees.push(deg);
        deg += 1;
    }

    let mut space = generalized_kernel(&tb.casimir()?, &target_data.casimir_value);
    for k in degrees {
        let m = tb.matrix_of(|v| tb.gelfand_vec(k, v))?;
        space = space.intersection(&generalized_kernel(&m, &target_data.higher_values[k - 2]));
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::dot_action;
    use crate::weyl::Perm;

    #[test]
    fn casimir_values() {
        let z = Weight::zero(2);
        assert_eq!(casimir_data(&z, 2).casimir_value, rat(0));
        let m = dot_action(&Perm::simple(1, 2), &z);
        assert_eq!(casimir_data(&m, 2).casimir_value, rat(0));
        let z3 = Weight::zero(3);
        for w in crate::weyl::all_perms(3) {
            assert_eq!(casimir_data(&dot_action(&w, &z3), 3), casimir_data(&z3, 3));
        }
    }

    #[test]
    fn sl2_block() {
        let z = Weight::zero(2);
        let tb = TensorBlock::new(&z, &z, 2);
        assert_eq!(tb.dim(), 3);
        assert_eq!(block_projection(&tb).unwrap().dim(), 2);
        let t0 = TensorBlock::new(&z, &z, 0);
        assert_eq!(block_projection(&t0).unwrap().dim(), 1);
        let far = Weight::from_i64(&[-3, 3]);
        let t1 = TensorBlock::new(&far, &z, 0);
        assert_eq!(block_projection(&t1).unwrap().dim(), 0);
    }
}
