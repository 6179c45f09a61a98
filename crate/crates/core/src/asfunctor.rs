//! The Hecke action on `M(μ) ⊗ V^{⊗ℓ}` and the functor value
//! `F_{ℓ,λ}(M(μ))`, the `λ`-weight space of the `λ` central-character summand.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::rat::rat;
use crate::exactlin::{Mat, Subspace};
use crate::hecke::{induced_standard, is_isomorphic, pairing, HModule, IsoResult};
use crate::multiseg::delta;
use crate::verma::{block_projection, TensorBlock, TensorVec};
use crate::weights::{dot_action, stabilizer, Weight};
use crate::weyl::{longest_in_coset, DoubleCoset, ParabolicSet};

/// Matrices of `Θ(s_i)` and `Θ(ε_k)` on a subspace of a tensor block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaAction {
    pub s_mats: Vec<Mat>,
    pub eps_mats: Vec<Mat>,
}

impl ThetaAction {
    /// The action on the whole block.
    pub fn on_block(tb: &TensorBlock) -> Result<Self> {
        let s_mats = (1..tb.l).map(|i| tb.theta_s(i)).collect::<Result<_>>()?;
        let eps_mats = (1..=tb.l).map(|k| tb.theta_eps(k)).collect::<Result<_>>()?;
        Ok(ThetaAction { s_mats, eps_mats })
    }

    /// The action restricted to an invariant subspace.
    pub fn restrict(&self, sub: &Subspace) -> Self {
        ThetaAction {
            s_mats: self.s_mats.iter().map(|m| sub.restrict(m)).collect(),
            eps_mats: self.eps_mats.iter().map(|m| sub.restrict(m)).collect(),
        }
    }

    pub fn into_module(self, strands: usize) -> HModule {
        if self.eps_mats.is_empty() {
            return HModule::zero(strands);
        }
        HModule::new(self.s_mats, self.eps_mats)
    }
}

/// Matrix of `Ω_{i,j}` on a tensor block; slot 0 is the Verma factor.
pub fn omega(i: usize, j: usize, tb: &TensorBlock) -> Result<Mat> {
    assert!(i < j && j <= tb.l, "need 0 <= i < j <= l");
    tb.omega(i, j)
}

/// Outcome of checking the operator identities on a whole tensor block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorIdentities {
    pub block_dim: usize,
    /// `[Θ(ε_i), Θ(ε_j)] = 0`.
    pub eps_commute: bool,
    /// `Θ(s_i)Θ(ε_j) - Θ(ε_{s_i(j)})Θ(s_i) = ⟨α_i, ε_j⟩`.
    pub cross_relation: bool,
    /// Every `Θ` generator commutes with every `E_{ab}`, checked on vectors
    /// since `E_{ab}` leaves the block.
    pub g_commute: bool,
    /// Every `Θ` generator commutes with the Casimir on the block.
    pub casimir_commute: bool,
}

impl OperatorIdentities {
    pub fn all_hold(&self) -> bool {
        self.eps_commute && self.cross_relation && self.g_commute && self.casimir_commute
    }
}

pub fn check_operator_identities(tb: &TensorBlock) -> Result<OperatorIdentities> {
    let theta = ThetaAction::on_block(tb)?;
    let (s, e) = (&theta.s_mats, &theta.eps_mats);
    let id = Mat::identity(tb.dim());
    let eps_commute = (0..e.len()).all(|a| (a + 1..e.len()).all(|b| e[a].commutator(&e[b]).is_zero()));
    let cross_relation = (1..=s.len()).all(|i| {
        (1..=e.len()).all(|j| {
            let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            let lhs = &(&s[i - 1] * &e[j - 1]) - &(&e[sj - 1] * &s[i - 1]);
            lhs == id.scale(&rat(pairing(i, j)))
        })
    });
    let casimir = tb.casimir()?;
    let casimir_commute = s.iter().chain(e).all(|m| m.commutator(&casimir).is_zero());

    let n_s = tb.l.saturating_sub(1);
    let apply = |o: usize, v: &TensorVec| {
        if o < n_s {
            tb.theta_s_vec(o + 1, v)
        } else {
            tb.theta_eps_vec(o - n_s + 1, v)
        }
    };
    let mut g_commute = true;
    'outer: for idx in 0..tb.dim() {
        let v = tb.basis_vector(idx);
        for a in 0..tb.n {
            for b in 0..tb.n {
                for o in 0..n_s + tb.l {
                    if tb.act(a, b, &apply(o, &v)) != apply(o, &tb.act(a, b, &v)) {
                        g_commute = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(OperatorIdentities { block_dim: tb.dim(), eps_commute, cross_relation, g_commute, casimir_commute })
}

/// A functor value together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorValue {
    pub mu: Weight,
    pub lam: Weight,
    pub l: usize,
    /// Set when the value was computed for a standard Whittaker module.
    pub eta: Option<ParabolicSet>,
    #[serde(skip)]
    pub module: HModule,
    pub block_dim: usize,
}

impl FunctorValue {
    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn is_zero(&self) -> bool {
        self.module.dim == 0
    }
}

fn check_dominant_integral(lam: &Weight) -> Result<()> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(crate::exactlin::rat::fmt_tuple(&lam.plus_rho())));
    }
    if !lam.is_integral() {
        return Err(Error::HypothesisViolated(format!("weight {lam} is not integral")));
    }
    Ok(())
}

/// `F_{ℓ,λ}(M(μ))` as a module over the graded affine Hecke algebra.
pub fn functor_value_verma(mu: &Weight, lam: &Weight, l: usize) -> Result<FunctorValue> {
    check_dominant_integral(lam)?;
    if mu.n() != lam.n() {
        return Err(Error::DimensionMismatch(format!("rank of mu {} vs lambda {}", mu.n(), lam.n())));
    }
    let mut fv = FunctorValue {
        mu: mu.clone(),
        lam: lam.clone(),
        l,
        eta: None,
        module: HModule::zero(l),
        block_dim: 0,
    };
    let tb = TensorBlock::new(mu, lam, l);
    fv.block_dim = tb.dim();
    if tb.dim() == 0 {
        return Ok(fv);
    }
    let proj = block_projection(&tb)?;
    if proj.is_zero() {
        return Ok(fv);
    }
    let theta = ThetaAction::on_block(&tb)?;
    if l == 0 {
        let mut m = HModule::zero(0);
        m.dim = proj.dim();
        fv.module = m;
        return Ok(fv);
    }
    for m in theta.s_mats.iter().chain(&theta.eps_mats) {
        if !proj.is_invariant(m) {
            return Err(Error::RelationCheckFailed("central projection is not Hecke-stable".into()));
        }
    }
    let module = theta.restrict(&proj).into_module(l);
    module.check_relations()?;
    fv.module = module;
    Ok(fv)
}

/// Compares a nonzero functor value with the induced standard module of the
/// multisegment `δ(λ, μ, ℓ)`.
pub fn compare_to_standard(fv: &FunctorValue) -> Result<IsoResult> {
    let tau = delta(&fv.lam, &fv.mu, fv.l)?;
    let std = induced_standard(&tau, fv.l)?;
    is_isomorphic(&fv.module, &std)
}

/// Functor value on the standard Whittaker module of the coset `y`, computed
/// as the value on `M(y•λ)` with `y` the longest representative.
pub fn whittaker_functor_value(y: &DoubleCoset, lam: &Weight, l: usize) -> Result<FunctorValue> {
    check_dominant_integral(lam)?;
    let stab = stabilizer(lam)?;
    if y.left != stab || y.right != stab {
        return Err(Error::HypothesisViolated(format!(
            "character support {:?} differs from the stabilizer {:?}",
            y.left, stab
        )));
    }
    let w = longest_in_coset(&y.longest_rep, &y.left, &y.right);
    let mu = dot_action(&w, lam);
    let mut fv = functor_value_verma(&mu, lam, l)?;
    fv.eta = Some(y.left.clone());
    Ok(fv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Perm;

    #[test]
    fn sl2_values() {
        let z = Weight::zero(2);
        let fv = functor_value_verma(&z, &z, 2).unwrap();
        assert_eq!(fv.dim(), 2);
        assert!(compare_to_standard(&fv).unwrap().isomorphic);
        let mu = dot_action(&Perm::simple(1, 2), &z);
        let fv = functor_value_verma(&mu, &z, 2).unwrap();
        assert_eq!(fv.dim(), 1);
        assert!(compare_to_standard(&fv).unwrap().isomorphic);
    }

    #[test]
    fn identities_on_sl2_block() {
        let z = Weight::zero(2);
        let ids = check_operator_identities(&TensorBlock::new(&z, &z, 2)).unwrap();
        assert!(ids.all_hold(), "{ids:?}");
    }

    #[test]
    fn missing_datum_is_zero() {
        let z = Weight::zero(2);
        let mu = Weight::from_i64(&[-3, 3]);
        assert!(functor_value_verma(&mu, &z, 2).unwrap().is_zero());
    }

    #[test]
    fn non_dominant_rejected() {
        let lam = Weight::from_i64(&[-2, 2]);
        assert!(matches!(
            functor_value_verma(&Weight::zero(2), &lam, 2),
            Err(Error::NotDominant(_))
        ));
    }
}
