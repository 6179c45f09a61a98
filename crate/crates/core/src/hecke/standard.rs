use std::collections::HashMap;

use num_traits::{One, Zero};

use super::algebra::HeckeElt;
use super::module::HModule;
use crate::error::{Error, Result};
use crate::exactlin::rat::Rat;
use crate::exactlin::Mat;
use crate::multiseg::{zeta_weight, MultisegmentClass};
use crate::weyl::{minimal_left_coset_reps, ParabolicSet, Perm};

/// The standard module induced from the character of the parabolic
/// subalgebra on which each segment block acts by the sign representation
/// and `ε` acts by the `ζ` weight of `τ`.
///
/// Basis: `t_w ⊗ 1` for minimal left coset representatives `w`, ordered by
/// length then one-line notation, so `𝟙 = t_e ⊗ 1` comes first.
pub fn induced_standard(tau: &MultisegmentClass, l: usize) -> Result<HModule> {
    let got = tau.total_length();
    if got != l {
        return Err(Error::LengthMismatch { expected: l, got });
    }
    let j = ParabolicSet::from_block_sizes(&tau.lengths());
    let zeta = zeta_weight(tau);
    let mut reps = minimal_left_coset_reps(&j, l);
    reps.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    let index: HashMap<Perm, usize> = reps.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let d = reps.len();

    // t_v ⊗ 1 = sign(x) t_u ⊗ 1 where v = u x, u minimal, x in the parabolic.
    let reduce = |v: &Perm| -> (usize, Rat) {
        let mut cur = v.clone();
        let mut sign = Rat::one();
        while let Some(i) = j.iter().find(|&i| cur.has_right_descent(i)) {
            cur = cur.right_mul_simple(i);
            sign = -sign;
        }
        (index[&cur], sign)
    };

    let mut s_mats = Vec::with_capacity(l.saturating_sub(1));
    for i in 1..l {
        let mut m = Mat::zeros(d, d);
        for (c, w) in reps.iter().enumerate() {
            let (r, sign) = reduce(&w.left_mul_simple(i));
            m.set(r, c, sign);
        }
        s_mats.push(m);
    }

    let mut eps_mats = Vec::with_capacity(l);
    for k in 1..=l {
        let ek = HeckeElt::eps(k, l);
        let mut m = Mat::zeros(d, d);
        for (c, w) in reps.iter().enumerate() {
            let prod = ek.mul(&HeckeElt::group(w));
            for (v, p) in prod.terms() {
                let val = p.eval(&zeta);
                if val.is_zero() {
                    continue;
                }
                let (r, sign) = reduce(v);
                m.add_at(r, c, &(val * sign));
            }
        }
        eps_mats.push(m);
    }

    Ok(HModule { dim: d, strands: l, s_mats, eps_mats, basis_labels: Some(reps) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat::{frac, rat};
    use crate::multiseg::{Multisegment, Segment};

    fn class(segs: &[(i64, i64, usize)]) -> MultisegmentClass {
        Multisegment::new(segs.iter().map(|&(p, q, n)| Segment::new(frac(p, q), n)).collect()).canonical()
    }

    #[test]
    fn full_segment_is_one_dimensional() {
        let m = induced_standard(&class(&[(-1, 1, 3)]), 3).unwrap();
        assert_eq!(m.dim, 1);
        m.check_relations().unwrap();
        assert!(m.s_mats.iter().all(|s| *s == Mat::from_i64(&[&[-1]])));
        let eps: Vec<Rat> = m.eps_mats.iter().map(|e| e.get(0, 0).clone()).collect();
        assert_eq!(eps, vec![rat(-1), rat(0), rat(1)]);
    }

    #[test]
    fn two_singletons() {
        let m = induced_standard(&class(&[(1, 2, 1), (-1, 2, 1)]), 2).unwrap();
        assert_eq!(m.dim, 2);
        m.check_relations().unwrap();
        let spectrum = m.weight_spectrum().unwrap();
        assert_eq!(spectrum.entries.len(), 2);
        assert!(spectrum.entries.contains_key(&vec![frac(1, 2), frac(-1, 2)]));
        assert!(spectrum.entries.contains_key(&vec![frac(-1, 2), frac(1, 2)]));
        // The generator is an honest weight vector of weight ζ.
        assert_eq!(m.eps_mats[0].col(0), vec![frac(1, 2), rat(0)]);
        assert_eq!(m.eps_mats[1].col(0), vec![frac(-1, 2), rat(0)]);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            induced_standard(&class(&[(0, 1, 2)]), 3),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        );
    }
}
