//! Weights of `sl_n` modulo the all-ones line: dot action, dominance,
//! stabilizers and weight multiplicities of tensor powers of the natural module.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::rat::{fmt_rat, fmt_tuple, frac, is_integer, parse_rat, rat, Rat};
use crate::weyl::{all_perms, ParabolicSet, Perm};

/// A weight stored by its coordinate-sum-zero representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    /// Canonicalizes `coords` to sum zero.
    pub fn new(coords: Vec<Rat>) -> Self {
        let n = coords.len();
        if n == 0 {
            return Weight { coords };
        }
        let mean: Rat = coords.iter().sum::<Rat>() / rat(n as i64);
        Weight { coords: coords.into_iter().map(|c| c - &mean).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![Rat::zero(); n] }
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| rat(x)).collect())
    }

    /// Parses `"1/2,-1/2"`, optionally wrapped in parentheses.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
        let coords = t.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coords))
    }

    /// The weight `λ` with the given `λ+ρ`.
    pub fn from_lambda_rho(v: Vec<Rat>) -> Self {
        let n = v.len();
        &Weight::new(v) - &rho(n)
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Coordinates of `λ+ρ` (sum zero).
    pub fn plus_rho(&self) -> Vec<Rat> {
        (self + &rho(self.n())).coords
    }

    /// The linear action `(wλ)_{w(i)} = λ_i`.
    pub fn act(&self, w: &Perm) -> Weight {
        assert_eq!(w.degree(), self.n());
        let mut out = vec![Rat::zero(); self.n()];
        for (i, c) in self.coords.iter().enumerate() {
            out[w.apply(i)] = c.clone();
        }
        Weight { coords: out }
    }

    pub fn is_dominant(&self) -> bool {
        self.plus_rho().windows(2).all(|p| p[0] >= p[1])
    }

    /// All pairwise coordinate differences are integers.
    pub fn is_integral(&self) -> bool {
        self.coords.windows(2).all(|p| is_integer(&(&p[0] - &p[1])))
    }

    /// Standard trace form on sum-zero representatives.
    pub fn dot(&self, other: &Weight) -> Rat {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n());
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n());
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_tuple(&self.coords))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{}", fmt_tuple(&self.coords))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(fmt_rat).collect();
        v.serialize(s)
    }
}

/// `ρ = ((n-1)/2, (n-3)/2, ..., -(n-1)/2)`.
pub fn rho(n: usize) -> Weight {
    let n = n as i64;
    Weight { coords: (0..n).map(|i| frac(n - 1 - 2 * i, 2)).collect() }
}

/// `w•λ = w(λ+ρ) - ρ`.
pub fn dot_action(w: &Perm, lam: &Weight) -> Weight {
    let r = rho(lam.n());
    &(&(lam + &r)).act(w) - &r
}

/// Distinct weights of the dot orbit `W•λ`, in the lexicographic order of the
/// first permutation reaching each.
pub fn dot_orbit(lam: &Weight) -> Vec<(Perm, Weight)> {
    let mut out: Vec<(Perm, Weight)> = Vec::new();
    for w in all_perms(lam.n()) {
        let mu = dot_action(&w, lam);
        if !out.iter().any(|(_, m)| *m == mu) {
            out.push((w, mu));
        }
    }
    out
}

/// Simple indices `i` with `(λ+ρ)_i = (λ+ρ)_{i+1}`.
pub fn stabilizer(lam: &Weight) -> Result<ParabolicSet> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(fmt_tuple(&lam.plus_rho())));
    }
    let lr = lam.plus_rho();
    Ok(ParabolicSet::new((1..lam.n()).filter(|&i| lr[i - 1] == lr[i])))
}

/// Weight-space index `(ℓ_1, ..., ℓ_n)` of a tensor power of the natural module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TensorWeightDatum {
    pub counts: Vec<usize>,
}

impl TensorWeightDatum {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn multinomial(&self) -> usize {
        multinomial(&self.counts)
    }
}

pub fn multinomial(parts: &[usize]) -> usize {
    let mut acc: BigInt = BigInt::from(1);
    let mut total = 0usize;
    for &p in parts {
        for k in 1..=p {
            total += 1;
            acc = acc * BigInt::from(total) / BigInt::from(k);
        }
    }
    acc.to_usize().expect("multinomial overflow")
}

/// The counts `ℓ_i` with `ν ≡ Σ ℓ_i ε_i` and `Σ ℓ_i = l`, if nonnegative integers.
fn datum_for(nu: &Weight, l: usize) -> Option<TensorWeightDatum> {
    let n = nu.n();
    if n == 0 {
        return (l == 0).then(|| TensorWeightDatum { counts: Vec::new() });
    }
    let shift = frac(l as i64, n as i64);
    let mut counts = Vec::with_capacity(n);
    for c in nu.coords() {
        let v = c + &shift;
        if !is_integer(&v) || v < Rat::zero() {
            return None;
        }
        counts.push(v.to_integer().to_usize()?);
    }
    Some(TensorWeightDatum { counts })
}

pub fn tensor_datum(lam: &Weight, mu: &Weight, l: usize) -> Option<TensorWeightDatum> {
    datum_for(&(lam - mu), l)
}

/// `dim (V^{⊗l})_ν` for the natural module `V` of `sl_n`.
pub fn tensor_weight_multiplicity(n: usize, l: usize, nu: &Weight) -> usize {
    assert_eq!(nu.n(), n);
    datum_for(nu, l).map_or(0, |d| d.multinomial())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_examples() {
        let z = Weight::zero(2);
        assert_eq!(dot_action(&Perm::identity(2), &z), z);
        assert_eq!(dot_action(&Perm::simple(1, 2), &z), Weight::from_i64(&[-1, 1]));
    }

    #[test]
    fn stabilizer_examples() {
        assert!(stabilizer(&Weight::zero(3)).unwrap().is_empty());
        let sing = Weight::from_lambda_rho(vec![rat(1), rat(1), rat(0)]);
        assert_eq!(stabilizer(&sing).unwrap(), ParabolicSet::new([1]));
        let flat = Weight::from_lambda_rho(vec![rat(0); 3]);
        assert_eq!(stabilizer(&flat).unwrap(), ParabolicSet::full(3));
        assert!(matches!(stabilizer(&Weight::from_i64(&[-1, 1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor_weight_multiplicity(2, 2, &Weight::from_i64(&[2, 0])), 1);
        assert_eq!(tensor_weight_multiplicity(2, 2, &Weight::from_i64(&[1, 1])), 2);
        assert_eq!(tensor_weight_multiplicity(3, 0, &Weight::zero(3)), 1);
        let z = Weight::zero(3);
        assert_eq!(tensor_datum(&z, &z, 3).unwrap().counts, vec![1, 1, 1]);
        let lam = Weight::from_i64(&[1, -1]);
        let mu = Weight::zero(2);
        assert_eq!(tensor_datum(&lam, &mu, 2).unwrap().counts, vec![2, 0]);
        assert_eq!(tensor_datum(&lam, &mu, 1), None);
    }
}
