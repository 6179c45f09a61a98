use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactlin::rat::{fmt_rat_short, Rat};
use crate::weyl::Perm;

/// Polynomial in the commuting generators `ε_1, ..., ε_ℓ`, keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct EpsPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl EpsPoly {
    pub fn zero(vars: usize) -> Self {
        EpsPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The generator `ε_k` (1-based `k`).
    pub fn var(vars: usize, k: usize) -> Self {
        let mut e = vec![0; vars];
        e[k - 1] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, Rat::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&exps).map_or(c.clone(), |x| x + &c);
        if !sum.is_zero() {
            self.terms.insert(exps, sum);
        }
    }

    pub fn add(&self, other: &EpsPoly) -> EpsPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> EpsPoly {
        let mut out = EpsPoly::zero(self.vars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &EpsPoly) -> EpsPoly {
        let mut out = EpsPoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Image under `s_i`: swaps `ε_i` and `ε_{i+1}` (1-based `i`).
    pub fn swap(&self, i: usize) -> EpsPoly {
        let mut out = EpsPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, i);
            out.add_term(e, c.clone());
        }
        out
    }

    /// `(p - s_i(p)) / (ε_i - ε_{i+1})`, computed monomial by monomial.
    pub fn divided_difference(&self, i: usize) -> EpsPoly {
        let (x, y) = (i - 1, i);
        let mut out = EpsPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let (a, b) = (e[x], e[y]);
            if a == b {
                continue;
            }
            // x^a y^b - x^b y^a = sign * x^lo y^lo (x^d - y^d), d = |a-b|.
            let (lo, d, sign) = if a > b { (b, a - b, Rat::one()) } else { (a, b - a, -Rat::one()) };
            for k in 0..d {
                let mut m = e.clone();
                m[x] = lo + k;
                m[y] = lo + d - 1 - k;
                out.add_term(m, c * &sign);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Debug for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("e{}", i + 1) } else { format!("e{}^{k}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    fmt_rat_short(c)
                } else {
                    format!("{}*{}", fmt_rat_short(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of the graded affine Hecke algebra on `ℓ` strands in the normal
/// form `Σ t_w p_w(ε)`, group elements on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    strands: usize,
    terms: BTreeMap<Perm, EpsPoly>,
}

impl HeckeElt {
    pub fn zero(strands: usize) -> Self {
        HeckeElt { strands, terms: BTreeMap::new() }
    }

    pub fn one(strands: usize) -> Self {
        Self::group(&Perm::identity(strands))
    }

    pub fn group(w: &Perm) -> Self {
        let l = w.degree();
        Self::term(w.clone(), EpsPoly::one(l))
    }

    pub fn simple(i: usize, strands: usize) -> Self {
        Self::group(&Perm::simple(i, strands))
    }

    pub fn poly(p: EpsPoly) -> Self {
        let l = p.vars();
        Self::term(Perm::identity(l), p)
    }

    pub fn eps(k: usize, strands: usize) -> Self {
        Self::poly(EpsPoly::var(strands, k))
    }

    pub fn scalar(strands: usize, c: Rat) -> Self {
        Self::poly(EpsPoly::constant(strands, c))
    }

    fn term(w: Perm, p: EpsPoly) -> Self {
        let mut out = HeckeElt::zero(w.degree());
        out.add_term(w, p);
        out
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &EpsPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Perm, p: EpsPoly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(q) => q.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term(w.clone(), p.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> HeckeElt {
        let mut out = HeckeElt::zero(self.strands);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.scale(c));
        }
        out
    }

    /// `self · t_{s_i}`, using `p t_s = t_s s(p) + Δ_s(p)`.
    fn right_mul_simple(&self, i: usize) -> HeckeElt {
        let mut out = HeckeElt::zero(self.strands);
        for (w, p) in &self.terms {
            out.add_term(w.right_mul_simple(i), p.swap(i));
            out.add_term(w.clone(), p.divided_difference(i));
        }
        out
    }

    fn right_mul_poly(&self, q: &EpsPoly) -> HeckeElt {
        let mut out = HeckeElt::zero(self.strands);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.mul(q));
        }
        out
    }

    /// Product in normal form.
    pub fn mul(&self, other: &HeckeElt) -> HeckeElt {
        assert_eq!(self.strands, other.strands);
        let mut out = HeckeElt::zero(self.strands);
        for (v, q) in &other.terms {
            let mut acc = self.clone();
            for i in v.reduced_word() {
                acc = acc.right_mul_simple(i);
            }
            out = out.add(&acc.right_mul_poly(q));
        }
        out
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, p)| format!("t[{w}]({p:?})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_relation() {
        let s1 = HeckeElt::simple(1, 2);
        let lhs = s1.mul(&HeckeElt::eps(1, 2));
        let rhs = HeckeElt::eps(2, 2).mul(&s1).add(&HeckeElt::one(2));
        assert_eq!(lhs, rhs);
        assert_eq!(s1.mul(&s1), HeckeElt::one(2));
        let sym = HeckeElt::eps(1, 2).mul(&HeckeElt::eps(2, 2));
        assert_eq!(s1.mul(&sym), sym.mul(&s1));
    }

    #[test]
    fn divided_difference_of_square() {
        // (x^2 - y^2)/(x - y) = x + y
        let x = EpsPoly::var(2, 1);
        let sq = x.mul(&x);
        assert_eq!(sq.divided_difference(1), EpsPoly::var(2, 1).add(&EpsPoly::var(2, 2)));
    }
}
