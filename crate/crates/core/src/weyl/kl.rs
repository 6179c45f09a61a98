use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::perm::{all_perms, Perm};

/// Integer polynomial in `q`, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct KlPoly(Vec<i64>);

impl KlPoly {
    pub fn zero() -> Self {
        KlPoly(Vec::new())
    }

    pub fn one() -> Self {
        KlPoly(vec![1])
    }

    pub fn from_coeffs(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        KlPoly(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    fn add_shifted(&mut self, other: &KlPoly, shift: usize, factor: i64) {
        if other.0.is_empty() || factor == 0 {
            return;
        }
        let need = other.0.len() + shift;
        if self.0.len() < need {
            self.0.resize(need, 0);
        }
        for (k, c) in other.0.iter().enumerate() {
            self.0[k + shift] += factor * c;
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// All Kazhdan-Lusztig polynomials of `S_m`, computed once by the standard recursion.
pub struct KlTable {
    perms: Vec<Perm>,
    index: HashMap<Perm, usize>,
    lengths: Vec<usize>,
    leq: Vec<Vec<bool>>,
    polys: Vec<Vec<KlPoly>>,
}

impl KlTable {
    pub fn new(m: usize) -> Self {
        let perms = all_perms(m);
        let index: HashMap<Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let lengths: Vec<usize> = perms.iter().map(Perm::length).collect();
        let leq: Vec<Vec<bool>> = perms.iter().map(|x| perms.iter().map(|w| x.bruhat_leq(w)).collect()).collect();
        let n = perms.len();
        let mut polys = vec![vec![KlPoly::zero(); n]; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (lengths[i], i));

        for &wi in &order {
            let w = &perms[wi];
            if w.is_identity() {
                polys[wi][wi] = KlPoly::one();
                continue;
            }
            let s = (1..m).find(|&i| w.has_left_descent(i)).unwrap();
            let vi = index[&w.left_mul_simple(s)];
            // mu(z, v) for z < v with s z < z.
            let corrections: Vec<(usize, i64)> = (0..n)
                .filter(|&zi| zi != vi && leq[zi][vi] && perms[zi].has_left_descent(s))
                .filter_map(|zi| {
                    let d = lengths[vi] - lengths[zi];
                    if d % 2 == 0 {
                        return None;
                    }
                    let mu = polys[zi][vi].coeff((d - 1) / 2);
                    (mu != 0).then_some((zi, mu))
                })
                .collect();
            for xi in 0..n {
                if !leq[xi][wi] {
                    continue;
                }
                let x = &perms[xi];
                let sxi = index[&x.left_mul_simple(s)];
                let c = usize::from(x.has_left_descent(s));
                let mut p = KlPoly::zero();
                p.add_shifted(&polys[sxi][vi], 1 - c, 1);
                p.add_shifted(&polys[xi][vi], c, 1);
                for &(zi, mu) in &corrections {
                    let shift = (lengths[wi] - lengths[zi]) / 2;
                    p.add_shifted(&polys[xi][zi], shift, -mu);
                }
                polys[xi][wi] = p;
            }
        }
        KlTable { perms, index, lengths, leq, polys }
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn length(&self, w: &Perm) -> usize {
        self.lengths[self.index[w]]
    }

    pub fn leq(&self, x: &Perm, w: &Perm) -> bool {
        self.leq[self.index[x]][self.index[w]]
    }

    /// `P_{x,w}`; zero when `x` is not below `w`.
    pub fn poly(&self, x: &Perm, w: &Perm) -> &KlPoly {
        &self.polys[self.index[x]][self.index[w]]
    }
}

/// Shared per-degree tables, built on first use.
pub fn kl_table(m: usize) -> Arc<KlTable> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<KlTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("KL table cache poisoned");
    guard.entry(m).or_insert_with(|| Arc::new(KlTable::new(m))).clone()
}

pub fn kl_polynomial(x: &Perm, w: &Perm) -> KlPoly {
    assert_eq!(x.degree(), w.degree());
    kl_table(x.degree()).poly(x, w).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let t = KlTable::new(3);
        let mut comparable = 0;
        for x in t.perms() {
            for w in t.perms() {
                if x.bruhat_leq(w) {
                    comparable += 1;
                    assert_eq!(t.poly(x, w), &KlPoly::one());
                } else {
                    assert!(t.poly(x, w).is_zero());
                }
            }
        }
        assert_eq!(comparable, 19);
    }

    #[test]
    fn singular_example_in_s4() {
        let e = Perm::identity(4);
        let w = Perm::parse("3,4,1,2").unwrap();
        assert_eq!(kl_polynomial(&e, &w), KlPoly::from_coeffs(vec![1, 1]));
        assert_eq!(kl_polynomial(&w, &w), KlPoly::one());
    }
}
