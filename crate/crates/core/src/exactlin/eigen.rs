use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mat::Mat;
use super::rat::{fmt_rat_short, Rat};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense polynomial with coefficients in ascending degree. No trailing zeros.
pub type Poly = Vec<Rat>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn fmt_poly(p: &[Rat]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match k {
            0 => fmt_rat_short(c),
            1 => format!("({})x", fmt_rat_short(c)),
            _ => format!("({})x^{k}", fmt_rat_short(c)),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `det(xI - a)` by the Faddeev-LeVerrier recursion.
pub fn char_poly(a: &Mat) -> Poly {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        let prev = &coeffs[n - k + 1];
        m = &(a * &m) + &Mat::scalar(n, prev);
        let am = a * &m;
        coeffs[n - k] = -am.trace() / Rat::from_integer(BigInt::from(k));
    }
    coeffs
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![Rat::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &f * bi;
        }
        q[shift] = f;
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_gcd(a: &[Rat], b: &[Rat]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in &mut x {
            *c = &*c / &l;
        }
    }
    x
}

fn derivative(p: &[Rat]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
            .collect(),
    )
}

fn eval(p: &[Rat], x: &Rat) -> Rat {
    p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

/// Positive divisors of `n`, by trial division. `None` if `n` is too large to factor this way.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let v = n.to_u64()?;
    if v > 1u64 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}

/// Distinct rational roots of `p` in increasing order. Fails if `p` does not
/// split into linear factors over the rationals.
pub fn rational_roots(p: &[Rat]) -> Result<Vec<Rat>> {
    let p = trim(p.to_vec());
    let err = || Error::IrrationalSpectrum { poly: fmt_poly(&p) };
    if p.len() <= 1 {
        return Ok(Vec::new());
    }
    let g = poly_gcd(&p, &derivative(&p));
    let (mut sf, _) = poly_divrem(&p, &g);
    let mut roots = Vec::new();
    if sf[0].is_zero() {
        roots.push(Rat::zero());
        sf.remove(0);
    }
    // Clear denominators.
    let l = sf.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = sf.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    if ints.len() > 1 {
        let a0 = divisors(&ints[0]).ok_or_else(err)?;
        let an = divisors(ints.last().unwrap()).ok_or_else(err)?;
        let mut cur = sf.clone();
        'search: for num in &a0 {
            for den in &an {
                for sign in [1, -1] {
                    let cand = Rat::new(num * BigInt::from(sign), den.clone());
                    if cur.len() <= 1 {
                        break 'search;
                    }
                    if eval(&cur, &cand).is_zero() {
                        cur = poly_divrem(&cur, &[-cand.clone(), Rat::one()]).0;
                        roots.push(cand);
                    }
                }
            }
        }
        if cur.len() > 1 {
            return Err(err());
        }
    }
    roots.sort();
    Ok(roots)
}

/// Distinct eigenvalues of a square matrix.
pub fn eigenvalues(a: &Mat) -> Result<Vec<Rat>> {
    rational_roots(&char_poly(a))
}

/// Generalized eigenspace `ker (a - c)^k` for `k` large enough, found by
/// iterating until the kernel stops growing.
pub fn generalized_kernel(a: &Mat, c: &Rat) -> Subspace {
    let n = a.rows();
    let shifted = a - &Mat::scalar(n, c);
    let mut power = shifted.clone();
    let mut prev = Subspace::from_vectors(n, power.kernel());
    loop {
        if prev.is_zero() || prev.is_full() {
            return prev;
        }
        power = &power * &shifted;
        let next = Subspace::from_vectors(n, power.kernel());
        if next.dim() == prev.dim() {
            return next;
        }
        prev = next;
    }
}

fn check_commuting(ops: &[Mat]) -> Result<()> {
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if !ops[i].commutator(&ops[j]).is_zero() {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    Ok(())
}

/// Decomposes the ambient space into joint generalized eigenspaces of
/// pairwise commuting operators. Output sorted by eigenvalue tuple.
pub fn joint_generalized_eigenspaces(ops: &[Mat], ambient: usize) -> Result<Vec<(Vec<Rat>, Subspace)>> {
    for op in ops {
        assert!(op.is_square() && op.rows() == ambient, "operator shape mismatch");
    }
    check_commuting(ops)?;
    if ambient == 0 {
        return Ok(Vec::new());
    }
    let mut parts = vec![(Vec::new(), Subspace::full(ambient))];
    for op in ops {
        let mut next = Vec::new();
        for (tuple, space) in parts {
            let r = space.restrict(op);
            for c in eigenvalues(&r)? {
                let rel = generalized_kernel(&r, &c);
                let mut t = tuple.clone();
                t.push(c);
                next.push((t, space.lift(&rel)));
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(parts)
}

/// Joint (true) eigenspace `∩ ker(op_i - c_i)`.
pub fn joint_eigenspace(ops: &[Mat], values: &[Rat], ambient: usize) -> Subspace {
    let mut s = Subspace::full(ambient);
    for (op, c) in ops.iter().zip(values) {
        let k = Subspace::from_vectors(ambient, (op - &Mat::scalar(ambient, c)).kernel());
        s = s.intersection(&k);
    }
    s
}

/// Smallest subspace containing `seed` and stable under every generator.
pub fn invariant_closure(gens: &[Mat], seed: &Subspace) -> Subspace {
    let mut cur = seed.clone();
    loop {
        let mut vecs = cur.basis().to_vec();
        for g in gens {
            vecs.extend(cur.basis().iter().map(|v| g.mul_vec(v)));
        }
        let next = Subspace::from_vectors(cur.ambient_dim(), vecs);
        if next.dim() == cur.dim() {
            return next;
        }
        cur = next;
    }
}
