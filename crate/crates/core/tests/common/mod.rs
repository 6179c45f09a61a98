//! Independent reference computations used to cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use schur_whittaker::exactlin::rat::{frac, rat, Rat};
use schur_whittaker::verma::{TensorBlock, TensorVec};
use schur_whittaker::weights::Weight;

/// One-line permutations (1-based values) in lexicographic order.
pub fn perms(m: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 1..=m {
            if !cur.contains(&v) {
                cur.push(v);
                rec(m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m, &mut Vec::new(), &mut out);
    out
}

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

/// `w s_i`: swaps positions `i`, `i+1` (1-based `i`).
pub fn times_simple(w: &[usize], i: usize) -> Vec<usize> {
    let mut v = w.to_vec();
    v.swap(i - 1, i);
    v
}

/// A reduced word by bubble sort: `w = s_{a_1} ... s_{a_k}`.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    let mut word = Vec::new();
    loop {
        match (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
            Some(i) => {
                v.swap(i, i + 1);
                word.push(i + 1);
            }
            None => break,
        }
    }
    word.reverse();
    word
}

/// Bruhat order by the subword property: `x ≤ w` iff `x` is a product of a
/// subword of a reduced word of `w`.
pub fn subword_bruhat(m: usize) -> HashMap<Vec<usize>, BTreeSet<Vec<usize>>> {
    let mut below = HashMap::new();
    for w in perms(m) {
        let word = reduced_word(&w);
        let mut reach: BTreeSet<Vec<usize>> = BTreeSet::new();
        reach.insert((1..=m).collect());
        for &s in &word {
            let next: Vec<Vec<usize>> = reach.iter().map(|x| times_simple(x, s)).collect();
            reach.extend(next);
        }
        below.insert(w, reach);
    }
    below
}

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn padd(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn pmul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Kazhdan-Lusztig polynomials from R-polynomials through
/// `q^{ℓ(w)-ℓ(x)} P̄_{x,w} = Σ_{x≤y≤w} R_{x,y} P_{y,w}`.
pub fn kl_by_r_polynomials(m: usize) -> BTreeMap<(Vec<usize>, Vec<usize>), Poly> {
    let all = perms(m);
    let below = subword_bruhat(m);
    let leq = |x: &Vec<usize>, w: &Vec<usize>| below[w].contains(x);
    let mut by_len = all.clone();
    by_len.sort_by_key(|w| inversions(w));

    let mut r: HashMap<(Vec<usize>, Vec<usize>), Poly> = HashMap::new();
    for w in &by_len {
        for x in &all {
            let val = if !leq(x, w) {
                Vec::new()
            } else if x == w {
                vec![1]
            } else {
                let s = (1..m).find(|&i| w[i - 1] > w[i]).expect("non-identity has a descent");
                let ws = times_simple(w, s);
                let xs = times_simple(x, s);
                if x[s - 1] > x[s] {
                    r[&(xs, ws)].clone()
                } else {
                    padd(&pmul(&[-1, 1], &r[&(x.clone(), ws.clone())]), &pmul(&[0, 1], &r[&(xs, ws)]))
                }
            };
            r.insert((x.clone(), w.clone()), val);
        }
    }

    let mut p: BTreeMap<(Vec<usize>, Vec<usize>), Poly> = BTreeMap::new();
    for w in &all {
        let mut xs: Vec<&Vec<usize>> = all.iter().filter(|x| leq(x, w)).collect();
        xs.sort_by_key(|x| std::cmp::Reverse(inversions(x)));
        for x in xs {
            if x == w {
                p.insert((x.clone(), w.clone()), vec![1]);
                continue;
            }
            let mut s: Poly = Vec::new();
            for y in all.iter().filter(|y| y != &x && leq(x, y) && leq(y, w)) {
                s = padd(&s, &pmul(&r[&(x.clone(), y.clone())], &p[&(y.clone(), w.clone())]));
            }
            let l = inversions(w) - inversions(x);
            let bound = (l - 1) / 2;
            let pxw: Poly = trim(s.iter().take(bound + 1).map(|c| -c).collect());
            p.insert((x.clone(), w.clone()), pxw);
        }
    }
    p
}

/// Kostant partition function by dynamic programming over the positive
/// roots `α_a + ... + α_{b-1}` of `sl_n`, for `β` in simple-root coordinates.
pub fn kostant_count(n: usize, beta: &[u32]) -> u64 {
    let mut table: HashMap<Vec<u32>, u64> = HashMap::new();
    table.insert(vec![0; n - 1], 1);
    let roots: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let boxes: Vec<Vec<u32>> = {
        let mut v = vec![Vec::new()];
        for &m in beta {
            v = v.into_iter().flat_map(|p: Vec<u32>| (0..=m).map(move |k| [p.clone(), vec![k]].concat())).collect();
        }
        v
    };
    for &(a, b) in &roots {
        let mut next = HashMap::new();
        for g in &boxes {
            let mut total = 0;
            let mut cur = g.clone();
            loop {
                total += table.get(&cur).copied().unwrap_or(0);
                if (a..b).any(|i| cur[i] == 0) {
                    break;
                }
                for c in &mut cur[a..b] {
                    *c -= 1;
                }
            }
            next.insert(g.clone(), total);
        }
        table = next;
    }
    table[beta]
}

/// Simple-root coordinates of `μ - γ`, if it lies in `Q+`.
pub fn q_plus_coords(mu: &Weight, gamma: &Weight) -> Option<Vec<u32>> {
    let mut acc = Rat::zero();
    let mut out = Vec::new();
    for (a, b) in mu.coords().iter().zip(gamma.coords()).take(mu.n() - 1) {
        acc += a - b;
        if !acc.is_integer() || acc < Rat::zero() {
            return None;
        }
        out.push(acc.to_integer().try_into().ok()?);
    }
    Some(out)
}

fn add_into(acc: &mut TensorVec, key: (Vec<u32>, Vec<u8>), c: Rat) {
    let e = acc.entry(key.clone()).or_insert_with(Rat::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// `E_{ab}` acting on slot `slot` only (0 = Verma factor, `k ≥ 1` = tensor letter `k`).
pub fn slot_act(tb: &TensorBlock, slot: usize, a: usize, b: usize, v: &TensorVec) -> TensorVec {
    let mut out = TensorVec::new();
    for ((m, w), c) in v {
        if slot == 0 {
            for (m2, c2) in tb.verma().act(a, b, m) {
                add_into(&mut out, (m2, w.clone()), c * c2);
            }
        } else if w[slot - 1] as usize == b {
            let mut w2 = w.clone();
            w2[slot - 1] = a as u8;
            add_into(&mut out, (m.clone(), w2), c.clone());
        }
    }
    out
}

fn combine(parts: &[(Rat, TensorVec)]) -> TensorVec {
    let mut out = TensorVec::new();
    for (s, v) in parts {
        for (k, c) in v {
            add_into(&mut out, k.clone(), s * c);
        }
    }
    out
}

/// `Ω_{i,j} = ½(C_{ij} - C_i - C_j)` with `C = Σ E_{ab} E_{ba}` the `gl_n`
/// Casimir and `C_{ij}` its coproduct on slots `i`, `j`.
pub fn omega_by_casimir_difference(tb: &TensorBlock, i: usize, j: usize, v: &TensorVec) -> TensorVec {
    let n = tb.n;
    let pair = |a: usize, b: usize, x: &TensorVec| combine(&[(rat(1), slot_act(tb, i, a, b, x)), (rat(1), slot_act(tb, j, a, b, x))]);
    let mut parts = Vec::new();
    for a in 0..n {
        for b in 0..n {
            parts.push((frac(1, 2), pair(a, b, &pair(b, a, v))));
            parts.push((frac(-1, 2), slot_act(tb, i, a, b, &slot_act(tb, i, b, a, v))));
            parts.push((frac(-1, 2), slot_act(tb, j, a, b, &slot_act(tb, j, b, a, v))));
        }
    }
    combine(&parts)
}

/// Dominant integral weights of rank `n` whose `λ+ρ` has integer entries in
/// `{-2, ..., 2}`, up to adding a multiple of `(1, ..., 1)`.
pub fn small_dominant_weights(n: usize) -> Vec<Weight> {
    let mut seqs: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        seqs = seqs
            .into_iter()
            .flat_map(|s| {
                let top = s.last().copied().unwrap_or(2);
                (-2..=top).map(move |x| [s.clone(), vec![x]].concat())
            })
            .collect();
    }
    let mut out: Vec<Weight> = Vec::new();
    for s in seqs {
        let w = Weight::from_lambda_rho(s.iter().map(|&x| rat(x)).collect());
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}
