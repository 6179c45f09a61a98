use num_traits::Zero;
use proptest::prelude::*;
use schur_whittaker::exactlin::rat::{frac, rat, Rat};
use schur_whittaker::exactlin::Mat;
use schur_whittaker::hecke::{
    composition_factors, composition_series, induced_standard, intertwiners, irr_quotient, is_isomorphic, pairing,
    submodule_lattice, EpsPoly, HModule, HeckeElt,
};
use schur_whittaker::multiseg::{ms_classes, zeta_weight, Multisegment, MultisegmentClass};
use schur_whittaker::weyl::Perm;
use schur_whittaker::Error;

const STRANDS: usize = 3;

fn poly() -> impl Strategy<Value = EpsPoly> {
    prop::collection::vec((0u32..=2, 0u32..=2, 0u32..=1, -2i64..=2), 0..=3).prop_map(|terms| {
        terms.into_iter().fold(EpsPoly::zero(STRANDS), |acc, (a, b, c, k)| {
            let mono = EpsPoly::var(STRANDS, 1)
                .pow(a)
                .mul(&EpsPoly::var(STRANDS, 2).pow(b))
                .mul(&EpsPoly::var(STRANDS, 3).pow(c));
            acc.add(&mono.scale(&rat(k)))
        })
    })
}

trait Pow {
    fn pow(&self, k: u32) -> Self;
}

impl Pow for EpsPoly {
    fn pow(&self, k: u32) -> Self {
        (0..k).fold(EpsPoly::one(self.vars()), |acc, _| acc.mul(self))
    }
}

fn perm() -> impl Strategy<Value = Perm> {
    Just((0..STRANDS).collect::<Vec<usize>>()).prop_shuffle().prop_map(Perm::from_images)
}

fn element() -> impl Strategy<Value = HeckeElt> {
    prop::collection::vec((perm(), poly()), 1..=2).prop_map(|parts| {
        parts
            .into_iter()
            .fold(HeckeElt::zero(STRANDS), |acc, (w, p)| acc.add(&HeckeElt::group(&w).mul(&HeckeElt::poly(p))))
    })
}

fn class(lit: &str) -> MultisegmentClass {
    Multisegment::parse(lit).unwrap().canonical()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(a in element(), b in element(), c in element()) {
        prop_assert!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in element(), b in element(), c in element()) {
        prop_assert!(a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn divided_difference_twisted_leibniz(p in poly(), q in poly(), i in 1usize..STRANDS) {
        let lhs = p.mul(&q).divided_difference(i);
        let rhs = p.divided_difference(i).mul(&q).add(&p.swap(i).mul(&q.divided_difference(i)));
        prop_assert!(lhs == rhs);
        // (ε_i - ε_{i+1}) Δ_i(p) = p - s_i(p)
        let root = EpsPoly::var(STRANDS, i).add(&EpsPoly::var(STRANDS, i + 1).scale(&rat(-1)));
        prop_assert!(root.mul(&p.divided_difference(i)) == p.add(&p.swap(i).scale(&rat(-1))));
    }

    #[test]
    fn conjugated_modules_are_isomorphic(seed in 0u64..1000) {
        let m = induced_standard(&class("[(0,1),(1,1),(5,1)]"), 3).unwrap();
        let t = unimodular(m.dim, seed);
        let c = m.conjugate(&t).unwrap();
        let r = is_isomorphic(&m, &c).unwrap();
        prop_assert!(r.isomorphic && r.certified);
    }
}

/// Upper unitriangular matrix with pseudorandom entries.
fn unimodular(d: usize, seed: u64) -> Mat {
    let mut m = Mat::identity(d);
    let mut s = seed.wrapping_add(17);
    for i in 0..d {
        for j in i + 1..d {
            s = s.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            m.set(i, j, rat(((s >> 40) % 7) as i64 - 3));
        }
    }
    m
}

#[test]
fn defining_relations_in_the_algebra() {
    let l = 3;
    for i in 1..l {
        let s = HeckeElt::simple(i, l);
        assert!(s.mul(&s) == HeckeElt::one(l));
        for j in 1..=l {
            let sj = Perm::simple(i, l).apply(j - 1) + 1;
            let lhs = s.mul(&HeckeElt::eps(j, l)).add(&HeckeElt::eps(sj, l).mul(&s).scale(&rat(-1)));
            assert!(lhs == HeckeElt::scalar(l, rat(pairing(i, j))), "s_{i}, eps_{j}");
        }
    }
    let (s1, s2) = (HeckeElt::simple(1, l), HeckeElt::simple(2, l));
    assert!(s1.mul(&s2).mul(&s1) == s2.mul(&s1).mul(&s2));
}

#[test]
fn standard_dimensions_and_relations() {
    for values in [vec![rat(1), rat(0), rat(-1)], vec![rat(1), rat(1), rat(0)], vec![rat(2), rat(1), rat(0), rat(-1)]] {
        for tau in ms_classes(&values).unwrap() {
            let l = tau.total_length();
            let m = induced_standard(&tau, l).unwrap();
            let expected = factorial(l) / tau.lengths().iter().map(|&k| factorial(k)).product::<usize>();
            assert_eq!(m.dim, expected, "{tau}");
            m.check_relations().unwrap();
            // Σ ε acts by the sum of the ζ weight.
            let total: Rat = zeta_weight(&tau).iter().sum();
            assert_eq!(m.central_scalar(), Some(total));
            let mut zeta = zeta_weight(&tau);
            zeta.sort_by(|a, b| b.cmp(a));
            assert_eq!(m.weight_spectrum().unwrap().central_character(), Some(zeta));
        }
    }
}

#[test]
fn sl2_standards_decompose() {
    let points = induced_standard(&class("[(1/2,1),(-1/2,1)]"), 2).unwrap();
    let segment = induced_standard(&class("[(-1/2,2)]"), 2).unwrap();
    assert_eq!(points.dim, 2);
    assert_eq!(segment.dim, 1);
    let (factors, certified) = composition_factors(&points).unwrap();
    assert!(certified);
    assert_eq!(factors.len(), 2);
    let head = irr_quotient(&points).unwrap();
    assert_eq!(head.dim, 1);
    assert!(!is_isomorphic(&head, &segment).unwrap().isomorphic);
    let lattice = submodule_lattice(&points).unwrap();
    assert!(lattice.certified);
    assert_eq!(lattice.submodules.len(), 3);
    let series = composition_series(&points).unwrap();
    assert!(series.factors.iter().any(|f| is_isomorphic(f, &segment).unwrap().isomorphic));
}

#[test]
fn generic_standard_is_irreducible() {
    let m = induced_standard(&class("[(0,1),(5,1),(10,1)]"), 3).unwrap();
    let (factors, certified) = composition_factors(&m).unwrap();
    assert!(certified);
    assert_eq!(factors.len(), 1);
    assert_eq!(intertwiners(&m, &m).len(), 1);
}

#[test]
fn wrong_length_rejected() {
    assert_eq!(
        induced_standard(&class("[(0,2)]"), 3).unwrap_err(),
        Error::LengthMismatch { expected: 3, got: 2 }
    );
}

#[test]
fn characters_and_sums() {
    let a = HModule::character(&[-1], &[frac(-1, 2), frac(1, 2)]);
    a.check_relations().unwrap();
    let b = HModule::character(&[1], &[frac(1, 2), frac(-1, 2)]);
    b.check_relations().unwrap();
    let sum = a.direct_sum(&b);
    assert_eq!(sum.dim, 2);
    sum.check_relations().unwrap();
    assert!(sum.weight_spectrum().unwrap().is_multiplicity_free());
    assert!(intertwiners(&a, &b).iter().all(|t| t.is_zero()));
    assert_eq!(a.central_scalar(), Some(Rat::zero()));
}
