use proptest::prelude::*;
use schur_whittaker::exactlin::rat::{frac, rat, Rat};
use schur_whittaker::multiseg::{delta, ms_classes, nilpotent_rep, support, zeta_weight, Multisegment, Segment};
use schur_whittaker::weights::{dot_orbit, Weight};
use schur_whittaker::Error;

fn multisegment() -> impl Strategy<Value = Multisegment> {
    prop::collection::vec((-3i64..=3, 1usize..=3), 1..=4)
        .prop_map(|v| Multisegment::new(v.into_iter().map(|(s, l)| Segment::new(rat(s), l)).collect()))
}

proptest! {
    #[test]
    fn canonical_form_is_order_independent(m in multisegment(), seed in any::<u64>()) {
        let mut segs = m.segments.clone();
        let k = segs.len();
        segs.rotate_left((seed as usize) % k);
        let shuffled = Multisegment::new(segs);
        prop_assert_eq!(m.canonical(), shuffled.canonical());
        prop_assert_eq!(m.canonical().multisegment().canonical(), m.canonical());
    }

    #[test]
    fn classes_preserve_support(m in multisegment()) {
        let sup = support(&m);
        let classes = ms_classes(&sup).unwrap();
        prop_assert!(classes.contains(&m.canonical()));
        for c in &classes {
            prop_assert_eq!(support(c.multisegment()), sup.clone());
            prop_assert_eq!(c.total_length(), m.total_length());
        }
    }

    #[test]
    fn literal_round_trip(m in multisegment()) {
        let lit: Vec<String> = m.segments.iter().map(|s| format!("({},{})", s.start, s.length)).collect();
        let parsed = Multisegment::parse(&format!("[{}]", lit.join(","))).unwrap();
        prop_assert_eq!(parsed, m);
    }
}

#[test]
fn classes_of_a_run() {
    // Distinct consecutive values: one class per composition of n.
    for n in 1..=5i64 {
        let values: Vec<Rat> = (0..n).map(rat).collect();
        assert_eq!(ms_classes(&values).unwrap().len(), 1 << (n - 1));
    }
    let sing = ms_classes(&[rat(1), rat(1), rat(0)]).unwrap();
    assert_eq!(sing.len(), 2);
    assert!(matches!(ms_classes(&[rat(0), frac(1, 2)]), Err(Error::NotIntegralSpaced(_))));
}

#[test]
fn delta_covers_the_orbit_support() {
    let lam = Weight::zero(3);
    for (_, mu) in dot_orbit(&lam) {
        if let Ok(tau) = delta(&lam, &mu, 3) {
            let mut sup = support(tau.multisegment());
            sup.sort();
            let mut expected = lam.plus_rho();
            expected.sort();
            assert_eq!(sup, expected);
        }
    }
}

#[test]
fn zeta_and_nilpotent() {
    let tau = Multisegment::parse("[(-1/2,2)]").unwrap().canonical();
    assert_eq!(zeta_weight(&tau), vec![frac(-1, 2), frac(1, 2)]);
    let n = nilpotent_rep(&Multisegment::parse("[(0,2),(5,1)]").unwrap().canonical());
    assert_eq!(n.rows(), 3);
    assert!((&n * &n).is_zero());
    assert!(Multisegment::parse("[(0,0)]").is_err());
}
