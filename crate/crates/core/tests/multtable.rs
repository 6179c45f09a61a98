mod common;

use common::small_dominant_weights;
use schur_whittaker::asfunctor::whittaker_functor_value;
use schur_whittaker::exactlin::rat::rat;
use schur_whittaker::multtable::{
    hecke_mult_matrix, irr_image_table, verify_mult_equal, whittaker_mult_matrix, BlockParams,
};
use schur_whittaker::weights::Weight;
use schur_whittaker::weyl::ParabolicSet;
use schur_whittaker::Error;

#[test]
fn matrices_are_unitriangular() {
    for n in [2, 3] {
        for lam in small_dominant_weights(n) {
            let bp = BlockParams::with_stabilizer(lam).unwrap();
            assert!(whittaker_mult_matrix(&bp).unwrap().is_unitriangular());
            let h = hecke_mult_matrix(&bp).unwrap();
            assert!(h.matrix.is_unitriangular(), "{:?}", h.matrix);
        }
    }
}

#[test]
fn mult_equal_on_small_blocks() {
    for n in [2, 3] {
        for lam in small_dominant_weights(n) {
            let bp = BlockParams::with_stabilizer(lam.clone()).unwrap();
            let r = verify_mult_equal(&bp).unwrap();
            assert!(r.passed, "lambda={lam}: {:?}", r.mismatches);
        }
    }
}

#[test]
fn regular_sl3_whittaker_matrix() {
    let bp = BlockParams::with_stabilizer(Weight::zero(3)).unwrap();
    let w = whittaker_mult_matrix(&bp).unwrap();
    assert_eq!(w.size(), 6);
    // All S_3 KL polynomials are 1, so entries are the Bruhat order.
    let total: i64 = w.entries.iter().flatten().sum();
    assert_eq!(total, 19);
}

#[test]
fn grothendieck_consistency() {
    // dims F(std) = W · dims F(irr) with dims F(irr) from the image table.
    let bp = BlockParams::with_stabilizer(Weight::zero(3)).unwrap();
    let w = whittaker_mult_matrix(&bp).unwrap();
    let table = irr_image_table(&bp).unwrap();
    let h = hecke_mult_matrix(&bp).unwrap();
    let head_dims: Vec<i64> = (0..h.matrix.size())
        .map(|t| {
            // Head dimension by inverting the Hecke matrix on standard dimensions.
            let std_dims: Vec<i64> = table.rows.iter().filter(|r| r.psi.is_some()).map(|r| r.standard_value_dim as i64).collect();
            let inv = h.matrix.inverse_unitriangular();
            (0..std_dims.len()).map(|m| inv[t][m] * std_dims[m]).sum()
        })
        .collect();
    let irr_dims: Vec<i64> = table
        .rows
        .iter()
        .map(|r| r.irr_class.iter().zip(&head_dims).map(|(a, b)| a * b).sum())
        .collect();
    for (i, row) in w.entries.iter().enumerate() {
        let predicted: i64 = row.iter().zip(&irr_dims).map(|(a, b)| a * b).sum();
        assert_eq!(predicted, table.rows[i].standard_value_dim as i64);
    }
    let cosets = bp.cosets().unwrap();
    assert_eq!(whittaker_functor_value(&cosets[0], &bp.lam, 3).unwrap().dim(), 6);
}

#[test]
fn stabilizer_hypothesis_required() {
    let lam = Weight::from_lambda_rho(vec![rat(1), rat(1), rat(0)]);
    let bp = BlockParams::new(lam, ParabolicSet::empty()).unwrap();
    assert!(matches!(verify_mult_equal(&bp), Err(Error::HypothesisViolated(_))));
    assert!(BlockParams::with_stabilizer(Weight::from_i64(&[-3, 3])).is_err());
}

#[test]
fn single_class_block() {
    let lam = Weight::from_lambda_rho(vec![rat(0), rat(0)]);
    let bp = BlockParams::with_stabilizer(lam).unwrap();
    let r = verify_mult_equal(&bp).unwrap();
    assert!(r.passed);
    assert_eq!(r.hecke.entries, vec![vec![1]]);
    assert!(irr_image_table(&bp).unwrap().passed);
}
