//! End-to-end verification drivers behind the `verify-*` commands.

use serde::Serialize;

use schur_whittaker::asfunctor::{check_operator_identities, compare_to_standard, functor_value_verma};
use schur_whittaker::hecke::induced_standard;
use schur_whittaker::multiseg::delta;
use schur_whittaker::multtable::{irr_image_table, verify_mult_equal, BlockParams, IrrImageReport, MultEqualReport};
use schur_whittaker::orbitmaps::{graded_structure, phi, psi};
use schur_whittaker::multiseg::ms_classes;
use schur_whittaker::verma::{block_projection, TensorBlock};
use schur_whittaker::weights::{dot_orbit, stabilizer, tensor_datum, tensor_weight_multiplicity, Weight};
use schur_whittaker::weyl::double_cosets;
use schur_whittaker::Result;

#[derive(Debug, Serialize)]
pub struct DimRow {
    pub w: String,
    pub mu: String,
    pub standard_dim: usize,
    pub tensor_multiplicity: usize,
    pub projection_dim: usize,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DimReport {
    pub passed: bool,
    pub rows: Vec<DimRow>,
}

/// `dim std_H(δ(λ, μ, ℓ)) = dim (V^{⊗ℓ})_{λ-μ} = dim` of the block projection,
/// for every `μ` in the dot orbit of `λ`.
pub fn verify_dims(lam: &Weight, l: usize) -> Result<DimReport> {
    let n = lam.n();
    let mut rows = Vec::new();
    for (w, mu) in dot_orbit(lam) {
        let standard_dim = if tensor_datum(lam, &mu, l).is_some() {
            induced_standard(&delta(lam, &mu, l)?, l)?.dim
        } else {
            0
        };
        let tensor_multiplicity = tensor_weight_multiplicity(n, l, &(lam - &mu));
        let projection_dim = block_projection(&TensorBlock::new(&mu, lam, l))?.dim();
        rows.push(DimRow {
            w: w.to_string(),
            mu: mu.to_string(),
            ok: standard_dim == tensor_multiplicity && tensor_multiplicity == projection_dim,
            standard_dim,
            tensor_multiplicity,
            projection_dim,
        });
    }
    Ok(DimReport { passed: rows.iter().all(|r| r.ok), rows })
}

#[derive(Debug, Serialize)]
pub struct AsRow {
    pub mu: String,
    pub functor_dim: usize,
    pub block_dim: usize,
    pub eps_commute: bool,
    pub cross_relation: bool,
    pub g_commute: bool,
    pub casimir_commute: bool,
    /// `None` when the functor value is zero.
    pub isomorphic_to_standard: Option<bool>,
    pub certified: bool,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct AsReport {
    pub passed: bool,
    pub rows: Vec<AsRow>,
}

/// Operator identities on every block and the comparison of each functor
/// value with the induced standard module.
pub fn verify_as(lam: &Weight, l: usize) -> Result<AsReport> {
    let mut rows = Vec::new();
    for (_, mu) in dot_orbit(lam) {
        let ids = check_operator_identities(&TensorBlock::new(&mu, lam, l))?;
        let fv = functor_value_verma(&mu, lam, l)?;
        let (iso, certified) = if fv.is_zero() {
            (None, true)
        } else {
            let r = compare_to_standard(&fv)?;
            (Some(r.isomorphic), r.certified)
        };
        let zero_expected = tensor_datum(lam, &mu, l).is_none();
        let ok = ids.all_hold() && iso.map_or(zero_expected, |b| b);
        rows.push(AsRow {
            mu: mu.to_string(),
            functor_dim: fv.dim(),
            block_dim: ids.block_dim,
            eps_commute: ids.eps_commute,
            cross_relation: ids.cross_relation,
            g_commute: ids.g_commute,
            casimir_commute: ids.casimir_commute,
            isomorphic_to_standard: iso,
            certified,
            ok,
        });
    }
    Ok(AsReport { passed: rows.iter().all(|r| r.ok), rows })
}

#[derive(Debug, Serialize)]
pub struct RoundTripReport {
    pub passed: bool,
    pub classes: usize,
    pub cosets: usize,
    pub image: usize,
    pub failures: Vec<String>,
}

/// `Ψ∘Φ = id` on multisegment classes and `Φ∘Ψ = id` on the image of `Φ`.
pub fn verify_round_trip(lam: &Weight) -> Result<RoundTripReport> {
    let gs = graded_structure(lam)?;
    let stab = stabilizer(lam)?;
    let classes = ms_classes(&lam.plus_rho())?;
    let cosets = double_cosets(&stab, &stab, lam.n());
    let mut failures = Vec::new();
    for c in &classes {
        let q = phi(c, &gs)?;
        if psi(&q, &gs)?.as_ref() != Some(c) {
            failures.push(format!("Ψ(Φ({c})) != {c}"));
        }
    }
    let mut image = 0;
    for q in &cosets {
        if let Some(c) = psi(q, &gs)? {
            image += 1;
            if phi(&c, &gs)?.longest_rep != q.longest_rep {
                failures.push(format!("Φ(Ψ([{}])) differs", q.longest_rep));
            }
        }
    }
    Ok(RoundTripReport { passed: failures.is_empty(), classes: classes.len(), cosets: cosets.len(), image, failures })
}

#[derive(Debug, Serialize)]
pub struct AllReport {
    pub passed: bool,
    pub dims: DimReport,
    pub functor: AsReport,
    pub round_trip: RoundTripReport,
    pub mult_equal: MultEqualReport,
    pub main: IrrImageReport,
}

/// Every suite for `(n, λ)` with `ℓ = n` and `η` the stabilizer of `λ`.
pub fn verify_all(lam: &Weight) -> Result<AllReport> {
    let l = lam.n();
    let bp = BlockParams::with_stabilizer(lam.clone())?;
    let dims = verify_dims(lam, l)?;
    let functor = verify_as(lam, l)?;
    let round_trip = verify_round_trip(lam)?;
    let mult_equal = verify_mult_equal(&bp)?;
    let main = irr_image_table(&bp)?;
    Ok(AllReport {
        passed: dims.passed && functor.passed && round_trip.passed && mult_equal.passed && main.passed,
        dims,
        functor,
        round_trip,
        mult_equal,
        main,
    })
}
