use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::module::{HModule, WeightSpectrum};
use crate::error::{Error, Result};
use crate::exactlin::rat::{rat, Rat};
use crate::exactlin::{invariant_closure, joint_eigenspace, joint_generalized_eigenspaces, Mat, Subspace};

/// Number of pseudorandom seed vectors tried when eigenvector seeds are inconclusive.
const RANDOM_SEEDS: usize = 16;

/// Outcome of a search for a proper nonzero submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    Proper(Subspace),
    /// No proper submodule exists (`certified`), or none was found.
    Irreducible { certified: bool },
}

fn transposes(ms: &[Mat]) -> Vec<Mat> {
    ms.iter().map(Mat::transpose).collect()
}

fn random_vectors(dim: usize, count: usize, seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..dim).map(|_| rat(rng.gen_range(-3..=3))).collect()).collect()
}

/// Searches for a proper nonzero subspace invariant under `gens`, where `eps`
/// are the commuting generators among them.
///
/// For a weight `ζ` whose joint eigenspace is a line `⟨v⟩`, a proper
/// submodule either misses `v` (then it avoids the whole `ζ` generalized
/// weight space, so its annihilator in the dual contains every dual `ζ`
/// eigenvector `u`), or contains `v`. Hence if `v` and `u` both generate,
/// the module is irreducible.
pub fn find_proper_submodule(gens: &[Mat], eps: &[Mat], dim: usize) -> Result<Split> {
    if dim <= 1 {
        return Ok(Split::Irreducible { certified: true });
    }
    let gens_t = transposes(gens);
    let eps_t = transposes(eps);
    let parts = joint_generalized_eigenspaces(eps, dim)?;

    let try_seed = |v: &[Rat]| -> Option<Subspace> {
        let c = invariant_closure(gens, &Subspace::from_vectors(dim, vec![v.to_vec()]));
        (!c.is_full()).then_some(c)
    };
    let try_dual = |u: &[Rat]| -> Option<Subspace> {
        let c = invariant_closure(&gens_t, &Subspace::from_vectors(dim, vec![u.to_vec()]));
        (!c.is_full()).then(|| c.annihilator())
    };

    let mut has_line = false;
    for (weight, _) in &parts {
        let e = joint_eigenspace(eps, weight, dim);
        for v in e.basis() {
            if let Some(s) = try_seed(v) {
                return Ok(Split::Proper(s));
            }
        }
        let et = joint_eigenspace(&eps_t, weight, dim);
        for u in et.basis() {
            if let Some(s) = try_dual(u) {
                return Ok(Split::Proper(s));
            }
        }
        has_line |= e.dim() == 1;
    }
    if has_line {
        // Some weight has a one-dimensional eigenspace, and both of its
        // eigenvectors generated: certified irreducible.
        return Ok(Split::Irreducible { certified: true });
    }
    for (i, v) in random_vectors(dim, RANDOM_SEEDS, 0x5eed).iter().enumerate() {
        if let Some(s) = try_seed(v) {
            return Ok(Split::Proper(s));
        }
        if let Some(s) = try_dual(&random_vectors(dim, 1, i as u64)[0]) {
            return Ok(Split::Proper(s));
        }
    }
    Ok(Split::Irreducible { certified: false })
}

impl HModule {
    pub fn find_proper_submodule(&self) -> Result<Split> {
        find_proper_submodule(&self.generators(), &self.eps_mats, self.dim)
    }
}

/// Signature used to identify an irreducible: its central character and weight spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorSignature {
    pub central_character: Vec<String>,
    pub spectrum: WeightSpectrum,
}

impl FactorSignature {
    pub fn of(m: &HModule) -> Result<Self> {
        let spectrum = m.weight_spectrum()?;
        let central_character = spectrum
            .central_character()
            .unwrap_or_default()
            .iter()
            .map(crate::exactlin::rat::fmt_rat)
            .collect();
        Ok(FactorSignature { central_character, spectrum })
    }
}

/// Composition factors (bottom to top) of a module.
#[derive(Clone, Debug)]
pub struct CompositionSeries {
    pub factors: Vec<HModule>,
    pub certified: bool,
}

pub fn composition_series(m: &HModule) -> Result<CompositionSeries> {
    if m.dim == 0 {
        return Ok(CompositionSeries { factors: Vec::new(), certified: true });
    }
    match m.find_proper_submodule()? {
        Split::Irreducible { certified } => Ok(CompositionSeries { factors: vec![m.clone()], certified }),
        Split::Proper(s) => {
            let lower = composition_series(&m.submodule(&s))?;
            let upper = composition_series(&m.quotient(&s))?;
            let mut factors = lower.factors;
            factors.extend(upper.factors);
            Ok(CompositionSeries { factors, certified: lower.certified && upper.certified })
        }
    }
}

/// Factor signatures with the certification flag of the underlying series.
pub fn composition_factors(m: &HModule) -> Result<(Vec<FactorSignature>, bool)> {
    let series = composition_series(m)?;
    let sigs = series.factors.iter().map(FactorSignature::of).collect::<Result<Vec<_>>>()?;
    Ok((sigs, series.certified))
}

/// All submodules, as subspaces.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub submodules: Vec<Subspace>,
    pub certified: bool,
}

/// Every submodule is the sum of the cyclic submodules generated by its
/// eigenvectors; when the spectrum is multiplicity free these come from the
/// eigenlines alone, so closing the set of their cyclic submodules under sums
/// is complete.
pub fn submodule_lattice(m: &HModule) -> Result<Lattice> {
    let d = m.dim;
    let gens = m.generators();
    let parts = joint_generalized_eigenspaces(&m.eps_mats, d)?;
    let certified = parts.iter().all(|(_, s)| s.dim() == 1);
    let mut seeds: Vec<Vec<Rat>> = Vec::new();
    for (w, s) in &parts {
        seeds.extend(joint_eigenspace(&m.eps_mats, w, d).basis().iter().cloned());
        if !certified {
            seeds.extend(s.basis().iter().cloned());
        }
    }
    if !certified {
        seeds.extend(random_vectors(d, RANDOM_SEEDS, 0x1a77));
    }
    let cyclic: BTreeSet<Subspace> = seeds
        .iter()
        .map(|v| invariant_closure(&gens, &Subspace::from_vectors(d, vec![v.clone()])))
        .collect();
    let mut all: BTreeSet<Subspace> = BTreeSet::from([Subspace::zero(d)]);
    let mut frontier: Vec<Subspace> = vec![Subspace::zero(d)];
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            let t = s.sum(c);
            if all.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut submodules: Vec<Subspace> = all.into_iter().collect();
    submodules.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    Ok(Lattice { submodules, certified })
}

/// A simple submodule of the module given by `gens` (found by repeated splitting).
fn simple_submodule(gens: &[Mat], eps_count: usize, dim: usize) -> Result<(Subspace, bool)> {
    let mut space = Subspace::full(dim);
    loop {
        let local: Vec<Mat> = gens.iter().map(|g| space.restrict(g)).collect();
        let eps = &local[local.len() - eps_count..];
        match find_proper_submodule(&local, eps, space.dim())? {
            Split::Irreducible { certified } => return Ok((space, certified)),
            Split::Proper(s) => space = space.lift(&s),
        }
    }
}

/// The irreducible quotient of a module generated by its first basis vector.
pub fn irr_quotient(m: &HModule) -> Result<HModule> {
    Ok(irr_quotient_certified(m)?.0)
}

/// As [`irr_quotient`], with a flag telling whether irreducibility was certified.
pub fn irr_quotient_certified(m: &HModule) -> Result<(HModule, bool)> {
    if m.dim == 0 {
        return Err(Error::NotCyclic);
    }
    let gens = m.generators();
    let mut e0 = vec![Rat::zero(); m.dim];
    e0[0] = Rat::one();
    if !invariant_closure(&gens, &Subspace::from_vectors(m.dim, vec![e0])).is_full() {
        return Err(Error::NotCyclic);
    }
    // A simple submodule S of the dual gives the maximal submodule S^⊥.
    let (simple_dual, certified) = simple_submodule(&transposes(&gens), m.eps_mats.len(), m.dim)?;
    let radical = simple_dual.annihilator();
    Ok((m.quotient(&radical), certified))
}

/// Result of an isomorphism test.
#[derive(Clone, Debug)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// `T` with `T g_a = g_b T` for every generator, invertible.
    pub witness: Option<Mat>,
    pub reason: String,
    pub certified: bool,
}

/// Basis of `Hom(a, b)`: all `T` with `T g_a = g_b T`.
pub fn intertwiners(a: &HModule, b: &HModule) -> Vec<Mat> {
    let (da, db) = (a.dim, b.dim);
    let unknowns = da * db;
    let idx = |i: usize, k: usize| i * da + k;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (ga, gb) in a.generators().iter().zip(b.generators()) {
        for i in 0..db {
            for j in 0..da {
                let mut row = vec![Rat::zero(); unknowns];
                for k in 0..da {
                    if !ga.get(k, j).is_zero() {
                        row[idx(i, k)] += ga.get(k, j);
                    }
                }
                for k in 0..db {
                    if !gb.get(i, k).is_zero() {
                        row[idx(k, j)] -= gb.get(i, k);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Mat::identity(unknowns).to_rows()
    } else {
        Mat::from_rows(rows).kernel()
    };
    kernel
        .into_iter()
        .map(|v| Mat::from_rows(v.chunks(da.max(1)).take(db).map(<[Rat]>::to_vec).collect()))
        .collect()
}

fn combination(basis: &[Mat], coeffs: &[Rat]) -> Mat {
    let d = basis[0].rows();
    basis.iter().zip(coeffs).fold(Mat::zeros(d, d), |acc, (b, c)| &acc + &b.scale(c))
}

pub fn is_isomorphic(a: &HModule, b: &HModule) -> Result<IsoResult> {
    let no = |reason: &str, certified: bool| IsoResult { isomorphic: false, witness: None, reason: reason.into(), certified };
    if a.dim != b.dim || a.strands != b.strands {
        return Ok(no("dimension mismatch", true));
    }
    if a.dim == 0 {
        return Ok(IsoResult { isomorphic: true, witness: Some(Mat::zeros(0, 0)), reason: "zero modules".into(), certified: true });
    }
    if a.weight_spectrum()? != b.weight_spectrum()? {
        return Ok(no("weight spectra differ", true));
    }
    let basis = intertwiners(a, b);
    if basis.is_empty() {
        return Ok(no("no nonzero intertwiner", true));
    }
    let found = |t: Mat| IsoResult { isomorphic: true, witness: Some(t), reason: "invertible intertwiner".into(), certified: true };
    for t in &basis {
        if !t.det().is_zero() {
            return Ok(found(t.clone()));
        }
    }
    let k = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..64 {
        let coeffs: Vec<Rat> = (0..k).map(|_| rat(rng.gen_range(-9..=9))).collect();
        let t = combination(&basis, &coeffs);
        if !t.det().is_zero() {
            return Ok(found(t));
        }
    }
    // det(Σ x_i T_i) has degree at most dim in each variable, so vanishing on
    // the grid {0..dim}^k proves it is identically zero.
    let grid = (a.dim + 1).pow(k as u32);
    if k <= 3 && grid <= 10_000 {
        let mut coeffs = vec![0usize; k];
        for _ in 0..grid {
            let c: Vec<Rat> = coeffs.iter().map(|&x| rat(x as i64)).collect();
            let t = combination(&basis, &c);
            if !t.det().is_zero() {
                return Ok(found(t));
            }
            for x in coeffs.iter_mut() {
                *x += 1;
                if *x <= a.dim {
                    break;
                }
                *x = 0;
            }
        }
        return Ok(no("no invertible intertwiner (determinant vanishes on the certificate grid)", true));
    }
    Ok(no("no invertible intertwiner found", false))
}
