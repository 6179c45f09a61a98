//! Multiplicity matrices of standard modules in irreducibles on the Whittaker
//! side (Kazhdan-Lusztig values) and the Hecke side (composition series), and
//! their comparison through the orbit maps.

use serde::Serialize;

use crate::asfunctor::whittaker_functor_value;
use crate::error::{Error, Result};
use crate::hecke::{composition_factors, induced_standard, irr_quotient_certified, FactorSignature, HModule};
use crate::multiseg::{ms_classes, MultisegmentClass};
use crate::orbitmaps::{graded_structure, phi, psi, GradedStructure};
use crate::weights::{stabilizer, Weight};
use crate::weyl::{double_cosets, kl_table, DoubleCoset, ParabolicSet};

/// A block of category `N`: a dominant integral weight and a character support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockParams {
    pub n: usize,
    pub lam: Weight,
    pub eta: ParabolicSet,
}

impl BlockParams {
    pub fn new(lam: Weight, eta: ParabolicSet) -> Result<Self> {
        if !lam.is_dominant() {
            return Err(Error::NotDominant(crate::exactlin::rat::fmt_tuple(&lam.plus_rho())));
        }
        if !lam.is_integral() {
            return Err(Error::HypothesisViolated(format!("weight {lam} is not integral")));
        }
        if !eta.fits(lam.n()) {
            return Err(Error::Parse(format!("simple indices {eta} out of range for n = {}", lam.n())));
        }
        Ok(BlockParams { n: lam.n(), lam, eta })
    }

    /// The block with `η` equal to the stabilizer of `λ`.
    pub fn with_stabilizer(lam: Weight) -> Result<Self> {
        let eta = stabilizer(&lam)?;
        Self::new(lam, eta)
    }

    fn require_stabilizer(&self) -> Result<()> {
        let stab = stabilizer(&self.lam)?;
        if stab != self.eta {
            return Err(Error::HypothesisViolated(format!(
                "character support {} differs from the stabilizer {stab}",
                self.eta
            )));
        }
        Ok(())
    }

    /// Double cosets `W_η \ W / W_λ`, sorted by longest representative.
    pub fn cosets(&self) -> Result<Vec<DoubleCoset>> {
        Ok(double_cosets(&self.eta, &stabilizer(&self.lam)?, self.n))
    }

    /// The Hecke block: multisegment classes supported on the entries of
    /// `λ+ρ`, ordered by the representatives of their images under `Φ`.
    pub fn hecke_classes(&self) -> Result<(GradedStructure, Vec<MultisegmentClass>)> {
        let gs = graded_structure(&self.lam)?;
        let mut keyed = ms_classes(&self.lam.plus_rho())?
            .into_iter()
            .map(|c| Ok((phi(&c, &gs)?.longest_rep, c)))
            .collect::<Result<Vec<_>>>()?;
        keyed.sort();
        Ok((gs, keyed.into_iter().map(|(_, c)| c).collect()))
    }
}

/// Integer matrix with labelled rows (standards) and columns (irreducibles).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl MultiplicityMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Unit diagonal and zeros below it.
    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &x)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => x == 1,
                std::cmp::Ordering::Greater => x == 0,
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// Inverse of a unitriangular matrix, by back substitution.
    pub fn inverse_unitriangular(&self) -> Vec<Vec<i64>> {
        assert!(self.is_unitriangular(), "matrix is not unitriangular");
        let k = self.size();
        let a = &self.entries;
        let mut inv = vec![vec![0i64; k]; k];
        for j in 0..k {
            inv[j][j] = 1;
            for i in (0..j).rev() {
                inv[i][j] = -(i + 1..=j).map(|m| a[i][m] * inv[m][j]).sum::<i64>();
            }
        }
        inv
    }

    fn submatrix(&self, idx: &[usize]) -> Vec<Vec<i64>> {
        idx.iter().map(|&i| idx.iter().map(|&j| self.entries[i][j]).collect()).collect()
    }
}

fn coset_label(c: &DoubleCoset) -> String {
    format!("[{}]", c.longest_rep)
}

/// `[std_N(w•λ) : irr_N(y•λ)] = P_{w,y}(1)` with `w`, `y` the longest
/// representatives of their double cosets.
pub fn whittaker_mult_matrix(bp: &BlockParams) -> Result<MultiplicityMatrix> {
    let cosets = bp.cosets()?;
    let table = kl_table(bp.n);
    let labels: Vec<String> = cosets.iter().map(coset_label).collect();
    let entries = cosets
        .iter()
        .map(|w| {
            cosets
                .iter()
                .map(|y| table.poly(&w.longest_rep, &y.longest_rep).eval_at_one())
                .collect()
        })
        .collect();
    Ok(MultiplicityMatrix { rows: labels.clone(), cols: labels, entries })
}

/// Heads of the standard modules of a Hecke block, identified by signature.
struct Heads {
    signatures: Vec<FactorSignature>,
    certified: bool,
}

impl Heads {
    fn of(classes: &[MultisegmentClass], l: usize) -> Result<Self> {
        let mut signatures = Vec::new();
        let mut certified = true;
        for c in classes {
            let (head, cert) = irr_quotient_certified(&induced_standard(c, l)?)?;
            certified &= cert;
            let sig = FactorSignature::of(&head)?;
            if signatures.contains(&sig) {
                return Err(Error::AmbiguousFactorSignature(format!("{} (class {c})", sig.spectrum.describe())));
            }
            signatures.push(sig);
        }
        Ok(Heads { signatures, certified })
    }

    /// Grothendieck class of a module in the basis of the heads.
    fn class_of(&self, m: &HModule) -> Result<(Vec<i64>, bool)> {
        let (factors, certified) = composition_factors(m)?;
        let mut v = vec![0i64; self.signatures.len()];
        for f in factors {
            let i = self.signatures.iter().position(|s| *s == f).ok_or_else(|| {
                Error::AmbiguousFactorSignature(format!("{} matches no irreducible head", f.spectrum.describe()))
            })?;
            v[i] += 1;
        }
        Ok((v, certified))
    }
}

/// The Hecke-side matrix together with the certification flag of the
/// decompositions it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeMatrix {
    pub matrix: MultiplicityMatrix,
    pub certified: bool,
}

/// `[std_H(τ) : irr_H(γ)]` over the multisegment classes of the block, with
/// `ℓ = n`.
pub fn hecke_mult_matrix(bp: &BlockParams) -> Result<HeckeMatrix> {
    let (_, classes) = bp.hecke_classes()?;
    let heads = Heads::of(&classes, bp.n)?;
    let mut certified = heads.certified;
    let mut entries = Vec::new();
    for c in &classes {
        let (v, cert) = heads.class_of(&induced_standard(c, bp.n)?)?;
        certified &= cert;
        entries.push(v);
    }
    let labels: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
    Ok(HeckeMatrix { matrix: MultiplicityMatrix { rows: labels.clone(), cols: labels, entries }, certified })
}

/// Result of comparing the two multiplicity matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultEqualReport {
    pub passed: bool,
    pub whittaker: MultiplicityMatrix,
    pub hecke: MultiplicityMatrix,
    /// `(coset, class)` pairs of the image of `Φ`.
    pub correspondence: Vec<(String, String)>,
    pub mismatches: Vec<String>,
    pub whittaker_unitriangular: bool,
    pub hecke_unitriangular: bool,
    pub certified: bool,
}

/// Indices of the cosets in the image of `Φ`, with the matching class indices.
fn image_of_phi(
    cosets: &[DoubleCoset],
    classes: &[MultisegmentClass],
    gs: &GradedStructure,
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (ci, c) in classes.iter().enumerate() {
        let q = phi(c, gs)?;
        let qi = cosets
            .iter()
            .position(|x| x.longest_rep == q.longest_rep)
            .ok_or_else(|| Error::NoMatchingCoset(format!("[{}]", q.longest_rep)))?;
        out.push((qi, ci));
    }
    out.sort();
    Ok(out)
}

/// Checks `[std_N(Q) : irr_N(O)] = [std_H(Ψ(Q)) : irr_H(Ψ(O))]` on the image of `Φ`.
pub fn verify_mult_equal(bp: &BlockParams) -> Result<MultEqualReport> {
    bp.require_stabilizer()?;
    let whittaker = whittaker_mult_matrix(bp)?;
    let hecke = hecke_mult_matrix(bp)?;
    let cosets = bp.cosets()?;
    let (gs, classes) = bp.hecke_classes()?;
    let image = image_of_phi(&cosets, &classes, &gs)?;

    let mut mismatches = Vec::new();
    for &(qa, ca) in &image {
        for &(qb, cb) in &image {
            let w = whittaker.entries[qa][qb];
            let h = hecke.matrix.entries[ca][cb];
            if w != h {
                mismatches.push(format!(
                    "std {} / irr {}: Whittaker {w}, Hecke {h} (classes {} / {})",
                    whittaker.rows[qa], whittaker.cols[qb], classes[ca], classes[cb]
                ));
            }
        }
    }
    let correspondence =
        image.iter().map(|&(q, c)| (whittaker.rows[q].clone(), classes[c].to_string())).collect();
    let rows: Vec<usize> = image.iter().map(|p| p.0).collect();
    let sub = MultiplicityMatrix {
        rows: rows.iter().map(|&i| whittaker.rows[i].clone()).collect(),
        cols: rows.iter().map(|&i| whittaker.cols[i].clone()).collect(),
        entries: whittaker.submatrix(&rows),
    };
    Ok(MultEqualReport {
        passed: mismatches.is_empty() && whittaker.is_unitriangular() && hecke.matrix.is_unitriangular(),
        whittaker_unitriangular: whittaker.is_unitriangular(),
        hecke_unitriangular: hecke.matrix.is_unitriangular(),
        whittaker: sub,
        hecke: hecke.matrix,
        correspondence,
        mismatches,
        certified: hecke.certified,
    })
}

/// Image of one irreducible Whittaker module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrImageRow {
    pub coset: String,
    pub psi: Option<String>,
    pub standard_value_dim: usize,
    /// Class of `F(irr_N(O))` in the basis of Hecke irreducibles.
    pub irr_class: Vec<i64>,
    pub expected: Vec<i64>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrImageReport {
    pub passed: bool,
    pub classes: Vec<String>,
    pub rows: Vec<IrrImageRow>,
    pub surjective: bool,
    pub certified: bool,
}

/// Computes `[F(irr_N(O))]` for every coset by inverting the Whittaker
/// matrix on the classes of `F(std_N(O))`, and compares with
/// `irr_H(Ψ(O))`, or zero off the image of `Φ`.
pub fn irr_image_table(bp: &BlockParams) -> Result<IrrImageReport> {
    bp.require_stabilizer()?;
    let l = bp.n;
    let cosets = bp.cosets()?;
    let whittaker = whittaker_mult_matrix(bp)?;
    let inv = whittaker.inverse_unitriangular();
    let (gs, classes) = bp.hecke_classes()?;
    let heads = Heads::of(&classes, l)?;
    let mut certified = heads.certified;

    let mut std_classes = Vec::new();
    let mut std_dims = Vec::new();
    for c in &cosets {
        let fv = whittaker_functor_value(c, &bp.lam, l)?;
        let (v, cert) = heads.class_of(&fv.module)?;
        certified &= cert;
        std_classes.push(v);
        std_dims.push(fv.dim());
    }

    let k = classes.len();
    let mut rows = Vec::new();
    let mut hit = vec![false; k];
    for (oi, c) in cosets.iter().enumerate() {
        let irr_class: Vec<i64> =
            (0..k).map(|t| (0..cosets.len()).map(|m| inv[oi][m] * std_classes[m][t]).sum()).collect();
        let target = psi(c, &gs)?;
        let mut expected = vec![0i64; k];
        if let Some(tau) = &target {
            let ti = classes.iter().position(|x| x == tau).expect("Ψ lands in the block");
            expected[ti] = 1;
        }
        for (t, &x) in irr_class.iter().enumerate() {
            if x != 0 {
                hit[t] = true;
            }
        }
        rows.push(IrrImageRow {
            coset: coset_label(c),
            psi: target.map(|t| t.to_string()),
            standard_value_dim: std_dims[oi],
            ok: irr_class == expected,
            irr_class,
            expected,
        });
    }
    let surjective = hit.iter().all(|&h| h);
    Ok(IrrImageReport {
        passed: surjective && rows.iter().all(|r| r.ok),
        classes: classes.iter().map(|c| c.to_string()).collect(),
        rows,
        surjective,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat::rat;

    #[test]
    fn sl2_matrices() {
        let bp = BlockParams::with_stabilizer(Weight::zero(2)).unwrap();
        assert_eq!(whittaker_mult_matrix(&bp).unwrap().entries, vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(hecke_mult_matrix(&bp).unwrap().matrix.entries, vec![vec![1, 1], vec![0, 1]]);
        assert!(verify_mult_equal(&bp).unwrap().passed);
        assert!(irr_image_table(&bp).unwrap().passed);
    }

    #[test]
    fn inverse_of_unitriangular() {
        let m = MultiplicityMatrix {
            rows: vec![String::new(); 3],
            cols: vec![String::new(); 3],
            entries: vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]],
        };
        assert_eq!(m.inverse_unitriangular(), vec![vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 1]]);
    }

    #[test]
    fn singular_block() {
        let lam = Weight::from_lambda_rho(vec![rat(1), rat(1), rat(0)]);
        let bp = BlockParams::with_stabilizer(lam).unwrap();
        let report = verify_mult_equal(&bp).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.hecke.entries, vec![vec![1, 1], vec![0, 1]]);
    }
}
