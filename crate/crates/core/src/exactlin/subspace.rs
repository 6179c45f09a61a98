use num_traits::{One, Zero};

use super::mat::Mat;
use super::rat::Rat;

/// Subspace of `Q^ambient`, stored as the nonzero rows of a reduced row
/// echelon form. Two subspaces are equal iff their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, Mat::identity(ambient).to_rows())
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rat>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let (r, pivots) = Mat::from_rows(vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vecs = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            })
            .collect();
        Self::from_vectors(ambient, vecs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rat::zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                *r += ci * x;
            }
        }
        (rebuilt.as_slice() == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Self::from_vectors(self.ambient, vecs)
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Mat::from_rows(self.basis.clone());
        Self::from_vectors(self.ambient, m.kernel())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &Mat) -> Subspace {
        let vecs = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::from_vectors(m.rows(), vecs)
    }

    pub fn is_invariant(&self, m: &Mat) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to this (invariant) subspace in the echelon basis.
    pub fn restrict(&self, m: &Mat) -> Mat {
        let d = self.dim();
        let mut out = Mat::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let img = m.mul_vec(b);
            for (i, &p) in self.pivots.iter().enumerate() {
                out.set(i, j, img[p].clone());
            }
        }
        out
    }

    /// Standard basis indices completing the echelon basis to a basis of the ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Matrix of the action of `m` on the quotient by this (invariant) subspace,
    /// in the basis of images of the complement standard vectors.
    pub fn quotient_action(&self, m: &Mat) -> Mat {
        let comp = self.complement_indices();
        let k = comp.len();
        let mut out = Mat::zeros(k, k);
        for (j, &c) in comp.iter().enumerate() {
            let mut img = m.col(c);
            // Reduce the image modulo the subspace: clear pivot entries.
            for (b, &p) in self.basis.iter().zip(&self.pivots) {
                let f = img[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in img.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
            for (i, &ci) in comp.iter().enumerate() {
                out.set(i, j, img[ci].clone());
            }
        }
        out
    }

    /// Vectors of `sub`, a subspace of the ambient space, expressed in this subspace's coordinates.
    pub fn relative(&self, sub: &Subspace) -> Subspace {
        let vecs = sub
            .basis
            .iter()
            .map(|v| self.coordinates(v).expect("subspace not contained"))
            .collect();
        Subspace::from_vectors(self.dim(), vecs)
    }

    /// Lifts a subspace given in this subspace's coordinates back to the ambient space.
    pub fn lift(&self, rel: &Subspace) -> Subspace {
        let vecs = rel
            .basis
            .iter()
            .map(|c| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (ci, b) in c.iter().zip(&self.basis) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += ci * y;
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient, vecs)
    }
}
