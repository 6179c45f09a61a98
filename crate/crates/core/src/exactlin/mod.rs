//! Exact rational linear algebra.

pub mod eigen;
pub mod mat;
pub mod rat;
pub mod subspace;

pub use eigen::{
    char_poly, eigenvalues, generalized_kernel, invariant_closure, joint_eigenspace,
    joint_generalized_eigenspaces, rational_roots,
};
pub use mat::Mat;
pub use rat::{frac, parse_rat, rat, Rat};
pub use subspace::Subspace;

/// Rank over the rationals.
pub fn rank(m: &Mat) -> usize {
    m.rank()
}
