//! Verma modules of `gl_n` in a PBW basis and weight blocks of
//! `M(μ) ⊗ V^{⊗ℓ}` with the degenerate affine Hecke action.

mod pbw;
mod tensor;

pub use pbw::{kostant_partitions, negative_roots, verma_basis, PbwMonomial, Verma, VermaBlock, VermaVec};
pub use tensor::{
    block_projection, casimir_data, central_data_gl, CentralCharData, TensorBlock, TensorKey, TensorVec,
};
