//! Exact computations around Whittaker modules for `sl_n`, graded affine
//! Hecke algebras of type A and the tensor-space functor relating them.

pub mod asfunctor;
pub mod error;
pub mod exactlin;
pub mod hecke;
pub mod multiseg;
pub mod multtable;
pub mod orbitmaps;
pub mod verma;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
