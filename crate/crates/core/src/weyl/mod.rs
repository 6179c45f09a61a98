//! The symmetric group `S_m` as a Coxeter group: length, Bruhat order,
//! parabolic double cosets and Kazhdan-Lusztig polynomials.

mod coset;
mod kl;
mod perm;

pub use coset::{
    double_cosets, longest_in_coset, minimal_left_coset_reps, shortest_in_coset, DoubleCoset,
    ParabolicSet,
};
pub use kl::{kl_polynomial, kl_table, KlPoly, KlTable};
pub use perm::{all_perms, bruhat_leq, length, Perm};
