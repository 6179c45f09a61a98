//! The graded affine Hecke algebra of type A on `ℓ` strands: element
//! arithmetic, induced standard modules, spectra and decompositions.

mod algebra;
mod decompose;
mod module;
mod standard;

pub use algebra::{EpsPoly, HeckeElt};
pub use decompose::{
    composition_factors, composition_series, find_proper_submodule, intertwiners, irr_quotient,
    irr_quotient_certified, is_isomorphic, submodule_lattice, CompositionSeries, FactorSignature,
    IsoResult, Lattice, Split,
};
pub use module::{pairing, HModule, WeightSpectrum};
pub use standard::induced_standard;

/// Product in normal form.
pub fn mul(a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
    a.mul(b)
}

/// Joint generalized spectrum of the `ε` generators.
pub fn weight_spectrum(m: &HModule) -> crate::Result<WeightSpectrum> {
    m.weight_spectrum()
}
