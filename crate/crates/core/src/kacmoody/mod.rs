//! Affine sl2 in the Cartan-Weyl basis: brackets, automorphisms and the
//! Serre-Chevalley consistency check.

mod elt;
mod maps;

pub use elt::{bracket, bracket_basis, BasisSymbol, Kind, LieElt};
#[allow(unused_imports)]
pub(crate) use elt::coeff_prefix;
pub use maps::{
    apply_map, check_automorphism, check_automorphism_with, check_serre_chevalley,
    check_serre_chevalley_with, AutoMap, ChevalleyImages,
};
