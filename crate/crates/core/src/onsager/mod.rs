//! The Onsager, augmented Onsager and sl2-invariant Onsager algebras, their
//! embeddings into affine sl2, and the consistency checks between the two.

mod algebra;
mod checks;

pub use algebra::{
    abstract_bracket, bar_image, bracket_symbols, bracket_with, canonicalize, kappa_hom,
    morphism_image, tilde_image, OnsElt, OnsFamily, OnsKind, OnsSymbol,
};
pub use checks::{
    check_dolan_grady, check_dolan_grady_with, check_fixed_point, check_fixed_point_with,
    check_jacobi, check_jacobi_with, check_kappa_isomorphism, check_kappa_isomorphism_with,
    check_morphism, check_morphism_with, fixed_point_maps, image_rank, shifted_tilde,
    SymbolBracket,
};

#[cfg(test)]
mod tests;
