//! PBW normal ordering in the enveloping algebra of affine sl2, and the
//! linear and quadratic charges built from B(x).

mod charges;
mod pbw;

pub use charges::{
    b_family, build_linear_charge, build_linear_charge_raw, build_quadratic_charge,
    check_charge_commutativity, check_linear_commutativity, check_linear_commutativity_with,
    check_quadratic_commutativity_with, linear_charges, m_family, quadratic_charges,
    quadratic_max_k, t_b_commutator, ChargeKind, LinearVariant,
};
pub use pbw::{uea_commutator, uea_mul, PbwMonomial, UeaElt};
