//! Truncated Lie-valued Laurent series matrices: the FRT generating
//! matrices, the reflection-algebra currents `B(x)`, and the relation checks.

mod relations;
mod series;

pub use relations::{
    build_b, build_b_with, build_t, check_exchange, check_exchange_with, check_frt_relations,
    check_frt_relations_with, extract_mode, BFamily, Sign, MIN_WINDOW,
};
pub use series::{
    clear_and_compare, series_bracket, Comparison, CurrentMat, Degree, ExactRange, PolyMat,
    Product, Region, SupportMeta,
};

#[cfg(test)]
mod tests;
