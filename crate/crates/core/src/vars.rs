//! The fixed spectral variables used throughout.

use std::sync::OnceLock;

use crate::exactalg::Variable;

macro_rules! spectral {
    ($($f:ident => $name:literal),* $(,)?) => {
        $(
            pub fn $f() -> Variable {
                static CELL: OnceLock<Variable> = OnceLock::new();
                *CELL.get_or_init(|| Variable::spectral($name))
            }
        )*
    };
}

spectral! {
    x => "x",
    y => "y",
    u => "u",
    x1 => "x1",
    x2 => "x2",
    x3 => "x3",
}

/// Parameter names used by the named boundary and charge matrices.
pub const PARAMETERS: [&str; 16] = [
    "k", "k*", "sign", "alpha", "beta", "gamma", "delta", "mu", "kappa", "kappa*", "tau", "nu",
    "nu*", "mu0", "mu1", "mu2",
];

/// Interns every standard variable in a fixed order, so that term order in
/// printed output does not depend on which computation ran first.
pub fn register_standard() {
    for f in [x, y, u, x1, x2, x3] {
        f();
    }
    for p in PARAMETERS {
        Variable::parameter(p);
    }
}
