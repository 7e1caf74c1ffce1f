//! Exact symbolic construction and verification of the FRT presentations of
//! the Onsager, augmented Onsager and sl2-invariant Onsager algebras.
pub mod cli;
pub mod error;
pub mod envelope;
pub mod currents;
pub mod exactalg;
pub mod kacmoody;
pub mod onsager;
pub mod report;
pub mod tensormat;
pub mod vars;

pub use error::{Error, Result};
