use thiserror::Error;

/// Errors raised by the algebraic layers and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` is already registered with a different kind")]
    VariableKind(String),
    #[error("cannot differentiate with respect to parameter `{0}`")]
    ParameterDerivative(String),
    #[error("parameter `{name}` cannot carry exponent {exponent}")]
    ParameterExponent { name: String, exponent: String },
    #[error("division by zero")]
    ZeroDenominator,
    #[error("cannot take an exact square root of {0}")]
    NonSquare(String),
    #[error("leg index out of range: {0}")]
    LegOutOfRange(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("degree {0:?} lies outside the truncation window")]
    OutOfWindow(Vec<i64>),
    #[error("window {window} is too small: {reason}")]
    WindowTooSmall { window: i64, reason: String },
    #[error("empty safe region: {0}")]
    EmptyRegion(String),
    #[error("variable collision: {0}")]
    VariableCollision(String),
    #[error("elements from different algebra families cannot be combined")]
    MixedFamilies,
    #[error("not a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error("coefficient k={k} is outside the exact range 0..={max}")]
    InexactCoefficient { k: i64, max: i64 },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
