//! Variational-circuit Q-function models.

mod circuit;
mod encoding;
mod model;

pub use circuit::{build_circuit, pool, reparameterize, reparameterize_derivative, Architecture};
pub use encoding::{
    encode, EncodingRule, EncodingScheme, EncodingSpec, CART_POSITION_RANGE, POLE_ANGLE_RANGE,
};
pub use model::{ExtractionMode, QValues, VqcConfig, VqcModel};

use thiserror::Error;

use crate::qsim::QsimError;

/// Number of pooling parameters in the 4-qubit pooling block.
pub const POOLING_PARAMS: usize = 4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VqcError {
    #[error(transparent)]
    Qsim(#[from] QsimError),
    #[error("encoding needs at least one rule")]
    EmptyEncoding,
    #[error("scaled rule {index} needs finite lo < hi (got {lo}, {hi})")]
    InvalidScaledDomain { index: usize, lo: f64, hi: f64 },
    #[error("state component {index} is not finite ({value})")]
    NonFiniteInput { index: usize, value: f64 },
    #[error("state has {got} components, encoding expects {expected}")]
    StateDimension { expected: usize, got: usize },
    #[error("pooling needs exactly 4 qubits and 2 actions (got {qubits} qubits, {actions} actions)")]
    PoolingShape { qubits: usize, actions: usize },
    #[error("{actions} actions need at least as many qubits (have {qubits})")]
    TooManyActions { actions: usize, qubits: usize },
    #[error("layer count must be positive")]
    ZeroLayers,
    #[error("parameter vector has length {got}, expected {expected}")]
    ParamLength { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, VqcError>;
