//! Dense statevector simulation of small gate-based circuits.
//!
//! Conventions used throughout:
//! - rotations are `R_A(a) = exp(-i a A / 2)` for `A` in {X, Y, Z}, so the
//!   parameter-shift rule uses shifts of `±π/2`;
//! - qubit 0 is the least-significant bit of the basis index.

mod circuit;
mod grad;
mod state;

pub use circuit::{AngleSource, Axis, Gate, Observable, ParamCircuit};
pub use grad::{adjoint_slot_grad, analytic_grad, parameter_shift_grad, shift_slot_grad};
pub use state::{expectation_z, sample_expectation_z, Statevector};

use thiserror::Error;

/// Largest register the dense simulator accepts.
pub const MAX_QUBITS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QsimError {
    #[error("qubit count {0} outside 1..={MAX_QUBITS}")]
    QubitCount(usize),
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },
    #[error("control and target must differ (both {0})")]
    SameQubit(usize),
    #[error("rotation gate on qubit {0} needs an angle")]
    MissingAngle(usize),
    #[error("gate does not take an angle")]
    UnexpectedAngle,
    #[error("parameter slot {slot} out of range ({n_slots} slots)")]
    SlotOutOfRange { slot: usize, n_slots: usize },
    #[error("{what}: expected length {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("observable qubits must be unique (qubit {0} repeated)")]
    DuplicateObservable(usize),
    #[error("shot count must be positive")]
    ZeroShots,
    #[error("non-finite angle {0}")]
    NonFiniteAngle(f64),
}

pub type Result<T> = std::result::Result<T, QsimError>;
