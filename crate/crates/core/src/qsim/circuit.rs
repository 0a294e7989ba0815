use super::state::Statevector;
use super::{QsimError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Where a rotation gate gets its angle from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AngleSource {
    /// `scale * slots[index]`, where the slot vector is `inputs ++ theta`.
    Slot { index: usize, scale: f64 },
    Fixed(f64),
}

impl AngleSource {
    pub fn slot(index: usize) -> Self {
        AngleSource::Slot { index, scale: 1.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    Rotation {
        axis: Axis,
        target: usize,
        angle: AngleSource,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    /// Symmetric in its two qubits; `control` is only a naming convention.
    Cz {
        control: usize,
        target: usize,
    },
}

impl Gate {
    pub fn rx(target: usize, angle: AngleSource) -> Self {
        Gate::Rotation {
            axis: Axis::X,
            target,
            angle,
        }
    }

    pub fn ry(target: usize, angle: AngleSource) -> Self {
        Gate::Rotation {
            axis: Axis::Y,
            target,
            angle,
        }
    }

    pub fn rz(target: usize, angle: AngleSource) -> Self {
        Gate::Rotation {
            axis: Axis::Z,
            target,
            angle,
        }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn cz(control: usize, target: usize) -> Self {
        Gate::Cz { control, target }
    }

    pub fn is_parameterized(&self) -> bool {
        matches!(
            self,
            Gate::Rotation {
                angle: AngleSource::Slot { .. },
                ..
            }
        )
    }
}

/// Z-basis measurement of a list of distinct qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Observable {
    qubits: Vec<usize>,
}

impl Observable {
    /// Panics on repeated qubits; use [`Observable::try_new`] for untrusted input.
    pub fn new(qubits: Vec<usize>) -> Self {
        Self::try_new(qubits).expect("observable qubits must be unique")
    }

    pub fn try_new(qubits: Vec<usize>) -> Result<Self> {
        for (i, q) in qubits.iter().enumerate() {
            if qubits[..i].contains(q) {
                return Err(QsimError::DuplicateObservable(*q));
            }
        }
        Ok(Self { qubits })
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    pub fn len(&self) -> usize {
        self.qubits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qubits.is_empty()
    }
}

/// Ordered gate list over a slot vector laid out as
/// `[inputs (n_inputs) | theta (n_params)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamCircuit {
    n_qubits: usize,
    n_inputs: usize,
    n_params: usize,
    gates: Vec<Gate>,
}

impl ParamCircuit {
    pub fn new(n_qubits: usize, n_inputs: usize, n_params: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > super::MAX_QUBITS {
            return Err(QsimError::QubitCount(n_qubits));
        }
        Ok(Self {
            n_qubits,
            n_inputs,
            n_params,
            gates: Vec::new(),
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_params(&self) -> usize {
        self.n_params
    }

    pub fn n_slots(&self) -> usize {
        self.n_inputs + self.n_params
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Grows the trainable-parameter block by `extra` slots and returns the
    /// absolute slot index of the first new one.
    pub fn add_params(&mut self, extra: usize) -> usize {
        let first = self.n_slots();
        self.n_params += extra;
        first
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let check = |q: usize| {
            if q < self.n_qubits {
                Ok(())
            } else {
                Err(QsimError::QubitOutOfRange {
                    index: q,
                    n_qubits: self.n_qubits,
                })
            }
        };
        match gate {
            Gate::Rotation { target, angle, .. } => {
                check(target)?;
                match angle {
                    AngleSource::Slot { index, scale } => {
                        if index >= self.n_slots() {
                            return Err(QsimError::SlotOutOfRange {
                                slot: index,
                                n_slots: self.n_slots(),
                            });
                        }
                        if !scale.is_finite() {
                            return Err(QsimError::NonFiniteAngle(scale));
                        }
                    }
                    AngleSource::Fixed(a) if !a.is_finite() => {
                        return Err(QsimError::NonFiniteAngle(a))
                    }
                    AngleSource::Fixed(_) => {}
                }
            }
            Gate::Cnot { control, target } | Gate::Cz { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(QsimError::SameQubit(control));
                }
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Concatenates `inputs` and `theta` into the slot vector after checking
    /// their lengths.
    pub fn slots(&self, inputs: &[f64], theta: &[f64]) -> Result<Vec<f64>> {
        if inputs.len() != self.n_inputs {
            return Err(QsimError::DimensionMismatch {
                what: "inputs",
                expected: self.n_inputs,
                got: inputs.len(),
            });
        }
        if theta.len() != self.n_params {
            return Err(QsimError::DimensionMismatch {
                what: "theta",
                expected: self.n_params,
                got: theta.len(),
            });
        }
        let mut slots = Vec::with_capacity(self.n_slots());
        slots.extend_from_slice(inputs);
        slots.extend_from_slice(theta);
        Ok(slots)
    }

    /// Angle of gate `i` under `slots`; `None` for entangling gates.
    pub(crate) fn gate_angle(&self, gate: &Gate, slots: &[f64]) -> Option<f64> {
        match gate {
            Gate::Rotation { angle, .. } => Some(match *angle {
                AngleSource::Slot { index, scale } => scale * slots[index],
                AngleSource::Fixed(a) => a,
            }),
            _ => None,
        }
    }

    /// Runs the circuit on `|0…0⟩`.
    pub fn run(&self, inputs: &[f64], theta: &[f64]) -> Result<Statevector> {
        let slots = self.slots(inputs, theta)?;
        Ok(self.run_slots(&slots, None))
    }

    /// Runs with gate `shift.0` rotated by an extra `shift.1` radians.
    /// `slots` must already be validated.
    pub(crate) fn run_slots(&self, slots: &[f64], shift: Option<(usize, f64)>) -> Statevector {
        let mut state = Statevector::zero(self.n_qubits).expect("validated qubit count");
        for (i, gate) in self.gates.iter().enumerate() {
            self.apply_resolved(&mut state, gate, slots, shift.filter(|s| s.0 == i).map(|s| s.1));
        }
        state
    }

    pub(crate) fn apply_resolved(
        &self,
        state: &mut Statevector,
        gate: &Gate,
        slots: &[f64],
        extra: Option<f64>,
    ) {
        match *gate {
            Gate::Rotation { axis, target, .. } => {
                let a = self.gate_angle(gate, slots).unwrap() + extra.unwrap_or(0.0);
                state.rotate(axis, target, a);
            }
            Gate::Cnot { control, target } => state.cnot(control, target),
            Gate::Cz { control, target } => state.cz(control, target),
        }
    }

    pub(crate) fn apply_inverse(&self, state: &mut Statevector, gate: &Gate, slots: &[f64]) {
        match *gate {
            Gate::Rotation { axis, target, .. } => {
                let a = self.gate_angle(gate, slots).unwrap();
                state.rotate(axis, target, -a);
            }
            Gate::Cnot { control, target } => state.cnot(control, target),
            Gate::Cz { control, target } => state.cz(control, target),
        }
    }
}
