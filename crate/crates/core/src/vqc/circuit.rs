use std::f64::consts::TAU;

use super::model::{ExtractionMode, VqcConfig};
use super::{Result, VqcError, POOLING_PARAMS};
use crate::qsim::{AngleSource, Gate, Observable, ParamCircuit};

/// Layer structure of the variational block.
///
/// - `A`: CNOT chain `0→1→…→n-1`, then `RY(θ) RZ(θ)` on every qubit.
/// - `B`: `RY(θ) RZ(θ)` on every qubit, then a CZ ring `(0,1) … (n-1,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Architecture {
    A,
    B,
}

impl Architecture {
    pub fn as_str(&self) -> &'static str {
        match self {
            Architecture::A => "A",
            Architecture::B => "B",
        }
    }
}

impl std::str::FromStr for Architecture {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" => Ok(Architecture::A),
            "B" => Ok(Architecture::B),
            _ => Err(format!("unknown architecture {s:?} (expected A or B)")),
        }
    }
}

fn push_encoding(circuit: &mut ParamCircuit, config: &VqcConfig) -> Result<()> {
    for (q, rule) in config.encoding.rules().iter().enumerate() {
        circuit.push(crate::qsim::Gate::Rotation {
            axis: rule.axis(),
            target: q,
            angle: AngleSource::slot(q),
        })?;
    }
    Ok(())
}

fn push_rotations(circuit: &mut ParamCircuit, n: usize, first_slot: usize) -> Result<()> {
    for q in 0..n {
        circuit.push(Gate::ry(q, AngleSource::slot(first_slot + 2 * q)))?;
        circuit.push(Gate::rz(q, AngleSource::slot(first_slot + 2 * q + 1)))?;
    }
    Ok(())
}

fn ring_pairs(n: usize) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => (0..n).map(|q| (q, (q + 1) % n)).collect(),
    }
}

/// Builds the full circuit for `config` together with the observable whose
/// expectations become Q-values. Slot layout is
/// `[encoding angles | 2·n·L layer angles | pooling angles (GSP only)]`.
pub fn build_circuit(config: &VqcConfig) -> Result<(ParamCircuit, Observable)> {
    let n = config.encoding.len();
    if config.n_layers == 0 {
        return Err(VqcError::ZeroLayers);
    }
    if config.n_actions > n {
        return Err(VqcError::TooManyActions {
            actions: config.n_actions,
            qubits: n,
        });
    }
    let per_layer = 2 * n;
    let mut circuit = ParamCircuit::new(n, n, per_layer * config.n_layers)?;

    if !config.reuploading {
        push_encoding(&mut circuit, config)?;
    }
    for layer in 0..config.n_layers {
        if config.reuploading {
            push_encoding(&mut circuit, config)?;
        }
        let first = n + layer * per_layer;
        match config.architecture {
            Architecture::A => {
                for q in 0..n.saturating_sub(1) {
                    circuit.push(Gate::cnot(q, q + 1))?;
                }
                push_rotations(&mut circuit, n, first)?;
            }
            Architecture::B => {
                push_rotations(&mut circuit, n, first)?;
                for (a, b) in ring_pairs(n) {
                    circuit.push(Gate::cz(a, b))?;
                }
            }
        }
    }

    if config.extraction == ExtractionMode::GlobalScalingWithPooling {
        if config.n_actions != 2 {
            return Err(VqcError::PoolingShape {
                qubits: n,
                actions: config.n_actions,
            });
        }
        pool(&circuit)
    } else {
        let obs = Observable::new((0..config.n_actions).collect());
        Ok((circuit, obs))
    }
}

/// Appends the pooling block to a 4-qubit circuit: for each
/// `(source, sink)` in `(0, 2), (1, 3)`,
/// `RY(φ₁) source; RY(φ₂) sink; CNOT(source→sink); RY(−φ₂) sink`.
/// Adds [`POOLING_PARAMS`] trainable slots; only the sinks are observed.
pub fn pool(circuit: &ParamCircuit) -> Result<(ParamCircuit, Observable)> {
    if circuit.n_qubits() != 4 {
        return Err(VqcError::PoolingShape {
            qubits: circuit.n_qubits(),
            actions: 2,
        });
    }
    let mut pooled = circuit.clone();
    let first = pooled.add_params(POOLING_PARAMS);
    for (pair, (source, sink)) in [(0, 2), (1, 3)].into_iter().enumerate() {
        let phi1 = first + 2 * pair;
        let phi2 = phi1 + 1;
        pooled.push(Gate::ry(source, AngleSource::slot(phi1)))?;
        pooled.push(Gate::ry(sink, AngleSource::slot(phi2)))?;
        pooled.push(Gate::cnot(source, sink))?;
        pooled.push(Gate::ry(
            sink,
            AngleSource::Slot {
                index: phi2,
                scale: -1.0,
            },
        ))?;
    }
    Ok((pooled, Observable::new(vec![2, 3])))
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// `2π·σ(θ)` elementwise.
pub fn reparameterize(raw: &[f64]) -> Vec<f64> {
    raw.iter().map(|&x| TAU * sigmoid(x)).collect()
}

/// `d/dθ 2π·σ(θ) = 2π·σ(θ)(1−σ(θ))` elementwise.
pub fn reparameterize_derivative(raw: &[f64]) -> Vec<f64> {
    raw.iter()
        .map(|&x| {
            let s = sigmoid(x);
            TAU * s * (1.0 - s)
        })
        .collect()
}
