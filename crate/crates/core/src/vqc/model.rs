use rand::Rng;

use super::circuit::{build_circuit, reparameterize, reparameterize_derivative, Architecture};
use super::encoding::{encode, EncodingScheme, EncodingSpec};
use super::{Result, VqcError, POOLING_PARAMS};
use crate::qsim::{adjoint_slot_grad, expectation_z, sample_expectation_z, Observable, ParamCircuit};

/// How measured `⟨Z⟩` values become Q-values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtractionMode {
    /// `q_i = w_i·⟨Z_i⟩`, one weight per action.
    LocalScaling,
    /// `q_i = w·⟨Z_i⟩`, one shared weight.
    GlobalScaling,
    /// Pooling block into the sink qubits, then global scaling.
    GlobalScalingWithPooling,
}

impl ExtractionMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExtractionMode::LocalScaling => "LS",
            ExtractionMode::GlobalScaling => "GS",
            ExtractionMode::GlobalScalingWithPooling => "GSP",
        }
    }
}

impl std::str::FromStr for ExtractionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "LS" => Ok(ExtractionMode::LocalScaling),
            "GS" => Ok(ExtractionMode::GlobalScaling),
            "GSP" => Ok(ExtractionMode::GlobalScalingWithPooling),
            _ => Err(format!("unknown extraction {s:?} (expected LS, GS or GSP)")),
        }
    }
}

/// Action values for one state, indexed by action.
#[derive(Clone, Debug, PartialEq)]
pub struct QValues(pub Vec<f64>);

impl QValues {
    /// Greedy action; ties go to the lowest index.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, &v) in self.0.iter().enumerate().skip(1) {
            if v > self.0[best] {
                best = i;
            }
        }
        best
    }

    pub fn max(&self) -> f64 {
        self.0[self.argmax()]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VqcConfig {
    pub architecture: Architecture,
    pub n_layers: usize,
    pub encoding: EncodingSpec,
    pub extraction: ExtractionMode,
    pub reuploading: bool,
    pub reparameterized: bool,
    pub n_actions: usize,
}

impl VqcConfig {
    /// A 4-qubit, 2-action CartPole model.
    pub fn cartpole(
        architecture: Architecture,
        scheme: EncodingScheme,
        extraction: ExtractionMode,
        n_layers: usize,
    ) -> Self {
        Self {
            architecture,
            n_layers,
            encoding: EncodingSpec::cartpole(scheme),
            extraction,
            reuploading: false,
            reparameterized: false,
            n_actions: 2,
        }
    }
}

/// A VQC Q-function with its trainable parameters.
///
/// The flat trainable vector is laid out `[theta | classical weights | pooling]`.
/// With `reparameterized`, the circuit sees `2π·σ(theta)` instead of `theta`;
/// pooling angles are always used as-is.
#[derive(Clone, Debug, PartialEq)]
pub struct VqcModel {
    config: VqcConfig,
    circuit: ParamCircuit,
    observable: Observable,
    theta: Vec<f64>,
    weights: Vec<f64>,
    pooling: Vec<f64>,
}

impl VqcModel {
    /// Zero rotation angles, unit classical weights, zero pooling angles.
    pub fn new(config: VqcConfig) -> Result<Self> {
        let (circuit, observable) = build_circuit(&config)?;
        let n_theta = 2 * config.encoding.len() * config.n_layers;
        let n_weights = match config.extraction {
            ExtractionMode::LocalScaling => config.n_actions,
            _ => 1,
        };
        let n_pool = match config.extraction {
            ExtractionMode::GlobalScalingWithPooling => POOLING_PARAMS,
            _ => 0,
        };
        Ok(Self {
            config,
            circuit,
            observable,
            theta: vec![0.0; n_theta],
            weights: vec![1.0; n_weights],
            pooling: vec![0.0; n_pool],
        })
    }

    pub fn config(&self) -> &VqcConfig {
        &self.config
    }

    pub fn circuit(&self) -> &ParamCircuit {
        &self.circuit
    }

    pub fn observable(&self) -> &Observable {
        &self.observable
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn pooling(&self) -> &[f64] {
        &self.pooling
    }

    pub fn n_actions(&self) -> usize {
        self.config.n_actions
    }

    pub fn n_trainable(&self) -> usize {
        self.theta.len() + self.weights.len() + self.pooling.len()
    }

    pub fn params(&self) -> Vec<f64> {
        let mut p = Vec::with_capacity(self.n_trainable());
        p.extend_from_slice(&self.theta);
        p.extend_from_slice(&self.weights);
        p.extend_from_slice(&self.pooling);
        p
    }

    pub fn set_params(&mut self, params: &[f64]) -> Result<()> {
        if params.len() != self.n_trainable() {
            return Err(VqcError::ParamLength {
                expected: self.n_trainable(),
                got: params.len(),
            });
        }
        let (t, rest) = params.split_at(self.theta.len());
        let (w, p) = rest.split_at(self.weights.len());
        self.theta.copy_from_slice(t);
        self.weights.copy_from_slice(w);
        self.pooling.copy_from_slice(p);
        Ok(())
    }

    /// Angles fed to the circuit's trainable slots.
    pub fn circuit_params(&self) -> Vec<f64> {
        let mut p = if self.config.reparameterized {
            reparameterize(&self.theta)
        } else {
            self.theta.clone()
        };
        p.extend_from_slice(&self.pooling);
        p
    }

    fn weight(&self, action: usize) -> f64 {
        match self.config.extraction {
            ExtractionMode::LocalScaling => self.weights[action],
            _ => self.weights[0],
        }
    }

    fn extract(&self, z: &[f64]) -> QValues {
        QValues(z.iter().enumerate().map(|(i, &v)| self.weight(i) * v).collect())
    }

    /// Exact `⟨Z⟩` of the observed qubits for `state`.
    pub fn expectations(&self, state: &[f64]) -> Result<Vec<f64>> {
        let inputs = encode(state, &self.config.encoding)?;
        let psi = self.circuit.run(&inputs, &self.circuit_params())?;
        Ok(expectation_z(&psi, &self.observable)?)
    }

    pub fn q_values(&self, state: &[f64]) -> Result<QValues> {
        Ok(self.extract(&self.expectations(state)?))
    }

    /// Q-values from `shots` measurements; `shots == 0` means analytic.
    pub fn q_values_with_shots<R: Rng + ?Sized>(
        &self,
        state: &[f64],
        shots: usize,
        rng: &mut R,
    ) -> Result<QValues> {
        if shots == 0 {
            return self.q_values(state);
        }
        let inputs = encode(state, &self.config.encoding)?;
        let psi = self.circuit.run(&inputs, &self.circuit_params())?;
        let z = sample_expectation_z(&psi, &self.observable, shots, rng)?;
        Ok(self.extract(&z))
    }

    /// Q-values and their Jacobian with respect to the flat trainable vector,
    /// shape `n_actions × n_trainable`.
    pub fn q_gradient(&self, state: &[f64]) -> Result<(QValues, Vec<Vec<f64>>)> {
        let inputs = encode(state, &self.config.encoding)?;
        let slots = self.circuit.slots(&inputs, &self.circuit_params())?;
        let (z, dz) = adjoint_slot_grad(&self.circuit, &slots, &self.observable)?;

        let n_in = self.circuit.n_inputs();
        let n_theta = self.theta.len();
        let n_w = self.weights.len();
        let chain = if self.config.reparameterized {
            reparameterize_derivative(&self.theta)
        } else {
            vec![1.0; n_theta]
        };

        let jac = dz
            .iter()
            .enumerate()
            .map(|(i, dzi)| {
                let w = self.weight(i);
                let mut row = vec![0.0; self.n_trainable()];
                for j in 0..n_theta {
                    row[j] = w * dzi[n_in + j] * chain[j];
                }
                match self.config.extraction {
                    ExtractionMode::LocalScaling => row[n_theta + i] = z[i],
                    _ => row[n_theta] = z[i],
                }
                for k in 0..self.pooling.len() {
                    row[n_theta + n_w + k] = w * dzi[n_in + n_theta + k];
                }
                row
            })
            .collect();
        Ok((self.extract(&z), jac))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argmax_breaks_ties_low() {
        assert_eq!(QValues(vec![1.0, 2.0]).argmax(), 1);
        assert_eq!(QValues(vec![3.0, 3.0]).argmax(), 0);
    }

    #[test]
    fn local_scaling_arithmetic() {
        let cfg = VqcConfig::cartpole(Architecture::B, EncodingScheme::SC, ExtractionMode::LocalScaling, 1);
        let mut m = VqcModel::new(cfg).unwrap();
        let mut p = m.params();
        let n = p.len();
        p[n - 2] = 30.0;
        p[n - 1] = 30.0;
        m.set_params(&p).unwrap();
        assert_eq!(m.extract(&[0.5, -0.2]), QValues(vec![15.0, -6.0]));
    }

    #[test]
    fn initial_parameters() {
        let cfg = VqcConfig::cartpole(Architecture::A, EncodingScheme::C, ExtractionMode::GlobalScalingWithPooling, 5);
        let m = VqcModel::new(cfg).unwrap();
        assert_eq!(m.theta().len(), 40);
        assert!(m.theta().iter().all(|&t| t == 0.0));
        assert_eq!(m.weights(), &[1.0]);
        assert_eq!(m.pooling(), &[0.0; 4]);
        assert_eq!(m.n_trainable(), 45);
        assert!(m.clone().set_params(&[0.0; 3]).is_err());
    }

    #[test]
    fn global_scaling_unit_weight_returns_expectations() {
        let cfg = VqcConfig::cartpole(Architecture::A, EncodingScheme::SC, ExtractionMode::GlobalScaling, 2);
        let mut m = VqcModel::new(cfg).unwrap();
        let mut p = m.params();
        for (i, v) in p.iter_mut().take(16).enumerate() {
            *v = 0.1 * i as f64;
        }
        m.set_params(&p).unwrap();
        let s = [0.1, -0.5, 0.02, 0.3];
        assert_eq!(m.q_values(&s).unwrap().0, m.expectations(&s).unwrap());
    }

    #[test]
    fn zero_weight_kills_theta_gradient() {
        let cfg = VqcConfig::cartpole(Architecture::B, EncodingScheme::SC, ExtractionMode::GlobalScaling, 2);
        let mut m = VqcModel::new(cfg).unwrap();
        let mut p: Vec<f64> = (0..m.n_trainable()).map(|i| (i as f64 * 0.37).sin()).collect();
        let n = p.len();
        p[n - 1] = 0.0;
        m.set_params(&p).unwrap();
        let (q, jac) = m.q_gradient(&[0.2, 0.1, -0.05, 0.4]).unwrap();
        let z = m.expectations(&[0.2, 0.1, -0.05, 0.4]).unwrap();
        for (i, row) in jac.iter().enumerate() {
            assert!(row[..n - 1].iter().all(|&g| g == 0.0));
            assert_eq!(row[n - 1], z[i]);
        }
        assert!(q.0.iter().all(|&v| v == 0.0));
    }
}
