use rand::Rng;

use crate::vqc::QValues;

pub const INPUTS: usize = 4;
pub const HIDDEN: usize = 8;
pub const OUTPUTS: usize = 2;
/// `4·8 + 8 + 8·2 + 2`.
pub const N_PARAMS: usize = INPUTS * HIDDEN + HIDDEN + HIDDEN * OUTPUTS + OUTPUTS;

fn elu(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        x.exp_m1()
    }
}

fn elu_derivative(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else {
        x.exp()
    }
}

/// Fully connected `4 → 8 (ELU) → 2 (linear)` network.
///
/// Flat layout: `W1 (8×4, row-major) | b1 (8) | W2 (2×8, row-major) | b2 (2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalNet {
    params: Vec<f64>,
}

const W1: usize = 0;
const B1: usize = W1 + INPUTS * HIDDEN;
const W2: usize = B1 + HIDDEN;
const B2: usize = W2 + HIDDEN * OUTPUTS;

impl ClassicalNet {
    /// Uniform `±1/√fan_in` initialisation for weights and biases.
    pub fn new<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut params = vec![0.0; N_PARAMS];
        let b_in = 1.0 / (INPUTS as f64).sqrt();
        let b_hid = 1.0 / (HIDDEN as f64).sqrt();
        for p in &mut params[W1..W2] {
            *p = rng.gen_range(-b_in..b_in);
        }
        for p in &mut params[W2..] {
            *p = rng.gen_range(-b_hid..b_hid);
        }
        Self { params }
    }

    pub fn from_params(params: Vec<f64>) -> Option<Self> {
        (params.len() == N_PARAMS).then_some(Self { params })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn params_mut(&mut self) -> &mut [f64] {
        &mut self.params
    }

    fn hidden_pre(&self, x: &[f64]) -> [f64; HIDDEN] {
        let mut h = [0.0; HIDDEN];
        for (j, hj) in h.iter_mut().enumerate() {
            let row = &self.params[W1 + j * INPUTS..W1 + (j + 1) * INPUTS];
            *hj = self.params[B1 + j] + row.iter().zip(x).map(|(w, xi)| w * xi).sum::<f64>();
        }
        h
    }

    pub fn forward(&self, x: &[f64]) -> QValues {
        let pre = self.hidden_pre(x);
        let act = pre.map(elu);
        QValues(
            (0..OUTPUTS)
                .map(|k| {
                    let row = &self.params[W2 + k * HIDDEN..W2 + (k + 1) * HIDDEN];
                    self.params[B2 + k] + row.iter().zip(&act).map(|(w, a)| w * a).sum::<f64>()
                })
                .collect(),
        )
    }

    /// Outputs and the `OUTPUTS × N_PARAMS` Jacobian.
    pub fn jacobian(&self, x: &[f64]) -> (QValues, Vec<Vec<f64>>) {
        let pre = self.hidden_pre(x);
        let act = pre.map(elu);
        let dact = pre.map(elu_derivative);
        let q = self.forward(x);
        let jac = (0..OUTPUTS)
            .map(|k| {
                let mut row = vec![0.0; N_PARAMS];
                for j in 0..HIDDEN {
                    let w2 = self.params[W2 + k * HIDDEN + j];
                    row[W2 + k * HIDDEN + j] = act[j];
                    let back = w2 * dact[j];
                    row[B1 + j] = back;
                    for i in 0..INPUTS {
                        row[W1 + j * INPUTS + i] = back * x[i];
                    }
                }
                row[B2 + k] = 1.0;
                row
            })
            .collect();
        (q, jac)
    }
}
