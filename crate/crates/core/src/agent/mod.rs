//! DQN agent: Q-function models, ε-greedy policy, TD targets, training
//! steps and the full training loop.

mod adam;
mod network;
mod replay;
mod schedule;
mod train;

pub use adam::Adam;
pub use network::{ClassicalNet, N_PARAMS as CLASSICAL_PARAMS};
pub use replay::{ReplayBuffer, Transition, STATE_DIM};
pub use schedule::{LinearSchedule, Schedules};
pub use train::{run_training, run_training_with, EarlyStop, RunOptions, RunOutcome};

use rand::Rng;
use thiserror::Error;

use crate::env::EnvError;
use crate::vqc::{EncodingSpec, QValues, VqcConfig, VqcError, VqcModel};
use crate::xval::{ConfigError, HyperParams, ModelKind};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AgentError {
    #[error(transparent)]
    Vqc(#[from] VqcError),
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("replay buffer holds {have} transitions, batch needs {need}")]
    InsufficientBuffer { have: usize, need: usize },
    #[error("parameter vector has length {got}, expected {expected}")]
    ParamLength { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, AgentError>;

/// A trainable Q-function: either a variational circuit or the classical
/// baseline network.
#[derive(Clone, Debug, PartialEq)]
pub enum QFunction {
    Vqc(VqcModel),
    Classical(ClassicalNet),
}

impl QFunction {
    /// Builds the model described by `hp`. Classical weights are drawn from
    /// `rng`; VQC initialisation is deterministic.
    pub fn from_hyperparams<R: Rng + ?Sized>(hp: &HyperParams, rng: &mut R) -> Result<Self> {
        Ok(match hp.model {
            ModelKind::Classical => QFunction::Classical(ClassicalNet::new(rng)),
            ModelKind::Vqc => QFunction::Vqc(VqcModel::new(VqcConfig {
                architecture: hp.architecture,
                n_layers: hp.layers,
                encoding: EncodingSpec::cartpole(hp.encoding),
                extraction: hp.extraction,
                reuploading: hp.reuploading,
                reparameterized: hp.reparam,
                n_actions: crate::env::N_ACTIONS,
            })?),
        })
    }

    pub fn n_params(&self) -> usize {
        match self {
            QFunction::Vqc(m) => m.n_trainable(),
            QFunction::Classical(_) => CLASSICAL_PARAMS,
        }
    }

    pub fn params(&self) -> Vec<f64> {
        match self {
            QFunction::Vqc(m) => m.params(),
            QFunction::Classical(n) => n.params().to_vec(),
        }
    }

    pub fn set_params(&mut self, params: &[f64]) -> Result<()> {
        match self {
            QFunction::Vqc(m) => m.set_params(params)?,
            QFunction::Classical(n) => {
                if params.len() != CLASSICAL_PARAMS {
                    return Err(AgentError::ParamLength {
                        expected: CLASSICAL_PARAMS,
                        got: params.len(),
                    });
                }
                n.params_mut().copy_from_slice(params);
            }
        }
        Ok(())
    }

    pub fn q_values(&self, state: &[f64]) -> Result<QValues> {
        match self {
            QFunction::Vqc(m) => Ok(m.q_values(state)?),
            QFunction::Classical(n) => Ok(n.forward(state)),
        }
    }

    /// Sampled Q-values for VQC models; classical models ignore `shots`.
    pub fn q_values_with_shots<R: Rng + ?Sized>(
        &self,
        state: &[f64],
        shots: usize,
        rng: &mut R,
    ) -> Result<QValues> {
        match self {
            QFunction::Vqc(m) => Ok(m.q_values_with_shots(state, shots, rng)?),
            QFunction::Classical(n) => Ok(n.forward(state)),
        }
    }

    /// Q-values and the `n_actions × n_params` Jacobian.
    pub fn q_gradient(&self, state: &[f64]) -> Result<(QValues, Vec<Vec<f64>>)> {
        match self {
            QFunction::Vqc(m) => Ok(m.q_gradient(state)?),
            QFunction::Classical(n) => Ok(n.jacobian(state)),
        }
    }
}

/// ε-greedy action: one uniform draw decides exploration, a second picks the
/// random action. Greedy ties go to the lowest index.
pub fn select_action<R: Rng + ?Sized>(q: &QValues, epsilon: f64, rng: &mut R) -> usize {
    if epsilon > 0.0 && rng.gen::<f64>() < epsilon {
        rng.gen_range(0..q.len())
    } else {
        q.argmax()
    }
}

/// `y = r + γ·max_a' Q_target(s', a')`, or `y = r` when the transition
/// terminated (or was truncated and `bootstrap_on_truncation` is off).
pub fn td_targets(
    batch: &[Transition],
    target: &QFunction,
    gamma: f64,
    bootstrap_on_truncation: bool,
) -> Result<Vec<f64>> {
    batch
        .iter()
        .map(|t| {
            let stop = t.terminal || (t.truncated && !bootstrap_on_truncation);
            if stop {
                Ok(t.reward)
            } else {
                Ok(t.reward + gamma * target.q_values(&t.next_state)?.max())
            }
        })
        .collect()
}

/// Mean squared TD error of `q` on `batch` against fixed `targets`, and its
/// gradient with respect to the flat parameter vector.
pub fn loss_and_gradient(
    q: &QFunction,
    batch: &[Transition],
    targets: &[f64],
) -> Result<(f64, Vec<f64>)> {
    let n = batch.len() as f64;
    let mut loss = 0.0;
    let mut grad = vec![0.0; q.n_params()];
    for (t, &y) in batch.iter().zip(targets) {
        let (qv, jac) = q.q_gradient(&t.state)?;
        let err = qv.0[t.action] - y;
        loss += err * err;
        for (g, d) in grad.iter_mut().zip(&jac[t.action]) {
            *g += 2.0 * err * d / n;
        }
    }
    Ok((loss / n, grad))
}

/// One gradient step on a sampled batch. Returns the loss before the update.
#[allow(clippy::too_many_arguments)]
pub fn train_step<R: Rng + ?Sized>(
    q: &mut QFunction,
    target: &QFunction,
    buffer: &ReplayBuffer,
    adam: &mut Adam,
    eta: f64,
    gamma: f64,
    batch_size: usize,
    bootstrap_on_truncation: bool,
    rng: &mut R,
) -> Result<f64> {
    let batch = buffer
        .sample(batch_size, rng)
        .ok_or(AgentError::InsufficientBuffer {
            have: buffer.len(),
            need: batch_size,
        })?;
    let targets = td_targets(&batch, target, gamma, bootstrap_on_truncation)?;
    let (loss, grad) = loss_and_gradient(q, &batch, &targets)?;
    let mut params = q.params();
    adam.step(&mut params, &grad, eta);
    q.set_params(&params)?;
    Ok(loss)
}

/// Copies the policy parameters into the target network.
pub fn update_target(q: &QFunction, target: &mut QFunction) {
    target.clone_from(q);
}
