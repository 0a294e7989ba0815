//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Three operations are exposed: train an agent, sample its greedy action
//! margin over the pole's angle and angular velocity, and roll out one
//! greedy episode for animation.

use wasm_bindgen::prelude::*;

use vqdqn::agent::{run_training_with, QFunction, RunOptions};
use vqdqn::env::{CartPole, CartPoleState, THETA_THRESHOLD};
use vqdqn::xval::{HyperParams, ModelKind};

/// Angular-velocity half-range of the heatmap, rad/s.
pub const OMEGA_RANGE: f64 = 2.0;

#[derive(Clone, Debug, PartialEq)]
pub struct DemoSettings {
    pub model: String,
    pub encoding: String,
    pub eta_start: f64,
    pub epsilon_duration: u64,
    pub gamma: f64,
    pub seed: u64,
}

impl DemoSettings {
    fn hyperparams(&self) -> Result<HyperParams, String> {
        let mut hp = HyperParams::with_grid(self.eta_start, 2000, self.epsilon_duration, self.gamma);
        hp.model = self.model.parse::<ModelKind>()?;
        hp.encoding = self.encoding.parse()?;
        Ok(hp)
    }
}

/// A trained Q-function plus the validation curve that produced it.
#[wasm_bindgen]
pub struct Agent {
    q: QFunction,
    validation: Vec<f64>,
    solved_at: Option<u64>,
}

impl Agent {
    pub fn train(settings: &DemoSettings) -> Result<Agent, String> {
        let hp = settings.hyperparams()?;
        let out = run_training_with(&hp, settings.seed, RunOptions::default()).map_err(|e| e.to_string())?;
        Ok(Agent {
            validation: out.log.validation_returns().iter().map(|p| p.1).collect(),
            solved_at: out.solved_at,
            q: out.model,
        })
    }

    pub fn margin_grid(&self, n: usize) -> Result<Vec<f64>, String> {
        let mut out = Vec::with_capacity(n * n);
        for row in 0..n {
            // top row = fastest positive angular velocity
            let omega = OMEGA_RANGE * (1.0 - 2.0 * row as f64 / (n - 1).max(1) as f64);
            for col in 0..n {
                let theta = THETA_THRESHOLD * (2.0 * col as f64 / (n - 1).max(1) as f64 - 1.0);
                let q = self
                    .q
                    .q_values(&[0.0, 0.0, theta, omega])
                    .map_err(|e| e.to_string())?;
                out.push(q.0[1] - q.0[0]);
            }
        }
        Ok(out)
    }

    pub fn greedy_rollout(&self, theta0: f64) -> Result<Vec<f64>, String> {
        let mut env = CartPole::new();
        env.reset_to(CartPoleState {
            x: 0.0,
            x_dot: 0.0,
            theta: theta0,
            theta_dot: 0.0,
        });
        let mut frames = env.state().to_array().to_vec();
        while !env.is_done() {
            let a = self
                .q
                .q_values(&env.state().to_array())
                .map_err(|e| e.to_string())?
                .argmax();
            let r = env.step(a).map_err(|e| e.to_string())?;
            frames.extend_from_slice(&r.next_state.to_array());
        }
        Ok(frames)
    }
}

#[wasm_bindgen]
impl Agent {
    /// Runs a full training run (up to 50 000 steps, stopping early once
    /// solved). `model` is `classical` or `vqc`; `encoding` is `C`, `SC` or
    /// `SD` and only matters for `vqc`.
    #[wasm_bindgen(constructor)]
    pub fn new(
        model: &str,
        encoding: &str,
        eta_start: f64,
        epsilon_duration: u32,
        gamma: f64,
        seed: u32,
    ) -> Result<Agent, JsError> {
        let settings = DemoSettings {
            model: model.to_string(),
            encoding: encoding.to_string(),
            eta_start,
            epsilon_duration: epsilon_duration.into(),
            gamma,
            seed: seed.into(),
        };
        Agent::train(&settings).map_err(|e| JsError::new(&e))
    }

    /// Greedy validation return every 100 sampling steps.
    #[wasm_bindgen(js_name = validationCurve)]
    pub fn validation_curve(&self) -> Vec<f64> {
        self.validation.clone()
    }

    /// Sampling step at which training stopped as solved, or -1.
    #[wasm_bindgen(js_name = solvedAt)]
    pub fn solved_at(&self) -> f64 {
        self.solved_at.map_or(-1.0, |s| s as f64)
    }

    /// `Q(right) − Q(left)` on an `n × n` grid, row-major. Columns sweep the
    /// pole angle over the failure range, rows sweep angular velocity from
    /// `+OMEGA_RANGE` down to `−OMEGA_RANGE`; the cart sits at rest.
    #[wasm_bindgen(js_name = actionMargin)]
    pub fn action_margin(&self, n: usize) -> Result<Vec<f64>, JsError> {
        self.margin_grid(n).map_err(|e| JsError::new(&e))
    }

    /// Greedy episode from rest with the pole tilted by `theta0`; returns
    /// the flattened states `[x, ẋ, θ, θ̇]` including the initial one.
    pub fn rollout(&self, theta0: f64) -> Result<Vec<f64>, JsError> {
        self.greedy_rollout(theta0).map_err(|e| JsError::new(&e))
    }
}
