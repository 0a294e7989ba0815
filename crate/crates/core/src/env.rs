//! CartPole-v0: a pole hinged on a cart, balanced by pushing the cart left
//! or right. Explicit-Euler dynamics with the usual benchmark constants,
//! 200-step episode cap, reward 1 per step.

use rand::Rng;
use thiserror::Error;

pub const GRAVITY: f64 = 9.8;
pub const CART_MASS: f64 = 1.0;
pub const POLE_MASS: f64 = 0.1;
pub const TOTAL_MASS: f64 = CART_MASS + POLE_MASS;
/// Half the pole length.
pub const POLE_HALF_LENGTH: f64 = 0.5;
pub const POLE_MASS_LENGTH: f64 = POLE_MASS * POLE_HALF_LENGTH;
pub const FORCE_MAG: f64 = 10.0;
pub const TAU: f64 = 0.02;
pub const X_THRESHOLD: f64 = 2.4;
pub const THETA_THRESHOLD: f64 = 12.0 * std::f64::consts::PI / 180.0;
pub const MAX_EPISODE_STEPS: u32 = 200;
pub const N_ACTIONS: usize = 2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EnvError {
    #[error("episode is over; call reset first")]
    EpisodeOver,
    #[error("invalid action {0} (expected 0 or 1)")]
    InvalidAction(usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartPoleState {
    pub x: f64,
    pub x_dot: f64,
    pub theta: f64,
    pub theta_dot: f64,
}

impl CartPoleState {
    pub fn to_array(&self) -> [f64; 4] {
        [self.x, self.x_dot, self.theta, self.theta_dot]
    }

    /// True when the pole has fallen or the cart left the track.
    pub fn is_failure(&self) -> bool {
        self.x.abs() > X_THRESHOLD || self.theta.abs() > THETA_THRESHOLD
    }

    /// Mirror image `(x, ẋ, θ, θ̇) → (−x, −ẋ, −θ, −θ̇)`.
    pub fn mirrored(&self) -> Self {
        Self {
            x: -self.x,
            x_dot: -self.x_dot,
            theta: -self.theta,
            theta_dot: -self.theta_dot,
        }
    }
}

/// One Euler step of the cart-pole equations of motion. Action 1 pushes
/// right (`+10 N`), action 0 pushes left.
pub fn dynamics(s: &CartPoleState, action: usize) -> CartPoleState {
    let force = if action == 1 { FORCE_MAG } else { -FORCE_MAG };
    let (sin, cos) = s.theta.sin_cos();
    let temp = (force + POLE_MASS_LENGTH * s.theta_dot * s.theta_dot * sin) / TOTAL_MASS;
    let theta_acc = (GRAVITY * sin - cos * temp)
        / (POLE_HALF_LENGTH * (4.0 / 3.0 - POLE_MASS * cos * cos / TOTAL_MASS));
    let x_acc = temp - POLE_MASS_LENGTH * theta_acc * cos / TOTAL_MASS;
    CartPoleState {
        x: s.x + TAU * s.x_dot,
        x_dot: s.x_dot + TAU * x_acc,
        theta: s.theta + TAU * s.theta_dot,
        theta_dot: s.theta_dot + TAU * theta_acc,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepResult {
    pub next_state: CartPoleState,
    pub reward: f64,
    /// Episode over, for either reason.
    pub done: bool,
    /// Ended by the time limit rather than by failure.
    pub truncated: bool,
}

impl StepResult {
    /// Genuine failure termination (no bootstrapping from `next_state`).
    pub fn terminated(&self) -> bool {
        self.done && !self.truncated
    }
}

#[derive(Clone, Debug)]
pub struct CartPole {
    state: CartPoleState,
    steps: u32,
    done: bool,
}

impl Default for CartPole {
    fn default() -> Self {
        Self::new()
    }
}

impl CartPole {
    /// Environment at rest; call [`CartPole::reset`] before stepping for a
    /// randomised start.
    pub fn new() -> Self {
        Self {
            state: CartPoleState {
                x: 0.0,
                x_dot: 0.0,
                theta: 0.0,
                theta_dot: 0.0,
            },
            steps: 0,
            done: false,
        }
    }

    /// Starts an episode at a state drawn uniformly from `[-0.05, 0.05]^4`.
    pub fn reset<R: Rng + ?Sized>(&mut self, rng: &mut R) -> CartPoleState {
        let mut draw = || rng.gen_range(-0.05..=0.05);
        self.state = CartPoleState {
            x: draw(),
            x_dot: draw(),
            theta: draw(),
            theta_dot: draw(),
        };
        self.steps = 0;
        self.done = false;
        self.state
    }

    /// Starts an episode at a given state.
    pub fn reset_to(&mut self, state: CartPoleState) {
        self.state = state;
        self.steps = 0;
        self.done = state.is_failure();
    }

    pub fn state(&self) -> CartPoleState {
        self.state
    }

    pub fn steps(&self) -> u32 {
        self.steps
    }

    pub fn is_done(&self) -> bool {
        self.done
    }

    pub fn step(&mut self, action: usize) -> Result<StepResult, EnvError> {
        if self.done {
            return Err(EnvError::EpisodeOver);
        }
        if action >= N_ACTIONS {
            return Err(EnvError::InvalidAction(action));
        }
        let next = dynamics(&self.state, action);
        self.steps += 1;
        let failed = next.is_failure();
        let truncated = !failed && self.steps >= MAX_EPISODE_STEPS;
        self.state = next;
        self.done = failed || truncated;
        Ok(StepResult {
            next_state: next,
            reward: 1.0,
            done: self.done,
            truncated,
        })
    }
}

/// Undiscounted return of an episode given its per-step rewards.
pub fn episode_return(rewards: &[f64]) -> f64 {
    rewards.iter().sum()
}
