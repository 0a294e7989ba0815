//! Variational-quantum deep Q-network testbed.
//!
//! - [`qsim`] is a dense statevector simulator with analytic, sampled and
//!   differentiated expectation values.
//! - [`vqc`] builds variational Q-function models on the simulator.
//! - [`env`] is CartPole-v0.
//! - [`agent`] has the DQN training loop, replay buffer, schedules, Adam
//!   and the classical baseline network.
//! - [`xval`] covers configuration, cross-validation grids, run logs, the
//!   campaign runner and plot-data export.
//! - [`stats`] holds the Student-t machinery and the sample-efficiency metric.

pub mod qsim;
pub mod rng;
pub mod vqc;
pub mod env;
pub mod agent;
pub mod xval;
pub mod stats;
