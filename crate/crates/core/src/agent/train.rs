use std::collections::VecDeque;

use rand::Rng;

use super::{select_action, train_step, update_target, Adam, QFunction, ReplayBuffer, Result, Schedules, Transition};
use crate::env::CartPole;
use crate::rng::{RngStreams, Stream};
use crate::xval::{HyperParams, ParseOptions, RecordKind, RunLog, TrainingMode, SKOLIK_TRAIN_EVERY};

/// Number of validation returns averaged for the stopping rule.
pub const EARLY_STOP_WINDOW: usize = 25;
/// Mean validation return at which a run counts as solved.
pub const EARLY_STOP_THRESHOLD: f64 = 196.0;

/// Rolling-mean stopping rule over the most recent validation returns.
#[derive(Clone, Debug)]
pub struct EarlyStop {
    window: usize,
    threshold: f64,
    recent: VecDeque<f64>,
}

impl Default for EarlyStop {
    fn default() -> Self {
        Self::new(EARLY_STOP_WINDOW, EARLY_STOP_THRESHOLD)
    }
}

impl EarlyStop {
    pub fn new(window: usize, threshold: f64) -> Self {
        Self {
            window,
            threshold,
            recent: VecDeque::with_capacity(window),
        }
    }

    /// Records a validation return; true once a full window averages at or
    /// above the threshold.
    pub fn push(&mut self, ret: f64) -> bool {
        if self.recent.len() == self.window {
            self.recent.pop_front();
        }
        self.recent.push_back(ret);
        self.recent.len() == self.window
            && self.recent.iter().sum::<f64>() / self.window as f64 >= self.threshold
    }
}

/// Knobs that sit outside the experiment configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunOptions {
    pub restrictions: ParseOptions,
    /// When false no gradient steps are taken.
    pub learning: bool,
    /// Replaces the ε schedule for both behaviour and validation episodes.
    pub epsilon_override: Option<f64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            restrictions: ParseOptions::default(),
            learning: true,
            epsilon_override: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub log: RunLog,
    pub model: QFunction,
    pub training_steps: u64,
    pub target_updates: u64,
    /// Sampling step at which the stopping rule fired.
    pub solved_at: Option<u64>,
}

pub fn run_training(hp: &HyperParams, seed: u64) -> Result<RunLog> {
    Ok(run_training_with(hp, seed, RunOptions::default())?.log)
}

fn validation_episode<R: Rng, S: Rng>(
    q: &QFunction,
    epsilon: f64,
    shots: usize,
    env_rng: &mut R,
    shot_rng: &mut S,
) -> Result<f64> {
    let mut env = CartPole::new();
    let mut state = env.reset(env_rng);
    let mut ret = 0.0;
    loop {
        let qv = q.q_values_with_shots(&state.to_array(), shots, shot_rng)?;
        let action = select_action(&qv, epsilon, env_rng);
        let r = env.step(action)?;
        ret += r.reward;
        if r.done {
            return Ok(ret);
        }
        state = r.next_state;
    }
}

/// The DQN loop: ε-greedy sampling, replay, periodic gradient and target
/// updates, greedy validation and the rolling-mean stopping rule.
pub fn run_training_with(hp: &HyperParams, seed: u64, opts: RunOptions) -> Result<RunOutcome> {
    hp.validate(opts.restrictions)?;
    let streams = RngStreams::new(seed);
    let mut env_rng = streams.stream(Stream::EnvInit);
    let mut val_rng = streams.stream(Stream::Validation);
    let mut eps_rng = streams.stream(Stream::Epsilon);
    let mut replay_rng = streams.stream(Stream::Replay);
    let mut shot_rng = streams.stream(Stream::Shots);
    let mut init_rng = streams.stream(Stream::ModelInit);

    let schedules = Schedules::from_hyperparams(hp);
    let mut q = QFunction::from_hyperparams(hp, &mut init_rng)?;
    let mut target = q.clone();
    let mut adam = Adam::new(q.n_params());
    let mut buffer = ReplayBuffer::new(hp.replay_capacity);
    let mut stop = EarlyStop::default();
    let mut log = RunLog::default();

    let mut env = CartPole::new();
    let mut state = env.reset(&mut env_rng);
    let mut episode_ret = 0.0;
    let mut training_steps = 0u64;
    let mut target_updates = 0u64;
    let mut since_update = 0u64;
    let mut solved_at = None;
    let mut last_step = 0;

    for t in 1..=hp.num_steps {
        last_step = t;
        let epsilon = opts.epsilon_override.unwrap_or_else(|| schedules.epsilon_at(t));
        let s = state.to_array();
        let action = if t <= hp.train_after && opts.epsilon_override.is_none() {
            eps_rng.gen_range(0..crate::env::N_ACTIONS)
        } else {
            let qv = q.q_values(&s)?;
            select_action(&qv, epsilon, &mut eps_rng)
        };
        let r = env.step(action)?;
        buffer.push(Transition {
            state: s,
            action,
            reward: r.reward,
            next_state: r.next_state.to_array(),
            terminal: r.terminated(),
            truncated: r.truncated,
        });
        episode_ret += r.reward;
        if r.done {
            log.push(t, RecordKind::EpisodeReturn, episode_ret);
            episode_ret = 0.0;
            state = env.reset(&mut env_rng);
        } else {
            state = r.next_state;
        }

        let due = t > hp.train_after
            && match hp.training_mode {
                TrainingMode::Standard => t % hp.train_every == 0,
                TrainingMode::PerEpisode => r.done,
                TrainingMode::SkolikRepro => t % SKOLIK_TRAIN_EVERY == 0,
            };
        if opts.learning && due && buffer.len() >= hp.batch_size {
            let eta = schedules.eta_at(training_steps);
            let loss = train_step(
                &mut q,
                &target,
                &buffer,
                &mut adam,
                eta,
                hp.gamma,
                hp.batch_size,
                hp.bootstrap_on_truncation,
                &mut replay_rng,
            )?;
            training_steps += 1;
            log.push(t, RecordKind::Loss, loss);
        }

        since_update += 1;
        if since_update >= schedules.update_every_at(t) {
            update_target(&q, &mut target);
            target_updates += 1;
            since_update = 0;
        }

        if t % hp.validate_every == 0 {
            let val_eps = opts.epsilon_override.unwrap_or(0.0);
            let ret = validation_episode(&q, val_eps, hp.shots, &mut val_rng, &mut shot_rng)?;
            log.push(t, RecordKind::Epsilon, epsilon);
            log.push(t, RecordKind::Eta, schedules.eta_at(training_steps));
            log.push(t, RecordKind::ValidationReturn, ret);
            if stop.push(ret) {
                solved_at = Some(t);
                break;
            }
        }
    }

    log.push(last_step, RecordKind::Solved, if solved_at.is_some() { 1.0 } else { 0.0 });
    Ok(RunOutcome {
        log,
        model: q,
        training_steps,
        target_updates,
        solved_at,
    })
}
