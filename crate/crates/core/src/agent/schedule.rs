use crate::xval::HyperParams;

/// Piecewise-linear schedule: `start` until `offset`, linear to `end` over
/// `duration` more steps, `end` afterwards.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearSchedule {
    pub start: f64,
    pub end: f64,
    pub duration: u64,
    pub offset: u64,
}

impl LinearSchedule {
    pub fn value(&self, t: u64) -> f64 {
        if t <= self.offset {
            return self.start;
        }
        let elapsed = t - self.offset;
        if elapsed >= self.duration {
            return self.end;
        }
        let frac = elapsed as f64 / self.duration as f64;
        self.start + frac * (self.end - self.start)
    }
}

/// The ε, η and target-update schedules of one run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Schedules {
    /// Indexed by sampling step.
    pub epsilon: LinearSchedule,
    /// Indexed by number of completed training steps.
    pub eta: LinearSchedule,
    /// Indexed by sampling step.
    pub update_every: LinearSchedule,
}

impl Schedules {
    pub fn from_hyperparams(hp: &HyperParams) -> Self {
        Self {
            epsilon: LinearSchedule {
                start: hp.epsilon_start,
                end: hp.epsilon_end,
                duration: hp.epsilon_duration,
                offset: hp.train_after,
            },
            eta: LinearSchedule {
                start: hp.eta_start,
                end: hp.eta_end(),
                duration: hp.eta_duration,
                offset: 0,
            },
            update_every: LinearSchedule {
                start: hp.update_every_start as f64,
                end: hp.update_every_end as f64,
                duration: hp.update_every_duration,
                offset: 0,
            },
        }
    }

    pub fn epsilon_at(&self, step: u64) -> f64 {
        self.epsilon.value(step)
    }

    pub fn eta_at(&self, training_steps: u64) -> f64 {
        self.eta.value(training_steps)
    }

    /// Target-update interval in sampling steps, rounded to an integer.
    pub fn update_every_at(&self, step: u64) -> u64 {
        self.update_every.value(step).round().max(1.0) as u64
    }
}
