use std::fmt;

use thiserror::Error;

use super::RunLog;
use crate::stats::{mean_std, t_test_from_summary, StatsError, ALPHA};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EfficiencyError {
    #[error("need at least 2 runs (got {0})")]
    TooFewRuns(usize),
    #[error("run {0} has no validation records")]
    EmptyRun(usize),
    #[error("run {run} validates at step {got} where step {expected} was expected")]
    MismatchedCadence { run: usize, expected: u64, got: u64 },
    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Validation returns of several runs on a common step axis. Runs that
/// stopped early are extended with their last return.
#[derive(Clone, Debug, PartialEq)]
pub struct AlignedValidation {
    pub steps: Vec<u64>,
    /// `values[run][index]`.
    pub values: Vec<Vec<f64>>,
    /// `padded[run][index]`: value carried forward, not measured.
    pub padded: Vec<Vec<bool>>,
}

impl AlignedValidation {
    pub fn column(&self, index: usize) -> Vec<f64> {
        self.values.iter().map(|v| v[index]).collect()
    }
}

pub fn align_validation(runs: &[&RunLog]) -> Result<AlignedValidation, EfficiencyError> {
    let series: Vec<Vec<(u64, f64)>> = runs.iter().map(|r| r.validation_returns()).collect();
    if let Some(i) = series.iter().position(|s| s.is_empty()) {
        return Err(EfficiencyError::EmptyRun(i));
    }
    let longest = series.iter().max_by_key(|s| s.len()).cloned().unwrap_or_default();
    let steps: Vec<u64> = longest.iter().map(|&(s, _)| s).collect();
    let mut values = Vec::with_capacity(series.len());
    let mut padded = Vec::with_capacity(series.len());
    for (run, s) in series.iter().enumerate() {
        for (i, &(step, _)) in s.iter().enumerate() {
            if step != steps[i] {
                return Err(EfficiencyError::MismatchedCadence {
                    run,
                    expected: steps[i],
                    got: step,
                });
            }
        }
        let last = s[s.len() - 1].1;
        values.push((0..steps.len()).map(|i| s.get(i).map_or(last, |p| p.1)).collect());
        padded.push((0..steps.len()).map(|i| i >= s.len()).collect());
    }
    Ok(AlignedValidation { steps, values, padded })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EfficiencyPoint {
    pub step: u64,
    pub t: f64,
    pub mean: f64,
    pub std: f64,
    pub reject: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EfficiencyResult {
    pub threshold: f64,
    pub n_runs: usize,
    pub points: Vec<EfficiencyPoint>,
    /// First validation index from which every later test rejects.
    pub efficiency_index: Option<usize>,
}

impl EfficiencyResult {
    pub fn efficiency_step(&self) -> Option<u64> {
        self.efficiency_index.map(|i| self.points[i].step)
    }
}

impl fmt::Display for EfficiencyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "threshold: {}", self.threshold)?;
        writeln!(f, "runs: {}", self.n_runs)?;
        match self.efficiency_step() {
            Some(step) => writeln!(f, "efficiency_step: {step}")?,
            None => writeln!(f, "efficiency_step: never")?,
        }
        writeln!(f, "step,mean,std,t,reject")?;
        for p in &self.points {
            writeln!(f, "{},{},{},{},{}", p.step, p.mean, p.std, p.t, u8::from(p.reject))?;
        }
        Ok(())
    }
}

/// Smallest index `i` such that `reject[j]` holds for every `j ≥ i`.
pub fn persistent_rejection(reject: &[bool]) -> Option<usize> {
    let trailing = reject.iter().rev().take_while(|&&r| r).count();
    (trailing > 0).then(|| reject.len() - trailing)
}

/// Per-validation-index one-sided t-tests of `mean > threshold` across runs.
pub fn sample_efficiency(runs: &[&RunLog], threshold: f64) -> Result<EfficiencyResult, EfficiencyError> {
    if runs.len() < 2 {
        return Err(EfficiencyError::TooFewRuns(runs.len()));
    }
    let aligned = align_validation(runs)?;
    let mut points = Vec::with_capacity(aligned.steps.len());
    for (i, &step) in aligned.steps.iter().enumerate() {
        let col = aligned.column(i);
        let (mean, std) = mean_std(&col);
        let (t, reject) = t_test_from_summary(col.len(), mean, std, threshold, ALPHA)?;
        points.push(EfficiencyPoint {
            step,
            t,
            mean,
            std,
            reject,
        });
    }
    let reject: Vec<bool> = points.iter().map(|p| p.reject).collect();
    Ok(EfficiencyResult {
        threshold,
        n_runs: runs.len(),
        efficiency_index: persistent_rejection(&reject),
        points,
    })
}
