use std::fmt::Write as _;
use std::str::FromStr;

use super::efficiency::{align_validation, sample_efficiency, EfficiencyError};
use super::{moving_average, RunLog, MOVING_AVERAGE_WINDOW};

pub const PLOT_HEADER: &str = "x,series,mean,min,max,n,padded";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotKind {
    /// One series per run: greedy return at every validation step.
    ValidationCurve,
    /// One series per run: 20-episode moving average of training returns.
    EpisodeReturns,
    /// Mean, min and max validation return across runs.
    MeanBand,
    /// Sample mean, t statistic and rejection flag per validation step.
    Efficiency,
}

impl PlotKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PlotKind::ValidationCurve => "validation-curve",
            PlotKind::EpisodeReturns => "episode-returns",
            PlotKind::MeanBand => "mean-band",
            PlotKind::Efficiency => "efficiency",
        }
    }
}

impl FromStr for PlotKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "validation-curve" => Ok(PlotKind::ValidationCurve),
            "episode-returns" => Ok(PlotKind::EpisodeReturns),
            "mean-band" => Ok(PlotKind::MeanBand),
            "efficiency" => Ok(PlotKind::Efficiency),
            _ => Err(format!(
                "unknown plot kind {s:?} (expected validation-curve, episode-returns, mean-band or efficiency)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotRow {
    pub x: u64,
    pub series: String,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub n: usize,
    /// Number of contributing values that were carried forward.
    pub padded: usize,
}

fn row(x: u64, series: &str, values: &[f64], padded: usize) -> PlotRow {
    PlotRow {
        x,
        series: series.to_string(),
        mean: values.iter().sum::<f64>() / values.len() as f64,
        min: values.iter().copied().fold(f64::INFINITY, f64::min),
        max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        n: values.len(),
        padded,
    }
}

/// Tidy plot rows for `kind`. `threshold` is only used by
/// [`PlotKind::Efficiency`].
pub fn plot_rows(
    runs: &[(String, RunLog)],
    kind: PlotKind,
    threshold: f64,
) -> Result<Vec<PlotRow>, EfficiencyError> {
    let logs: Vec<&RunLog> = runs.iter().map(|(_, l)| l).collect();
    let mut rows = Vec::new();
    match kind {
        PlotKind::ValidationCurve => {
            let al = align_validation(&logs)?;
            for (r, (name, _)) in runs.iter().enumerate() {
                for (i, &step) in al.steps.iter().enumerate() {
                    rows.push(row(step, name, &[al.values[r][i]], usize::from(al.padded[r][i])));
                }
            }
        }
        PlotKind::EpisodeReturns => {
            for (name, log) in runs {
                let returns = log.episode_returns();
                let avg = moving_average(&returns, MOVING_AVERAGE_WINDOW);
                for (i, &m) in avg.iter().enumerate() {
                    let lo = i.saturating_sub(MOVING_AVERAGE_WINDOW - 1);
                    let mut r = row(i as u64 + 1, name, &returns[lo..=i], 0);
                    r.mean = m;
                    rows.push(r);
                }
            }
        }
        PlotKind::MeanBand => {
            let al = align_validation(&logs)?;
            for (i, &step) in al.steps.iter().enumerate() {
                let padded = al.padded.iter().filter(|p| p[i]).count();
                rows.push(row(step, "all", &al.column(i), padded));
            }
        }
        PlotKind::Efficiency => {
            let al = align_validation(&logs)?;
            let eff = sample_efficiency(&logs, threshold)?;
            for (i, p) in eff.points.iter().enumerate() {
                let n = eff.n_runs;
                let padded = al.padded.iter().filter(|pd| pd[i]).count();
                let single = |series: &str, v: f64| PlotRow {
                    x: p.step,
                    series: series.to_string(),
                    mean: v,
                    min: v,
                    max: v,
                    n,
                    padded,
                };
                rows.push(PlotRow {
                    min: p.mean - p.std,
                    max: p.mean + p.std,
                    ..single("mean", p.mean)
                });
                rows.push(single("t", p.t));
                rows.push(single("reject", if p.reject { 1.0 } else { 0.0 }));
            }
        }
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[PlotRow]) -> String {
    let mut s = String::new();
    s.push_str(PLOT_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(s, "{},{},{},{},{},{},{}", r.x, r.series, r.mean, r.min, r.max, r.n, r.padded);
    }
    s
}

pub fn export_plot_data(
    runs: &[(String, RunLog)],
    kind: PlotKind,
    threshold: f64,
) -> Result<String, EfficiencyError> {
    Ok(rows_to_csv(&plot_rows(runs, kind, threshold)?))
}
