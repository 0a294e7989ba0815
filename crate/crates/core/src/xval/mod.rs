//! Experiment orchestration: configuration, grids, run logs, campaigns,
//! the sample-efficiency metric and plot-data export.

mod campaign;
mod config;
mod efficiency;
mod log;
mod plot;

pub use campaign::{
    load_runs, run_campaign, run_file_name, run_id, run_manifest, write_atomic, CampaignError,
    CampaignReport,
};
pub use config::{
    expand_grid, parse_config, parse_grid, ConfigError, GridSpec, HyperParams, ModelKind,
    ParseOptions, TrainingMode, EPSILON_DURATION_DOMAIN, ETA_DURATION_DOMAIN, ETA_END_FRACTION,
    ETA_START_DOMAIN, GAMMA_DOMAIN, SKOLIK_TRAIN_EVERY,
};
pub use efficiency::{
    align_validation, persistent_rejection, sample_efficiency, AlignedValidation,
    EfficiencyError, EfficiencyPoint, EfficiencyResult,
};
pub use log::{LogError, Record, RecordKind, RunLog, CSV_HEADER};
pub use plot::{export_plot_data, plot_rows, rows_to_csv, PlotKind, PlotRow, PLOT_HEADER};

/// Episode window of the reported moving average.
pub const MOVING_AVERAGE_WINDOW: usize = 20;

/// Element `i` is the mean of `values[max(0, i+1-window) ..= i]`.
pub fn moving_average(values: &[f64], window: usize) -> Vec<f64> {
    assert!(window > 0, "window must be positive");
    let mut out = Vec::with_capacity(values.len());
    let mut sum = 0.0;
    for i in 0..values.len() {
        sum += values[i];
        if i >= window {
            sum -= values[i - window];
        }
        let n = (i + 1).min(window);
        // recompute occasionally to stop drift
        if i % 1024 == 1023 {
            sum = values[i + 1 - n..=i].iter().sum();
        }
        out.push(sum / n as f64);
    }
    out
}
