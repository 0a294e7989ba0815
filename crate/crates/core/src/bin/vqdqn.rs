use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vqdqn::agent::{run_training_with, RunOptions};
use vqdqn::xval::{
    expand_grid, export_plot_data, load_runs, parse_config, parse_grid, run_campaign,
    sample_efficiency, write_atomic, ParseOptions, PlotKind, RunLog, TrainingMode,
};

#[derive(Parser)]
#[command(name = "vqdqn", version, about = "Variational-quantum DQN experiments on CartPole")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one training run and write its CSV log.
    Train {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: u64,
        /// Train once per episode instead of every `train_every` steps.
        #[arg(long, conflicts_with = "skolik_repro")]
        per_episode: bool,
        /// Train every 30 sampling steps.
        #[arg(long)]
        skolik_repro: bool,
        /// Measurement shots for validation episodes (0 = analytic).
        #[arg(long)]
        shots: Option<usize>,
        /// Output CSV; defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow values outside the fixed and cross-validated domains.
        #[arg(long)]
        unrestricted: bool,
    },
    /// Run every grid cell for several seeds; resumable.
    Grid {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seeds: u64,
        #[arg(long, default_value_t = 1)]
        parallelism: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        unrestricted: bool,
    },
    /// Per-validation-step t-tests across the runs in a directory.
    Stats {
        #[arg(long)]
        runs: PathBuf,
        #[arg(long)]
        threshold: f64,
    },
    /// Export tidy CSV plot data.
    PlotData {
        #[arg(long)]
        runs: PathBuf,
        /// validation-curve, episode-returns, mean-band or efficiency
        #[arg(long)]
        kind: PlotKind,
        #[arg(long)]
        out: PathBuf,
        /// Threshold for the efficiency kind.
        #[arg(long, default_value_t = 120.0)]
        threshold: f64,
    },
}

type BoxError = Box<dyn std::error::Error>;

fn read(path: &PathBuf) -> Result<String, BoxError> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn run(cli: Cli) -> Result<(), BoxError> {
    match cli.command {
        Command::Train {
            config,
            seed,
            per_episode,
            skolik_repro,
            shots,
            out,
            unrestricted,
        } => {
            let opts = ParseOptions { unrestricted };
            let mut hp = parse_config(&read(&config)?, opts)?;
            if per_episode {
                hp.training_mode = TrainingMode::PerEpisode;
            }
            if skolik_repro {
                hp.training_mode = TrainingMode::SkolikRepro;
            }
            if let Some(shots) = shots {
                hp.shots = shots;
            }
            let run_opts = RunOptions {
                restrictions: opts,
                ..RunOptions::default()
            };
            let outcome = run_training_with(&hp, seed, run_opts)?;
            let csv = outcome.log.to_csv();
            match out {
                Some(path) => write_atomic(&path, &csv)?,
                None => print!("{csv}"),
            }
            report_run(&outcome.log);
        }
        Command::Grid {
            config,
            seeds,
            parallelism,
            out,
            unrestricted,
        } => {
            let opts = ParseOptions { unrestricted };
            let spec = parse_grid(&read(&config)?, opts)?;
            let configs = expand_grid(&spec)?;
            let run_opts = RunOptions {
                restrictions: opts,
                ..RunOptions::default()
            };
            let report = run_campaign(&configs, seeds, parallelism, &out, run_opts)?;
            eprintln!(
                "{} configs x {} seeds: {} executed, {} skipped",
                configs.len(),
                seeds,
                report.executed.len(),
                report.skipped.len()
            );
        }
        Command::Stats { runs, threshold } => {
            let loaded = load_runs(&runs)?;
            let logs: Vec<&RunLog> = loaded.iter().map(|(_, l)| l).collect();
            print!("{}", sample_efficiency(&logs, threshold)?);
        }
        Command::PlotData {
            runs,
            kind,
            out,
            threshold,
        } => {
            let loaded = load_runs(&runs)?;
            write_atomic(&out, &export_plot_data(&loaded, kind, threshold)?)?;
        }
    }
    Ok(())
}

fn report_run(log: &RunLog) {
    let val = log.validation_returns();
    match log.solved_at() {
        Some(step) => eprintln!("solved at step {step} after {} validations", val.len()),
        None => eprintln!(
            "not solved; {} validations, last return {}",
            val.len(),
            val.last().map_or(0.0, |v| v.1)
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
