use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use sha2::{Digest, Sha256};
use thiserror::Error;

use super::{HyperParams, LogError, RunLog};
use crate::agent::{run_training_with, AgentError, RunOptions};

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Log { path: PathBuf, source: LogError },
    #[error("run {id}: {source}")]
    Run { id: String, source: AgentError },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CampaignError + '_ {
    move |source| CampaignError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Canonical config text plus the seed; the run identity.
pub fn run_manifest(hp: &HyperParams, seed: u64) -> String {
    format!("{}seed = {seed}\n", hp.to_config_string())
}

/// First 16 hex digits of the SHA-256 of [`run_manifest`].
pub fn run_id(hp: &HyperParams, seed: u64) -> String {
    let digest = Sha256::digest(run_manifest(hp, seed).as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn run_file_name(hp: &HyperParams, seed: u64) -> String {
    format!("run-{}.csv", run_id(hp, seed))
}

/// Writes via a temporary sibling and a rename so readers never see a
/// partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CampaignError> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CampaignReport {
    /// Run files produced by this invocation.
    pub executed: Vec<PathBuf>,
    /// Run files already present and left untouched.
    pub skipped: Vec<PathBuf>,
}

/// Runs seeds `0..seeds_per_config` of every config on up to `parallelism`
/// worker threads. Each run writes `run-<id>.csv` plus its manifest
/// `run-<id>.cfg`; existing run CSVs are skipped.
pub fn run_campaign(
    configs: &[HyperParams],
    seeds_per_config: u64,
    parallelism: usize,
    out_dir: &Path,
    opts: RunOptions,
) -> Result<CampaignReport, CampaignError> {
    fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;
    let mut report = CampaignReport::default();
    let mut jobs = Vec::new();
    for hp in configs {
        for seed in 0..seeds_per_config {
            let path = out_dir.join(run_file_name(hp, seed));
            if path.exists() {
                report.skipped.push(path);
            } else {
                jobs.push((hp, seed, path));
            }
        }
    }

    let next = AtomicUsize::new(0);
    let errors = Mutex::new(Vec::new());
    let workers = parallelism.clamp(1, jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((hp, seed, path)) = jobs.get(i) else {
                    break;
                };
                if let Err(e) = execute(hp, *seed, path, opts) {
                    errors.lock().unwrap_or_else(|p| p.into_inner()).push(e);
                }
            });
        }
    });

    let mut errors = errors.into_inner().unwrap_or_else(|p| p.into_inner());
    if !errors.is_empty() {
        return Err(errors.swap_remove(0));
    }
    report.executed = jobs.into_iter().map(|(_, _, p)| p).collect();
    Ok(report)
}

fn execute(hp: &HyperParams, seed: u64, path: &Path, opts: RunOptions) -> Result<(), CampaignError> {
    let outcome = run_training_with(hp, seed, opts).map_err(|source| CampaignError::Run {
        id: run_id(hp, seed),
        source,
    })?;
    write_atomic(&path.with_extension("cfg"), &run_manifest(hp, seed))?;
    write_atomic(path, &outcome.log.to_csv())
}

/// Loads every `run-*.csv` in `dir`, sorted by file name.
pub fn load_runs(dir: &Path) -> Result<Vec<(String, RunLog)>, CampaignError> {
    let mut names = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err(dir))? {
        let path = entry.map_err(io_err(dir))?.path();
        let is_run = path.extension().is_some_and(|e| e == "csv")
            && path
                .file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with("run-"));
        if is_run {
            names.push(path);
        }
    }
    names.sort();
    names
        .into_iter()
        .map(|path| {
            let text = fs::read_to_string(&path).map_err(io_err(&path))?;
            let log = RunLog::from_csv(&text).map_err(|source| CampaignError::Log {
                path: path.clone(),
                source,
            })?;
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or_default()
                .to_string();
            Ok((stem, log))
        })
        .collect()
}
