//! `key = value` experiment configuration.
//!
//! One assignment per line, `#` starts a comment, keys are case-sensitive.
//! The four cross-validated keys (`eta_start`, `eta_duration`,
//! `epsilon_duration`, `gamma`) are required; everything else defaults to
//! the fixed experiment settings. In grid files the cross-validated keys may
//! hold comma-separated lists or `*` for the full domain, and may be omitted
//! (meaning the full domain).

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::vqc::{Architecture, EncodingScheme, ExtractionMode};

pub const ETA_START_DOMAIN: [f64; 3] = [0.001, 0.01, 0.1];
pub const ETA_DURATION_DOMAIN: [u64; 2] = [2000, 4000];
pub const EPSILON_DURATION_DOMAIN: [u64; 3] = [10_000, 20_000, 30_000];
pub const GAMMA_DOMAIN: [f64; 2] = [0.99, 0.999];

/// Ratio `eta_end / eta_start`.
pub const ETA_END_FRACTION: f64 = 0.01;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`")]
    Malformed { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    Duplicate { line: usize, key: String },
    #[error("line {line}: `eta_end` is derived as 0.01 * eta_start and cannot be set")]
    Derived { line: usize },
    #[error("line {line}: invalid value `{value}` for `{key}`: {reason}")]
    InvalidValue {
        line: usize,
        key: String,
        value: String,
        reason: String,
    },
    #[error("missing required key `{0}`")]
    Missing(&'static str),
    #[error("`{key}` = {value} outside its domain {domain} (use unrestricted mode to allow)")]
    OutOfDomain {
        key: &'static str,
        value: String,
        domain: String,
    },
    #[error("`{key}` = {value}: {reason}")]
    Invalid {
        key: &'static str,
        value: String,
        reason: &'static str,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Vqc,
    Classical,
}

impl ModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Vqc => "vqc",
            ModelKind::Classical => "classical",
        }
    }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vqc" => Ok(ModelKind::Vqc),
            "classical" => Ok(ModelKind::Classical),
            _ => Err("expected vqc or classical".into()),
        }
    }
}

/// When gradient steps happen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrainingMode {
    /// Every `train_every` sampling steps.
    Standard,
    /// Once at the end of every episode.
    PerEpisode,
    /// Every 30 sampling steps.
    SkolikRepro,
}

/// Sampling-step interval used by [`TrainingMode::SkolikRepro`].
pub const SKOLIK_TRAIN_EVERY: u64 = 30;

impl TrainingMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            TrainingMode::Standard => "standard",
            TrainingMode::PerEpisode => "per_episode",
            TrainingMode::SkolikRepro => "skolik_repro",
        }
    }
}

impl FromStr for TrainingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(TrainingMode::Standard),
            "per_episode" => Ok(TrainingMode::PerEpisode),
            "skolik_repro" => Ok(TrainingMode::SkolikRepro),
            _ => Err("expected standard, per_episode or skolik_repro".into()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Lift the fixed/cross-validation domain restrictions; values need only
    /// be well-formed.
    pub unrestricted: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HyperParams {
    pub num_steps: u64,
    pub train_after: u64,
    pub train_every: u64,
    pub update_every_start: u64,
    pub update_every_end: u64,
    pub update_every_duration: u64,
    pub replay_capacity: usize,
    pub batch_size: usize,
    pub epsilon_start: f64,
    pub epsilon_end: f64,
    pub validate_every: u64,

    pub eta_start: f64,
    pub eta_duration: u64,
    pub epsilon_duration: u64,
    pub gamma: f64,

    pub model: ModelKind,
    pub architecture: Architecture,
    pub encoding: EncodingScheme,
    pub extraction: ExtractionMode,
    pub layers: usize,
    pub reuploading: bool,
    pub reparam: bool,

    pub training_mode: TrainingMode,
    pub bootstrap_on_truncation: bool,
    /// Measurement shots for validation episodes; 0 = analytic.
    pub shots: usize,
}

impl HyperParams {
    /// Fixed settings with the given cross-validated values and a default
    /// VQC model (architecture B, SC encoding, GSP extraction, 5 layers).
    pub fn with_grid(eta_start: f64, eta_duration: u64, epsilon_duration: u64, gamma: f64) -> Self {
        Self {
            num_steps: 50_000,
            train_after: 1000,
            train_every: 10,
            update_every_start: 30,
            update_every_end: 500,
            update_every_duration: 35_000,
            replay_capacity: 50_000,
            batch_size: 32,
            epsilon_start: 1.0,
            epsilon_end: 0.01,
            validate_every: 100,
            eta_start,
            eta_duration,
            epsilon_duration,
            gamma,
            model: ModelKind::Vqc,
            architecture: Architecture::B,
            encoding: EncodingScheme::SC,
            extraction: ExtractionMode::GlobalScalingWithPooling,
            layers: 5,
            reuploading: false,
            reparam: false,
            training_mode: TrainingMode::Standard,
            bootstrap_on_truncation: true,
            shots: 0,
        }
    }

    pub fn eta_end(&self) -> f64 {
        ETA_END_FRACTION * self.eta_start
    }

    /// Checks every field against its domain.
    pub fn validate(&self, opts: ParseOptions) -> Result<(), ConfigError> {
        let fixed = Self::with_grid(0.0, 0, 0, 0.0);
        let invalid = |key, value: String, reason| Err(ConfigError::Invalid { key, value, reason });

        macro_rules! positive {
            ($($f:ident),*) => {$(
                if self.$f == 0 {
                    return invalid(stringify!($f), self.$f.to_string(), "must be positive");
                }
            )*};
        }
        positive!(
            num_steps,
            train_every,
            update_every_start,
            update_every_end,
            replay_capacity,
            batch_size,
            validate_every,
            layers
        );
        if !(0.0..=1.0).contains(&self.epsilon_start) || !(0.0..=1.0).contains(&self.epsilon_end) {
            return invalid("epsilon_start", self.epsilon_start.to_string(), "epsilons must lie in [0, 1]");
        }
        if !(self.eta_start.is_finite() && self.eta_start > 0.0) {
            return invalid("eta_start", self.eta_start.to_string(), "must be positive");
        }
        if !(self.gamma > 0.0 && self.gamma < 1.0) {
            return invalid("gamma", self.gamma.to_string(), "must lie in (0, 1)");
        }
        if self.batch_size > self.replay_capacity {
            return invalid("batch_size", self.batch_size.to_string(), "exceeds replay_capacity");
        }
        if opts.unrestricted {
            return Ok(());
        }

        macro_rules! fixed {
            ($($f:ident),*) => {$(
                if self.$f != fixed.$f {
                    return Err(ConfigError::OutOfDomain {
                        key: stringify!($f),
                        value: self.$f.to_string(),
                        domain: format!("{{{}}}", fixed.$f),
                    });
                }
            )*};
        }
        fixed!(
            num_steps,
            train_after,
            train_every,
            update_every_start,
            update_every_end,
            update_every_duration,
            replay_capacity,
            batch_size,
            epsilon_start,
            epsilon_end,
            validate_every
        );

        fn domain<T: PartialEq + ToString>(
            key: &'static str,
            value: T,
            allowed: &[T],
        ) -> Result<(), ConfigError> {
            if allowed.contains(&value) {
                Ok(())
            } else {
                Err(ConfigError::OutOfDomain {
                    key,
                    value: value.to_string(),
                    domain: format!(
                        "{{{}}}",
                        allowed.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                    ),
                })
            }
        }
        domain("eta_start", self.eta_start, &ETA_START_DOMAIN)?;
        domain("eta_duration", self.eta_duration, &ETA_DURATION_DOMAIN)?;
        domain("epsilon_duration", self.epsilon_duration, &EPSILON_DURATION_DOMAIN)?;
        domain("gamma", self.gamma, &GAMMA_DOMAIN)?;
        Ok(())
    }

    /// Canonical text form: every key, fixed order, one per line.
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let b = |v: bool| u8::from(v);
        let _ = writeln!(s, "num_steps = {}", self.num_steps);
        let _ = writeln!(s, "train_after = {}", self.train_after);
        let _ = writeln!(s, "train_every = {}", self.train_every);
        let _ = writeln!(s, "update_every_start = {}", self.update_every_start);
        let _ = writeln!(s, "update_every_end = {}", self.update_every_end);
        let _ = writeln!(s, "update_every_duration = {}", self.update_every_duration);
        let _ = writeln!(s, "replay_capacity = {}", self.replay_capacity);
        let _ = writeln!(s, "optimizer = Adam");
        let _ = writeln!(s, "batch_size = {}", self.batch_size);
        let _ = writeln!(s, "loss = L2");
        let _ = writeln!(s, "epsilon_start = {}", self.epsilon_start);
        let _ = writeln!(s, "epsilon_end = {}", self.epsilon_end);
        let _ = writeln!(s, "validate_every = {}", self.validate_every);
        let _ = writeln!(s, "eta_start = {}", self.eta_start);
        let _ = writeln!(s, "eta_duration = {}", self.eta_duration);
        let _ = writeln!(s, "epsilon_duration = {}", self.epsilon_duration);
        let _ = writeln!(s, "gamma = {}", self.gamma);
        let _ = writeln!(s, "model = {}", self.model.as_str());
        let _ = writeln!(s, "architecture = {}", self.architecture.as_str());
        let _ = writeln!(s, "encoding = {}", self.encoding.as_str());
        let _ = writeln!(s, "extraction = {}", self.extraction.as_str());
        let _ = writeln!(s, "layers = {}", self.layers);
        let _ = writeln!(s, "reuploading = {}", b(self.reuploading));
        let _ = writeln!(s, "reparam = {}", b(self.reparam));
        let _ = writeln!(s, "training_mode = {}", self.training_mode.as_str());
        let _ = writeln!(s, "bootstrap_on_truncation = {}", b(self.bootstrap_on_truncation));
        let _ = writeln!(s, "shots = {}", self.shots);
        s
    }
}

const GRID_KEYS: [&str; 4] = ["eta_start", "eta_duration", "epsilon_duration", "gamma"];

struct Entry<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

fn entries(text: &str) -> Result<Vec<Entry<'_>>, ConfigError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or(ConfigError::Malformed { line })?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || value.is_empty() {
            return Err(ConfigError::Malformed { line });
        }
        if !seen.insert(key) {
            return Err(ConfigError::Duplicate {
                line,
                key: key.to_string(),
            });
        }
        out.push(Entry { line, key, value });
    }
    Ok(out)
}

fn parse_value<T: FromStr>(e: &Entry<'_>) -> Result<T, ConfigError>
where
    T::Err: ToString,
{
    e.value.parse::<T>().map_err(|err| ConfigError::InvalidValue {
        line: e.line,
        key: e.key.to_string(),
        value: e.value.to_string(),
        reason: err.to_string(),
    })
}

fn parse_flag(e: &Entry<'_>) -> Result<bool, ConfigError> {
    match e.value {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(ConfigError::InvalidValue {
            line: e.line,
            key: e.key.to_string(),
            value: e.value.to_string(),
            reason: "expected 0 or 1".into(),
        }),
    }
}

fn parse_exact(e: &Entry<'_>, expected: &str) -> Result<(), ConfigError> {
    if e.value == expected {
        Ok(())
    } else {
        Err(ConfigError::InvalidValue {
            line: e.line,
            key: e.key.to_string(),
            value: e.value.to_string(),
            reason: format!("only {expected} is supported"),
        })
    }
}

/// Applies a non-grid key. Returns `Ok(false)` if `key` is a grid key.
fn apply(hp: &mut HyperParams, e: &Entry<'_>) -> Result<bool, ConfigError> {
    match e.key {
        "num_steps" => hp.num_steps = parse_value(e)?,
        "train_after" => hp.train_after = parse_value(e)?,
        "train_every" => hp.train_every = parse_value(e)?,
        "update_every_start" => hp.update_every_start = parse_value(e)?,
        "update_every_end" => hp.update_every_end = parse_value(e)?,
        "update_every_duration" => hp.update_every_duration = parse_value(e)?,
        "replay_capacity" => hp.replay_capacity = parse_value(e)?,
        "batch_size" => hp.batch_size = parse_value(e)?,
        "epsilon_start" => hp.epsilon_start = parse_value(e)?,
        "epsilon_end" => hp.epsilon_end = parse_value(e)?,
        "validate_every" => hp.validate_every = parse_value(e)?,
        "optimizer" => parse_exact(e, "Adam")?,
        "loss" => parse_exact(e, "L2")?,
        "model" => hp.model = parse_value(e)?,
        "architecture" => hp.architecture = parse_value(e)?,
        "encoding" => hp.encoding = parse_value(e)?,
        "extraction" => hp.extraction = parse_value(e)?,
        "layers" => hp.layers = parse_value(e)?,
        "reuploading" => hp.reuploading = parse_flag(e)?,
        "reparam" => hp.reparam = parse_flag(e)?,
        "training_mode" => hp.training_mode = parse_value(e)?,
        "bootstrap_on_truncation" => hp.bootstrap_on_truncation = parse_flag(e)?,
        "shots" => hp.shots = parse_value(e)?,
        "eta_end" => return Err(ConfigError::Derived { line: e.line }),
        k if GRID_KEYS.contains(&k) => return Ok(false),
        _ => {
            return Err(ConfigError::UnknownKey {
                line: e.line,
                key: e.key.to_string(),
            })
        }
    }
    Ok(true)
}

/// Parses a single-run configuration. All four cross-validated keys must be
/// present with exactly one value.
pub fn parse_config(text: &str, opts: ParseOptions) -> Result<HyperParams, ConfigError> {
    let entries = entries(text)?;
    let mut hp = HyperParams::with_grid(0.0, 0, 0, 0.0);
    let mut found = [false; 4];
    for e in &entries {
        if apply(&mut hp, e)? {
            continue;
        }
        match e.key {
            "eta_start" => hp.eta_start = parse_value(e)?,
            "eta_duration" => hp.eta_duration = parse_value(e)?,
            "epsilon_duration" => hp.epsilon_duration = parse_value(e)?,
            "gamma" => hp.gamma = parse_value(e)?,
            _ => unreachable!(),
        }
        found[GRID_KEYS.iter().position(|k| *k == e.key).unwrap()] = true;
    }
    if let Some(i) = found.iter().position(|f| !f) {
        return Err(ConfigError::Missing(GRID_KEYS[i]));
    }
    hp.validate(opts)?;
    Ok(hp)
}

/// A base configuration plus value lists for the cross-validated keys.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub base: HyperParams,
    pub eta_start: Vec<f64>,
    pub eta_duration: Vec<u64>,
    pub epsilon_duration: Vec<u64>,
    pub gamma: Vec<f64>,
    pub opts: ParseOptions,
}

impl GridSpec {
    /// Full cross-validation domain around `base`.
    pub fn full(base: HyperParams) -> Self {
        Self {
            base,
            eta_start: ETA_START_DOMAIN.to_vec(),
            eta_duration: ETA_DURATION_DOMAIN.to_vec(),
            epsilon_duration: EPSILON_DURATION_DOMAIN.to_vec(),
            gamma: GAMMA_DOMAIN.to_vec(),
            opts: ParseOptions::default(),
        }
    }
}

fn parse_list<T: FromStr + Copy>(e: &Entry<'_>, full: &[T]) -> Result<Vec<T>, ConfigError>
where
    T::Err: ToString,
{
    if e.value == "*" {
        return Ok(full.to_vec());
    }
    let mut out = Vec::new();
    for part in e.value.split(',') {
        let part = part.trim();
        let sub = Entry {
            line: e.line,
            key: e.key,
            value: part,
        };
        out.push(parse_value(&sub)?);
    }
    Ok(out)
}

/// Parses a grid file; cross-validated keys may be lists, `*`, or absent.
pub fn parse_grid(text: &str, opts: ParseOptions) -> Result<GridSpec, ConfigError> {
    let entries = entries(text)?;
    let mut spec = GridSpec::full(HyperParams::with_grid(
        ETA_START_DOMAIN[0],
        ETA_DURATION_DOMAIN[0],
        EPSILON_DURATION_DOMAIN[0],
        GAMMA_DOMAIN[0],
    ));
    spec.opts = opts;
    for e in &entries {
        if apply(&mut spec.base, e)? {
            continue;
        }
        match e.key {
            "eta_start" => spec.eta_start = parse_list(e, &ETA_START_DOMAIN)?,
            "eta_duration" => spec.eta_duration = parse_list(e, &ETA_DURATION_DOMAIN)?,
            "epsilon_duration" => spec.epsilon_duration = parse_list(e, &EPSILON_DURATION_DOMAIN)?,
            "gamma" => spec.gamma = parse_list(e, &GAMMA_DOMAIN)?,
            _ => unreachable!(),
        }
    }
    // surface domain errors now rather than per run
    expand_grid(&spec)?;
    Ok(spec)
}

/// Cartesian product over the cross-validated keys, ordered
/// `eta_start`, `eta_duration`, `epsilon_duration`, `gamma` (outermost
/// first). Duplicate values in a list are dropped.
pub fn expand_grid(spec: &GridSpec) -> Result<Vec<HyperParams>, ConfigError> {
    fn dedup<T: PartialEq + Copy>(v: &[T]) -> Vec<T> {
        let mut out: Vec<T> = Vec::new();
        for &x in v {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }
    let mut out = Vec::new();
    for &eta_start in &dedup(&spec.eta_start) {
        for &eta_duration in &dedup(&spec.eta_duration) {
            for &epsilon_duration in &dedup(&spec.epsilon_duration) {
                for &gamma in &dedup(&spec.gamma) {
                    let hp = HyperParams {
                        eta_start,
                        eta_duration,
                        epsilon_duration,
                        gamma,
                        ..spec.base.clone()
                    };
                    hp.validate(spec.opts)?;
                    out.push(hp);
                }
            }
        }
    }
    Ok(out)
}
