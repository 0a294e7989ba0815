use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

/// Header line of every run CSV.
pub const CSV_HEADER: &str = "step,kind,value";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecordKind {
    Epsilon,
    Eta,
    Loss,
    EpisodeReturn,
    ValidationReturn,
    /// 1 at the step the stopping rule fired, 0 at the last step otherwise.
    Solved,
}

impl RecordKind {
    pub const ALL: [RecordKind; 6] = [
        RecordKind::Epsilon,
        RecordKind::Eta,
        RecordKind::Loss,
        RecordKind::EpisodeReturn,
        RecordKind::ValidationReturn,
        RecordKind::Solved,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RecordKind::Epsilon => "epsilon",
            RecordKind::Eta => "eta",
            RecordKind::Loss => "loss",
            RecordKind::EpisodeReturn => "episode_return",
            RecordKind::ValidationReturn => "validation_return",
            RecordKind::Solved => "solved",
        }
    }
}

impl FromStr for RecordKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        RecordKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Record {
    pub step: u64,
    pub kind: RecordKind,
    pub value: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LogError {
    #[error("missing or wrong header (expected `{CSV_HEADER}`)")]
    Header,
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
}

/// Time-ordered records of one training run.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunLog {
    records: Vec<Record>,
}

impl RunLog {
    pub fn push(&mut self, step: u64, kind: RecordKind, value: f64) {
        self.records.push(Record { step, kind, value });
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn of_kind(&self, kind: RecordKind) -> impl Iterator<Item = &Record> + '_ {
        self.records.iter().filter(move |r| r.kind == kind)
    }

    /// `(step, greedy return)` per validation.
    pub fn validation_returns(&self) -> Vec<(u64, f64)> {
        self.of_kind(RecordKind::ValidationReturn)
            .map(|r| (r.step, r.value))
            .collect()
    }

    pub fn episode_returns(&self) -> Vec<f64> {
        self.of_kind(RecordKind::EpisodeReturn).map(|r| r.value).collect()
    }

    /// Step at which the run was solved, if it was.
    pub fn solved_at(&self) -> Option<u64> {
        self.of_kind(RecordKind::Solved)
            .find(|r| r.value == 1.0)
            .map(|r| r.step)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::with_capacity(24 * (self.records.len() + 1));
        s.push_str(CSV_HEADER);
        s.push('\n');
        for r in &self.records {
            let _ = writeln!(s, "{},{},{}", r.step, r.kind.as_str(), r.value);
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self, LogError> {
        let mut lines = text.lines();
        if lines.next() != Some(CSV_HEADER) {
            return Err(LogError::Header);
        }
        let mut log = RunLog::default();
        for (i, line) in lines.enumerate() {
            let line_no = i + 2;
            let err = |reason: &str| LogError::Line {
                line: line_no,
                reason: reason.to_string(),
            };
            let mut parts = line.split(',');
            let (Some(step), Some(kind), Some(value), None) =
                (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(err("expected three fields"));
            };
            log.push(
                step.parse().map_err(|_| err("bad step"))?,
                kind.parse().map_err(|_| err("unknown kind"))?,
                value.parse().map_err(|_| err("bad value"))?,
            );
        }
        Ok(log)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn header_is_exact() {
        assert_eq!(RunLog::default().to_csv(), "step,kind,value\n");
        assert_eq!(RunLog::from_csv("step,kind,val\n"), Err(LogError::Header));
        assert!(matches!(
            RunLog::from_csv("step,kind,value\n1,reward,2\n"),
            Err(LogError::Line { line: 2, .. })
        ));
    }

    #[test]
    fn accessors() {
        let mut log = RunLog::default();
        log.push(100, RecordKind::ValidationReturn, 12.0);
        log.push(150, RecordKind::EpisodeReturn, 30.0);
        log.push(200, RecordKind::ValidationReturn, 200.0);
        log.push(200, RecordKind::Solved, 1.0);
        assert_eq!(log.validation_returns(), vec![(100, 12.0), (200, 200.0)]);
        assert_eq!(log.episode_returns(), vec![30.0]);
        assert_eq!(log.solved_at(), Some(200));
    }

    fn kind() -> impl Strategy<Value = RecordKind> {
        (0..RecordKind::ALL.len()).prop_map(|i| RecordKind::ALL[i])
    }

    proptest! {
        #[test]
        fn csv_round_trip(records in prop::collection::vec((any::<u64>(), kind(), any::<f64>().prop_filter("finite", |v| v.is_finite())), 0..50)) {
            let mut log = RunLog::default();
            for (s, k, v) in records {
                log.push(s, k, v);
            }
            let back = RunLog::from_csv(&log.to_csv()).unwrap();
            prop_assert_eq!(back, log);
        }
    }
}
