use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument `{arg}`: {reason}")]
    InvalidArgument { arg: &'static str, reason: String },

    #[error("invalid time series: {0}")]
    InvalidSeries(String),

    #[error("no datasets")]
    NoDatasets,

    #[error("upsampling unsupported: target {target_hz} Hz exceeds source {source_hz} Hz")]
    UpsamplingUnsupported { source_hz: f64, target_hz: f64 },

    #[error("signal of {len} samples is shorter than the {taps}-tap filter")]
    SignalTooShort { len: usize, taps: usize },

    #[error("zero variance in feature `{feature}`")]
    ZeroVariance { feature: String },

    #[error("insufficient periods: found {crossings} crossings, need at least {needed}")]
    InsufficientPeriods { crossings: usize, needed: usize },

    #[error("fusion requires at least 2 datasets, got {0}")]
    TooFewDatasets(usize),

    #[error("dataset `{0}` produced no batches")]
    EmptyBatches(String),

    #[error("duplicate dataset id `{0}`")]
    DuplicateDataset(String),

    #[error("feature count mismatch: dataset `{dataset}` has {found} features, expected {expected}")]
    FeatureMismatch {
        dataset: String,
        expected: usize,
        found: usize,
    },

    #[error("dataset `{dataset}`: {source}")]
    Dataset {
        dataset: String,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}, row {row}: {reason}")]
    Parse {
        path: PathBuf,
        row: usize,
        reason: String,
    },

    #[error("{path}: {reason}")]
    Format { path: PathBuf, reason: String },

    #[error("budget of {budget} samples exceeds the {available} available")]
    BudgetTooLarge { budget: usize, available: usize },

    #[error("nothing to write")]
    NothingToWrite,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty input: {0}")]
    Empty(&'static str),
}

impl Error {
    pub(crate) fn invalid(arg: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            arg,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn in_dataset(self, dataset: &str) -> Self {
        Error::Dataset {
            dataset: dataset.to_string(),
            source: Box::new(self),
        }
    }
}
