use crate::error::{Error, Result};

/// A multi-feature signal sampled at a fixed rate.
///
/// Samples are stored column-major: one contiguous `Vec<f64>` per feature,
/// all of equal length. Construction validates that the series is non-empty,
/// every sample is finite and the sampling frequency is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    columns: Vec<Vec<f64>>,
    fs: f64,
    feature_names: Vec<String>,
}

impl TimeSeries {
    pub fn new(columns: Vec<Vec<f64>>, fs: f64, feature_names: Vec<String>) -> Result<Self> {
        if !(fs.is_finite() && fs > 0.0) {
            return Err(Error::InvalidSeries(format!(
                "sampling frequency must be positive, got {fs}"
            )));
        }
        if columns.is_empty() {
            return Err(Error::InvalidSeries("at least one feature required".into()));
        }
        if feature_names.len() != columns.len() {
            return Err(Error::InvalidSeries(format!(
                "{} feature names for {} columns",
                feature_names.len(),
                columns.len()
            )));
        }
        let len = columns[0].len();
        if len == 0 {
            return Err(Error::InvalidSeries("at least one sample required".into()));
        }
        for (name, col) in feature_names.iter().zip(&columns) {
            if col.len() != len {
                return Err(Error::InvalidSeries(format!(
                    "feature `{name}` has {} samples, expected {len}",
                    col.len()
                )));
            }
            if let Some(i) = col.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidSeries(format!(
                    "non-finite value in feature `{name}` at sample {i}"
                )));
            }
        }
        Ok(Self {
            columns,
            fs,
            feature_names,
        })
    }

    /// Builds a series with generated feature names `f0`, `f1`, ...
    pub fn from_columns(columns: Vec<Vec<f64>>, fs: f64) -> Result<Self> {
        let names = default_feature_names(columns.len());
        Self::new(columns, fs, names)
    }

    pub fn single(values: Vec<f64>, fs: f64) -> Result<Self> {
        Self::from_columns(vec![values], fs)
    }

    pub fn len(&self) -> usize {
        self.columns[0].len()
    }

    /// Always false for a constructed series; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn n_features(&self) -> usize {
        self.columns.len()
    }

    pub fn fs(&self) -> f64 {
        self.fs
    }

    /// Duration in seconds.
    pub fn duration(&self) -> f64 {
        self.len() as f64 / self.fs
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn column(&self, feature: usize) -> &[f64] {
        &self.columns[feature]
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Vec<f64>> {
        self.columns
    }

    pub fn row(&self, index: usize) -> Vec<f64> {
        self.columns.iter().map(|c| c[index]).collect()
    }

    /// Copies samples `range` of every feature into a new series with the same rate.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Result<Self> {
        if range.start >= range.end || range.end > self.len() {
            return Err(Error::invalid(
                "range",
                format!("{range:?} outside 0..{}", self.len()),
            ));
        }
        let columns = self
            .columns
            .iter()
            .map(|c| c[range.clone()].to_vec())
            .collect();
        Ok(Self {
            columns,
            fs: self.fs,
            feature_names: self.feature_names.clone(),
        })
    }

    /// Same samples, different rate label.
    pub(crate) fn with_columns(&self, columns: Vec<Vec<f64>>, fs: f64) -> Result<Self> {
        Self::new(columns, fs, self.feature_names.clone())
    }
}

pub(crate) fn default_feature_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("f{i}")).collect()
}
