use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::{read_csv_columns, write_csv_columns, Label};
use crate::signal::{mean_std, TimeSeries};

/// Fraction of samples a feature may have above threshold before the file is
/// called anomalous.
pub const DEFAULT_EXCEED_FRACTION: f64 = 0.01;

/// Per-sample absolute reconstruction errors of one recording.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSeries {
    abs_errors: Vec<Vec<f64>>,
    feature_names: Vec<String>,
    pub source_file: String,
}

impl ResidualSeries {
    pub fn new(
        abs_errors: Vec<Vec<f64>>,
        feature_names: Vec<String>,
        source_file: impl Into<String>,
    ) -> Result<Self> {
        if abs_errors.len() != feature_names.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} residual columns for {} names",
                abs_errors.len(),
                feature_names.len()
            )));
        }
        let len = abs_errors.first().map_or(0, Vec::len);
        for (name, col) in feature_names.iter().zip(&abs_errors) {
            if col.len() != len {
                return Err(Error::DimensionMismatch(format!(
                    "residual column `{name}` has {} rows, expected {len}",
                    col.len()
                )));
            }
            if let Some(v) = col.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
                return Err(Error::invalid(
                    "abs_errors",
                    format!("column `{name}` holds {v}; residuals must be finite and >= 0"),
                ));
            }
        }
        Ok(Self {
            abs_errors,
            feature_names,
            source_file: source_file.into(),
        })
    }

    pub fn from_columns(abs_errors: Vec<Vec<f64>>, source_file: impl Into<String>) -> Result<Self> {
        let names = crate::signal::default_feature_names(abs_errors.len());
        Self::new(abs_errors, names, source_file)
    }

    pub fn n_features(&self) -> usize {
        self.abs_errors.len()
    }

    pub fn len(&self) -> usize {
        self.abs_errors.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn column(&self, feature: usize) -> &[f64] {
        &self.abs_errors[feature]
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.abs_errors
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    /// Reads a residual CSV: header of feature names, one row per sample.
    pub fn read_csv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let (names, columns) = read_csv_columns(path, None)?;
        Self::new(columns, names, path.display().to_string()).map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        write_csv_columns(path.as_ref(), &self.feature_names, &self.abs_errors)
    }
}

/// Seasonal-naive reconstruction errors `|x[n] - x[n - period]|` for
/// `n >= period_samples`.
pub fn baseline_residuals(x: &TimeSeries, period_samples: usize) -> Result<ResidualSeries> {
    if period_samples == 0 {
        return Err(Error::invalid("period_samples", "must be at least 1"));
    }
    if period_samples >= x.len() {
        return Err(Error::invalid(
            "period_samples",
            format!("{period_samples} leaves no samples of {}", x.len()),
        ));
    }
    let abs_errors = x
        .columns()
        .iter()
        .map(|c| {
            c[period_samples..]
                .iter()
                .zip(c)
                .map(|(now, before)| (now - before).abs())
                .collect()
        })
        .collect();
    ResidualSeries::new(abs_errors, x.feature_names().to_vec(), "")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdMethod {
    /// Largest validation residual per feature.
    MaxMae,
    /// Mean plus two population standard deviations per feature.
    MeanPlus2Sigma,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSet {
    pub per_feature: Vec<f64>,
    pub method: ThresholdMethod,
}

pub fn calibrate_thresholds(
    validation: &ResidualSeries,
    method: ThresholdMethod,
) -> Result<ThresholdSet> {
    if validation.is_empty() || validation.n_features() == 0 {
        return Err(Error::Empty("validation residuals"));
    }
    let per_feature = validation
        .columns()
        .iter()
        .map(|c| match method {
            ThresholdMethod::MaxMae => c.iter().copied().fold(0.0, f64::max),
            ThresholdMethod::MeanPlus2Sigma => {
                let (mean, std) = mean_std(c);
                mean + 2.0 * std
            }
        })
        .collect();
    Ok(ThresholdSet {
        per_feature,
        method,
    })
}

/// Fraction of samples strictly above the threshold, per feature.
pub fn exceedance_fractions(residuals: &ResidualSeries, t: &ThresholdSet) -> Result<Vec<f64>> {
    if residuals.n_features() != t.per_feature.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} residual features vs {} thresholds",
            residuals.n_features(),
            t.per_feature.len()
        )));
    }
    let n = residuals.len().max(1) as f64;
    Ok(residuals
        .columns()
        .iter()
        .zip(&t.per_feature)
        .map(|(c, &th)| c.iter().filter(|&&v| v > th).count() as f64 / n)
        .collect())
}

/// Anomalous iff some feature's exceedance fraction is strictly greater than
/// `exceed_fraction`.
pub fn decide_file(
    residuals: &ResidualSeries,
    t: &ThresholdSet,
    exceed_fraction: f64,
) -> Result<Label> {
    if !(0.0..=1.0).contains(&exceed_fraction) {
        return Err(Error::invalid(
            "exceed_fraction",
            format!("must lie in [0, 1], got {exceed_fraction}"),
        ));
    }
    let fractions = exceedance_fractions(residuals, t)?;
    Ok(if fractions.iter().any(|&f| f > exceed_fraction) {
        Label::Anomalous
    } else {
        Label::Healthy
    })
}
