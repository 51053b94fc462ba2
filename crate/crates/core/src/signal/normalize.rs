use super::TimeSeries;
use crate::error::{Error, Result};

/// Mean and population standard deviation of `values` (two-pass).
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Per-feature z-score normalization with population standard deviation.
pub fn zscore(x: &TimeSeries) -> Result<TimeSeries> {
    let mut columns = Vec::with_capacity(x.n_features());
    for (name, col) in x.feature_names().iter().zip(x.columns()) {
        let (mean, std) = mean_std(col);
        // Spread at the rounding level of the mean counts as constant.
        if !(std > f64::EPSILON * mean.abs()) {
            return Err(Error::ZeroVariance {
                feature: name.clone(),
            });
        }
        columns.push(col.iter().map(|v| (v - mean) / std).collect());
    }
    x.with_columns(columns, x.fs())
}
