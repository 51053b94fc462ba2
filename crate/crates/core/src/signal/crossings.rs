use super::TimeSeries;

/// Indices `n` with `x[n - 1] > 0 >= x[n]` in a single channel.
pub fn falling_zero_crossings(x: &[f64]) -> Vec<usize> {
    x.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > 0.0 && w[1] <= 0.0)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Positive-to-negative zero crossings of the first feature.
///
/// Only feature 0 is scanned so every feature is cut at the same indices.
pub fn zero_crossings(x: &TimeSeries) -> Vec<usize> {
    falling_zero_crossings(x.column(0))
}
