//! Fourier-method downsampling.
//!
//! The whole record is transformed, bins at or above the target Nyquist
//! frequency are dropped, and the retained band is inverse-transformed at
//! the new length. Amplitudes are rescaled by `n_new / n` so a sinusoid keeps
//! its time-domain amplitude.

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::fir::{apply_fir, design_lowpass, DEFAULT_NUM_TAPS};
use super::TimeSeries;
use crate::error::{Error, Result};

/// Largest rate handled with exact integer arithmetic (2^53).
const EXACT_INT_LIMIT: f64 = 9_007_199_254_740_992.0;

fn as_exact_int(v: f64) -> Option<u128> {
    (v.fract() == 0.0 && v > 0.0 && v < EXACT_INT_LIMIT).then_some(v as u128)
}

/// `floor(n / fs * fs_new)`, exact when both rates are integers.
pub fn resampled_len(n: usize, fs: f64, fs_new: f64) -> usize {
    match (as_exact_int(fs), as_exact_int(fs_new)) {
        (Some(a), Some(b)) => (n as u128 * b / a) as usize,
        _ => (n as f64 / fs * fs_new).floor() as usize,
    }
}

/// Highest positive-frequency bin index `k` of an `n`-point transform at `fs`
/// with `k * fs / n < fs_new / 2`.
fn highest_kept_bin(n: usize, fs: f64, fs_new: f64) -> usize {
    match (as_exact_int(fs), as_exact_int(fs_new)) {
        (Some(a), Some(b)) => {
            let num = n as u128 * b;
            let den = 2 * a;
            ((num - 1) / den) as usize
        }
        _ => {
            let bound = n as f64 * fs_new / (2.0 * fs);
            (bound.ceil() as usize).saturating_sub(1)
        }
    }
}

fn check_rates(fs: f64, fs_new: f64) -> Result<()> {
    if !(fs_new.is_finite() && fs_new > 0.0) {
        return Err(Error::invalid(
            "fs_new",
            format!("target rate must be positive, got {fs_new}"),
        ));
    }
    if fs_new > fs {
        return Err(Error::UpsamplingUnsupported {
            source_hz: fs,
            target_hz: fs_new,
        });
    }
    Ok(())
}

/// Resamples `x` to `fs_new` by spectral truncation.
///
/// No anti-alias filter is applied here; see [`downsample`] for the
/// filter-then-resample pipeline. When `fs_new` equals the current rate the
/// input is returned unchanged.
pub fn resample_fourier(x: &TimeSeries, fs_new: f64) -> Result<TimeSeries> {
    let fs = x.fs();
    check_rates(fs, fs_new)?;
    if fs_new == fs {
        return Ok(x.clone());
    }
    let n = x.len();
    let n_new = resampled_len(n, fs, fs_new);
    if n_new == 0 {
        return Err(Error::invalid(
            "x",
            format!("{n} samples at {fs} Hz leave no samples at {fs_new} Hz"),
        ));
    }
    // Both the source and target spectra must hold the pair (k, n - k).
    let kept = highest_kept_bin(n, fs, fs_new)
        .min((n - 1) / 2)
        .min((n_new - 1) / 2);

    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(n);
    let inverse = planner.plan_fft_inverse(n_new);
    let mut scratch =
        vec![Complex64::default(); forward.get_inplace_scratch_len().max(inverse.get_inplace_scratch_len())];

    let scale = 1.0 / n as f64;
    let mut columns = Vec::with_capacity(x.n_features());
    let mut buf = vec![Complex64::default(); n];
    let mut out = vec![Complex64::default(); n_new];
    for col in x.columns() {
        for (b, &v) in buf.iter_mut().zip(col) {
            *b = Complex64::new(v, 0.0);
        }
        forward.process_with_scratch(&mut buf, &mut scratch);

        out.fill(Complex64::default());
        out[0] = buf[0];
        for k in 1..=kept {
            out[k] = buf[k];
            out[n_new - k] = buf[n - k];
        }
        inverse.process_with_scratch(&mut out, &mut scratch);
        columns.push(out.iter().map(|c| c.re * scale).collect());
    }
    x.with_columns(columns, fs_new)
}

/// Anti-alias filter at the target Nyquist frequency, then Fourier resample.
///
/// Uses a 101-tap Hann-windowed sinc with cutoff `(fs_new / 2) / fs`.
pub fn downsample(x: &TimeSeries, fs_new: f64) -> Result<TimeSeries> {
    check_rates(x.fs(), fs_new)?;
    if fs_new == x.fs() {
        return Ok(x.clone());
    }
    let filter = design_lowpass(DEFAULT_NUM_TAPS, (fs_new / 2.0) / x.fs())?;
    let filtered = apply_fir(x, &filter)?;
    resample_fourier(&filtered, fs_new)
}
