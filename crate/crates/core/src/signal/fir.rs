//! Windowed-sinc low-pass design and "same"-aligned FIR application.

use std::f64::consts::PI;

use super::TimeSeries;
use crate::error::{Error, Result};

/// Tap count used for anti-alias filtering during fusion (filter order 100).
pub const DEFAULT_NUM_TAPS: usize = 101;

/// Linear-phase low-pass FIR filter with unit DC gain.
#[derive(Debug, Clone, PartialEq)]
pub struct FirFilter {
    taps: Vec<f64>,
    cutoff_normalized: f64,
}

impl FirFilter {
    pub fn taps(&self) -> &[f64] {
        &self.taps
    }

    pub fn num_taps(&self) -> usize {
        self.taps.len()
    }

    /// Filter order M (taps - 1).
    pub fn order(&self) -> usize {
        self.taps.len() - 1
    }

    /// Cutoff as a fraction of the sampling rate, in (0, 0.5].
    pub fn cutoff_normalized(&self) -> f64 {
        self.cutoff_normalized
    }

    pub fn group_delay(&self) -> usize {
        self.order() / 2
    }

    /// Magnitude of the frequency response at `f` cycles/sample.
    pub fn magnitude_at(&self, f: f64) -> f64 {
        let (mut re, mut im) = (0.0, 0.0);
        for (n, &h) in self.taps.iter().enumerate() {
            let w = 2.0 * PI * f * n as f64;
            re += h * w.cos();
            im -= h * w.sin();
        }
        re.hypot(im)
    }
}

/// Target sampling frequency for a set of datasets: the lowest rate present.
pub fn target_fs(fs_list: &[f64]) -> Result<f64> {
    let mut iter = fs_list.iter().copied();
    let first = iter.next().ok_or(Error::NoDatasets)?;
    let mut min = first;
    for fs in std::iter::once(first).chain(iter) {
        if !(fs.is_finite() && fs > 0.0) {
            return Err(Error::invalid(
                "fs_list",
                format!("sampling frequencies must be positive, got {fs}"),
            ));
        }
        if fs < min {
            min = fs;
        }
    }
    Ok(min)
}

/// Symmetric Hann window over `0..=order`; zero at both ends.
fn hann(n: usize, order: usize) -> f64 {
    0.5 * (1.0 - (2.0 * PI * n as f64 / order as f64).cos())
}

/// Designs a Hann-windowed sinc low-pass filter.
///
/// `cutoff_normalized` is the cutoff in cycles per sample of the rate the
/// filter will run at. Taps are scaled so they sum to one.
pub fn design_lowpass(num_taps: usize, cutoff_normalized: f64) -> Result<FirFilter> {
    if num_taps < 3 || num_taps.is_multiple_of(2) {
        return Err(Error::invalid(
            "num_taps",
            format!("must be odd and at least 3, got {num_taps}"),
        ));
    }
    if !(cutoff_normalized > 0.0 && cutoff_normalized <= 0.5) {
        return Err(Error::invalid(
            "cutoff_normalized",
            format!("must lie in (0, 0.5], got {cutoff_normalized}"),
        ));
    }
    let order = num_taps - 1;
    let half = order / 2;
    let omega = 2.0 * PI * cutoff_normalized;
    let mut taps: Vec<f64> = (0..num_taps)
        .map(|n| {
            if n == half {
                omega * hann(n, order)
            } else {
                let k = n as f64 - half as f64;
                (omega * k).sin() / k * hann(n, order)
            }
        })
        .collect();
    // Mirror so the rounding in sin() cannot break exact symmetry.
    for n in 0..half {
        taps[order - n] = taps[n];
    }
    let sum: f64 = taps.iter().sum();
    if !(sum > 0.0) {
        return Err(Error::invalid(
            "cutoff_normalized",
            format!("degenerate design, tap sum {sum}"),
        ));
    }
    let gain = 1.0 / sum;
    for t in &mut taps {
        *t *= gain;
    }
    Ok(FirFilter {
        taps,
        cutoff_normalized,
    })
}

/// Convolves one channel with `taps`, zero-padded, output aligned to the input.
pub fn convolve_same(x: &[f64], taps: &[f64]) -> Vec<f64> {
    let half = (taps.len() - 1) / 2;
    let mut padded = Vec::with_capacity(x.len() + 2 * half);
    padded.resize(half, 0.0);
    padded.extend_from_slice(x);
    padded.resize(x.len() + 2 * half, 0.0);
    let reversed: Vec<f64> = taps.iter().rev().copied().collect();
    padded
        .windows(taps.len())
        .map(|w| w.iter().zip(&reversed).map(|(a, b)| a * b).sum())
        .collect()
}

/// Filters every feature of `x`; the output keeps length and sampling rate.
pub fn apply_fir(x: &TimeSeries, filter: &FirFilter) -> Result<TimeSeries> {
    if x.len() < filter.num_taps() {
        return Err(Error::SignalTooShort {
            len: x.len(),
            taps: filter.num_taps(),
        });
    }
    let columns = x
        .columns()
        .iter()
        .map(|c| convolve_same(c, filter.taps()))
        .collect();
    x.with_columns(columns, x.fs())
}
