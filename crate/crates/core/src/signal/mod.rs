//! Numeric kernels: FIR design and filtering, Fourier resampling,
//! z-score normalization, zero-crossing detection and spectra.

mod crossings;
mod fir;
mod normalize;
mod resample;
mod series;
mod spectrum;

pub use crossings::{falling_zero_crossings, zero_crossings};
pub use fir::{apply_fir, convolve_same, design_lowpass, target_fs, FirFilter, DEFAULT_NUM_TAPS};
pub use normalize::{mean_std, zscore};
pub use resample::{downsample, resample_fourier, resampled_len};
pub use series::TimeSeries;
pub(crate) use series::default_feature_names;
pub use spectrum::Spectrum;
