//! Fuse several homogeneous periodic time-series datasets into one training set.
//!
//! Each dataset is anti-alias filtered and Fourier-resampled to the lowest
//! sampling rate present, z-score normalized per feature, cut into batches of
//! whole periods at falling zero crossings, shuffled with a per-dataset seed
//! and interleaved round-robin. Every output batch is traced back to its
//! source span in a provenance sidecar.
//!
//! Alongside fusion the crate carries the evaluation tooling used to judge a
//! model trained on the result: residual thresholding, precision/recall/F1,
//! one-way ANOVA, a training-cost estimate and PCA diagnostics, plus a
//! synthetic signal generator for experiments without real recordings.
//!
//! ```
//! use fusekit::fusion::{fuse, NamedSeries};
//! use fusekit::synth::{generate, SynthSpec};
//!
//! let a = generate(&SynthSpec::sine(2_000.0, 1.0, 50.0, 3)).unwrap();
//! let b = generate(&SynthSpec::sine(3_000.0, 1.0, 50.0, 3).with_noise(0.05, 7)).unwrap();
//! let fused = fuse(&[NamedSeries::new("a", a), NamedSeries::new("b", b)], 4, 42).unwrap();
//! assert_eq!(fused.target_fs(), 2_000.0);
//! assert_eq!(fused.provenance.len() % 2, 0);
//! ```
//!
//! The `examples/` directory holds one runnable program per capability:
//!
//! | example | shows |
//! |---|---|
//! | `filter_design` | windowed-sinc low-pass taps and response |
//! | `resample` | anti-alias filter plus spectral-truncation downsampling |
//! | `period_batches` | z-score, zero crossings and period batching |
//! | `fuse_datasets` | end-to-end fusion with a provenance audit |
//! | `manifest_ingest` | TOML manifests, CSV loading and training budgets |
//! | `synth_signals` | the synthetic generator and fault injection |
//! | `anomaly_eval` | residuals, thresholds, file decisions and P/R/F1 |
//! | `anova_flops` | one-way ANOVA over F1 scores and the FLOPs estimate |
//! | `pca_diagnostics` | windowed PCA of two datasets |
//! | `spectrum_analysis` | amplitude histogram and FFT peak analysis |

pub mod cli;
pub mod error;
pub mod eval;
pub mod fusion;
pub mod ingest;
pub mod signal;
pub mod synth;

pub use error::{Error, Result};
pub use fusion::{fuse, FusedDataset, NamedSeries};
pub use signal::TimeSeries;
