//! Synthetic multi-phase periodic signals with optional noise and faults.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signal::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Harmonic {
    /// Multiple of the fundamental.
    pub order: u32,
    /// Amplitude relative to a unit fundamental.
    pub amplitude: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyKind {
    /// Every feature is scaled by `magnitude` from `start` on.
    AmplitudeStep,
    /// Adds a tone of amplitude `magnitude` at `frequency_ratio` times the
    /// fundamental. Non-integer ratios break periodicity, like slip sidebands.
    HarmonicInjection,
    /// Deterministic part attenuated by `magnitude` (1.0 leaves only noise).
    Dropout,
}

fn default_injection_ratio() -> f64 {
    0.9
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnomalySpec {
    pub kind: AnomalyKind,
    /// Onset in seconds.
    pub start: f64,
    pub magnitude: f64,
    /// Only used by `harmonic_injection`.
    #[serde(default = "default_injection_ratio")]
    pub frequency_ratio: f64,
}

/// Parameters of a synthetic dataset. `phase_offsets` defaults to a balanced
/// polyphase set (`-2πk/n`) when omitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SynthSpec {
    pub fs: f64,
    /// Seconds.
    pub duration: f64,
    /// Hz.
    pub fundamental: f64,
    pub n_features: usize,
    #[serde(default)]
    pub phase_offsets: Option<Vec<f64>>,
    pub harmonics: Vec<Harmonic>,
    /// Standard deviation of additive Gaussian noise, relative to a unit fundamental.
    #[serde(default)]
    pub noise_sigma: f64,
    #[serde(default)]
    pub anomaly: Option<AnomalySpec>,
    #[serde(default)]
    pub seed: u64,
}

impl SynthSpec {
    /// Pure sinusoid at `fundamental` with balanced phases and no noise.
    pub fn sine(fs: f64, duration: f64, fundamental: f64, n_features: usize) -> Self {
        Self {
            fs,
            duration,
            fundamental,
            n_features,
            phase_offsets: None,
            harmonics: vec![Harmonic {
                order: 1,
                amplitude: 1.0,
            }],
            noise_sigma: 0.0,
            anomaly: None,
            seed: 0,
        }
    }

    pub fn with_noise(mut self, sigma: f64, seed: u64) -> Self {
        self.noise_sigma = sigma;
        self.seed = seed;
        self
    }

    pub fn with_anomaly(mut self, anomaly: AnomalySpec) -> Self {
        self.anomaly = Some(anomaly);
        self
    }

    pub fn n_samples(&self) -> usize {
        (self.duration * self.fs).round() as usize
    }

    pub fn phases(&self) -> Vec<f64> {
        self.phase_offsets.clone().unwrap_or_else(|| {
            (0..self.n_features)
                .map(|k| -2.0 * PI * k as f64 / self.n_features as f64)
                .collect()
        })
    }

    pub fn validate(&self) -> Result<()> {
        let finite_pos = |v: f64| v.is_finite() && v > 0.0;
        if !finite_pos(self.fs) {
            return Err(Error::invalid("fs", format!("must be positive, got {}", self.fs)));
        }
        if !finite_pos(self.duration) {
            return Err(Error::invalid(
                "duration",
                format!("must be positive, got {}", self.duration),
            ));
        }
        if !finite_pos(self.fundamental) || self.fundamental >= self.fs / 2.0 {
            return Err(Error::invalid(
                "fundamental",
                format!("must lie in (0, fs/2), got {}", self.fundamental),
            ));
        }
        if self.duration * self.fundamental < 2.0 {
            return Err(Error::invalid("duration", "must cover at least 2 periods"));
        }
        if self.n_features == 0 {
            return Err(Error::invalid("n_features", "must be at least 1"));
        }
        if let Some(p) = &self.phase_offsets {
            if p.len() != self.n_features || p.iter().any(|v| !v.is_finite()) {
                return Err(Error::invalid(
                    "phase_offsets",
                    format!("need {} finite values, got {}", self.n_features, p.len()),
                ));
            }
        }
        if self.harmonics.is_empty() {
            return Err(Error::invalid("harmonics", "at least one harmonic required"));
        }
        for h in &self.harmonics {
            if h.order == 0 || !h.amplitude.is_finite() {
                return Err(Error::invalid("harmonics", format!("invalid entry {h:?}")));
            }
            if h.order as f64 * self.fundamental >= self.fs / 2.0 {
                return Err(Error::invalid(
                    "harmonics",
                    format!("harmonic {} lies above fs/2", h.order),
                ));
            }
        }
        if !(self.noise_sigma.is_finite() && self.noise_sigma >= 0.0) {
            return Err(Error::invalid("noise_sigma", "must be finite and non-negative"));
        }
        if let Some(a) = &self.anomaly {
            if !(a.start.is_finite() && a.start >= 0.0) || !a.magnitude.is_finite() {
                return Err(Error::invalid("anomaly", format!("invalid onset or magnitude {a:?}")));
            }
            if a.kind == AnomalyKind::HarmonicInjection
                && !(a.frequency_ratio > 0.0 && a.frequency_ratio * self.fundamental < self.fs / 2.0)
            {
                return Err(Error::invalid(
                    "anomaly",
                    "injected tone must lie in (0, fs/2)",
                ));
            }
        }
        Ok(())
    }
}

/// Renders `spec` into a series with features named `f0`, `f1`, ...
///
/// Noise is drawn feature by feature from one ChaCha8 stream seeded with
/// `spec.seed`, so the output is reproducible.
pub fn generate(spec: &SynthSpec) -> Result<TimeSeries> {
    spec.validate()?;
    let n = spec.n_samples();
    let phases = spec.phases();
    let onset = spec
        .anomaly
        .map(|a| ((a.start * spec.fs).ceil() as usize).min(n));
    let noise = if spec.noise_sigma > 0.0 {
        Some(Normal::new(0.0, spec.noise_sigma).expect("sigma validated"))
    } else {
        None
    };
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let w0 = 2.0 * PI * spec.fundamental;

    let columns = phases
        .iter()
        .map(|&phase| {
            (0..n)
                .map(|i| {
                    let t = i as f64 / spec.fs;
                    let mut clean: f64 = spec
                        .harmonics
                        .iter()
                        .map(|h| {
                            let k = h.order as f64;
                            h.amplitude * (k * w0 * t + phase).sin()
                        })
                        .sum();
                    let mut noise_v = noise.map_or(0.0, |d| d.sample(&mut rng));
                    if let (Some(a), Some(on)) = (spec.anomaly, onset) {
                        if i >= on {
                            match a.kind {
                                AnomalyKind::AmplitudeStep => {
                                    clean *= a.magnitude;
                                    noise_v *= a.magnitude;
                                }
                                AnomalyKind::HarmonicInjection => {
                                    clean += a.magnitude
                                        * (a.frequency_ratio * w0 * t + phase).sin();
                                }
                                AnomalyKind::Dropout => clean *= 1.0 - a.magnitude,
                            }
                        }
                    }
                    clean + noise_v
                })
                .collect()
        })
        .collect();
    TimeSeries::from_columns(columns, spec.fs)
}
