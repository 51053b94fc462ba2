use num_complex::Complex64;
use rustfft::FftPlanner;

/// Discrete Fourier transform of a real record, with its frequency axis.
#[derive(Debug, Clone)]
pub struct Spectrum {
    bins: Vec<Complex64>,
    bin_resolution: f64,
}

impl Spectrum {
    /// Full-length forward transform of `signal` sampled at `fs`.
    pub fn of(signal: &[f64], fs: f64) -> Self {
        let n = signal.len();
        let mut bins: Vec<Complex64> = signal.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        if n > 0 {
            FftPlanner::<f64>::new().plan_fft_forward(n).process(&mut bins);
        }
        Self {
            bins,
            bin_resolution: if n > 0 { fs / n as f64 } else { 0.0 },
        }
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// Hz per bin.
    pub fn bin_resolution(&self) -> f64 {
        self.bin_resolution
    }

    pub fn frequency(&self, k: usize) -> f64 {
        k as f64 * self.bin_resolution
    }

    /// Number of bins from DC up to and including Nyquist.
    pub fn one_sided_len(&self) -> usize {
        self.bins.len() / 2 + 1
    }

    /// Single-sided amplitude of bin `k`: a unit sinusoid on-bin reads 1.0.
    pub fn amplitude(&self, k: usize) -> f64 {
        let n = self.bins.len() as f64;
        let mag = self.bins[k].norm() / n;
        if k == 0 || 2 * k == self.bins.len() {
            mag
        } else {
            2.0 * mag
        }
    }

    /// One-sided power (|X_k|^2 summed with its mirror bin) of bin `k`.
    pub fn power(&self, k: usize) -> f64 {
        let n = self.bins.len();
        let p = self.bins[k].norm_sqr();
        if k == 0 || 2 * k == n {
            p
        } else {
            p + self.bins[n - k].norm_sqr()
        }
    }

    /// Bin of largest amplitude with frequency in `[lo_hz, hi_hz]`.
    pub fn peak_bin(&self, lo_hz: f64, hi_hz: f64) -> Option<usize> {
        (0..self.one_sided_len())
            .filter(|&k| {
                let f = self.frequency(k);
                f >= lo_hz && f <= hi_hz
            })
            .max_by(|&a, &b| self.power(a).total_cmp(&self.power(b)))
    }

    /// Summed one-sided power over bins with frequency in `[lo_hz, hi_hz]`.
    pub fn band_power(&self, lo_hz: f64, hi_hz: f64) -> f64 {
        (0..self.one_sided_len())
            .filter(|&k| {
                let f = self.frequency(k);
                f >= lo_hz && f <= hi_hz
            })
            .map(|k| self.power(k))
            .sum()
    }
}
