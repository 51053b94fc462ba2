//! Independent reference implementations used as test oracles. None of these
//! call into the crate's numeric kernels.
#![allow(dead_code)]

use std::collections::HashMap;
use std::f64::consts::PI;

use fusekit::fusion::FusedDataset;
use fusekit::ingest::Label;
use fusekit::TimeSeries;

/// `|H(f)|` of an FIR filter by direct DTFT summation, `f` in cycles/sample.
pub fn dtft_magnitude(taps: &[f64], f: f64) -> f64 {
    let mut re = 0.0;
    let mut im = 0.0;
    for (n, h) in taps.iter().enumerate() {
        let phi = 2.0 * PI * f * n as f64;
        re += h * phi.cos();
        im += h * phi.sin();
    }
    (re * re + im * im).sqrt()
}

/// Direct "same" convolution: `y[n] = sum_k h[k] x[n + half - k]`, zero outside.
pub fn brute_convolve(x: &[f64], taps: &[f64]) -> Vec<f64> {
    let half = (taps.len() / 2) as isize;
    (0..x.len() as isize)
        .map(|n| {
            let mut acc = 0.0;
            for (k, h) in taps.iter().enumerate() {
                let idx = n + half - k as isize;
                if idx >= 0 && (idx as usize) < x.len() {
                    acc += h * x[idx as usize];
                }
            }
            acc
        })
        .collect()
}

/// Single-sided amplitude of DFT bin `k`, evaluated directly.
pub fn dft_amplitude(x: &[f64], k: usize) -> f64 {
    let n = x.len();
    let mut re = 0.0;
    let mut im = 0.0;
    for (i, v) in x.iter().enumerate() {
        // Reduce the phase index modulo n to keep the argument small.
        let phi = 2.0 * PI * ((k * i) % n) as f64 / n as f64;
        re += v * phi.cos();
        im -= v * phi.sin();
    }
    let mag = (re * re + im * im).sqrt() / n as f64;
    if k == 0 || 2 * k == n {
        mag
    } else {
        2.0 * mag
    }
}

/// Bin with the largest direct-DFT amplitude among `bins`, and that amplitude.
pub fn dft_peak(x: &[f64], bins: std::ops::RangeInclusive<usize>) -> (usize, f64) {
    bins.map(|k| (k, dft_amplitude(x, k)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("non-empty bin range")
}

/// Power of bins in `bins` by direct DFT.
pub fn dft_band_power(x: &[f64], bins: impl Iterator<Item = usize>) -> f64 {
    bins.map(|k| dft_amplitude(x, k).powi(2)).sum()
}

pub fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Population standard deviation.
pub fn pop_std(v: &[f64]) -> f64 {
    let m = mean(v);
    (v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / v.len() as f64).sqrt()
}

pub fn rms(v: &[f64]) -> f64 {
    (v.iter().map(|x| x * x).sum::<f64>() / v.len() as f64).sqrt()
}

/// Falling zero crossings by a direct scan.
pub fn scan_crossings(x: &[f64]) -> Vec<usize> {
    let mut out = Vec::new();
    for n in 1..x.len() {
        if x[n - 1] > 0.0 && x[n] <= 0.0 {
            out.push(n);
        }
    }
    out
}

/// Confusion counts `(tp, fp, tn, fn)` by explicit case analysis.
pub fn brute_confusion(pairs: &[(Label, Label)]) -> (usize, usize, usize, usize) {
    let (mut tp, mut fp, mut tn, mut fneg) = (0, 0, 0, 0);
    for (pred, actual) in pairs {
        let p = *pred == Label::Anomalous;
        let a = *actual == Label::Anomalous;
        if p && a {
            tp += 1;
        } else if p {
            fp += 1;
        } else if a {
            fneg += 1;
        } else {
            tn += 1;
        }
    }
    (tp, fp, tn, fneg)
}

/// tanh-sinh quadrature of `f` over `[a, b]`, refining until the relative
/// change drops below `1e-14`.
fn tanh_sinh(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let d = 0.5 * (b - a);
    let eval = |t: f64| -> f64 {
        let s = 0.5 * PI * t.sinh();
        let w = 0.5 * PI * t.cosh() / s.cosh().powi(2);
        if t == 0.0 {
            return f(c) * w;
        }
        // Distance from the nearer endpoint, 1 - tanh(s), without cancellation.
        let gap = d / (s.exp() * s.cosh());
        let mut acc = 0.0;
        for x in [a + gap, b - gap] {
            if x > a && x < b {
                acc += f(x) * w;
            }
        }
        acc
    };
    let t_max = 4.0;
    let mut h = 0.5;
    let mut sum = eval(0.0);
    let mut k = 1;
    while k as f64 * h <= t_max {
        sum += eval(k as f64 * h);
        k += 1;
    }
    let mut estimate = sum * h * d;
    for _ in 0..14 {
        h /= 2.0;
        let mut k = 1;
        while k as f64 * h <= t_max {
            sum += eval(k as f64 * h);
            k += 2;
        }
        let next = sum * h * d;
        if (next - estimate).abs() <= 1e-14 * next.abs() {
            return next;
        }
        estimate = next;
    }
    estimate
}

fn ln_beta_density(t: f64, a: f64, b: f64) -> f64 {
    (a - 1.0) * t.ln() + (b - 1.0) * (-t).ln_1p()
}

/// Integral of `t^(a-1) (1-t)^(b-1)` over `[lo, hi]`, scaled by `exp(-shift)`.
fn beta_integral(lo: f64, hi: f64, a: f64, b: f64, shift: f64) -> f64 {
    let f = |t: f64| (ln_beta_density(t, a, b) - shift).exp();
    // Split at the mode so peaked integrands are resolved on both sides.
    let mode = if a > 1.0 && b > 1.0 { (a - 1.0) / (a + b - 2.0) } else { f64::NAN };
    if mode > lo && mode < hi {
        tanh_sinh(&f, lo, mode) + tanh_sinh(&f, mode, hi)
    } else {
        tanh_sinh(&f, lo, hi)
    }
}

/// `P(F > f)` for an F(d1, d2) variate by numerical integration of the beta
/// density: the upper tail equals `I_x(d2/2, d1/2)` at `x = d2/(d2 + d1 f)`,
/// and both the partial and complete beta integrals are computed by quadrature.
pub fn f_survival_by_integration(f: f64, d1: f64, d2: f64) -> f64 {
    let a = d2 / 2.0;
    let b = d1 / 2.0;
    let x = d2 / (d2 + d1 * f);
    let mode = if a > 1.0 && b > 1.0 { (a - 1.0) / (a + b - 2.0) } else { 0.5 };
    let shift = ln_beta_density(mode, a, b);
    let partial = beta_integral(0.0, x, a, b, shift);
    let complete = partial + beta_integral(x, 1.0, a, b, shift);
    partial / complete
}

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns `(eigenvalues, eigenvectors)` sorted by descending eigenvalue;
/// eigenvectors are returned as rows.
pub fn jacobi_eigen(m: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum::<f64>().max(1e-300);
        if off <= 1e-30 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|k| v[k][i]).collect()).collect();
    (values, vectors)
}

/// Sample covariance (divisor n - 1) of `rows`.
pub fn covariance(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = rows.len();
    let d = rows[0].len();
    let means: Vec<f64> = (0..d).map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / n as f64).collect();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    rows.iter().map(|r| (r[i] - means[i]) * (r[j] - means[j])).sum::<f64>()
                        / (n - 1) as f64
                })
                .collect()
        })
        .collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rebuilds the fused columns by copying each provenance span out of the
/// matching normalized source.
pub fn reconstruct_from_provenance(
    fused: &FusedDataset,
    sources: &HashMap<String, TimeSeries>,
) -> Vec<Vec<f64>> {
    let n_features = fused.series.n_features();
    let mut cols = vec![Vec::new(); n_features];
    for rec in &fused.provenance {
        let src = &sources[&rec.dataset_id];
        for (f, col) in cols.iter_mut().enumerate() {
            col.extend_from_slice(&src.column(f)[rec.start..rec.end]);
        }
    }
    cols
}

/// Balanced polyphase sine at `freq` Hz, `n` samples, amplitude 1.
pub fn polyphase_sine(fs: f64, n: usize, freq: f64, n_features: usize) -> TimeSeries {
    let cols = (0..n_features)
        .map(|k| {
            let phase = -2.0 * PI * k as f64 / n_features as f64;
            (0..n)
                .map(|i| (2.0 * PI * freq * i as f64 / fs + phase).sin())
                .collect()
        })
        .collect();
    TimeSeries::from_columns(cols, fs).unwrap()
}
