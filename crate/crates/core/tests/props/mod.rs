//! Randomized checks of the library's stated invariants, shared by the
//! `invariants` test target and the acceptance run.
#![allow(dead_code)]

use std::collections::HashMap;
use std::f64::consts::PI;
use std::io::Write;

use fusekit::eval::*;
use fusekit::fusion::*;
use fusekit::ingest::*;
use fusekit::signal::*;
use fusekit::synth::{generate, SynthSpec};
use fusekit::TimeSeries;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use crate::common::*;

pub const CASES: u32 = 256;

pub type Check = fn() -> Result<(), String>;

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn odd_taps() -> impl Strategy<Value = usize> {
    (1usize..=150).prop_map(|h| 2 * h + 1)
}

fn signal(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-100.0f64..100.0, len)
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

// signal

pub fn lowpass_is_symmetric_with_unit_sum() -> Result<(), String> {
    report(runner().run(&(odd_taps(), 1e-3f64..=0.5), |(taps, cutoff)| {
        let f = design_lowpass(taps, cutoff).unwrap();
        let t = f.taps();
        for n in 0..t.len() {
            prop_assert_eq!(t[n], t[t.len() - 1 - n]);
        }
        prop_assert!((t.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        Ok(())
    }))
}

pub fn fir_is_linear() -> Result<(), String> {
    let pair = (301usize..800).prop_flat_map(|n| (signal(n..n + 1), signal(n..n + 1)));
    let strategy = (pair, -5.0f64..5.0, -5.0f64..5.0, odd_taps(), 0.01f64..0.5);
    report(runner().run(&strategy, |((x, y), a, b, taps, cutoff)| {
        let f = design_lowpass(taps, cutoff).unwrap();
        let run = |v: &[f64]| {
            apply_fir(&TimeSeries::single(v.to_vec(), 1.0).unwrap(), &f)
                .unwrap()
                .column(0)
                .to_vec()
        };
        let combo: Vec<f64> = x.iter().zip(&y).map(|(p, q)| a * p + b * q).collect();
        let lhs = run(&combo);
        let fx = run(&x);
        let fy = run(&y);
        let diff: Vec<f64> = lhs
            .iter()
            .zip(fx.iter().zip(&fy))
            .map(|(l, (p, q))| l - (a * p + b * q))
            .collect();
        prop_assert!(rms(&diff) < 1e-9);
        Ok(())
    }))
}

pub fn resample_keeps_in_band_tone() -> Result<(), String> {
    let strategy = (
        1_000.0f64..50_000.0,
        1.5f64..8.0,
        0.05f64..0.4,
        0.0f64..(2.0 * PI),
        2_000usize..6_000,
    );
    report(runner().run(&strategy, |(fs, ratio, rel, phase, n)| {
        let fs_new = (fs / ratio).floor();
        let f0 = rel * fs_new;
        let x: Vec<f64> = (0..n).map(|i| (2.0 * PI * f0 * i as f64 / fs + phase).sin()).collect();
        let y = downsample(&TimeSeries::single(x, fs).unwrap(), fs_new).unwrap();
        let m = y.len();
        let expect = f0 * m as f64 / fs_new;
        let lo = (expect as usize).saturating_sub(5).max(1);
        let (k, _) = dft_peak(y.column(0), lo..=expect as usize + 5);
        prop_assert!((k as f64 - expect).abs() <= 1.0 + 1e-9, "peak {} expected {}", k, expect);
        let s = Spectrum::of(y.column(0), fs_new);
        prop_assert_eq!(s.peak_bin(0.0, fs_new / 2.0), Some(k));
        Ok(())
    }))
}

pub fn resample_rejects_out_of_band_tone() -> Result<(), String> {
    let strategy = (1_000.0f64..50_000.0, 2.0f64..8.0, 0.0f64..1.0, 2_000usize..6_000);
    report(runner().run(&strategy, |(fs, ratio, rel, n)| {
        let fs_new = (fs / ratio).floor();
        // Beyond the filter transition band, up to the source Nyquist.
        let lo = fs_new / 2.0 + 0.03 * fs;
        let f1 = lo + rel * (0.49 * fs - lo);
        let x: Vec<f64> = (0..n).map(|i| (2.0 * PI * f1 * i as f64 / fs).sin()).collect();
        let y = downsample(&TimeSeries::single(x, fs).unwrap(), fs_new).unwrap();
        let s = Spectrum::of(y.column(0), fs_new);
        let peak = (0..s.one_sided_len()).map(|k| s.amplitude(k)).fold(0.0, f64::max);
        prop_assert!(peak <= 0.01, "residual amplitude {} for {} Hz", peak, f1);
        Ok(())
    }))
}

pub fn resample_preserves_duration() -> Result<(), String> {
    let strategy = (1usize..2_000_000, 1.0f64..100_000.0, 1.0f64..20.0);
    report(runner().run(&strategy, |(n, fs, ratio)| {
        let fs_new = fs / ratio;
        let m = resampled_len(n, fs, fs_new);
        prop_assert!((m as f64 / fs_new - n as f64 / fs).abs() <= 1.0 / fs_new + 1e-9);
        Ok(())
    }))
}

pub fn zscore_is_idempotent() -> Result<(), String> {
    report(runner().run(&signal(3..500), |x| {
        prop_assume!(pop_std(&x) > 1e-6);
        let once = zscore(&TimeSeries::single(x, 1.0).unwrap()).unwrap();
        let twice = zscore(&once).unwrap();
        for (a, b) in once.column(0).iter().zip(twice.column(0)) {
            prop_assert!((a - b).abs() < 1e-9);
        }
        Ok(())
    }))
}

pub fn crossing_count_matches_cycles() -> Result<(), String> {
    let strategy = (500.0f64..20_000.0, 0.002f64..0.2, 0.0f64..(2.0 * PI), 500usize..5_000);
    report(runner().run(&strategy, |(fs, rel, phase, n)| {
        let f = rel * fs;
        let x: Vec<f64> = (0..n).map(|i| (2.0 * PI * f * i as f64 / fs + phase).sin()).collect();
        let cycles = (f * n as f64 / fs).floor() as i64;
        let c = falling_zero_crossings(&x).len() as i64;
        prop_assert!((c - cycles).abs() <= 1, "{} crossings for {} cycles", c, cycles);
        Ok(())
    }))
}

pub fn kernels_are_deterministic() -> Result<(), String> {
    let strategy = (signal(200..600), odd_taps(), 0.01f64..0.5);
    report(runner().run(&strategy, |(x, taps, cutoff)| {
        prop_assume!(x.len() >= taps);
        let s = TimeSeries::single(x, 3.0).unwrap();
        let f = design_lowpass(taps, cutoff).unwrap();
        prop_assert_eq!(design_lowpass(taps, cutoff).unwrap(), f.clone());
        prop_assert_eq!(apply_fir(&s, &f).unwrap(), apply_fir(&s, &f).unwrap());
        prop_assert_eq!(resample_fourier(&s, 1.0).unwrap(), resample_fourier(&s, 1.0).unwrap());
        prop_assert_eq!(zscore(&s).unwrap(), zscore(&s).unwrap());
        Ok(())
    }))
}

// fusion

#[derive(Debug, Clone)]
struct SourceSpec {
    fs: f64,
    duration: f64,
    noise: f64,
}

fn source_spec() -> impl Strategy<Value = SourceSpec> {
    (
        prop::sample::select(vec![1_000.0, 1_200.0, 2_000.0, 2_500.0, 3_001.0]),
        1.0f64..2.0,
        0.0f64..0.2,
    )
        .prop_map(|(fs, duration, noise)| SourceSpec { fs, duration, noise })
}

fn build(specs: &[SourceSpec], fundamental: f64, seed: u64) -> Vec<NamedSeries> {
    specs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let spec = SynthSpec::sine(s.fs, s.duration, fundamental, 2)
                .with_noise(s.noise, seed.wrapping_add(i as u64));
            NamedSeries::new(format!("d{i}"), generate(&spec).unwrap())
        })
        .collect()
}

pub fn fusion_provenance_is_complete_and_round_robin() -> Result<(), String> {
    let strategy = (
        prop::collection::vec(source_spec(), 2..4),
        20.0f64..45.0,
        1usize..6,
        any::<u64>(),
    );
    report(runner().run(&strategy, |(specs, fundamental, periods, seed)| {
        let datasets = build(&specs, fundamental, seed);
        let fused = fuse(&datasets, periods, seed).unwrap();
        let fs_new = fused.target_fs();
        prop_assert_eq!(fs_new, specs.iter().map(|s| s.fs).fold(f64::INFINITY, f64::min));
        let order: Vec<&str> = datasets.iter().map(|d| d.id.as_str()).collect();
        for (k, rec) in fused.provenance.iter().enumerate() {
            prop_assert_eq!(rec.dataset_id.as_str(), order[k % order.len()]);
        }
        let sources: HashMap<String, TimeSeries> = datasets
            .iter()
            .map(|d| (d.id.clone(), prepare_source(&d.series, fs_new).unwrap()))
            .collect();
        let rebuilt = reconstruct_from_provenance(&fused, &sources);
        for (f, col) in rebuilt.iter().enumerate() {
            prop_assert_eq!(col.as_slice(), fused.series.column(f));
        }
        for rec in &fused.provenance {
            let src = sources[&rec.dataset_id].column(0);
            prop_assert!(rec.start >= 1 && rec.end <= src.len());
            prop_assert!(src[rec.start - 1] > 0.0 && src[rec.start] <= 0.0);
            if rec.end < src.len() {
                prop_assert!(src[rec.end - 1] > 0.0 && src[rec.end] <= 0.0);
            }
        }
        let covered: usize = fused.provenance.iter().map(ProvenanceRecord::len).sum();
        prop_assert_eq!(covered, fused.series.len());
        Ok(())
    }))
}

/// Balanced means equal batch counts, so nothing is truncated. Low noise
/// keeps crossing chatter from inflating one side's count.
pub fn balanced_fusion_is_standardized() -> Result<(), String> {
    let strategy = (
        prop::sample::select(vec![2_000.0, 3_000.0, 4_000.0]),
        40.0f64..60.0,
        0.0f64..0.02,
        1usize..5,
        any::<u64>(),
    );
    report(runner().run(&strategy, |(fs, fundamental, noise, periods, seed)| {
        let specs = vec![
            SourceSpec { fs, duration: 2.0, noise },
            SourceSpec { fs: 5_000.0, duration: 2.0, noise },
        ];
        let fused = fuse(&build(&specs, fundamental, seed), periods, seed).unwrap();
        prop_assume!(fused.summary.iter().all(|s| s.batches_used == s.batches_available));
        for f in 0..fused.series.n_features() {
            let c = fused.series.column(f);
            prop_assert!(mean(c).abs() <= 0.05, "mean {}", mean(c));
            prop_assert!((pop_std(c) - 1.0).abs() <= 0.05, "std {}", pop_std(c));
        }
        Ok(())
    }))
}

pub fn fusion_is_bit_identical_across_runs() -> Result<(), String> {
    let strategy = (prop::collection::vec(source_spec(), 2..3), any::<u64>());
    report(runner().run(&strategy, |(specs, seed)| {
        let datasets = build(&specs, 30.0, seed);
        let a = fuse(&datasets, 3, seed).unwrap();
        let b = fuse(&datasets, 3, seed).unwrap();
        prop_assert_eq!(&a.series, &b.series);
        prop_assert_eq!(&a.provenance, &b.provenance);
        Ok(())
    }))
}

pub fn fusion_is_bit_identical_across_thread_counts() -> Result<(), String> {
    let specs = vec![
        SourceSpec { fs: 1_000.0, duration: 1.5, noise: 0.1 },
        SourceSpec { fs: 3_001.0, duration: 1.5, noise: 0.05 },
        SourceSpec { fs: 2_000.0, duration: 1.5, noise: 0.0 },
    ];
    let datasets = build(&specs, 25.0, 11);
    let results: Vec<FusedDataset> = [1, 2, 3, 8]
        .iter()
        .map(|&t| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
            pool.install(|| fuse(&datasets, 4, 11).unwrap())
        })
        .collect();
    for r in &results[1..] {
        if r.series != results[0].series || r.provenance != results[0].provenance {
            return Err("fused output depends on the pool size".into());
        }
    }
    Ok(())
}

// ingest

pub fn loaded_length_is_rows_minus_trim() -> Result<(), String> {
    let strategy = (prop::collection::vec(2usize..60, 1..5), any::<u64>());
    report(runner().run(&strategy, |(rows, trim_seed)| {
        let trim = (trim_seed as usize) % rows.iter().min().unwrap();
        let dir = tempfile::tempdir().unwrap();
        let files: Vec<_> = rows
            .iter()
            .enumerate()
            .map(|(k, &r)| {
                let p = dir.path().join(format!("{k}.csv"));
                let mut f = std::fs::File::create(&p).unwrap();
                writeln!(f, "v").unwrap();
                for i in 0..r {
                    writeln!(f, "{}", i as f64 * 0.5).unwrap();
                }
                p
            })
            .collect();
        let m = DatasetManifest {
            dataset_id: "p".into(),
            fs: 1.0,
            files,
            label: Label::Healthy,
            trim_head: trim,
            feature_columns: vec!["v".into()],
        };
        let x = load_dataset(&m).unwrap();
        prop_assert_eq!(x.len(), rows.iter().map(|r| r - trim).sum::<usize>());
        Ok(())
    }))
}

pub fn budget_slices_are_ordered_subsequences() -> Result<(), String> {
    let strategy = (prop::collection::vec(1usize..400, 1..6), 0.0f64..1.0, any::<u64>());
    report(runner().run(&strategy, |(seg_lens, frac, seed)| {
        let total: usize = seg_lens.iter().sum();
        let budget = ((total as f64 * frac) as usize).max(1);
        let mut segments = Vec::new();
        let mut at = 0;
        for l in &seg_lens {
            segments.push(at..at + l);
            at += l;
        }
        let x = TimeSeries::single((0..total).map(|i| i as f64).collect(), 1.0).unwrap();
        let y = slice_training_budget_segments(&x, &segments, budget, seed).unwrap();
        prop_assert_eq!(y.len(), budget);
        // Strictly increasing source indices: order preserved, nothing repeated.
        prop_assert!(y.column(0).windows(2).all(|w| w[1] > w[0]));
        for s in plan_budget_slices(&segments, budget, seed).unwrap() {
            prop_assert!(segments.iter().any(|g| g.start <= s.start && s.end <= g.end));
        }
        Ok(())
    }))
}

// synth

pub fn synth_is_seed_deterministic() -> Result<(), String> {
    report(runner().run(&(any::<u64>(), 0.0f64..1.0), |(seed, sigma)| {
        let spec = SynthSpec::sine(1_000.0, 0.5, 20.0, 2).with_noise(sigma, seed);
        prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        Ok(())
    }))
}

pub fn healthy_synth_batches_at_max_periods() -> Result<(), String> {
    let strategy = (1_000.0f64..8_000.0, 5.0f64..100.0, 0.5f64..2.0, 1usize..4);
    report(runner().run(&strategy, |(fs, fundamental, duration, features)| {
        let spec = SynthSpec::sine(fs, duration, fundamental, features);
        prop_assume!(spec.validate().is_ok());
        let x = zscore(&generate(&spec).unwrap()).unwrap();
        let p = (duration * fundamental).floor() as usize - 1;
        prop_assert!(batch_periods(&x, p, "s").is_ok());
        Ok(())
    }))
}

pub fn noisier_synth_has_more_off_harmonic_energy() -> Result<(), String> {
    let strategy = (any::<u64>(), 0.0f64..0.1, 0.05f64..0.5);
    report(runner().run(&strategy, |(seed, low, extra)| {
        let quiet = generate(&SynthSpec::sine(1_000.0, 1.0, 50.0, 1).with_noise(low, seed)).unwrap();
        let loud =
            generate(&SynthSpec::sine(1_000.0, 1.0, 50.0, 1).with_noise(low + extra, seed)).unwrap();
        let off = |x: &TimeSeries| {
            let s = Spectrum::of(x.column(0), 1_000.0);
            (1..s.one_sided_len()).filter(|k| k % 50 != 0).map(|k| s.power(k)).sum::<f64>()
        };
        prop_assert!(off(&loud) > off(&quiet));
        Ok(())
    }))
}

// eval

fn residuals(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..10.0, len)
}

fn threshold(values: &[f64], method: ThresholdMethod) -> f64 {
    let r = ResidualSeries::from_columns(vec![values.to_vec()], "r").unwrap();
    calibrate_thresholds(&r, method).unwrap().per_feature[0]
}

pub fn thresholds_do_not_drop_when_adding_a_value_below_max() -> Result<(), String> {
    report(runner().run(&(residuals(2..200), 0.0f64..1.0), |(base, pick)| {
        let max = base.iter().copied().fold(0.0, f64::max);
        let extra = pick * max;
        let mut grown = base.clone();
        grown.push(extra);
        for method in [ThresholdMethod::MaxMae, ThresholdMethod::MeanPlus2Sigma] {
            let before = threshold(&base, method);
            let after = threshold(&grown, method);
            prop_assert!(
                after >= before - 1e-12,
                "{:?}: {} -> {} after adding {}",
                method,
                before,
                after,
                extra
            );
        }
        Ok(())
    }))
}

pub fn thresholds_do_not_drop_when_adding_a_new_maximum() -> Result<(), String> {
    report(runner().run(&(residuals(2..200), 0.0f64..10.0), |(base, above)| {
        let max = base.iter().copied().fold(0.0, f64::max);
        let mut grown = base.clone();
        grown.push(max + above);
        for method in [ThresholdMethod::MaxMae, ThresholdMethod::MeanPlus2Sigma] {
            prop_assert!(threshold(&grown, method) >= threshold(&base, method) - 1e-12);
        }
        Ok(())
    }))
}

pub fn raising_thresholds_never_creates_anomalies() -> Result<(), String> {
    let cols = (1usize..4, 1usize..100)
        .prop_flat_map(|(f, n)| prop::collection::vec(residuals(n..n + 1), f..f + 1));
    let strategy = (
        cols,
        prop::collection::vec(0.0f64..10.0, 4),
        prop::collection::vec(0.0f64..5.0, 4),
        0.0f64..0.5,
    );
    report(runner().run(&strategy, |(cols, base, bump, frac)| {
        let f = cols.len();
        let r = ResidualSeries::from_columns(cols, "x").unwrap();
        let low = ThresholdSet {
            per_feature: base[..f].to_vec(),
            method: ThresholdMethod::MaxMae,
        };
        let high = ThresholdSet {
            per_feature: base[..f].iter().zip(&bump).map(|(a, b)| a + b).collect(),
            method: ThresholdMethod::MaxMae,
        };
        if decide_file(&r, &low, frac).unwrap() == Label::Healthy {
            prop_assert_eq!(decide_file(&r, &high, frac).unwrap(), Label::Healthy);
        }
        Ok(())
    }))
}

pub fn anova_sums_of_squares_add_up() -> Result<(), String> {
    let groups = prop::collection::vec(prop::collection::vec(-50.0f64..50.0, 2..15), 2..9);
    report(runner().run(&groups, |groups| {
        let t = anova_oneway(&groups).unwrap();
        let n: usize = groups.iter().map(Vec::len).sum();
        prop_assert_eq!(t.between.df + t.within.df, t.total.df);
        prop_assert_eq!(t.total.df, n - 1);
        prop_assert_eq!(t.between.df, groups.len() - 1);
        let sum = t.between.sum_sq + t.within.sum_sq;
        prop_assert!((sum - t.total.sum_sq).abs() <= 1e-9 * t.total.sum_sq.max(f64::MIN_POSITIVE));
        Ok(())
    }))
}

pub fn flops_double_with_samples() -> Result<(), String> {
    let strategy = (1u64..1_000_000, 1u64..1_000_000_000, 1u64..1_000);
    report(runner().run(&strategy, |(p, s, e)| {
        let one = flops_estimate(p, s, e).unwrap().flops;
        let two = flops_estimate(p, 2 * s, e).unwrap().flops;
        prop_assert_eq!(two, 2.0 * one);
        Ok(())
    }))
}

pub fn pca_components_are_orthonormal() -> Result<(), String> {
    let rows = (3usize..30, 2usize..12).prop_flat_map(|(n, d)| {
        prop::collection::vec(prop::collection::vec(-10.0f64..10.0, d..d + 1), n..n + 1)
    });
    report(runner().run(&rows, |rows| {
        let p = pca_project(&rows, 2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let d = dot(&p.components[a], &p.components[b]);
                let want = if a == b { 1.0 } else { 0.0 };
                prop_assert!((d - want).abs() < 1e-9, "<{},{}> = {}", a, b, d);
            }
        }
        prop_assert!(p.explained_variance_ratio[0] >= p.explained_variance_ratio[1]);
        prop_assert!(p.explained_variance_ratio.iter().all(|r| (0.0..=1.0 + 1e-12).contains(r)));
        Ok(())
    }))
}

/// Every (predicted, actual) vector of length 0..=12 against brute-force counting.
pub fn score_matches_brute_force_exhaustively() -> Result<(), String> {
    const PAIRS: [(Label, Label); 4] = [
        (Label::Healthy, Label::Healthy),
        (Label::Healthy, Label::Anomalous),
        (Label::Anomalous, Label::Healthy),
        (Label::Anomalous, Label::Anomalous),
    ];
    let mut pairs = Vec::with_capacity(12);
    for len in 0..=12u32 {
        for code in 0..4u32.pow(len) {
            pairs.clear();
            let mut c = code;
            for _ in 0..len {
                pairs.push(PAIRS[(c % 4) as usize]);
                c /= 4;
            }
            let r = score(&pairs);
            let (tp, fp, tn, fneg) = brute_confusion(&pairs);
            let got = (r.counts.tp, r.counts.fp, r.counts.tn, r.counts.fn_);
            if got != (tp, fp, tn, fneg) {
                return Err(format!("{pairs:?}: {got:?} vs {:?}", (tp, fp, tn, fneg)));
            }
            let precision_ok = tp + fp == 0 || r.precision == tp as f64 / (tp + fp) as f64;
            let recall_ok = tp + fneg == 0 || r.recall == tp as f64 / (tp + fneg) as f64;
            if !(precision_ok && recall_ok) {
                return Err(format!("{pairs:?}: ratios differ"));
            }
        }
    }
    Ok(())
}

pub const ALL: &[(&str, Check)] = &[
    ("lowpass_is_symmetric_with_unit_sum", lowpass_is_symmetric_with_unit_sum),
    ("fir_is_linear", fir_is_linear),
    ("resample_keeps_in_band_tone", resample_keeps_in_band_tone),
    ("resample_rejects_out_of_band_tone", resample_rejects_out_of_band_tone),
    ("resample_preserves_duration", resample_preserves_duration),
    ("zscore_is_idempotent", zscore_is_idempotent),
    ("crossing_count_matches_cycles", crossing_count_matches_cycles),
    ("kernels_are_deterministic", kernels_are_deterministic),
    ("fusion_provenance_is_complete_and_round_robin", fusion_provenance_is_complete_and_round_robin),
    ("balanced_fusion_is_standardized", balanced_fusion_is_standardized),
    ("fusion_is_bit_identical_across_runs", fusion_is_bit_identical_across_runs),
    ("fusion_is_bit_identical_across_thread_counts", fusion_is_bit_identical_across_thread_counts),
    ("loaded_length_is_rows_minus_trim", loaded_length_is_rows_minus_trim),
    ("budget_slices_are_ordered_subsequences", budget_slices_are_ordered_subsequences),
    ("synth_is_seed_deterministic", synth_is_seed_deterministic),
    ("healthy_synth_batches_at_max_periods", healthy_synth_batches_at_max_periods),
    ("noisier_synth_has_more_off_harmonic_energy", noisier_synth_has_more_off_harmonic_energy),
    ("thresholds_do_not_drop_when_adding_a_value_below_max", thresholds_do_not_drop_when_adding_a_value_below_max),
    ("thresholds_do_not_drop_when_adding_a_new_maximum", thresholds_do_not_drop_when_adding_a_new_maximum),
    ("raising_thresholds_never_creates_anomalies", raising_thresholds_never_creates_anomalies),
    ("anova_sums_of_squares_add_up", anova_sums_of_squares_add_up),
    ("flops_double_with_samples", flops_double_with_samples),
    ("pca_components_are_orthonormal", pca_components_are_orthonormal),
    ("score_matches_brute_force_exhaustively", score_matches_brute_force_exhaustively),
];
