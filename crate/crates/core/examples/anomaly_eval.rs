//! Seasonal-naive residuals for healthy and faulty files, thresholds from a
//! validation file, per-file decisions and P/R/F1.

use fusekit::eval::{baseline_residuals, calibrate_thresholds, decide_file, score, ThresholdMethod};
use fusekit::synth::{generate, AnomalyKind, AnomalySpec, SynthSpec};

fn main() -> fusekit::Result<()> {
    let (fs, f0) = (2_000.0, 50.0);
    let period = (fs / f0) as usize;
    let spec = |seed| SynthSpec::sine(fs, 2.0, f0, 3).with_noise(0.01, seed);
    let residuals = |s: &SynthSpec| baseline_residuals(&generate(s)?, period);

    let validation = residuals(&spec(100))?;
    let mut files = Vec::new();
    for i in 0..6 {
        files.push((residuals(&spec(i))?, fusekit::ingest::Label::Healthy));
        let faulty = spec(50 + i).with_anomaly(AnomalySpec {
            kind: AnomalyKind::HarmonicInjection,
            start: 0.5,
            magnitude: 0.5 + 0.1 * i as f64,
            frequency_ratio: 1.5,
        });
        files.push((residuals(&faulty)?, fusekit::ingest::Label::Anomalous));
    }

    for method in [ThresholdMethod::MaxMae, ThresholdMethod::MeanPlus2Sigma] {
        let t = calibrate_thresholds(&validation, method)?;
        // mean + 2 sigma flags ~5% of healthy samples by construction.
        let exceed = if method == ThresholdMethod::MaxMae { 0.01 } else { 0.1 };
        let pairs: Vec<_> = files
            .iter()
            .map(|(r, actual)| Ok((decide_file(r, &t, exceed)?, *actual)))
            .collect::<fusekit::Result<_>>()?;
        let report = score(&pairs);
        println!("{method:?}: thresholds {:?}, exceed fraction {exceed}", t.per_feature);
        print!("{}", report.to_table());
    }
    Ok(())
}
