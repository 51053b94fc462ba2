//! Generates a healthy signal and one of each fault kind, then shows how the
//! faults change the signal after onset.

use fusekit::synth::{generate, AnomalyKind, AnomalySpec, Harmonic, SynthSpec};

fn rms(v: &[f64]) -> f64 {
    (v.iter().map(|x| x * x).sum::<f64>() / v.len() as f64).sqrt()
}

fn main() -> fusekit::Result<()> {
    let mut base = SynthSpec::sine(5_000.0, 2.0, 50.0, 3).with_noise(0.02, 9);
    base.harmonics.push(Harmonic { order: 5, amplitude: 0.08 });
    base.harmonics.push(Harmonic { order: 7, amplitude: 0.05 });

    let healthy = generate(&base)?;
    println!("healthy: {} samples x {} features, rms {:.4}", healthy.len(), healthy.n_features(), rms(healthy.column(0)));

    for kind in [AnomalyKind::AmplitudeStep, AnomalyKind::HarmonicInjection, AnomalyKind::Dropout] {
        let spec = base.clone().with_anomaly(AnomalySpec {
            kind,
            start: 1.0,
            magnitude: 0.5,
            frequency_ratio: 0.9,
        });
        let x = generate(&spec)?;
        let c = x.column(0);
        println!("{kind:?}: rms before {:.4}, after {:.4}", rms(&c[..5_000]), rms(&c[5_000..]));
    }

    let toml = toml::to_string(&base).expect("spec serializes");
    println!("\nspec as TOML:\n{toml}");
    Ok(())
}
