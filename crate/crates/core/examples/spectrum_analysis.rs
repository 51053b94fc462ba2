//! Amplitude distribution and spectrum of a signal with harmonics, written
//! as plot-ready files by the same code path as `fusekit analyze`.

use fusekit::cli::cmd_analyze;
use fusekit::ingest::write_series_csv;
use fusekit::signal::Spectrum;
use fusekit::synth::{generate, Harmonic, SynthSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut spec = SynthSpec::sine(4_000.0, 1.0, 60.0, 1).with_noise(0.01, 3);
    spec.harmonics.push(Harmonic { order: 3, amplitude: 0.2 });
    spec.harmonics.push(Harmonic { order: 5, amplitude: 0.1 });
    let x = generate(&spec)?;

    let s = Spectrum::of(x.column(0), x.fs());
    println!("bin resolution {} Hz", s.bin_resolution());
    let mut peaks: Vec<usize> = (1..s.one_sided_len()).filter(|&k| s.amplitude(k) > 0.05).collect();
    peaks.sort_by(|a, b| s.amplitude(*b).total_cmp(&s.amplitude(*a)));
    for k in peaks {
        println!("  {:>6} Hz amplitude {:.4}", s.frequency(k), s.amplitude(k));
    }
    println!("power 0-500 Hz {:.4}", s.band_power(0.0, 500.0));

    let dir = std::env::temp_dir().join("fusekit-example/analyze");
    std::fs::create_dir_all(&dir)?;
    let input = dir.join("signal.csv");
    write_series_csv(&x, &input)?;
    let summary = cmd_analyze(&input, x.fs(), (0.0, 500.0), 40, &dir.join("signal"))?;
    println!("wrote histogram, spectrum and summary for {} samples to {}", summary.samples, dir.display());
    Ok(())
}
