//! Downsamples a 60 Hz signal with a 7 kHz interferer from 55,611 Hz to
//! 10,000 Hz. Picking the nearest source sample instead folds the interferer
//! onto 3 kHz.

use std::f64::consts::PI;

use fusekit::signal::{downsample, resampled_len, Spectrum};
use fusekit::TimeSeries;

fn main() -> fusekit::Result<()> {
    let (fs, fs_new) = (55_611.0, 10_000.0);
    let x: Vec<f64> = (0..55_611)
        .map(|i| {
            let t = i as f64 / fs;
            (2.0 * PI * 60.0 * t).sin() + 0.5 * (2.0 * PI * 7_000.0 * t).sin()
        })
        .collect();
    let m = resampled_len(x.len(), fs, fs_new);
    println!("{} samples -> {m} samples", x.len());

    let series = TimeSeries::single(x.clone(), fs)?;
    let resampled = downsample(&series, fs_new)?;
    let picked: Vec<f64> = (0..m)
        .map(|i| x[((i as f64 * fs / fs_new).round() as usize).min(x.len() - 1)])
        .collect();

    for (name, y) in [("filter + FFT", resampled.column(0)), ("nearest sample", &picked[..])] {
        let s = Spectrum::of(y, fs_new);
        let at = |hz: f64| s.amplitude((hz / s.bin_resolution()).round() as usize);
        println!(
            "{name:>14}: 60 Hz amplitude {:.4}, 3 kHz amplitude {:.2e}",
            at(60.0),
            at(3_000.0)
        );
    }
    Ok(())
}
