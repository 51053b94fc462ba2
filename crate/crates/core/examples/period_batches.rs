//! Normalizes a noisy three-phase signal and cuts it into 4-period batches.

use fusekit::fusion::batch_periods;
use fusekit::signal::{mean_std, zero_crossings, zscore};
use fusekit::synth::{generate, SynthSpec};

fn main() -> fusekit::Result<()> {
    let raw = generate(&SynthSpec::sine(10_000.0, 1.0, 50.0, 3).with_noise(0.02, 1))?;
    let x = zscore(&raw)?;
    for (name, col) in x.feature_names().iter().zip(x.columns()) {
        let (m, s) = mean_std(col);
        println!("{name}: mean {m:+.2e}, std {s:.6}");
    }

    // Crossings are not debounced: noise near zero can add a short extra one.
    let crossings = zero_crossings(&x);
    println!("{} falling crossings for 50 cycles, first at {:?}", crossings.len(), &crossings[..3]);

    let batches = batch_periods(&x, 4, "demo")?;
    let used: usize = batches.iter().map(|b| b.len()).sum();
    println!("{} batches of 4 periods, {} of {} samples discarded", batches.len(), x.len() - used, x.len());
    for b in batches.iter().take(3) {
        println!("  batch {}: samples {}..{}", b.ordinal, b.span.start, b.span.end);
    }
    Ok(())
}
