//! Designs the anti-alias low-pass used before downsampling 55,611 Hz to
//! 10,000 Hz and prints its response at a few frequencies.

use fusekit::signal::design_lowpass;

fn main() -> fusekit::Result<()> {
    let (fs, fs_new) = (55_611.0, 10_000.0);
    let cutoff = (fs_new / 2.0) / fs;
    let filter = design_lowpass(101, cutoff)?;

    println!("{} taps, order {}, group delay {} samples", filter.num_taps(), filter.order(), filter.group_delay());
    println!("cutoff {:.5} cycles/sample ({} Hz)", filter.cutoff_normalized(), fs_new / 2.0);
    println!("tap sum {:.12}", filter.taps().iter().sum::<f64>());

    println!("{:>10} {:>12} {:>10}", "Hz", "|H|", "dB");
    for hz in [0.0, 60.0, 1_000.0, 3_000.0, 5_000.0, 6_000.0, 7_000.0, 10_000.0, 20_000.0] {
        let h = filter.magnitude_at(hz / fs);
        println!("{hz:>10} {h:>12.6} {:>10.1}", 20.0 * h.max(1e-12).log10());
    }
    Ok(())
}
