//! Fuses two recordings made at 10,000 Hz and 55,611 Hz, writes the result
//! and checks every fused sample against its recorded source span.

use fusekit::fusion::{fuse, prepare_source, NamedSeries};
use fusekit::ingest::{read_fused, write_fused};
use fusekit::synth::{generate, SynthSpec};

fn main() -> fusekit::Result<()> {
    let lab = generate(&SynthSpec::sine(10_000.0, 2.0, 60.0, 3).with_noise(0.02, 1))?;
    let field = generate(&SynthSpec::sine(55_611.0, 2.0, 60.0, 3).with_noise(0.05, 2))?;
    let datasets = [NamedSeries::new("lab", lab), NamedSeries::new("field", field)];

    let fused = fuse(&datasets, 4, 42)?;
    println!("target fs {} Hz, {} samples", fused.target_fs(), fused.series.len());
    for s in &fused.summary {
        println!(
            "  {}: {} batches available, {} used, {} discarded",
            s.dataset_id,
            s.batches_available,
            s.batches_used,
            s.batches_discarded()
        );
    }

    let prefix = std::env::temp_dir().join("fusekit-example/fused");
    write_fused(&fused, &prefix)?;
    let back = read_fused(&prefix)?;
    println!("wrote {}", prefix.display());

    let sources: Vec<_> = datasets
        .iter()
        .map(|d| Ok((d.id.clone(), prepare_source(&d.series, fused.target_fs())?)))
        .collect::<fusekit::Result<_>>()?;
    let mut at = 0;
    let mut mismatches = 0;
    for rec in &back.provenance {
        let (_, src) = sources.iter().find(|(id, _)| *id == rec.dataset_id).unwrap();
        for f in 0..src.n_features() {
            let want = &src.column(f)[rec.start..rec.end];
            let got = &back.series.column(f)[at..at + rec.len()];
            mismatches += want.iter().zip(got).filter(|(a, b)| a.to_bits() != b.to_bits()).count();
        }
        at += rec.len();
    }
    println!("audit: {} batches, {mismatches} mismatched samples", back.provenance.len());
    Ok(())
}
