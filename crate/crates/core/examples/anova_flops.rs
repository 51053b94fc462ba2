//! One-way ANOVA over F1 scores from repeated runs at several data ratios,
//! and the training cost of each training-set size.

use fusekit::eval::{anova_oneway, flops_estimate};

fn main() -> fusekit::Result<()> {
    // Ten runs for each of four mixing ratios.
    let groups: Vec<Vec<f64>> = (0..4)
        .map(|g| {
            (0..10)
                .map(|r| 0.80 + 0.04 * g as f64 + 0.03 * (((r * 37 + g * 11) % 7) as f64 - 3.0))
                .collect()
        })
        .collect();
    let table = anova_oneway(&groups)?;
    print!("{}", table.to_table());
    if table.degenerate {
        println!("within-group variance is zero");
    }

    let params = 25_635;
    let full = flops_estimate(params, 4_000_000, 8)?;
    for samples in [4_000_000u64, 2_000_000, 1_000_000, 500_000, 250_000] {
        let e = flops_estimate(params, samples, 8)?;
        println!(
            "{samples:>9} samples: {:.3e} FLOPs ({:.1}% fewer than full)",
            e.flops,
            100.0 * (1.0 - e.flops / full.flops)
        );
    }
    Ok(())
}
