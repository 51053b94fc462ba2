//! Projects windows of two datasets onto their first two principal
//! components to see whether the sources overlap.

use fusekit::eval::{pca_project, window_rows};
use fusekit::signal::zscore;
use fusekit::synth::{generate, Harmonic, SynthSpec};

fn main() -> fusekit::Result<()> {
    let a = zscore(&generate(&SynthSpec::sine(2_000.0, 4.0, 50.0, 3).with_noise(0.05, 1))?)?;
    let mut other = SynthSpec::sine(2_000.0, 4.0, 50.0, 3).with_noise(0.05, 2);
    other.harmonics.push(Harmonic { order: 3, amplitude: 0.3 });
    let b = zscore(&generate(&other)?)?;

    let window = 40;
    let mut rows = window_rows(&a, window)?;
    let split = rows.len();
    rows.extend(window_rows(&b, window)?);

    let p = pca_project(&rows, 2)?;
    println!("{} windows of {} values", rows.len(), rows[0].len());
    println!("explained variance ratio {:?}", p.explained_variance_ratio);
    let centroid = |r: &[Vec<f64>]| {
        let n = r.len() as f64;
        [r.iter().map(|v| v[0]).sum::<f64>() / n, r.iter().map(|v| v[1]).sum::<f64>() / n]
    };
    println!("centroid a {:?}", centroid(&p.projected[..split]));
    println!("centroid b {:?}", centroid(&p.projected[split..]));
    Ok(())
}
