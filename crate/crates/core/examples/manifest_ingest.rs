//! Writes a two-file dataset with a manifest, loads it back with a trimmed
//! head and cuts a training budget out of it.

use std::io::Write;

use fusekit::ingest::{load_dataset_with_spans, slice_training_budget_segments, DatasetManifest, Label};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("fusekit-example/ingest");
    std::fs::create_dir_all(&dir)?;
    for (k, rows) in [(0, 3_000), (1, 5_000)] {
        let path = dir.join(format!("run{k}.csv"));
        let mut f = std::io::BufWriter::new(std::fs::File::create(&path)?);
        writeln!(f, "time,current_a,current_b")?;
        for i in 0..rows {
            let t = i as f64 / 1_000.0;
            writeln!(f, "{t},{},{}", (t * 314.159).sin(), (t * 314.159 - 2.094).sin())?;
        }
    }

    let manifest = DatasetManifest {
        dataset_id: "bench".into(),
        fs: 1_000.0,
        files: vec!["run0.csv".into(), "run1.csv".into()],
        label: Label::Healthy,
        trim_head: 500,
        feature_columns: vec!["current_a".into(), "current_b".into()],
    };
    let path = dir.join("bench.manifest.toml");
    manifest.write(&path)?;
    print!("{}", manifest.to_toml());

    let loaded = load_dataset_with_spans(&DatasetManifest::from_path(&path)?)?;
    println!("loaded {} samples, file spans {:?}", loaded.series.len(), loaded.file_spans);

    let budget = slice_training_budget_segments(&loaded.series, &loaded.file_spans, 2_000, 7)?;
    println!("budget of {} samples drawn proportionally from both files", budget.len());
    Ok(())
}
