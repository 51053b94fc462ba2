//! Manifest-driven CSV loading, training-budget slicing, and fused output
//! serialization with a provenance sidecar.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::Range;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::{FusedDataset, ProvenanceRecord};
use crate::signal::TimeSeries;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Healthy,
    Anomalous,
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Label::Healthy => "healthy",
            Label::Anomalous => "anomalous",
        })
    }
}

/// Declarative description of one dataset on disk.
///
/// Stored as TOML. Relative `files` entries are resolved against the
/// directory holding the manifest when loaded with [`DatasetManifest::from_path`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetManifest {
    pub dataset_id: String,
    /// Sampling frequency in Hz.
    pub fs: f64,
    pub files: Vec<PathBuf>,
    pub label: Label,
    /// Rows dropped from the start of every file (start-up transient).
    #[serde(default)]
    pub trim_head: usize,
    pub feature_columns: Vec<String>,
}

impl DatasetManifest {
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut manifest: DatasetManifest = toml::from_str(&text).map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?;
        let base = path.parent().unwrap_or(Path::new(""));
        for f in &mut manifest.files {
            if f.is_relative() {
                *f = base.join(&*f);
            }
        }
        manifest.validate().map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?;
        Ok(manifest)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifest fields are always representable in TOML")
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_toml()).map_err(|e| Error::io(path, e))
    }

    /// Checks the invariants that do not need the files themselves.
    pub fn validate(&self) -> Result<()> {
        if self.dataset_id.is_empty() {
            return Err(Error::invalid("dataset_id", "must not be empty"));
        }
        if !(self.fs.is_finite() && self.fs > 0.0) {
            return Err(Error::invalid("fs", format!("must be positive, got {}", self.fs)));
        }
        if self.files.is_empty() {
            return Err(Error::invalid("files", "at least one file required"));
        }
        if self.feature_columns.is_empty() {
            return Err(Error::invalid("feature_columns", "at least one column required"));
        }
        Ok(())
    }
}

/// A loaded dataset together with the sample range each file occupies.
#[derive(Debug, Clone)]
pub struct LoadedDataset {
    pub series: TimeSeries,
    pub file_spans: Vec<Range<usize>>,
}

fn parse_value(raw: &str, path: &Path, line: usize, column: &str) -> Result<f64> {
    let v: f64 = raw.trim().parse().map_err(|_| Error::Parse {
        path: path.to_path_buf(),
        row: line,
        reason: format!("column `{column}`: cannot parse {raw:?} as a number"),
    })?;
    if !v.is_finite() {
        return Err(Error::Parse {
            path: path.to_path_buf(),
            row: line,
            reason: format!("column `{column}`: non-finite value {raw:?}"),
        });
    }
    Ok(v)
}

/// Reads the named columns (or every column) of a headed numeric CSV.
///
/// Returns the header names actually selected and one vector per column.
/// Errors carry the file path and the 1-based line number.
pub fn read_csv_columns(
    path: &Path,
    wanted: Option<&[String]>,
) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(std::io::BufReader::with_capacity(1 << 20, file));
    let header = reader
        .headers()
        .map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?
        .clone();
    let (names, indices): (Vec<String>, Vec<usize>) = match wanted {
        Some(cols) => {
            let mut idx = Vec::with_capacity(cols.len());
            for c in cols {
                let i = header.iter().position(|h| h == c).ok_or_else(|| Error::Format {
                    path: path.to_path_buf(),
                    reason: format!("header mismatch: column `{c}` not found"),
                })?;
                idx.push(i);
            }
            (cols.to_vec(), idx)
        }
        None => (header.iter().map(str::to_string).collect(), (0..header.len()).collect()),
    };
    let mut columns = vec![Vec::new(); names.len()];
    let mut record = csv::StringRecord::new();
    loop {
        match reader.read_record(&mut record) {
            Ok(true) => {}
            Ok(false) => break,
            Err(e) => {
                let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    row: line,
                    reason: e.to_string(),
                });
            }
        }
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        for ((dst, &i), name) in columns.iter_mut().zip(&indices).zip(&names) {
            let raw = record.get(i).ok_or_else(|| Error::Parse {
                path: path.to_path_buf(),
                row: line,
                reason: format!("missing column `{name}`"),
            })?;
            dst.push(parse_value(raw, path, line, name)?);
        }
    }
    Ok((names, columns))
}

/// Reads a headed numeric CSV into a series sampled at `fs`.
pub fn read_series_csv(path: impl AsRef<Path>, fs: f64) -> Result<TimeSeries> {
    let path = path.as_ref();
    let (names, columns) = read_csv_columns(path, None)?;
    if columns.is_empty() || columns[0].is_empty() {
        return Err(Error::Format {
            path: path.to_path_buf(),
            reason: "no data rows".into(),
        });
    }
    TimeSeries::new(columns, fs, names).map_err(|e| Error::Format {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })
}

/// Writes `columns` under `names` with shortest round-trip decimal formatting.
pub fn write_csv_columns(path: &Path, names: &[String], columns: &[Vec<f64>]) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::with_capacity(1 << 20, file);
    let io = |e| Error::io(path, e);
    writeln!(w, "{}", names.join(",")).map_err(io)?;
    let rows = columns.first().map_or(0, Vec::len);
    for r in 0..rows {
        for (j, col) in columns.iter().enumerate() {
            if j > 0 {
                w.write_all(b",").map_err(io)?;
            }
            write!(w, "{}", col[r]).map_err(io)?;
        }
        w.write_all(b"\n").map_err(io)?;
    }
    w.flush().map_err(io)
}

pub fn write_series_csv(series: &TimeSeries, path: impl AsRef<Path>) -> Result<()> {
    write_csv_columns(path.as_ref(), series.feature_names(), series.columns())
}

fn load_file(path: &Path, manifest: &DatasetManifest) -> Result<Vec<Vec<f64>>> {
    let (_, mut columns) = read_csv_columns(path, Some(&manifest.feature_columns))?;
    let rows = columns[0].len();
    if manifest.trim_head >= rows {
        return Err(Error::Format {
            path: path.to_path_buf(),
            reason: format!(
                "trim_head {} leaves nothing of {rows} rows",
                manifest.trim_head
            ),
        });
    }
    for c in &mut columns {
        c.drain(..manifest.trim_head);
    }
    Ok(columns)
}

/// Loads every file of `manifest`, trims the head of each and concatenates
/// them in manifest order.
pub fn load_dataset_with_spans(manifest: &DatasetManifest) -> Result<LoadedDataset> {
    manifest.validate()?;
    let parts: Vec<Vec<Vec<f64>>> = manifest
        .files
        .par_iter()
        .map(|p| load_file(p, manifest))
        .collect::<Result<_>>()?;
    let total: usize = parts.iter().map(|p| p[0].len()).sum();
    let mut columns = vec![Vec::with_capacity(total); manifest.feature_columns.len()];
    let mut file_spans = Vec::with_capacity(parts.len());
    for part in parts {
        let start = columns[0].len();
        for (dst, src) in columns.iter_mut().zip(part) {
            dst.extend(src);
        }
        file_spans.push(start..columns[0].len());
    }
    let series = TimeSeries::new(columns, manifest.fs, manifest.feature_columns.clone())
        .map_err(|e| e.in_dataset(&manifest.dataset_id))?;
    Ok(LoadedDataset { series, file_spans })
}

pub fn load_dataset(manifest: &DatasetManifest) -> Result<TimeSeries> {
    Ok(load_dataset_with_spans(manifest)?.series)
}

/// Splits `budget` across segments in proportion to their length
/// (largest-remainder rounding, ties to the earlier segment) and draws one
/// uniformly placed contiguous window inside each segment.
pub fn plan_budget_slices(
    segments: &[Range<usize>],
    budget: usize,
    seed: u64,
) -> Result<Vec<Range<usize>>> {
    let available: usize = segments.iter().map(|s| s.len()).sum();
    if budget == 0 {
        return Err(Error::invalid("budget", "must be positive"));
    }
    if budget > available {
        return Err(Error::BudgetTooLarge { budget, available });
    }
    let mut quotas: Vec<usize> = Vec::with_capacity(segments.len());
    let mut remainders: Vec<(u128, usize)> = Vec::with_capacity(segments.len());
    for (i, s) in segments.iter().enumerate() {
        let exact = budget as u128 * s.len() as u128;
        quotas.push((exact / available as u128) as usize);
        remainders.push((exact % available as u128, i));
    }
    let short = budget - quotas.iter().sum::<usize>();
    remainders.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(_, i) in remainders.iter().take(short) {
        quotas[i] += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(segments
        .iter()
        .zip(quotas)
        .filter(|(_, q)| *q > 0)
        .map(|(s, q)| {
            let offset = rng.random_range(0..=s.len() - q);
            s.start + offset..s.start + offset + q
        })
        .collect())
}

/// Reduces `x` to `budget` samples, one random contiguous window per segment.
pub fn slice_training_budget_segments(
    x: &TimeSeries,
    segments: &[Range<usize>],
    budget: usize,
    seed: u64,
) -> Result<TimeSeries> {
    if let Some(s) = segments.iter().find(|s| s.end > x.len() || s.start > s.end) {
        return Err(Error::invalid(
            "segments",
            format!("{s:?} outside 0..{}", x.len()),
        ));
    }
    let slices = plan_budget_slices(segments, budget, seed)?;
    let columns = x
        .columns()
        .iter()
        .map(|c| slices.iter().flat_map(|s| c[s.clone()].iter().copied()).collect())
        .collect();
    TimeSeries::new(columns, x.fs(), x.feature_names().to_vec())
}

/// Reduces `x` to one random contiguous window of `budget` samples.
pub fn slice_training_budget(x: &TimeSeries, budget: usize, seed: u64) -> Result<TimeSeries> {
    slice_training_budget_segments(x, std::slice::from_ref(&(0..x.len())), budget, seed)
}

/// On-disk form of the provenance sidecar.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProvenanceFile {
    pub seed: u64,
    pub periods_per_batch: usize,
    pub target_fs_hz: f64,
    pub tool_version: String,
    pub batches: Vec<ProvenanceRecord>,
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = OsString::from(prefix.as_os_str());
    s.push(suffix);
    PathBuf::from(s)
}

pub fn fused_csv_path(prefix: &Path) -> PathBuf {
    with_suffix(prefix, ".csv")
}

pub fn provenance_path(prefix: &Path) -> PathBuf {
    with_suffix(prefix, ".provenance.json")
}

/// Writes `<prefix>.csv` and `<prefix>.provenance.json`.
pub fn write_fused(fused: &FusedDataset, prefix: impl AsRef<Path>) -> Result<()> {
    if fused.provenance.is_empty() || fused.series.is_empty() {
        return Err(Error::NothingToWrite);
    }
    let prefix = prefix.as_ref();
    if let Some(dir) = prefix.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    write_series_csv(&fused.series, fused_csv_path(prefix))?;
    let sidecar = ProvenanceFile {
        seed: fused.seed,
        periods_per_batch: fused.periods_per_batch,
        target_fs_hz: fused.target_fs(),
        tool_version: TOOL_VERSION.to_string(),
        batches: fused.provenance.clone(),
    };
    let path = provenance_path(prefix);
    let file = File::create(&path).map_err(|e| Error::io(&path, e))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, &sidecar).map_err(|e| Error::Format {
        path: path.clone(),
        reason: e.to_string(),
    })?;
    w.write_all(b"\n").and_then(|_| w.flush()).map_err(|e| Error::io(&path, e))
}

pub fn read_provenance(path: impl AsRef<Path>) -> Result<ProvenanceFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Format {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })
}

/// Reads back a fused dataset written by [`write_fused`]. The per-dataset
/// summary is not stored and comes back empty.
pub fn read_fused(prefix: impl AsRef<Path>) -> Result<FusedDataset> {
    let prefix = prefix.as_ref();
    let sidecar = read_provenance(provenance_path(prefix))?;
    let series = read_series_csv(fused_csv_path(prefix), sidecar.target_fs_hz)?;
    let covered: usize = sidecar.batches.iter().map(ProvenanceRecord::len).sum();
    if covered != series.len() {
        return Err(Error::Format {
            path: fused_csv_path(prefix),
            reason: format!(
                "provenance covers {covered} samples, csv has {}",
                series.len()
            ),
        });
    }
    Ok(FusedDataset {
        series,
        provenance: sidecar.batches,
        seed: sidecar.seed,
        periods_per_batch: sidecar.periods_per_batch,
        summary: Vec::new(),
    })
}
