//! Command-line front end: `fuse`, `analyze`, `synth` and `eval`.
//!
//! Flags override values read from `--config <file.toml>`. The environment
//! variable `FUSEKIT_THREADS` caps the worker pool size.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{
    anova_oneway, calibrate_thresholds, decide_file, exceedance_fractions, score, AnovaTable,
    MetricsReport, ResidualSeries, ThresholdMethod, DEFAULT_EXCEED_FRACTION,
};
use crate::fusion::{fuse, NamedSeries, DEFAULT_PERIODS_PER_BATCH};
use crate::ingest::{
    fused_csv_path, load_dataset_with_spans, provenance_path,
    slice_training_budget_segments, write_csv_columns, write_fused, write_series_csv,
    DatasetManifest, Label,
};
use crate::signal::{downsample, mean_std, resampled_len, target_fs, Spectrum};
use crate::synth::{generate, SynthSpec};

pub const THREADS_ENV: &str = "FUSEKIT_THREADS";

#[derive(Debug, Parser)]
#[command(name = "fusekit", version, about = "Periodic time-series dataset fusion")]
pub struct Cli {
    /// TOML file with default run settings; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fuse two or more datasets described by manifests.
    Fuse(FuseArgs),
    /// Write histogram, spectrum and summary data for a CSV recording.
    Analyze(AnalyzeArgs),
    /// Generate a synthetic dataset and its manifest.
    Synth(SynthArgs),
    /// Score residual files, or run ANOVA over F1 reports.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct FuseArgs {
    #[arg(long = "manifest", num_args = 1..)]
    pub manifests: Vec<PathBuf>,
    #[arg(long)]
    pub periods: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output prefix; writes `<out>.csv` and `<out>.provenance.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Sample budget applied to every dataset after resampling.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Per-dataset budget, `<id>=<samples>`; repeatable.
    #[arg(long = "budget-for", value_parser = parse_budget_for)]
    pub budget_for: Vec<(String, usize)>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    /// Sampling rate of the input in Hz.
    #[arg(long)]
    pub fs: f64,
    /// Frequency band of the spectrum output, `lo:hi` in Hz.
    #[arg(long, default_value = "0:500", value_parser = parse_band)]
    pub band: (f64, f64),
    /// Histogram bin count.
    #[arg(long, default_value_t = 50)]
    pub bins: usize,
    /// Output prefix; writes `.histogram.csv`, `.spectrum.csv`, `.summary.json`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Synthetic dataset spec (TOML).
    pub spec: PathBuf,
    /// Output directory for CSV files and `<dataset_id>.manifest.toml`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Directory of residual CSV files.
    #[arg(required_unless_present = "anova", conflicts_with = "anova")]
    pub residual_dir: Option<PathBuf>,
    /// CSV with `file,label` rows; label is healthy, anomalous or validation.
    #[arg(long, required_unless_present = "anova")]
    pub labels: Option<PathBuf>,
    /// `max` (largest validation residual) or `mean2sigma`.
    #[arg(long, value_parser = parse_threshold)]
    pub threshold: Option<ThresholdMethod>,
    #[arg(long = "exceed-fraction")]
    pub exceed_fraction: Option<f64>,
    /// One-way ANOVA of F1 scores, one group per directory of JSON reports.
    #[arg(long, num_args = 2..)]
    pub anova: Vec<PathBuf>,
    /// Output prefix; writes `.json` and `.txt`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Settings shared by the subcommands, after merging config file and flags.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub manifests: Vec<PathBuf>,
    pub periods_per_batch: usize,
    pub seed: u64,
    pub output_prefix: PathBuf,
    pub training_budget: Option<usize>,
    pub per_dataset_budgets: BTreeMap<String, usize>,
    #[serde(deserialize_with = "threshold_from_str", serialize_with = "threshold_to_str")]
    pub threshold_method: ThresholdMethod,
    pub exceed_fraction: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            manifests: Vec::new(),
            periods_per_batch: DEFAULT_PERIODS_PER_BATCH,
            seed: 0,
            output_prefix: PathBuf::from("fused"),
            training_budget: None,
            per_dataset_budgets: BTreeMap::new(),
            threshold_method: ThresholdMethod::MaxMae,
            exceed_fraction: DEFAULT_EXCEED_FRACTION,
        }
    }
}

impl RunConfig {
    /// Reads a config file. Relative manifest paths resolve against its directory.
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg: RunConfig = toml::from_str(&text).map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?;
        let base = path.parent().unwrap_or(Path::new(""));
        for m in &mut cfg.manifests {
            if m.is_relative() {
                *m = base.join(&*m);
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.periods_per_batch == 0 {
            return Err(Error::invalid("periods", "must be at least 1"));
        }
        if self.training_budget == Some(0) {
            return Err(Error::invalid("budget", "must be positive"));
        }
        if let Some((id, _)) = self.per_dataset_budgets.iter().find(|(_, &b)| b == 0) {
            return Err(Error::invalid("budget-for", format!("budget for `{id}` must be positive")));
        }
        if !(0.0..=1.0).contains(&self.exceed_fraction) {
            return Err(Error::invalid(
                "exceed-fraction",
                format!("must lie in [0, 1], got {}", self.exceed_fraction),
            ));
        }
        Ok(())
    }

    fn apply_fuse(&mut self, a: &FuseArgs) {
        if !a.manifests.is_empty() {
            self.manifests = a.manifests.clone();
        }
        if let Some(p) = a.periods {
            self.periods_per_batch = p;
        }
        if let Some(s) = a.seed {
            self.seed = s;
        }
        if let Some(o) = &a.out {
            self.output_prefix = o.clone();
        }
        if a.budget.is_some() {
            self.training_budget = a.budget;
        }
        for (id, b) in &a.budget_for {
            self.per_dataset_budgets.insert(id.clone(), *b);
        }
    }

    fn apply_eval(&mut self, a: &EvalArgs) {
        if let Some(t) = a.threshold {
            self.threshold_method = t;
        }
        if let Some(f) = a.exceed_fraction {
            self.exceed_fraction = f;
        }
        if let Some(o) = &a.out {
            self.output_prefix = o.clone();
        }
    }
}

pub fn parse_threshold(s: &str) -> std::result::Result<ThresholdMethod, String> {
    match s {
        "max" | "max_mae" => Ok(ThresholdMethod::MaxMae),
        "mean2sigma" | "mean_plus_2sigma" => Ok(ThresholdMethod::MeanPlus2Sigma),
        other => Err(format!("unknown threshold method `{other}` (expected max or mean2sigma)")),
    }
}

fn threshold_from_str<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<ThresholdMethod, D::Error> {
    let s = String::deserialize(d)?;
    parse_threshold(&s).map_err(serde::de::Error::custom)
}

fn threshold_to_str<S: serde::Serializer>(
    t: &ThresholdMethod,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match t {
        ThresholdMethod::MaxMae => "max",
        ThresholdMethod::MeanPlus2Sigma => "mean2sigma",
    })
}

fn parse_budget_for(s: &str) -> std::result::Result<(String, usize), String> {
    let (id, n) = s
        .split_once('=')
        .ok_or_else(|| format!("expected <id>=<samples>, got `{s}`"))?;
    let n: usize = n.trim().parse().map_err(|e| format!("bad sample count in `{s}`: {e}"))?;
    if id.is_empty() {
        return Err(format!("empty dataset id in `{s}`"));
    }
    Ok((id.to_string(), n))
}

fn parse_band(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|e| format!("bad band start: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("bad band end: {e}"))?;
    if !(lo >= 0.0 && hi > lo && hi.is_finite()) {
        return Err(format!("band must satisfy 0 <= lo < hi, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::invalid(THREADS_ENV, format!("expected a positive integer, got `{raw}`")))?;
    // A pool may already exist when called repeatedly in one process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::invalid("arguments", e.to_string()))?;
    execute(cli)
}

pub fn execute(cli: Cli) -> Result<()> {
    configure_threads()?;
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::from_path(p)?,
        None => RunConfig::default(),
    };
    match cli.command {
        Command::Fuse(a) => {
            cfg.apply_fuse(&a);
            cfg.validate()?;
            let report = cmd_fuse(&cfg)?;
            print!("{}", report.render());
        }
        Command::Analyze(a) => {
            let summary = cmd_analyze(&a.input, a.fs, a.band, a.bins, &a.out)?;
            for w in &summary.warnings {
                eprintln!("warning: {w}");
            }
            println!(
                "wrote {} feature(s), {} samples, band {}:{} Hz",
                summary.features.len(),
                summary.samples,
                summary.band_hz.0,
                summary.band_hz.1
            );
        }
        Command::Synth(a) => {
            let manifest = cmd_synth(&a.spec, &a.out)?;
            println!(
                "wrote {} file(s) for `{}` and {}",
                manifest.files.len(),
                manifest.dataset_id,
                a.out.join(format!("{}.manifest.toml", manifest.dataset_id)).display()
            );
        }
        Command::Eval(a) => {
            cfg.apply_eval(&a);
            cfg.validate()?;
            if !a.anova.is_empty() {
                let table = cmd_anova(&a.anova, a.out.as_deref())?;
                print!("{}", table.to_table());
            } else {
                let dir = a.residual_dir.as_deref().expect("enforced by clap");
                let labels = a.labels.as_deref().expect("enforced by clap");
                let out = a.out.is_some().then_some(cfg.output_prefix.as_path());
                let report = cmd_eval(dir, labels, &cfg, out)?;
                print!("{}", report.metrics.to_table());
            }
        }
    }
    Ok(())
}

/// Entry point for the binary: maps errors to a diagnostic and exit code 1.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

// fuse

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuseDatasetReport {
    pub dataset_id: String,
    pub source_fs: f64,
    pub samples_after_budget: usize,
    pub batches_available: usize,
    pub batches_used: usize,
    pub batches_discarded: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuseReport {
    pub target_fs: f64,
    pub fused_samples: usize,
    pub csv: PathBuf,
    pub provenance: PathBuf,
    pub datasets: Vec<FuseDatasetReport>,
    /// Budget shares in percent, present when any budget was applied.
    pub budget_ratio: Option<Vec<f64>>,
}

impl FuseReport {
    pub fn budget_ratio_label(&self) -> Option<String> {
        self.budget_ratio.as_ref().map(|r| {
            r.iter()
                .map(|p| format_percent(*p))
                .collect::<Vec<_>>()
                .join(":")
        })
    }

    pub fn render(&self) -> String {
        let mut s = format!("target fs: {} Hz\n", self.target_fs);
        for d in &self.datasets {
            s.push_str(&format!(
                "{}: source fs {} Hz, {} samples, {} batches used, {} discarded\n",
                d.dataset_id, d.source_fs, d.samples_after_budget, d.batches_used, d.batches_discarded
            ));
        }
        if let Some(label) = self.budget_ratio_label() {
            s.push_str(&format!("budget ratio: {label}\n"));
        }
        s.push_str(&format!(
            "fused samples: {}\nwrote {} and {}\n",
            self.fused_samples,
            self.csv.display(),
            self.provenance.display()
        ));
        s
    }
}

fn format_percent(p: f64) -> String {
    let r = (p * 100.0).round() / 100.0;
    if r.fract() == 0.0 {
        format!("{r:.0}")
    } else {
        format!("{r}")
    }
}

fn scale_spans(spans: &[Range<usize>], fs: f64, fs_new: f64, len: usize) -> Vec<Range<usize>> {
    spans
        .iter()
        .map(|s| {
            let a = resampled_len(s.start, fs, fs_new).min(len);
            let b = resampled_len(s.end, fs, fs_new).min(len);
            a..b
        })
        .filter(|s| !s.is_empty())
        .collect()
}

/// Loads every manifest, resamples to the common rate, applies budgets
/// (counted in samples at the target rate), fuses and writes the result.
pub fn cmd_fuse(cfg: &RunConfig) -> Result<FuseReport> {
    cfg.validate()?;
    if cfg.manifests.len() < 2 {
        return Err(Error::TooFewDatasets(cfg.manifests.len()));
    }
    let manifests: Vec<DatasetManifest> = cfg
        .manifests
        .iter()
        .map(DatasetManifest::from_path)
        .collect::<Result<_>>()?;
    if let Some(id) = cfg
        .per_dataset_budgets
        .keys()
        .find(|id| !manifests.iter().any(|m| &m.dataset_id == *id))
    {
        return Err(Error::invalid("budget-for", format!("unknown dataset `{id}`")));
    }
    let fs_new = target_fs(&manifests.iter().map(|m| m.fs).collect::<Vec<_>>())?;

    let mut named = Vec::with_capacity(manifests.len());
    let mut budgets = Vec::with_capacity(manifests.len());
    for m in &manifests {
        let loaded = load_dataset_with_spans(m).map_err(|e| e.in_dataset(&m.dataset_id))?;
        let resampled = downsample(&loaded.series, fs_new).map_err(|e| e.in_dataset(&m.dataset_id))?;
        let budget = cfg
            .per_dataset_budgets
            .get(&m.dataset_id)
            .copied()
            .or(cfg.training_budget);
        let series = match budget {
            Some(b) => {
                let spans = scale_spans(&loaded.file_spans, m.fs, fs_new, resampled.len());
                let seed = crate::fusion::dataset_seed(cfg.seed ^ 0x6275_6467_6574, &m.dataset_id);
                slice_training_budget_segments(&resampled, &spans, b, seed)
                    .map_err(|e| e.in_dataset(&m.dataset_id))?
            }
            None => resampled,
        };
        budgets.push(budget);
        named.push(NamedSeries::new(m.dataset_id.clone(), series));
    }

    let fused = fuse(&named, cfg.periods_per_batch, cfg.seed)?;
    write_fused(&fused, &cfg.output_prefix)?;

    let budget_ratio = budgets.iter().any(Option::is_some).then(|| {
        let used: Vec<f64> = named.iter().map(|n| n.series.len() as f64).collect();
        let total: f64 = used.iter().sum();
        used.iter().map(|u| 100.0 * u / total).collect()
    });
    Ok(FuseReport {
        target_fs: fused.target_fs(),
        fused_samples: fused.series.len(),
        csv: fused_csv_path(&cfg.output_prefix),
        provenance: provenance_path(&cfg.output_prefix),
        datasets: fused
            .summary
            .iter()
            .zip(&named)
            .map(|(s, n)| FuseDatasetReport {
                dataset_id: s.dataset_id.clone(),
                source_fs: manifests
                    .iter()
                    .find(|m| m.dataset_id == s.dataset_id)
                    .map_or(s.source_fs, |m| m.fs),
                samples_after_budget: n.series.len(),
                batches_available: s.batches_available,
                batches_used: s.batches_used,
                batches_discarded: s.batches_discarded(),
            })
            .collect(),
        budget_ratio,
    })
}

// analyze

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSummary {
    pub name: String,
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
    pub peak_hz: Option<f64>,
    pub peak_amplitude: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeSummary {
    pub fs: f64,
    pub samples: usize,
    pub band_hz: (f64, f64),
    pub bin_resolution_hz: f64,
    pub features: Vec<FeatureSummary>,
    pub warnings: Vec<String>,
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn create_parent(path: &Path) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    create_parent(path)?;
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Error::Format {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    w.write_all(b"\n").and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
}

/// Histogram density estimate: `(bin_lo, bin_hi, density)` rows over
/// `[min, max]`. A constant signal puts all mass in one unit-width bin.
pub fn histogram(values: &[f64], bins: usize) -> Vec<(f64, f64, f64)> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let n = values.len() as f64;
    if max <= min {
        return vec![(min - 0.5, min + 0.5, 1.0)];
    }
    let width = (max - min) / bins as f64;
    let mut counts = vec![0usize; bins];
    for &v in values {
        let i = (((v - min) / width) as usize).min(bins - 1);
        counts[i] += 1;
    }
    counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let lo = min + i as f64 * width;
            (lo, lo + width, c as f64 / (n * width))
        })
        .collect()
}

/// Writes `<out>.histogram.csv`, `<out>.spectrum.csv` and `<out>.summary.json`.
pub fn cmd_analyze(
    input: &Path,
    fs: f64,
    band: (f64, f64),
    bins: usize,
    out: &Path,
) -> Result<AnalyzeSummary> {
    if bins == 0 {
        return Err(Error::invalid("bins", "must be at least 1"));
    }
    let series = crate::ingest::read_series_csv(input, fs)?;
    let nyquist = fs / 2.0;
    let mut warnings = Vec::new();
    let (lo, mut hi) = band;
    if lo >= nyquist {
        return Err(Error::invalid(
            "band",
            format!("band start {lo} Hz is at or above Nyquist ({nyquist} Hz)"),
        ));
    }
    if hi > nyquist {
        warnings.push(format!("band end {hi} Hz clipped to Nyquist ({nyquist} Hz)"));
        hi = nyquist;
    }

    let spectra: Vec<Spectrum> = series.columns().iter().map(|c| Spectrum::of(c, fs)).collect();
    let mut features = Vec::with_capacity(series.n_features());
    for ((name, col), spec) in series.feature_names().iter().zip(series.columns()).zip(&spectra) {
        let (mean, std) = mean_std(col);
        let peak = spec.peak_bin(lo, hi);
        features.push(FeatureSummary {
            name: name.clone(),
            mean,
            std,
            min: col.iter().copied().fold(f64::INFINITY, f64::min),
            max: col.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            peak_hz: peak.map(|k| spec.frequency(k)),
            peak_amplitude: peak.map(|k| spec.amplitude(k)),
        });
    }

    create_parent(out)?;
    let hist_path = with_suffix(out, ".histogram.csv");
    let mut w = csv::Writer::from_path(&hist_path).map_err(|e| Error::Format {
        path: hist_path.clone(),
        reason: e.to_string(),
    })?;
    let csv_err = |e: csv::Error| Error::Format {
        path: hist_path.clone(),
        reason: e.to_string(),
    };
    w.write_record(["feature", "bin_lo", "bin_hi", "density"]).map_err(csv_err)?;
    for (name, col) in series.feature_names().iter().zip(series.columns()) {
        for (a, b, d) in histogram(col, bins) {
            w.write_record([name.clone(), a.to_string(), b.to_string(), d.to_string()])
                .map_err(csv_err)?;
        }
    }
    w.flush().map_err(|e| Error::io(&hist_path, e))?;

    let spec_path = with_suffix(out, ".spectrum.csv");
    let kept: Vec<usize> = (0..spectra[0].one_sided_len())
        .filter(|&k| {
            let f = spectra[0].frequency(k);
            f >= lo && f <= hi
        })
        .collect();
    let mut names = vec!["frequency_hz".to_string()];
    names.extend(series.feature_names().iter().cloned());
    let mut columns = vec![kept.iter().map(|&k| spectra[0].frequency(k)).collect::<Vec<_>>()];
    for s in &spectra {
        columns.push(kept.iter().map(|&k| s.amplitude(k)).collect());
    }
    if kept.is_empty() {
        warnings.push("no spectrum bins fall inside the band".to_string());
    }
    write_csv_columns(&spec_path, &names, &columns)?;

    let summary = AnalyzeSummary {
        fs,
        samples: series.len(),
        band_hz: (lo, hi),
        bin_resolution_hz: spectra[0].bin_resolution(),
        features,
        warnings,
    };
    write_json(&with_suffix(out, ".summary.json"), &summary)?;
    Ok(summary)
}

// synth

fn default_n_files() -> usize {
    1
}

fn default_label() -> Label {
    Label::Healthy
}

/// On-disk synthetic dataset description: dataset fields at the top level and
/// the signal parameters in a `[signal]` table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SynthFile {
    pub dataset_id: String,
    #[serde(default = "default_label")]
    pub label: Label,
    /// Each file uses seed `signal.seed + index`.
    #[serde(default = "default_n_files")]
    pub n_files: usize,
    #[serde(default)]
    pub trim_head: usize,
    pub signal: SynthSpec,
}

impl SynthFile {
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        toml::from_str(&text).map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })
    }
}

/// Generates the files of a [`SynthFile`] into `out_dir` and writes
/// `<dataset_id>.manifest.toml` next to them.
pub fn cmd_synth(spec_path: &Path, out_dir: &Path) -> Result<DatasetManifest> {
    let spec = SynthFile::from_path(spec_path)?;
    write_synth(&spec, out_dir)
}

pub fn write_synth(spec: &SynthFile, out_dir: &Path) -> Result<DatasetManifest> {
    if spec.n_files == 0 {
        return Err(Error::invalid("n_files", "must be at least 1"));
    }
    if spec.dataset_id.is_empty() || spec.dataset_id.contains(['/', '\\']) {
        return Err(Error::invalid("dataset_id", "must be a non-empty file-name-safe string"));
    }
    spec.signal.validate()?;
    if spec.trim_head >= spec.signal.n_samples() {
        return Err(Error::invalid(
            "trim_head",
            format!("{} removes all {} samples", spec.trim_head, spec.signal.n_samples()),
        ));
    }
    std::fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut files = Vec::with_capacity(spec.n_files);
    let mut names = Vec::new();
    for i in 0..spec.n_files {
        let mut s = spec.signal.clone();
        s.seed = s.seed.wrapping_add(i as u64);
        let series = generate(&s)?;
        let name = format!("{}_{i:03}.csv", spec.dataset_id);
        write_series_csv(&series, out_dir.join(&name))?;
        names = series.feature_names().to_vec();
        files.push(PathBuf::from(name));
    }
    let manifest = DatasetManifest {
        dataset_id: spec.dataset_id.clone(),
        fs: spec.signal.fs,
        files,
        label: spec.label,
        trim_head: spec.trim_head,
        feature_columns: names,
    };
    manifest.write(out_dir.join(format!("{}.manifest.toml", spec.dataset_id)))?;
    Ok(manifest)
}

// eval

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileRole {
    Validation,
    Labeled(Label),
}

/// Reads a `file,label` CSV. Labels are `healthy`, `anomalous` or `validation`.
pub fn read_labels(path: &Path) -> Result<Vec<(String, FileRole)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Error::Format {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })?;
    let mut out = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let row = i + 2;
        let rec = rec.map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            row,
            reason: e.to_string(),
        })?;
        if rec.len() != 2 {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                row,
                reason: format!("expected 2 fields, found {}", rec.len()),
            });
        }
        let role = match rec[1].to_ascii_lowercase().as_str() {
            "healthy" => FileRole::Labeled(Label::Healthy),
            "anomalous" => FileRole::Labeled(Label::Anomalous),
            "validation" => FileRole::Validation,
            other => {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    row,
                    reason: format!("unknown label `{other}`"),
                })
            }
        };
        out.push((rec[0].to_string(), role));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileDecision {
    pub file: String,
    pub actual: Label,
    pub predicted: Label,
    pub exceedance: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    #[serde(flatten)]
    pub metrics: MetricsReport,
    pub threshold_method: ThresholdMethod,
    pub exceed_fraction: f64,
    pub thresholds: Vec<f64>,
    pub validation_files: Vec<String>,
    pub files: Vec<FileDecision>,
}

fn residual_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .map(|e| e.map(|e| e.path()).map_err(|e| Error::io(dir, e)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "csv"))
        .collect();
    files.sort();
    Ok(files)
}

/// Calibrates thresholds on the validation file(s), decides every labeled
/// file and scores the decisions. Writes `<out>.json` and `<out>.txt` when
/// `out` is given.
pub fn cmd_eval(
    residual_dir: &Path,
    labels_path: &Path,
    cfg: &RunConfig,
    out: Option<&Path>,
) -> Result<EvalReport> {
    let files = residual_files(residual_dir)?;
    if files.is_empty() {
        return Err(Error::Empty("residual directory"));
    }
    let labels = read_labels(labels_path)?;
    let find = |name: &str| {
        files
            .iter()
            .find(|p| p.file_name().is_some_and(|f| f == name))
            .cloned()
            .ok_or_else(|| Error::invalid("labels", format!("no residual file `{name}`")))
    };

    let validation: Vec<&String> = labels
        .iter()
        .filter(|(_, r)| *r == FileRole::Validation)
        .map(|(f, _)| f)
        .collect();
    if validation.is_empty() {
        return Err(Error::invalid("labels", "no validation file designated"));
    }
    let mut val_columns: Vec<Vec<f64>> = Vec::new();
    let mut val_names = Vec::new();
    for f in &validation {
        let r = ResidualSeries::read_csv(find(f)?)?;
        if val_columns.is_empty() {
            val_columns = vec![Vec::new(); r.n_features()];
            val_names = r.feature_names().to_vec();
        } else if r.n_features() != val_columns.len() {
            return Err(Error::DimensionMismatch(format!(
                "validation file `{f}` has {} features, expected {}",
                r.n_features(),
                val_columns.len()
            )));
        }
        for (dst, src) in val_columns.iter_mut().zip(r.columns()) {
            dst.extend_from_slice(src);
        }
    }
    let val = ResidualSeries::new(val_columns, val_names, "validation")?;
    let thresholds = calibrate_thresholds(&val, cfg.threshold_method)?;

    let mut decisions = Vec::new();
    for (f, role) in &labels {
        let FileRole::Labeled(actual) = *role else {
            continue;
        };
        let r = ResidualSeries::read_csv(find(f)?)?;
        let exceedance = exceedance_fractions(&r, &thresholds)?;
        let predicted = decide_file(&r, &thresholds, cfg.exceed_fraction)?;
        decisions.push(FileDecision {
            file: f.clone(),
            actual,
            predicted,
            exceedance,
        });
    }
    if decisions.is_empty() {
        return Err(Error::invalid("labels", "no healthy or anomalous files to score"));
    }
    let metrics = score(&decisions.iter().map(|d| (d.predicted, d.actual)).collect::<Vec<_>>());
    let report = EvalReport {
        metrics,
        threshold_method: cfg.threshold_method,
        exceed_fraction: cfg.exceed_fraction,
        thresholds: thresholds.per_feature,
        validation_files: validation.into_iter().cloned().collect(),
        files: decisions,
    };
    if let Some(out) = out {
        write_json(&with_suffix(out, ".json"), &report)?;
        let txt = with_suffix(out, ".txt");
        std::fs::write(&txt, report.metrics.to_table()).map_err(|e| Error::io(&txt, e))?;
    }
    Ok(report)
}

/// Collects the `f1` field of every `*.json` report in `dir`, sorted by name.
pub fn read_f1_scores(dir: &Path) -> Result<Vec<f64>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Format {
                path: p.clone(),
                reason: e.to_string(),
            })?;
            v.get("f1").and_then(serde_json::Value::as_f64).ok_or_else(|| Error::Format {
                path: p.clone(),
                reason: "missing numeric `f1`".to_string(),
            })
        })
        .collect()
}

/// One-way ANOVA of F1 scores with one group per directory.
pub fn cmd_anova(dirs: &[PathBuf], out: Option<&Path>) -> Result<AnovaTable> {
    let groups: Vec<Vec<f64>> = dirs.iter().map(|d| read_f1_scores(d)).collect::<Result<_>>()?;
    let table = anova_oneway(&groups)?;
    if let Some(out) = out {
        write_json(&with_suffix(out, ".json"), &table)?;
        let txt = with_suffix(out, ".txt");
        std::fs::write(&txt, table.to_table()).map_err(|e| Error::io(&txt, e))?;
    }
    Ok(table)
}

/// Reads a labeled residual directory without scoring; used by examples.
pub fn load_residuals(dir: &Path) -> Result<Vec<ResidualSeries>> {
    residual_files(dir)?
        .iter()
        .map(ResidualSeries::read_csv)
        .collect()
}
