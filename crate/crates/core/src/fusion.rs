//! Dataset fusion: resample every dataset to the lowest common rate,
//! z-score it, cut it into batches of whole periods, shuffle the batches and
//! interleave them round-robin into one training series.

use std::collections::HashSet;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signal::{downsample, target_fs, zero_crossings, zscore, TimeSeries};

/// Periods per batch used in the motor-current case study.
pub const DEFAULT_PERIODS_PER_BATCH: usize = 4;

/// A dataset handed to [`fuse`].
#[derive(Debug, Clone)]
pub struct NamedSeries {
    pub id: String,
    pub series: TimeSeries,
}

impl NamedSeries {
    pub fn new(id: impl Into<String>, series: TimeSeries) -> Self {
        Self {
            id: id.into(),
            series,
        }
    }
}

/// Contiguous run of whole periods cut from a normalized source series.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodBatch {
    pub dataset_id: String,
    /// Position of this batch in source order, before shuffling.
    pub ordinal: usize,
    /// Sample range in the normalized source.
    pub span: Range<usize>,
    pub n_periods: usize,
    /// One vector per feature, each `span.len()` long.
    pub samples: Vec<Vec<f64>>,
}

impl PeriodBatch {
    pub fn len(&self) -> usize {
        self.span.len()
    }

    pub fn is_empty(&self) -> bool {
        self.span.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceRecord {
    pub dataset_id: String,
    pub start: usize,
    pub end: usize,
    pub ordinal: usize,
}

impl ProvenanceRecord {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub dataset_id: String,
    pub source_fs: f64,
    pub resampled: bool,
    pub normalized_len: usize,
    pub batches_available: usize,
    pub batches_used: usize,
}

impl DatasetSummary {
    pub fn batches_discarded(&self) -> usize {
        self.batches_available - self.batches_used
    }
}

/// Output of [`fuse`]: the interleaved series plus a record of where every
/// batch came from.
#[derive(Debug, Clone)]
pub struct FusedDataset {
    pub series: TimeSeries,
    pub provenance: Vec<ProvenanceRecord>,
    pub seed: u64,
    pub periods_per_batch: usize,
    pub summary: Vec<DatasetSummary>,
}

impl FusedDataset {
    pub fn target_fs(&self) -> f64 {
        self.series.fs()
    }

    /// Indices in the fused series where one batch ends and the next begins.
    pub fn seams(&self) -> Vec<usize> {
        let mut at = 0;
        let mut seams = Vec::with_capacity(self.provenance.len().saturating_sub(1));
        for rec in &self.provenance[..self.provenance.len().saturating_sub(1)] {
            at += rec.len();
            seams.push(at);
        }
        seams
    }
}

/// Batch spans `[c[kP], c[(k+1)P])` for every complete group of `periods`.
pub fn batch_spans(crossings: &[usize], periods: usize) -> Vec<Range<usize>> {
    if periods == 0 || crossings.is_empty() {
        return Vec::new();
    }
    crossings
        .iter()
        .step_by(periods)
        .zip(crossings.iter().skip(periods).step_by(periods))
        .map(|(&a, &b)| a..b)
        .collect()
}

/// Cuts a normalized series into batches of `periods` whole periods.
///
/// Boundaries are the positive-to-negative zero crossings of feature 0.
/// Samples before the first crossing and after the last complete batch
/// are dropped.
pub fn batch_periods(x: &TimeSeries, periods: usize, dataset_id: &str) -> Result<Vec<PeriodBatch>> {
    if periods == 0 {
        return Err(Error::invalid("periods", "must be at least 1"));
    }
    let crossings = zero_crossings(x);
    if crossings.len() < periods + 1 {
        return Err(Error::InsufficientPeriods {
            crossings: crossings.len(),
            needed: periods + 1,
        });
    }
    Ok(batch_spans(&crossings, periods)
        .into_iter()
        .enumerate()
        .map(|(ordinal, span)| PeriodBatch {
            dataset_id: dataset_id.to_string(),
            ordinal,
            samples: x.columns().iter().map(|c| c[span.clone()].to_vec()).collect(),
            span,
            n_periods: periods,
        })
        .collect())
}

/// Fisher-Yates shuffle driven by a ChaCha8 stream seeded with `seed`.
pub fn shuffle_seeded<T>(mut items: Vec<T>, seed: u64) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    items.shuffle(&mut rng);
    items
}

pub fn shuffle_batches(batches: Vec<PeriodBatch>, seed: u64) -> Vec<PeriodBatch> {
    shuffle_seeded(batches, seed)
}

/// Per-dataset shuffle seed: FNV-1a over the master seed and the dataset id,
/// finished with a SplitMix64 mix. Independent of the other datasets present.
pub fn dataset_seed(seed: u64, dataset_id: &str) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    for b in seed.to_le_bytes().iter().chain(dataset_id.as_bytes()) {
        h ^= u64::from(*b);
        h = h.wrapping_mul(PRIME);
    }
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

/// Result of round-robin interleaving, before it is attached to a rate.
#[derive(Debug, Clone)]
pub struct Interleaved {
    pub columns: Vec<Vec<f64>>,
    pub provenance: Vec<ProvenanceRecord>,
    /// Number of complete rounds, i.e. batches used per dataset.
    pub rounds: usize,
}

/// Appends one batch from each dataset in turn, for as many rounds as the
/// smallest dataset allows. Surplus batches are left out.
pub fn interleave(per_dataset: &[(String, Vec<PeriodBatch>)]) -> Result<Interleaved> {
    if per_dataset.len() < 2 {
        return Err(Error::TooFewDatasets(per_dataset.len()));
    }
    let mut seen = HashSet::new();
    for (id, batches) in per_dataset {
        if !seen.insert(id.as_str()) {
            return Err(Error::DuplicateDataset(id.clone()));
        }
        if batches.is_empty() {
            return Err(Error::EmptyBatches(id.clone()));
        }
    }
    let n_features = per_dataset[0].1[0].samples.len();
    for (id, batches) in per_dataset {
        if let Some(b) = batches.iter().find(|b| b.samples.len() != n_features) {
            return Err(Error::FeatureMismatch {
                dataset: id.clone(),
                expected: n_features,
                found: b.samples.len(),
            });
        }
    }

    let rounds = per_dataset.iter().map(|(_, b)| b.len()).min().unwrap_or(0);
    let total: usize = per_dataset
        .iter()
        .flat_map(|(_, b)| &b[..rounds])
        .map(PeriodBatch::len)
        .sum();
    let mut columns = vec![Vec::with_capacity(total); n_features];
    let mut provenance = Vec::with_capacity(rounds * per_dataset.len());
    for round in 0..rounds {
        for (id, batches) in per_dataset {
            let batch = &batches[round];
            for (dst, src) in columns.iter_mut().zip(&batch.samples) {
                dst.extend_from_slice(src);
            }
            provenance.push(ProvenanceRecord {
                dataset_id: id.clone(),
                start: batch.span.start,
                end: batch.span.end,
                ordinal: batch.ordinal,
            });
        }
    }
    Ok(Interleaved {
        columns,
        provenance,
        rounds,
    })
}

/// Resamples `series` to `target_fs` (when needed) and z-scores it.
///
/// This is the normalized source that provenance spans index into.
pub fn prepare_source(series: &TimeSeries, target_fs: f64) -> Result<TimeSeries> {
    let resampled = if series.fs() != target_fs {
        downsample(series, target_fs)?
    } else {
        series.clone()
    };
    zscore(&resampled)
}

/// Fuses two or more homogeneous periodic datasets.
///
/// Per-dataset work runs in parallel on the current rayon pool; the result
/// does not depend on the pool size.
pub fn fuse(datasets: &[NamedSeries], periods: usize, seed: u64) -> Result<FusedDataset> {
    if datasets.len() < 2 {
        return Err(Error::TooFewDatasets(datasets.len()));
    }
    if periods == 0 {
        return Err(Error::invalid("periods", "must be at least 1"));
    }
    let mut seen = HashSet::new();
    for d in datasets {
        if !seen.insert(d.id.as_str()) {
            return Err(Error::DuplicateDataset(d.id.clone()));
        }
    }
    let n_features = datasets[0].series.n_features();
    if let Some(d) = datasets.iter().find(|d| d.series.n_features() != n_features) {
        return Err(Error::FeatureMismatch {
            dataset: d.id.clone(),
            expected: n_features,
            found: d.series.n_features(),
        });
    }
    let fs_list: Vec<f64> = datasets.iter().map(|d| d.series.fs()).collect();
    let fs_new = target_fs(&fs_list)?;

    let prepared: Vec<(String, Vec<PeriodBatch>, usize)> = datasets
        .par_iter()
        .map(|d| {
            let normalized =
                prepare_source(&d.series, fs_new).map_err(|e| e.in_dataset(&d.id))?;
            let batches =
                batch_periods(&normalized, periods, &d.id).map_err(|e| e.in_dataset(&d.id))?;
            let shuffled = shuffle_batches(batches, dataset_seed(seed, &d.id));
            Ok((d.id.clone(), shuffled, normalized.len()))
        })
        .collect::<Result<_>>()?;

    let mut per_dataset = Vec::with_capacity(prepared.len());
    let mut lens = Vec::with_capacity(prepared.len());
    for (id, batches, len) in prepared {
        per_dataset.push((id, batches));
        lens.push(len);
    }
    let mixed = interleave(&per_dataset)?;

    let summary = datasets
        .iter()
        .zip(&per_dataset)
        .zip(lens)
        .map(|((d, (_, batches)), normalized_len)| DatasetSummary {
            dataset_id: d.id.clone(),
            source_fs: d.series.fs(),
            resampled: d.series.fs() != fs_new,
            normalized_len,
            batches_available: batches.len(),
            batches_used: mixed.rounds,
        })
        .collect();
    let names = datasets[0].series.feature_names().to_vec();
    let series = TimeSeries::new(mixed.columns, fs_new, names)?;
    Ok(FusedDataset {
        series,
        provenance: mixed.provenance,
        seed,
        periods_per_batch: periods,
        summary,
    })
}
