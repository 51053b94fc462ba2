use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::Label;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tp: usize,
    pub fp: usize,
    pub tn: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
}

impl ConfusionCounts {
    pub fn total(&self) -> usize {
        self.tp + self.fp + self.tn + self.fn_
    }
}

/// Precision, recall and F1 with anomalous as the positive class.
///
/// A ratio whose denominator is zero is reported as 0 and flagged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub counts: ConfusionCounts,
    pub precision_undefined: bool,
    pub recall_undefined: bool,
    pub f1_undefined: bool,
}

impl MetricsReport {
    pub fn false_positive_rate(&self) -> f64 {
        let negatives = self.counts.fp + self.counts.tn;
        if negatives == 0 {
            0.0
        } else {
            self.counts.fp as f64 / negatives as f64
        }
    }

    /// Aligned text table: Precision, Recall, F1 plus the confusion counts.
    pub fn to_table(&self) -> String {
        let c = &self.counts;
        let mut s = String::new();
        s.push_str(&format!(
            "{:<10} {:>8} {:>8} {:>8}   {:>5} {:>5} {:>5} {:>5}\n",
            "", "Precision", "Recall", "F1", "TP", "FP", "TN", "FN"
        ));
        s.push_str(&format!(
            "{:<10} {:>9.3} {:>8.3} {:>8.3}   {:>5} {:>5} {:>5} {:>5}\n",
            "Result", self.precision, self.recall, self.f1, c.tp, c.fp, c.tn, c.fn_
        ));
        s
    }
}

fn ratio(num: usize, den: usize) -> (f64, bool) {
    if den == 0 {
        (0.0, true)
    } else {
        (num as f64 / den as f64, false)
    }
}

/// Scores `(predicted, actual)` pairs.
pub fn score(decisions: &[(Label, Label)]) -> MetricsReport {
    let mut counts = ConfusionCounts::default();
    for &(pred, actual) in decisions {
        match (pred, actual) {
            (Label::Anomalous, Label::Anomalous) => counts.tp += 1,
            (Label::Anomalous, Label::Healthy) => counts.fp += 1,
            (Label::Healthy, Label::Healthy) => counts.tn += 1,
            (Label::Healthy, Label::Anomalous) => counts.fn_ += 1,
        }
    }
    let (precision, precision_undefined) = ratio(counts.tp, counts.tp + counts.fp);
    let (recall, recall_undefined) = ratio(counts.tp, counts.tp + counts.fn_);
    let (f1, f1_undefined) = if precision + recall > 0.0 {
        (2.0 * precision * recall / (precision + recall), false)
    } else {
        (0.0, true)
    };
    MetricsReport {
        precision,
        recall,
        f1,
        counts,
        precision_undefined,
        recall_undefined,
        f1_undefined,
    }
}

/// Training-cost estimate `2 * params * 3 * samples * epochs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlopsEstimate {
    pub params: u64,
    pub samples: u64,
    pub epochs: u64,
    pub flops: f64,
}

pub fn flops_estimate(params: u64, samples: u64, epochs: u64) -> Result<FlopsEstimate> {
    for (name, v) in [("params", params), ("samples", samples), ("epochs", epochs)] {
        if v == 0 {
            return Err(Error::invalid(name, "must be positive"));
        }
    }
    let exact = 6u128 * params as u128 * samples as u128 * epochs as u128;
    Ok(FlopsEstimate {
        params,
        samples,
        epochs,
        flops: exact as f64,
    })
}
