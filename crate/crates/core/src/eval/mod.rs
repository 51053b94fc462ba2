//! Evaluation: seasonal-naive residuals, threshold calibration, file-level
//! decisions, precision/recall/F1, training-cost estimate, one-way ANOVA and
//! PCA diagnostics.

mod anova;
mod metrics;
mod pca;
mod residuals;

pub use anova::{anova_oneway, f_survival, AnovaRow, AnovaTable};
pub use metrics::{flops_estimate, score, ConfusionCounts, FlopsEstimate, MetricsReport};
pub use pca::{pca_project, window_rows, PcaProjection};
pub use residuals::{
    baseline_residuals, calibrate_thresholds, decide_file, exceedance_fractions,
    ResidualSeries, ThresholdMethod, ThresholdSet, DEFAULT_EXCEED_FRACTION,
};
