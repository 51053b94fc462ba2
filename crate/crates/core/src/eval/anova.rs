use serde::{Deserialize, Serialize};
use statrs::function::beta::checked_beta_reg;

use crate::error::{Error, Result};

/// Degrees of freedom beyond which the p-value is flagged as reduced precision.
const PRECISE_DF_LIMIT: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnovaRow {
    pub df: usize,
    pub sum_sq: f64,
    pub mean_sq: Option<f64>,
    pub f_stat: Option<f64>,
    pub p_value: Option<f64>,
}

/// One-way ANOVA table with between-group, within-group and total rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnovaTable {
    pub between: AnovaRow,
    pub within: AnovaRow,
    pub total: AnovaRow,
    /// Within-group mean square is zero; the p-value is reported as 0.
    pub degenerate: bool,
    /// A degree of freedom exceeds 1000 or the incomplete beta did not converge.
    pub reduced_precision: bool,
}

impl AnovaTable {
    pub fn f_stat(&self) -> Option<f64> {
        self.between.f_stat
    }

    pub fn p_value(&self) -> Option<f64> {
        self.between.p_value
    }

    /// Aligned text rendering with the usual ANOVA columns.
    pub fn to_table(&self) -> String {
        let opt = |v: Option<f64>, prec: usize| match v {
            Some(x) => format!("{x:.prec$}"),
            None => String::new(),
        };
        let p = match self.between.p_value {
            Some(x) => format!("{x:.3e}"),
            None => String::new(),
        };
        let mut s = format!(
            "{:<15} {:>18} {:>15} {:>12} {:>8} {:>10}\n",
            "Source", "Degrees of Freedom", "Sum of Squares", "Mean Square", "F-stat", "p-value"
        );
        for (name, row, p) in [
            ("Between Groups", &self.between, p.as_str()),
            ("Within Groups", &self.within, ""),
            ("Total", &self.total, ""),
        ] {
            s.push_str(&format!(
                "{:<15} {:>18} {:>15.3} {:>12} {:>8} {:>10}\n",
                name,
                row.df,
                row.sum_sq,
                opt(row.mean_sq, 3),
                opt(row.f_stat, 3),
                p
            ));
        }
        s
    }
}

/// Upper tail `P(F > f)` of the F distribution with `(d1, d2)` degrees of
/// freedom, via the regularized incomplete beta `I_{d2/(d2+d1 f)}(d2/2, d1/2)`.
///
/// Evaluating the upper tail directly keeps relative precision for small p.
pub fn f_survival(f: f64, d1: f64, d2: f64) -> Option<f64> {
    if f <= 0.0 {
        return Some(1.0);
    }
    if f.is_infinite() {
        return Some(0.0);
    }
    let x = d2 / (d2 + d1 * f);
    checked_beta_reg(d2 / 2.0, d1 / 2.0, x).ok()
}

pub fn anova_oneway(groups: &[Vec<f64>]) -> Result<AnovaTable> {
    if groups.len() < 2 {
        return Err(Error::invalid("groups", "at least 2 groups required"));
    }
    if let Some((i, g)) = groups.iter().enumerate().find(|(_, g)| g.len() < 2) {
        return Err(Error::invalid(
            "groups",
            format!("group {i} has {} values, need at least 2", g.len()),
        ));
    }
    if groups.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::invalid("groups", "values must be finite"));
    }
    let n_total: usize = groups.iter().map(Vec::len).sum();
    let grand = groups.iter().flatten().sum::<f64>() / n_total as f64;

    let mut ss_between = 0.0;
    let mut ss_within = 0.0;
    for g in groups {
        let mean = g.iter().sum::<f64>() / g.len() as f64;
        ss_between += g.len() as f64 * (mean - grand) * (mean - grand);
        ss_within += g.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>();
    }
    let ss_total: f64 = groups.iter().flatten().map(|v| (v - grand) * (v - grand)).sum();

    let df_between = groups.len() - 1;
    let df_within = n_total - groups.len();
    let df_total = n_total - 1;
    let ms_between = ss_between / df_between as f64;
    let ms_within = ss_within / df_within as f64;

    let degenerate = ms_within == 0.0;
    let mut reduced_precision = df_between > PRECISE_DF_LIMIT || df_within > PRECISE_DF_LIMIT;
    let (f_stat, p_value) = if degenerate {
        (None, Some(0.0))
    } else {
        let f = ms_between / ms_within;
        let p = f_survival(f, df_between as f64, df_within as f64);
        if p.is_none() {
            reduced_precision = true;
        }
        (Some(f), p)
    };

    Ok(AnovaTable {
        between: AnovaRow {
            df: df_between,
            sum_sq: ss_between,
            mean_sq: Some(ms_between),
            f_stat,
            p_value,
        },
        within: AnovaRow {
            df: df_within,
            sum_sq: ss_within,
            mean_sq: Some(ms_within),
            f_stat: None,
            p_value: None,
        },
        total: AnovaRow {
            df: df_total,
            sum_sq: ss_total,
            mean_sq: None,
            f_stat: None,
            p_value: None,
        },
        degenerate,
        reduced_precision,
    })
}
