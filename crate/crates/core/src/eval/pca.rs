use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::signal::TimeSeries;

/// Result of projecting rows onto their leading principal components.
#[derive(Debug, Clone, PartialEq)]
pub struct PcaProjection {
    /// One row per input row, `n_components` coordinates each.
    pub projected: Vec<Vec<f64>>,
    /// Unit-norm component vectors, strongest first.
    pub components: Vec<Vec<f64>>,
    /// Covariance eigenvalues (sample covariance, divisor `rows - 1`).
    pub eigenvalues: Vec<f64>,
    /// Share of total variance carried by each component, non-increasing.
    pub explained_variance_ratio: Vec<f64>,
}

fn centered(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let n = rows.len();
    let d = rows[0].len();
    if let Some(r) = rows.iter().find(|r| r.len() != d) {
        return Err(Error::DimensionMismatch(format!(
            "rows must share a length: expected {d}, found {}",
            r.len()
        )));
    }
    if rows.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::invalid("rows", "values must be finite"));
    }
    let mut m = DMatrix::from_fn(n, d, |i, j| rows[i][j]);
    for mut col in m.column_iter_mut() {
        let mean = col.mean();
        col.add_scalar_mut(-mean);
    }
    Ok(m)
}

/// Eigenpairs sorted by descending eigenvalue.
fn sorted_eigen(sym: DMatrix<f64>) -> Vec<(f64, DVector<f64>)> {
    let eig = SymmetricEigen::new(sym);
    let mut pairs: Vec<(f64, DVector<f64>)> = eig
        .eigenvalues
        .iter()
        .zip(eig.eigenvectors.column_iter())
        .map(|(&l, v)| (l.max(0.0), v.into_owned()))
        .collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    pairs
}

/// Completes `basis` to `k` orthonormal vectors of length `d` using unit
/// axes and Gram-Schmidt. Used when the data span fewer than `k` directions.
fn complete_basis(basis: &mut Vec<DVector<f64>>, k: usize, d: usize) {
    let mut axis = 0;
    while basis.len() < k && axis < d {
        let mut v = DVector::zeros(d);
        v[axis] = 1.0;
        axis += 1;
        for _ in 0..2 {
            for b in basis.iter() {
                let proj = b.dot(&v);
                v.axpy(-proj, b, 1.0);
            }
        }
        let norm = v.norm();
        if norm > 1e-6 {
            basis.push(v / norm);
        }
    }
}

/// Projects mean-centered `rows` onto the top `n_components` eigenvectors of
/// their covariance.
///
/// When rows are longer than they are numerous, the eigenproblem is solved on
/// the `rows x rows` Gram matrix instead and mapped back, so very long
/// flattened windows stay cheap. Directions with zero variance are filled
/// with an orthonormal completion and get a ratio of 0.
pub fn pca_project(rows: &[Vec<f64>], n_components: usize) -> Result<PcaProjection> {
    if n_components == 0 {
        return Err(Error::invalid("n_components", "must be at least 1"));
    }
    if rows.len() <= n_components {
        return Err(Error::invalid(
            "rows",
            format!("need more than {n_components} rows, got {}", rows.len()),
        ));
    }
    let d = rows[0].len();
    if d < n_components {
        return Err(Error::invalid(
            "rows",
            format!("need at least {n_components} columns, got {d}"),
        ));
    }
    let x = centered(rows)?;
    let n = rows.len();
    let denom = (n - 1) as f64;

    // Top eigenpairs in column space, eigenvalues of X^T X.
    let pairs: Vec<(f64, DVector<f64>)> = if d <= n {
        sorted_eigen(x.transpose() * &x)
    } else {
        let gram = &x * x.transpose();
        sorted_eigen(gram)
            .into_iter()
            .map(|(l, u)| {
                let v = x.transpose() * u;
                let norm = v.norm();
                let v = if norm > 0.0 { v / norm } else { v };
                (l, v)
            })
            .collect()
    };
    let total: f64 = pairs.iter().map(|p| p.0).sum();
    if !(total > 0.0) {
        return Err(Error::invalid("rows", "data have zero variance"));
    }
    let floor = total * 1e-12;

    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(n_components);
    let mut eigenvalues = Vec::with_capacity(n_components);
    for (l, v) in pairs.iter().take(n_components) {
        if *l <= floor || v.norm() == 0.0 {
            break;
        }
        basis.push(v.clone());
        eigenvalues.push(*l);
    }
    complete_basis(&mut basis, n_components, d);
    eigenvalues.resize(n_components, 0.0);

    let explained_variance_ratio = eigenvalues.iter().map(|l| l / total).collect();
    let projected = (0..n)
        .map(|i| {
            let row = x.row(i);
            basis.iter().map(|b| row.dot(&b.transpose())).collect()
        })
        .collect();
    Ok(PcaProjection {
        projected,
        components: basis.iter().map(|b| b.iter().copied().collect()).collect(),
        eigenvalues: eigenvalues.iter().map(|l| l / denom).collect(),
        explained_variance_ratio,
    })
}

/// Splits `series` into consecutive non-overlapping windows of `window_len`
/// samples and flattens each one sample-major (all features of sample 0,
/// then sample 1, ...). A trailing partial window is dropped.
pub fn window_rows(series: &TimeSeries, window_len: usize) -> Result<Vec<Vec<f64>>> {
    if window_len == 0 {
        return Err(Error::invalid("window_len", "must be at least 1"));
    }
    let n_windows = series.len() / window_len;
    if n_windows == 0 {
        return Err(Error::invalid(
            "window_len",
            format!("{window_len} exceeds series length {}", series.len()),
        ));
    }
    let cols = series.columns();
    Ok((0..n_windows)
        .map(|w| {
            let start = w * window_len;
            (start..start + window_len)
                .flat_map(|i| cols.iter().map(move |c| c[i]))
                .collect()
        })
        .collect())
}
