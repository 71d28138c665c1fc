//! Thin wrappers around nalgebra for the few dense factorizations the crate
//! needs. All matrices here are small (problem dimensions are single digits).

use nalgebra::{DMatrix, DVector};

pub(crate) fn to_dmatrix(rows: &[Vec<f64>]) -> DMatrix<f64> {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j])
}

/// Largest singular value.
pub(crate) fn spectral_norm(rows: &[Vec<f64>]) -> f64 {
    let m = to_dmatrix(rows);
    m.singular_values().iter().fold(0.0_f64, |acc, s| acc.max(*s))
}

/// Smallest eigenvalue of M + M^T. Nonnegative iff the linear map M is
/// monotone.
pub(crate) fn min_eig_symmetrized(rows: &[Vec<f64>]) -> f64 {
    let m = to_dmatrix(rows);
    let sym = &m + m.transpose();
    sym.symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, v| acc.min(*v))
}

/// Solves the square system `matrix * x = rhs` by LU with partial pivoting.
/// Returns None when the matrix is singular to working precision.
pub(crate) fn solve(matrix: &DMatrix<f64>, rhs: &[f64]) -> Option<Vec<f64>> {
    let b = DVector::from_column_slice(rhs);
    matrix.clone().lu().solve(&b).map(|x| x.iter().copied().collect())
}

/// Minimum-norm least-squares solution of `matrix * x = rhs` via SVD,
/// treating singular values below a relative cutoff as zero. Handles
/// rank-deficient systems, which arise from duplicated constraints.
pub(crate) fn lsq_solve(rows: &[Vec<f64>], rhs: &[f64]) -> Option<Vec<f64>> {
    let m = to_dmatrix(rows);
    let b = DVector::from_column_slice(rhs);
    let svd = m.svd(true, true);
    let smax = svd.singular_values.iter().fold(0.0_f64, |acc, s| acc.max(*s));
    let eps = (smax * 1e-12).max(f64::MIN_POSITIVE);
    svd.solve(&b, eps).ok().map(|x| x.iter().copied().collect())
}

/// Nonnegative least squares, `argmin_{x >= 0} ||E x - f||`, by the
/// Lawson-Hanson active-set method. Finite termination; robust to
/// duplicated or nearly parallel columns.
fn nnls(e: &DMatrix<f64>, f: &DVector<f64>) -> DVector<f64> {
    let n = e.ncols();
    let mut x = DVector::<f64>::zeros(n);
    if n == 0 {
        return x;
    }
    let mut passive = vec![false; n];
    let grad0 = e.transpose() * f;
    let tol = 1e-12 * (1.0 + grad0.amax());
    let max_outer = 10 * n + 50;
    for _ in 0..max_outer {
        let residual = f - e * &x;
        let w = e.transpose() * residual;
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if !passive[j] && w[j] > tol && best.map_or(true, |(_, v)| w[j] > v) {
                best = Some((j, w[j]));
            }
        }
        let Some((enter, _)) = best else { break };
        passive[enter] = true;
        // Inner loop: keep the passive-set least-squares solution feasible.
        loop {
            let idx: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
            let cols: Vec<Vec<f64>> =
                (0..e.nrows()).map(|r| idx.iter().map(|&j| e[(r, j)]).collect()).collect();
            let f_slice: Vec<f64> = f.iter().copied().collect();
            let Some(z) = lsq_solve(&cols, &f_slice) else {
                passive[enter] = false;
                return x;
            };
            if z.iter().all(|&v| v > 0.0) {
                for (slot, &j) in z.iter().zip(&idx) {
                    x[j] = *slot;
                }
                for j in 0..n {
                    if !passive[j] {
                        x[j] = 0.0;
                    }
                }
                break;
            }
            let mut alpha = f64::INFINITY;
            for (zi, &j) in z.iter().zip(&idx) {
                if *zi <= 0.0 {
                    let step = x[j] / (x[j] - zi);
                    if step < alpha {
                        alpha = step;
                    }
                }
            }
            if !alpha.is_finite() {
                alpha = 0.0;
            }
            for (zi, &j) in z.iter().zip(&idx) {
                x[j] += alpha * (zi - x[j]);
                if x[j] <= 1e-15 {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
            if !passive.iter().any(|&p| p) {
                break;
            }
        }
    }
    x
}

/// Least-distance program: `argmin ||v||` subject to `g_i . v >= h_i`,
/// solved through the classical reduction to nonnegative least squares.
/// Returns None when the constraints are inconsistent.
pub(crate) fn least_distance(g_rows: &[Vec<f64>], h: &[f64]) -> Option<Vec<f64>> {
    let m = g_rows.len();
    let d = g_rows.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![0.0; d]);
    }
    let e = DMatrix::from_fn(d + 1, m, |r, c| if r < d { g_rows[c][r] } else { h[c] });
    let f = DVector::from_fn(d + 1, |r, _| if r == d { 1.0 } else { 0.0 });
    let lambda = nnls(&e, &f);
    let r = &e * lambda - f;
    let denom = r[d];
    if denom.abs() <= 1e-12 {
        return None;
    }
    Some((0..d).map(|i| -r[i] / denom).collect())
}
