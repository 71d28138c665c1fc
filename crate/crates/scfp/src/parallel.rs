//! Index-driven execution engine for sampling workloads.
//!
//! Work items are pure functions of their index, so the engine can run them
//! in any order on any number of threads and still produce identical
//! results. With the `parallel` feature (on by default) the work is
//! distributed with rayon; without it, the same entry points run
//! sequentially. Reductions are restricted to order-insensitive operations
//! (min) or to ordered collection followed by a sequential fold, keeping
//! floating-point results independent of the schedule.

/// Minimum of `f(0), ..., f(n-1)`; +infinity when `n == 0`.
#[cfg(feature = "parallel")]
pub fn indexed_min<F>(n: u64, f: F) -> f64
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).reduce(|| f64::INFINITY, f64::min)
}

/// Minimum of `f(0), ..., f(n-1)`; +infinity when `n == 0`.
#[cfg(not(feature = "parallel"))]
pub fn indexed_min<F>(n: u64, f: F) -> f64
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    indexed_min_seq(n, f)
}

/// Sequential reference implementation of [`indexed_min`].
pub fn indexed_min_seq<F>(n: u64, f: F) -> f64
where
    F: Fn(u64) -> f64,
{
    (0..n).map(f).fold(f64::INFINITY, f64::min)
}

/// Maximum of `f(0), ..., f(n-1)`; -infinity when `n == 0`.
#[cfg(feature = "parallel")]
pub fn indexed_max<F>(n: u64, f: F) -> f64
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).reduce(|| f64::NEG_INFINITY, f64::max)
}

/// Maximum of `f(0), ..., f(n-1)`; -infinity when `n == 0`.
#[cfg(not(feature = "parallel"))]
pub fn indexed_max<F>(n: u64, f: F) -> f64
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    indexed_max_seq(n, f)
}

/// Sequential reference implementation of [`indexed_max`].
pub fn indexed_max_seq<F>(n: u64, f: F) -> f64
where
    F: Fn(u64) -> f64,
{
    (0..n).map(f).fold(f64::NEG_INFINITY, f64::max)
}

/// `vec![f(0), ..., f(n-1)]` in index order.
#[cfg(feature = "parallel")]
pub fn indexed_collect<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// `vec![f(0), ..., f(n-1)]` in index order.
#[cfg(not(feature = "parallel"))]
pub fn indexed_collect<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    indexed_collect_seq(n, f)
}

/// Sequential reference implementation of [`indexed_collect`].
pub fn indexed_collect_seq<T, F>(n: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..n).map(f).collect()
}
