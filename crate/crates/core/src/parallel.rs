//! Data-parallel execution helpers.
//!
//! With the `parallel` feature (default) the helpers fan work out over rayon;
//! without it they run plain sequential loops. Every call site computes each
//! index independently and reduces within an index in a fixed order, so the
//! results are bit-identical regardless of schedule or feature selection.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Sequential reference path with the same contract as [`map_indexed`].
/// Kept unconditionally so benchmarks can compare the two executions.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
