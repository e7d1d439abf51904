//! Order-preserving data parallelism with a sequential fallback.
//!
//! Sweeps over independent items (corpus members, random spaces) may run on
//! rayon when the `parallel` feature is enabled. Results are collected in
//! input order, so output is bit-identical to the sequential path; a test
//! asserts this on a real workload.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, preserving order. Parallel when the `parallel`
/// feature is on, otherwise identical to [`map_collect_seq`].
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_collect_seq(items, f)
    }
}

/// Sequential reference path for [`map_collect`]; always available so the
/// bench suite can compare both on the same build.
pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
