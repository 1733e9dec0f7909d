//! Sequential/parallel execution switch for the enumeration loops.
//!
//! With the `parallel` feature (on by default) `Execution::Parallel` runs on
//! the rayon global pool. Without it, both variants run sequentially. Every
//! helper here preserves input order, so results never depend on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run work concurrently.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Apply `f` to each item and concatenate the outputs in input order.
    pub(crate) fn flat_map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> Vec<U> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.into_par_iter().flat_map_iter(f).collect();
        }
        items.into_iter().flat_map(f).collect()
    }

    pub(crate) fn sum<T, F>(self, items: Vec<T>, f: F) -> u64
    where
        T: Send,
        F: Fn(T) -> u64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.into_par_iter().map(f).sum();
        }
        items.into_iter().map(f).sum()
    }
}
