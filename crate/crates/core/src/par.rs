//! Pair-level parallelism with a sequential fallback.
//!
//! With the `parallel` feature (on by default) work is spread over a rayon
//! pool; without it, or with [`Execution::Sequential`], items are processed
//! in order on the calling thread. Results are always returned in input
//! order, so output does not depend on the schedule.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::Result;

static DEFAULT_THREADS: AtomicUsize = AtomicUsize::new(0);

/// Thread count used by [`Execution::auto`]; `0` lets the pool decide.
pub fn set_default_threads(threads: usize) {
    DEFAULT_THREADS.store(threads, Ordering::Relaxed);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Sequential,
    /// `threads = 0` lets the pool pick the number of threads.
    Parallel { threads: usize },
}

impl Execution {
    /// Parallel when compiled with the `parallel` feature, else sequential.
    /// A default of one thread (see [`set_default_threads`]) is sequential.
    pub fn auto() -> Self {
        let threads = DEFAULT_THREADS.load(Ordering::Relaxed);
        if cfg!(feature = "parallel") && threads != 1 {
            Execution::Parallel { threads }
        } else {
            Execution::Sequential
        }
    }

    pub fn from_threads(threads: Option<usize>) -> Self {
        match threads {
            Some(1) => Execution::Sequential,
            Some(t) => Execution::Parallel { threads: t },
            None => Execution::auto(),
        }
    }
}

/// Applies `f` to every item, keeping input order. The first error wins.
pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(&f).collect(),
        Execution::Parallel { threads } => parallel_map(items, threads, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], threads: usize, f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| crate::error::Error::Internal(e.to_string()))?;
    pool.install(|| items.par_iter().map(&f).collect())
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], _threads: usize, f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    items.iter().map(&f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..200).collect();
        let seq = map_ordered(&items, Execution::Sequential, |x| Ok(x * x)).unwrap();
        let par = map_ordered(&items, Execution::Parallel { threads: 4 }, |x| Ok(x * x)).unwrap();
        assert_eq!(seq, par);
    }
}
