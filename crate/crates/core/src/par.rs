//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper preserves input order, so parallel and sequential runs
//! produce identical results. Without the `parallel` feature the
//! [`Execution::Parallel`] strategy silently runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub fn map<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub fn filter_map<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().filter_map(f).collect();
    }
    let _ = exec;
    items.iter().filter_map(f).collect()
}

/// First (in input order) item for which `f` returns `Some`.
pub fn find_map_first<T, U, F>(exec: Execution, items: &[T], f: F) -> Option<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().find_map_first(f);
    }
    let _ = exec;
    items.iter().find_map(f)
}

pub fn range_flat_map<U, F>(exec: Execution, range: std::ops::Range<i64>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(i64) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().flat_map_iter(f).collect();
    }
    let _ = exec;
    range.flat_map(f).collect()
}
