//! Data-parallel helpers. With the `parallel` feature off every call runs
//! sequentially, and [`Parallelism::Parallel`] behaves like `Sequential`.

/// Execution strategy for the data-parallel loops in this crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// True when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

/// `items.map(f)` collected in input order.
pub fn map<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Maximum of `f` over `items`, ignoring `None`.
pub fn max_by_key<T, F>(mode: Parallelism, items: &[T], f: F) -> Option<i64>
where
    T: Sync,
    F: Fn(&T) -> Option<i64> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().filter_map(f).max();
    }
    let _ = mode;
    items.iter().filter_map(f).max()
}
