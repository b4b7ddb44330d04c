//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over the rayon
//! global pool. Without it, or when [`Exec::Sequential`] is requested, the
//! same closures run on the calling thread. Results are always returned in
//! input order so output stays deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the enumeration and sweep drivers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be split across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

pub(crate) fn map_collect<T, R, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.into_par_iter().map(f).collect();
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Runs `f` inside a pool of `jobs` threads. `None` uses the global pool.
///
/// Without the `parallel` feature the job count is ignored.
pub fn with_jobs<R, F>(jobs: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    if let Some(jobs) = jobs {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
            return pool.install(f);
        }
    }
    let _ = jobs;
    f()
}

/// Number of worker threads `Exec::Parallel` will use.
pub fn current_num_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_preserve_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map_collect(Exec::Sequential, items.clone(), |x| x * x);
        let par = map_collect(Exec::Parallel, items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }

    #[test]
    fn with_jobs_runs_closure() {
        assert_eq!(with_jobs(Some(2), || 7), 7);
        assert_eq!(with_jobs(None, || 8), 8);
    }
}
