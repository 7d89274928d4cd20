//! Thin switch between rayon and plain iteration.
//!
//! With the `parallel` feature disabled every [`Exec`] value runs sequentially,
//! so callers never need their own `cfg` blocks.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Order-preserving map over a slice.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Sum of `f(i)` over `0..n`, split into contiguous blocks.
pub fn sum_range<F>(exec: Exec, n: u32, f: F) -> i64
where
    F: Fn(std::ops::Range<u32>) -> i64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && n > 64 {
        use rayon::prelude::*;
        let blocks = (rayon::current_num_threads() as u32 * 4).max(1);
        let step = n.div_ceil(blocks);
        return (0..blocks)
            .into_par_iter()
            .map(|b| {
                let lo = (b * step).min(n);
                let hi = ((b + 1) * step).min(n);
                f(lo..hi)
            })
            .sum();
    }
    let _ = exec;
    f(0..n)
}

/// Runs `f` inside a pool with the given thread count (0 = rayon default).
pub fn with_threads<R: Send, F: FnOnce() -> R + Send>(threads: usize, f: F) -> R {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            return pool.install(f);
        }
    }
    let _ = threads;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let v: Vec<u64> = (0..1000).collect();
        let a = map(Exec::Sequential, &v, |x| x * x);
        let b = map(Exec::Parallel, &v, |x| x * x);
        assert_eq!(a, b);
        let s = |r: std::ops::Range<u32>| r.map(|i| i as i64).sum::<i64>();
        assert_eq!(sum_range(Exec::Sequential, 1000, s), sum_range(Exec::Parallel, 1000, s));
    }
}
