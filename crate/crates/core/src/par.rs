//! Parallel-or-sequential inner loops.
//!
//! Counting loops reduce by integer summation and searches take the lowest
//! index, so the parallel and sequential paths are bit-identical; the
//! `parallel` feature only changes how the work is scheduled.

#[cfg(feature = "parallel")]
pub(crate) fn sum_u64<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).sum()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sum_u64<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64,
{
    (0..n).map(f).sum()
}

/// Index of the first `i` in `0..n` satisfying `pred`, lowest index wins.
#[cfg(feature = "parallel")]
pub(crate) fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().find_first(|&i| pred(i))
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool,
{
    (0..n).find(|&i| pred(i))
}

/// Maps `0..n` preserving order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
