//! Map/reduce over independent work items, parallel via rayon when the
//! `parallel` feature is on and plain sequential otherwise. Callers must
//! supply an associative, commutative reduce so the result is identical
//! regardless of worker count or chunk boundaries.

#[cfg(feature = "parallel")]
pub(crate) fn map_reduce<T, R, M, F>(items: Vec<T>, map: M, reduce: F) -> Option<R>
where
    T: Send,
    R: Send,
    M: Fn(T) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(map).reduce_with(reduce)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_reduce<T, R, M, F>(items: Vec<T>, map: M, reduce: F) -> Option<R>
where
    M: Fn(T) -> R,
    F: Fn(R, R) -> R,
{
    items.into_iter().map(map).reduce(reduce)
}
