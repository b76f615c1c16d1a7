//! Order-preserving map over vertex ids; parallel when the `parallel`
//! feature is enabled. Output order never depends on scheduling.

#[cfg(feature = "parallel")]
pub(crate) fn map_vertices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vertices<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
