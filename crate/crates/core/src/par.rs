//! Data-parallel helpers. With the `parallel` feature these dispatch to
//! rayon; without it they run sequentially with identical results.

use crate::polyring::MultiPoly;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether work is actually distributed (feature on and more than one thread).
pub fn enabled() -> bool {
    threads() > 1
}

pub fn threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Order-preserving map over `0..n`.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Pairwise sum of polynomials.
pub fn sum_tree(mut parts: Vec<MultiPoly>) -> MultiPoly {
    while parts.len() > 1 {
        let pairs: Vec<(MultiPoly, Option<MultiPoly>)> = {
            let mut it = parts.into_iter();
            let mut v = Vec::new();
            while let Some(a) = it.next() {
                v.push((a, it.next()));
            }
            v
        };
        parts = map(&pairs, |(a, b)| match b {
            Some(b) => a.add(b),
            None => a.clone(),
        });
    }
    parts.pop().unwrap_or_default()
}
