//! Data-parallel reductions used by the hot loops (residual certification,
//! sweeps, sandwich checks).
//!
//! With the default `parallel` feature these dispatch to rayon; without it
//! they fall back to the sequential versions. Both variants are always
//! compiled so the bench suite can compare them directly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Extremes of a pointwise quantity over an index range, with the
/// locations where they occur.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrema {
    pub min: f64,
    pub min_index: usize,
    pub max: f64,
    pub max_index: usize,
}

impl Extrema {
    fn unit(value: f64, index: usize) -> Self {
        Extrema { min: value, min_index: index, max: value, max_index: index }
    }

    fn merge(self, other: Self) -> Self {
        let (min, min_index) = if other.min < self.min {
            (other.min, other.min_index)
        } else {
            (self.min, self.min_index)
        };
        let (max, max_index) = if other.max > self.max {
            (other.max, other.max_index)
        } else {
            (self.max, self.max_index)
        };
        Extrema { min, min_index, max, max_index }
    }
}

/// Sequential min/max reduction of `f(i)` over `0..n`.
pub fn extrema_seq<F>(n: usize, f: F) -> Option<Extrema>
where
    F: Fn(usize) -> f64 + Sync,
{
    (0..n).map(|i| Extrema::unit(f(i), i)).reduce(Extrema::merge)
}

/// Parallel min/max reduction of `f(i)` over `0..n`.
#[cfg(feature = "parallel")]
pub fn extrema_par<F>(n: usize, f: F) -> Option<Extrema>
where
    F: Fn(usize) -> f64 + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|i| Extrema::unit(f(i), i))
        .reduce_with(Extrema::merge)
}

/// Min/max reduction with the configured execution strategy.
pub fn extrema<F>(n: usize, f: F) -> Option<Extrema>
where
    F: Fn(usize) -> f64 + Sync,
{
    #[cfg(feature = "parallel")]
    {
        extrema_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        extrema_seq(n, f)
    }
}

/// Sequential indexed map preserving input order.
pub fn map_collect_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Parallel indexed map preserving input order.
#[cfg(feature = "parallel")]
pub fn map_collect_par<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Indexed map with the configured execution strategy; output order always
/// matches input order.
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_collect_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_collect_seq(n, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extrema_finds_both_ends() {
        let vals = [3.0, -1.0, 4.0, 1.0, -5.0, 9.0, 2.0];
        let e = extrema_seq(vals.len(), |i| vals[i]).unwrap();
        assert_eq!(e.min, -5.0);
        assert_eq!(e.min_index, 4);
        assert_eq!(e.max, 9.0);
        assert_eq!(e.max_index, 5);
        #[cfg(feature = "parallel")]
        {
            let p = extrema_par(vals.len(), |i| vals[i]).unwrap();
            assert_eq!(p.min, e.min);
            assert_eq!(p.max, e.max);
        }
    }

    #[test]
    fn map_collect_keeps_order() {
        let v = map_collect(10, |i| i * i);
        assert_eq!(v, vec![0, 1, 4, 9, 16, 25, 36, 49, 64, 81]);
    }

    #[test]
    fn extrema_empty_is_none() {
        assert!(extrema(0, |_| 0.0).is_none());
    }
}
