//! Sequential and data-parallel drivers for the batch loops.
//!
//! With the `parallel` feature off, [`Strategy::Parallel`] runs sequentially.
//! Both strategies return identical results: searches report the first hit
//! in index order, maps preserve order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Smallest index in `0..len` for which `f` returns `Some`.
    pub fn find_first<T, F>(self, len: u64, f: F) -> Option<(u64, T)>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..len)
                .into_par_iter()
                .find_map_first(|i| f(i).map(|t| (i, t))),
            _ => (0..len).find_map(|i| f(i).map(|t| (i, t))),
        }
    }

    /// Index of the first item for which `f` returns `Some`, with its value.
    pub fn find_first_in<I, T, F>(self, items: &[I], f: F) -> Option<(usize, T)>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items
                .par_iter()
                .enumerate()
                .find_map_first(|(i, x)| f(x).map(|t| (i, t))),
            _ => items.iter().enumerate().find_map(|(i, x)| f(x).map(|t| (i, t))),
        }
    }

    pub fn map<I, T, F>(self, items: &[I], f: F) -> Vec<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn all<I, F>(self, items: &[I], f: F) -> bool
    where
        I: Sync,
        F: Fn(&I) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().all(f),
            _ => items.iter().all(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_first_hit() {
        let f = |i: u64| (i % 7 == 3 && i > 10).then_some(i * 2);
        for s in [Strategy::Sequential, Strategy::Parallel] {
            assert_eq!(s.find_first(10_000, f), Some((17, 34)));
            assert_eq!(s.find_first(5, f), None);
        }
        let items: Vec<i32> = (0..1000).collect();
        for s in [Strategy::Sequential, Strategy::Parallel] {
            assert_eq!(s.find_first_in(&items, |&x| (x > 500).then_some(x)), Some((501, 501)));
            assert_eq!(s.map(&items, |x| x * 2)[999], 1998);
            assert!(s.all(&items, |&x| x >= 0));
        }
    }
}
