//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool when asked to; without it they always run sequentially.

/// Map `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Keep the items satisfying `pred`, preserving order.
pub fn filter<T, F>(items: Vec<T>, parallel: bool, pred: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.into_par_iter().filter(|x| pred(x)).collect();
    }
    let _ = parallel;
    items.into_iter().filter(|x| pred(x)).collect()
}

/// Whether parallel execution is compiled in.
pub const AVAILABLE: bool = cfg!(feature = "parallel");
