//! Seeded Monte Carlo execution: trial `t` runs on stream `(seed, t)` and
//! results come back in trial order, so output does not depend on the
//! number of worker threads.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::randkit::RngStream;

/// Runs `trials` independent trials on at most `threads` workers (`None` uses
/// the global pool) and returns their results ordered by trial index.
///
/// The first failing trial (by index) determines the returned error.
pub fn run_trials<R, F>(
    seed: u64,
    trials: usize,
    threads: Option<usize>,
    trial: F,
) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(&mut RngStream) -> Result<R> + Sync,
{
    if trials == 0 {
        return Err(Error::param("trials must be at least 1"));
    }
    let work = || -> Vec<Result<R>> {
        (0..trials)
            .into_par_iter()
            .map(|t| trial(&mut RngStream::new(seed, t as u64)))
            .collect()
    };
    let results = match threads {
        None => work(),
        Some(0) => return Err(Error::param("threads must be at least 1")),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::param(format!("cannot start thread pool: {e}")))?
            .install(work),
    };
    results.into_iter().collect()
}
