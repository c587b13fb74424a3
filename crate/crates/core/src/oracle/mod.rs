//! Exhaustive ground truth at desk scale.
//!
//! Work is split into [`Partition`]s keyed by leading entries; partitions are
//! processed independently (optionally on a thread pool) and their partial
//! results are merged in partition order, so reports do not depend on the
//! worker count.

mod cross_check;
mod enumerate;
mod sharpness;

use rayon::prelude::*;
use thiserror::Error;

pub use cross_check::{
    check_sequence, cross_check, cross_check_with, FlattenFailure, Mismatch, PredicateViolation,
    ViolationReport,
};
pub use enumerate::{enumerate_sequences, Partition, SequenceEnumerator};
pub use sharpness::{
    sharpness_scan, sharpness_scan_with, LengthCheck, ScanOptions, SharpnessResult,
    SCAN_GUARD_D1,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("bad parameters: {0}")]
    BadParameters(&'static str),
    #[error("refusing d1 = {d1} above {limit} without an override")]
    Refused { d1: u64, limit: u64 },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Maps `work` over `items`, preserving order, on `jobs` threads.
fn run_ordered<T, R, F>(items: &[T], jobs: usize, work: F) -> Result<Vec<R>, OracleError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if jobs <= 1 {
        return Ok(items.iter().map(work).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| OracleError::Pool(e.to_string()))?;
    Ok(pool.install(|| items.par_iter().map(&work).collect()))
}
