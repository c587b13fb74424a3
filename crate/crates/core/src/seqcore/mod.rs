//! Degree sequences: representation, parsing, graphicality and realization.
//!
//! A [`DegreeSequence`] is a non-increasing sequence of positive integers
//! stored as runs of equal values. Every operation in this crate consumes
//! sequences in that normal form.

mod erdos_gallai;
mod havel_hakimi;
mod parse;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use erdos_gallai::{
    erdos_gallai_check, erdos_gallai_check_with, erdos_gallai_terms, erdos_gallai_violations,
    EgMethod, EgReport, Violation,
};
pub use havel_hakimi::{havel_hakimi_realize, RealizationDefect, Realization, RealizeError};
pub use parse::parse_sequence;

/// Largest value or count a sequence may carry (2^63 - 1).
///
/// Keeping every entry, count and length below this cap means that sums,
/// squared bound terms and Erdős–Gallai sides all fit in 128 bits.
pub const MAX_ENTRY: u64 = i64::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence has no terms")]
    Empty,
    #[error("zero entries and zero counts are not allowed")]
    ZeroEntry,
    #[error("malformed sequence text at byte {position}: {reason}")]
    Malformed { position: usize, reason: &'static str },
    #[error("value, count or length exceeds 2^63-1")]
    Overflow,
    #[error("index {k} out of range 1..={n}")]
    IndexOutOfRange { k: u64, n: u64 },
}

/// A maximal block of equal entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Run {
    pub value: u64,
    pub count: u64,
}

/// Run-length encoded non-increasing sequence of positive integers.
///
/// Invariants: at least one run, run values strictly decreasing, every value
/// and count in `1..=MAX_ENTRY`, total length at most `MAX_ENTRY`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    runs: Vec<Run>,
    n: u64,
    sum: u128,
}

impl DegreeSequence {
    /// Builds a sequence from `(value, count)` pairs in any order.
    ///
    /// Pairs are sorted into decreasing value order and equal values are
    /// merged.
    pub fn from_runs<I>(pairs: I) -> Result<Self, SequenceError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut pairs: Vec<(u64, u64)> = pairs.into_iter().collect();
        if pairs.is_empty() {
            return Err(SequenceError::Empty);
        }
        for &(value, count) in &pairs {
            if value == 0 || count == 0 {
                return Err(SequenceError::ZeroEntry);
            }
            if value > MAX_ENTRY || count > MAX_ENTRY {
                return Err(SequenceError::Overflow);
            }
        }
        pairs.sort_by_key(|p| std::cmp::Reverse(p.0));

        let mut runs: Vec<Run> = Vec::with_capacity(pairs.len());
        let mut n: u64 = 0;
        for (value, count) in pairs {
            n = n
                .checked_add(count)
                .filter(|&n| n <= MAX_ENTRY)
                .ok_or(SequenceError::Overflow)?;
            match runs.last_mut() {
                Some(last) if last.value == value => last.count += count,
                _ => runs.push(Run { value, count }),
            }
        }
        let sum = runs
            .iter()
            .map(|r| r.value as u128 * r.count as u128)
            .sum();
        Ok(Self { runs, n, sum })
    }

    /// Builds a sequence from individual entries in any order.
    pub fn from_values(values: &[u64]) -> Result<Self, SequenceError> {
        Self::from_runs(values.iter().map(|&v| (v, 1)))
    }

    /// The constant sequence `(value^count)`.
    pub fn constant(value: u64, count: u64) -> Result<Self, SequenceError> {
        Self::from_runs([(value, count)])
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of entries.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn sum(&self) -> u128 {
        self.sum
    }

    pub fn has_even_sum(&self) -> bool {
        self.sum.is_multiple_of(2)
    }

    /// Largest entry.
    pub fn d1(&self) -> u64 {
        self.runs[0].value
    }

    /// Smallest entry.
    pub fn dn(&self) -> u64 {
        self.runs[self.runs.len() - 1].value
    }

    /// Entry at 1-based position `i`.
    pub fn get(&self, i: u64) -> Option<u64> {
        if i == 0 {
            return None;
        }
        let mut end = 0;
        for run in &self.runs {
            end += run.count;
            if i <= end {
                return Some(run.value);
            }
        }
        None
    }

    /// Expanded entries in decreasing order.
    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.runs
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.count as usize))
    }

    /// Largest `k` with `d_k >= k`.
    pub fn durfee_index(&self) -> u64 {
        let mut start = 0;
        let mut best = 0;
        for run in &self.runs {
            if run.value > start {
                best = best.max(run.value.min(start + run.count));
            }
            start += run.count;
        }
        best
    }

    /// Raises the first `k` entries to `d1` and lowers the rest to `dn`.
    ///
    /// An Erdős–Gallai violation at index `k` survives this transformation:
    /// the left side can only grow and the right side can only shrink.
    pub fn flatten_at(&self, k: u64) -> Result<Self, SequenceError> {
        if k == 0 || k > self.n {
            return Err(SequenceError::IndexOutOfRange { k, n: self.n });
        }
        let mut pairs = vec![(self.d1(), k)];
        if k < self.n {
            pairs.push((self.dn(), self.n - k));
        }
        Self::from_runs(pairs)
    }
}

impl fmt::Display for DegreeSequence {
    /// Canonical form: `V^C` per run, count omitted when 1, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, run) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if run.count == 1 {
                write!(f, "{}", run.value)?;
            } else {
                write!(f, "{}^{}", run.value, run.count)?;
            }
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequence(s)
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
