//! Exact Erdős–Gallai evaluation.
//!
//! For a non-increasing sequence `d` and `1 <= k <= n` the inequality is
//!
//! ```text
//! d_1 + ... + d_k  <=  k(k-1) + sum_{i>k} min(k, d_i)
//! ```
//!
//! and the sequence is graphic iff its sum is even and the inequality holds
//! for every `k`. The run-length evaluator splits `1..=n` into O(r) segments
//! on which `rhs - lhs` is a convex polynomial of degree at most two in `k`,
//! so the least violating index is found with two binary searches per
//! segment instead of a pass over all `n` indices.

use serde::Serialize;

use super::{DegreeSequence, SequenceError};

/// One failing index together with both sides of the inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub k: u64,
    pub lhs: u128,
    pub rhs: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EgReport {
    pub parity_even: bool,
    /// Least violating index, reported whatever the parity.
    pub first_violation: Option<Violation>,
    pub graphic: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum EgMethod {
    /// Segment-wise closed forms over the runs.
    #[default]
    RunLength,
    /// Every index `1..=n`, each in O(r).
    Naive,
}

pub fn erdos_gallai_check(seq: &DegreeSequence) -> EgReport {
    erdos_gallai_check_with(seq, EgMethod::RunLength)
}

pub fn erdos_gallai_check_with(seq: &DegreeSequence, method: EgMethod) -> EgReport {
    let first_violation = match method {
        EgMethod::RunLength => Segments::new(seq).first_violation(),
        EgMethod::Naive => naive_scan(seq, true).into_iter().next(),
    };
    let parity_even = seq.has_even_sum();
    EgReport {
        parity_even,
        first_violation,
        graphic: parity_even && first_violation.is_none(),
    }
}

/// Every violating index in increasing order (diagnostics).
pub fn erdos_gallai_violations(seq: &DegreeSequence, method: EgMethod) -> Vec<Violation> {
    match method {
        EgMethod::RunLength => Segments::new(seq).all_violations(),
        EgMethod::Naive => naive_scan(seq, false),
    }
}

/// Both sides of the inequality at a single index `k`.
pub fn erdos_gallai_terms(seq: &DegreeSequence, k: u64) -> Result<(u128, u128), SequenceError> {
    if k == 0 || k > seq.n() {
        return Err(SequenceError::IndexOutOfRange { k, n: seq.n() });
    }
    let kk = k as u128;
    let mut lhs = 0u128;
    let mut rhs = kk * (kk - 1);
    let mut start = 0u64;
    for run in seq.runs() {
        let end = start + run.count;
        let v = run.value as u128;
        let head = end.min(k).saturating_sub(start) as u128;
        let tail = run.count as u128 - head;
        lhs += head * v;
        rhs += tail * v.min(kk);
        start = end;
    }
    Ok((lhs, rhs))
}

fn naive_scan(seq: &DegreeSequence, stop_at_first: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 1..=seq.n() {
        let (lhs, rhs) = erdos_gallai_terms(seq, k).expect("k in range");
        if lhs > rhs {
            out.push(Violation { k, lhs, rhs });
            if stop_at_first {
                break;
            }
        }
    }
    out
}

/// Prefix tables over the runs.
struct Segments<'a> {
    seq: &'a DegreeSequence,
    /// `start[t]`: entries before run `t`; `start[r] = n`.
    start: Vec<u64>,
    /// `prefix[t]`: sum of entries before run `t`.
    prefix: Vec<u128>,
}

/// A maximal index interval inside one run on which every `min(k, d_i)`
/// with `i > k` resolves the same way.
#[derive(Debug, Clone, Copy)]
struct Piece {
    lo: u64,
    hi: u64,
    /// Value of the run containing the interval.
    value: u64,
    /// Entries before the run and sum of those entries.
    run_start: u64,
    run_prefix: u128,
    /// Last index of the run.
    run_end: u64,
    /// Entries in later runs with value >= k (they contribute k each).
    later_ge: u64,
    /// Sum of entries in later runs with value < k.
    later_lt_sum: u128,
}

impl Piece {
    fn terms(&self, k: u64) -> (u128, u128) {
        let kk = k as u128;
        let v = self.value as u128;
        let lhs = self.run_prefix + (k - self.run_start) as u128 * v;
        let rhs = kk * (kk - 1)
            + (self.run_end - k) as u128 * v.min(kk)
            + self.later_ge as u128 * kk
            + self.later_lt_sum;
        (lhs, rhs)
    }

    /// `rhs - lhs`; both sides stay below 2^126 for capped sequences.
    fn slack(&self, k: u64) -> i128 {
        let (lhs, rhs) = self.terms(k);
        rhs as i128 - lhs as i128
    }

    fn violation(&self, k: u64) -> Violation {
        let (lhs, rhs) = self.terms(k);
        Violation { k, lhs, rhs }
    }

    /// Index of the minimum of the slack over `lo..=hi` (leftmost).
    fn argmin(&self) -> u64 {
        // slack(k+1) - slack(k) is non-decreasing on the piece.
        let (mut lo, mut hi) = (self.lo, self.hi);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.slack(mid + 1) >= self.slack(mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }

    /// The contiguous range of violating indices, if any.
    fn violating_range(&self, need_last: bool) -> Option<(u64, u64)> {
        let bottom = self.argmin();
        if self.slack(bottom) >= 0 {
            return None;
        }
        // Non-increasing on lo..=bottom.
        let (mut lo, mut hi) = (self.lo, bottom);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.slack(mid) < 0 {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let first = lo;
        if !need_last {
            return Some((first, first));
        }
        // Non-decreasing on bottom..=hi.
        let (mut lo, mut hi) = (bottom, self.hi);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if self.slack(mid) < 0 {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        Some((first, lo))
    }
}

impl<'a> Segments<'a> {
    fn new(seq: &'a DegreeSequence) -> Self {
        let runs = seq.runs();
        let mut start = Vec::with_capacity(runs.len() + 1);
        let mut prefix = Vec::with_capacity(runs.len() + 1);
        let (mut s, mut p) = (0u64, 0u128);
        for run in runs {
            start.push(s);
            prefix.push(p);
            s += run.count;
            p += run.value as u128 * run.count as u128;
        }
        start.push(s);
        prefix.push(p);
        Self { seq, start, prefix }
    }

    fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        let runs = self.seq.runs();
        (0..runs.len()).flat_map(move |t| {
            let value = runs[t].value;
            let run_start = self.start[t];
            let run_end = self.start[t + 1];
            let mut lo = run_start + 1;
            std::iter::from_fn(move || {
                if lo > run_end {
                    return None;
                }
                // Later runs with value >= lo form a prefix t+1..u.
                let mut u = t + 1;
                while u < runs.len() && runs[u].value >= lo {
                    u += 1;
                }
                let mut hi = run_end;
                if lo <= value {
                    hi = hi.min(value);
                }
                if u > t + 1 {
                    hi = hi.min(runs[u - 1].value);
                }
                let total = self.prefix[runs.len()];
                let piece = Piece {
                    lo,
                    hi,
                    value,
                    run_start,
                    run_prefix: self.prefix[t],
                    run_end,
                    later_ge: self.start[u] - self.start[t + 1],
                    later_lt_sum: total - self.prefix[u],
                };
                lo = hi + 1;
                Some(piece)
            })
        })
    }

    fn first_violation(&self) -> Option<Violation> {
        self.pieces()
            .find_map(|p| p.violating_range(false).map(|(k, _)| p.violation(k)))
    }

    fn all_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for piece in self.pieces() {
            if let Some((first, last)) = piece.violating_range(true) {
                out.extend((first..=last).map(|k| piece.violation(k)));
            }
        }
        out
    }
}
