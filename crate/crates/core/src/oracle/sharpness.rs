use serde::Serialize;

use super::{run_ordered, OracleError, Partition};
use crate::extremal::witness_nongraphic;
use crate::seqcore::{erdos_gallai_check_with, DegreeSequence, EgMethod};

/// Largest `d1` scanned without `force`.
pub const SCAN_GUARD_D1: u64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub jobs: usize,
    pub force: bool,
    pub eg_method: EgMethod,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            force: false,
            eg_method: EgMethod::RunLength,
        }
    }
}

/// Exhaustive result for one length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthCheck {
    pub length: u64,
    /// Even-sum sequences with maximum exactly `d1` at this length.
    pub sequences: u64,
    pub graphic: u64,
    /// First non-graphic sequence met, in enumeration order.
    pub counterexample: Option<DegreeSequence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessResult {
    pub d1: u64,
    /// `floor(d1^2/4) + d1`.
    pub threshold: u64,
    pub witness_at_threshold_minus_1: DegreeSequence,
    /// Witness has length `threshold - 1`, even sum, and is not graphic.
    pub witness_confirmed: bool,
    pub lengths: Vec<LengthCheck>,
    pub lengths_confirmed: Vec<u64>,
    pub confirmed: bool,
}

pub fn sharpness_scan(d1: u64, extra_lengths: u64) -> Result<SharpnessResult, OracleError> {
    sharpness_scan_with(d1, extra_lengths, &ScanOptions::default())
}

/// Checks that the floor bound is exact for `d1`: the witness one below the
/// threshold is non-graphic, and every even-sum sequence with maximum
/// exactly `d1` and length in `threshold..=threshold + extra_lengths` is
/// graphic.
pub fn sharpness_scan_with(
    d1: u64,
    extra_lengths: u64,
    options: &ScanOptions,
) -> Result<SharpnessResult, OracleError> {
    if d1 < 2 {
        return Err(OracleError::BadParameters("d1 must be at least 2"));
    }
    if d1 > SCAN_GUARD_D1 && !options.force {
        return Err(OracleError::Refused {
            d1,
            limit: SCAN_GUARD_D1,
        });
    }
    let threshold = d1
        .checked_mul(d1)
        .and_then(|sq| (sq / 4).checked_add(d1))
        .ok_or(OracleError::BadParameters("d1 too large"))?;
    let last = threshold
        .checked_add(extra_lengths)
        .filter(|&l| usize::try_from(l).is_ok())
        .ok_or(OracleError::BadParameters("length window too large"))?;

    let witness = witness_nongraphic(d1).map_err(|_| OracleError::BadParameters("d1 too large"))?;
    let witness_confirmed = witness.n() == threshold - 1
        && witness.has_even_sum()
        && !erdos_gallai_check_with(&witness, options.eg_method).graphic;

    // Split each length by the second entry; the first is pinned to d1.
    let partitions: Vec<Partition> = (threshold..=last)
        .flat_map(|len| {
            (1..=d1).rev().map(move |second| Partition {
                n: len as usize,
                prefix: vec![d1, second],
            })
        })
        .collect();
    let method = options.eg_method;
    let parts = run_ordered(&partitions, options.jobs, |p| {
        let mut check = LengthCheck {
            length: p.n as u64,
            sequences: 0,
            graphic: 0,
            counterexample: None,
        };
        for seq in p.enumerate(true) {
            check.sequences += 1;
            if erdos_gallai_check_with(&seq, method).graphic {
                check.graphic += 1;
            } else if check.counterexample.is_none() {
                check.counterexample = Some(seq);
            }
        }
        check
    })?;

    let mut lengths: Vec<LengthCheck> = Vec::new();
    for part in parts {
        match lengths.last_mut() {
            Some(acc) if acc.length == part.length => {
                acc.sequences += part.sequences;
                acc.graphic += part.graphic;
                if acc.counterexample.is_none() {
                    acc.counterexample = part.counterexample;
                }
            }
            _ => lengths.push(part),
        }
    }
    let lengths_confirmed: Vec<u64> = lengths
        .iter()
        .filter(|l| l.graphic == l.sequences)
        .map(|l| l.length)
        .collect();
    let confirmed = witness_confirmed && lengths_confirmed.len() == lengths.len();

    Ok(SharpnessResult {
        d1,
        threshold,
        witness_at_threshold_minus_1: witness,
        witness_confirmed,
        lengths,
        lengths_confirmed,
        confirmed,
    })
}
