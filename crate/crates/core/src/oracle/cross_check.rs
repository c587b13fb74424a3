use serde::Serialize;

use super::{run_ordered, OracleError, Partition};
use crate::bounds::{evaluate, Predicate};
use crate::seqcore::{
    erdos_gallai_check_with, erdos_gallai_terms, erdos_gallai_violations, havel_hakimi_realize,
    DegreeSequence, EgMethod, RealizeError,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateViolation {
    pub sequence: DegreeSequence,
    pub predicate: Predicate,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub sequence: DegreeSequence,
    pub detail: String,
}

/// A violating index whose violation did not survive flattening.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlattenFailure {
    pub sequence: DegreeSequence,
    pub k: u64,
    pub flattened_lhs: u128,
    pub flattened_rhs: u128,
}

/// Findings of an exhaustive sweep. Every list is empty on a correct build.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub sequences_checked: u64,
    pub graphic_count: u64,
    pub realizations_checked: u64,
    /// A predicate held on a non-graphic sequence.
    pub violations: Vec<PredicateViolation>,
    pub eg_hh_mismatches: Vec<Mismatch>,
    pub rle_naive_mismatches: Vec<Mismatch>,
    pub flatten_failures: Vec<FlattenFailure>,
    pub invalid_realizations: Vec<Mismatch>,
}

impl ViolationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
            && self.eg_hh_mismatches.is_empty()
            && self.rle_naive_mismatches.is_empty()
            && self.flatten_failures.is_empty()
            && self.invalid_realizations.is_empty()
    }

    pub fn merge(&mut self, other: ViolationReport) {
        self.sequences_checked += other.sequences_checked;
        self.graphic_count += other.graphic_count;
        self.realizations_checked += other.realizations_checked;
        self.violations.extend(other.violations);
        self.eg_hh_mismatches.extend(other.eg_hh_mismatches);
        self.rle_naive_mismatches.extend(other.rle_naive_mismatches);
        self.flatten_failures.extend(other.flatten_failures);
        self.invalid_realizations.extend(other.invalid_realizations);
    }
}

/// Runs every cross-check on one sequence and records findings in `report`.
pub fn check_sequence(seq: &DegreeSequence, report: &mut ViolationReport) {
    report.sequences_checked += 1;

    let fast = erdos_gallai_check_with(seq, EgMethod::RunLength);
    let naive = erdos_gallai_check_with(seq, EgMethod::Naive);
    let naive_all = erdos_gallai_violations(seq, EgMethod::Naive);
    if fast != naive {
        report.rle_naive_mismatches.push(Mismatch {
            sequence: seq.clone(),
            detail: format!("run-length {fast:?} vs naive {naive:?}"),
        });
    } else if erdos_gallai_violations(seq, EgMethod::RunLength) != naive_all {
        report.rle_naive_mismatches.push(Mismatch {
            sequence: seq.clone(),
            detail: "violation lists differ".into(),
        });
    }
    let graphic = naive.graphic;
    if graphic {
        report.graphic_count += 1;
    }

    for p in Predicate::ALL {
        let v = evaluate(p, seq);
        if v.holds && !graphic {
            report.violations.push(PredicateViolation {
                sequence: seq.clone(),
                predicate: p,
                detail: format!("lhs {} >= rhs {} but not graphic", v.lhs, v.rhs),
            });
        }
    }

    match havel_hakimi_realize(seq) {
        Ok(r) => {
            report.realizations_checked += 1;
            if !graphic {
                report.eg_hh_mismatches.push(Mismatch {
                    sequence: seq.clone(),
                    detail: "realized but Erdős–Gallai says not graphic".into(),
                });
            }
            if let Err(defect) = r.validate(seq) {
                report.invalid_realizations.push(Mismatch {
                    sequence: seq.clone(),
                    detail: defect.to_string(),
                });
            }
        }
        Err(RealizeError::NotGraphic) if graphic => report.eg_hh_mismatches.push(Mismatch {
            sequence: seq.clone(),
            detail: "Erdős–Gallai says graphic but realization failed".into(),
        }),
        Err(RealizeError::NotGraphic) => {}
        Err(e @ RealizeError::TooLarge { .. }) => report.eg_hh_mismatches.push(Mismatch {
            sequence: seq.clone(),
            detail: e.to_string(),
        }),
    }

    for v in &naive_all {
        let flat = seq.flatten_at(v.k).expect("violating index is in range");
        let (lhs, rhs) = erdos_gallai_terms(&flat, v.k).expect("violating index is in range");
        if lhs <= rhs {
            report.flatten_failures.push(FlattenFailure {
                sequence: seq.clone(),
                k: v.k,
                flattened_lhs: lhs,
                flattened_rhs: rhs,
            });
        }
    }
}

/// All sequences of length `1..=nmax` with entries in `1..=dmax`.
pub fn cross_check(nmax: usize, dmax: u64) -> ViolationReport {
    cross_check_with(nmax, dmax, 1).expect("serial run cannot fail")
}

pub fn cross_check_with(nmax: usize, dmax: u64, jobs: usize) -> Result<ViolationReport, OracleError> {
    let partitions: Vec<Partition> = (1..=nmax)
        .flat_map(|n| {
            (1..=dmax).rev().map(move |first| Partition {
                n,
                prefix: vec![first],
            })
        })
        .collect();
    let parts = run_ordered(&partitions, jobs, |p| {
        let mut report = ViolationReport::default();
        for seq in p.enumerate(false) {
            check_sequence(&seq, &mut report);
        }
        report
    })?;
    let mut report = ViolationReport::default();
    for part in parts {
        report.merge(part);
    }
    Ok(report)
}
