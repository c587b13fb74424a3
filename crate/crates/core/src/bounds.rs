//! Closed-form sufficient conditions for graphicality in terms of `n`, the
//! largest entry `d1` and the smallest entry `dn`.
//!
//! Every predicate is decided by one exact integer comparison `lhs >= rhs`
//! obtained by clearing denominators. The comparison terms are reported even
//! when the predicate is not applicable (odd sum), so callers can see how far
//! a sequence is from qualifying.
//!
//! | predicate      | lhs        | rhs                         |
//! |----------------|------------|-----------------------------|
//! | `ZzGeneral`    | `4 b n`    | `(1 + a + b)^2`             |
//! | `ZzSimplified` | `4 dn n`   | `(1 + d1 + dn)^2`           |
//! | `ZzCorollary`  | `4 n`      | `(d1 + 2)^2`                |
//! | `ImprovedFloor`| `n`        | `floor(d1^2 / 4) + d1`      |
//! | `Bhjw`         | `4 dn n`   | `(1 + d1 + dn)^2 - eps`     |
//!
//! where `eps` is 0 when `d1 + dn` is odd and 1 otherwise.

use serde::Serialize;
use thiserror::Error;

use crate::seqcore::{erdos_gallai_check_with, DegreeSequence, EgMethod, EgReport, MAX_ENTRY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    ZzGeneral,
    ZzSimplified,
    ZzCorollary,
    ImprovedFloor,
    Bhjw,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::ZzGeneral,
        Predicate::ZzSimplified,
        Predicate::ZzCorollary,
        Predicate::ImprovedFloor,
        Predicate::Bhjw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::ZzGeneral => "zz_general",
            Predicate::ZzSimplified => "zz_simplified",
            Predicate::ZzCorollary => "zz_corollary",
            Predicate::ImprovedFloor => "improved_floor",
            Predicate::Bhjw => "bhjw",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub predicate: Predicate,
    /// Even sum.
    pub applicable: bool,
    pub holds: bool,
    pub lhs: u128,
    pub rhs: u128,
    /// Least length at which the comparison succeeds for the same `d1, dn`.
    pub min_n: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon_prime: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// Comparison terms of one predicate as a function of the length alone.
///
/// `lhs(n) = scale * n`, success iff `lhs >= rhs`.
#[derive(Debug, Clone, Copy)]
struct Criterion {
    scale: u128,
    rhs: u128,
}

impl Criterion {
    fn lhs(self, n: u128) -> u128 {
        self.scale * n
    }

    fn holds_at(self, n: u128) -> bool {
        self.scale.checked_mul(n).is_none_or(|lhs| lhs >= self.rhs)
    }

    fn min_n(self) -> u128 {
        let min_n = self.rhs.div_ceil(self.scale);
        debug_assert!(self.holds_at(min_n));
        debug_assert!(min_n == 0 || !self.holds_at(min_n - 1));
        min_n
    }

    fn verdict(self, predicate: Predicate, seq: &DegreeSequence, epsilon_prime: Option<u8>) -> BoundVerdict {
        let lhs = self.lhs(seq.n() as u128);
        let applicable = seq.has_even_sum();
        BoundVerdict {
            predicate,
            applicable,
            holds: applicable && lhs >= self.rhs,
            lhs,
            rhs: self.rhs,
            min_n: self.min_n(),
            epsilon_prime,
        }
    }
}

fn square(x: u128) -> u128 {
    x * x
}

fn zz_criterion(a: u64, b: u64) -> Criterion {
    Criterion {
        scale: 4 * b as u128,
        rhs: square(1 + a as u128 + b as u128),
    }
}

fn corollary_criterion(d1: u64) -> Criterion {
    Criterion {
        scale: 4,
        rhs: square(d1 as u128 + 2),
    }
}

fn improved_criterion(d1: u64) -> Criterion {
    let d1 = d1 as u128;
    Criterion {
        scale: 1,
        rhs: d1 * d1 / 4 + d1,
    }
}

fn epsilon_prime(d1: u64, dn: u64) -> u8 {
    if (d1 as u128 + dn as u128) % 2 == 1 {
        0
    } else {
        1
    }
}

fn bhjw_criterion(d1: u64, dn: u64) -> Criterion {
    let zz = zz_criterion(d1, dn);
    Criterion {
        scale: zz.scale,
        rhs: zz.rhs - epsilon_prime(d1, dn) as u128,
    }
}

/// General form with free parameters `a >= d1` and `1 <= b <= dn`.
pub fn zz_general(seq: &DegreeSequence, a: u64, b: u64) -> Result<BoundVerdict, BoundsError> {
    if b < 1 || b > seq.dn() || a < seq.d1() || a > MAX_ENTRY {
        return Err(BoundsError::BadParameters(format!(
            "need d1 <= a <= 2^63-1 and 1 <= b <= dn (a={a}, b={b}, d1={}, dn={})",
            seq.d1(),
            seq.dn()
        )));
    }
    Ok(zz_criterion(a, b).verdict(Predicate::ZzGeneral, seq, None))
}

/// `4 dn n >= (1 + d1 + dn)^2`.
pub fn zz_simplified(seq: &DegreeSequence) -> BoundVerdict {
    zz_criterion(seq.d1(), seq.dn()).verdict(Predicate::ZzSimplified, seq, None)
}

/// `n >= d1^2/4 + d1 + 1`, i.e. `4n >= (d1 + 2)^2`.
pub fn zz_corollary(seq: &DegreeSequence) -> BoundVerdict {
    corollary_criterion(seq.d1()).verdict(Predicate::ZzCorollary, seq, None)
}

/// `n >= floor(d1^2/4 + d1)`.
pub fn improved_bound(seq: &DegreeSequence) -> BoundVerdict {
    improved_criterion(seq.d1()).verdict(Predicate::ImprovedFloor, seq, None)
}

pub fn bhjw_bound(seq: &DegreeSequence) -> BoundVerdict {
    let eps = epsilon_prime(seq.d1(), seq.dn());
    bhjw_criterion(seq.d1(), seq.dn()).verdict(Predicate::Bhjw, seq, Some(eps))
}

/// Evaluates `predicate` on `seq`; `ZzGeneral` uses `a = d1`, `b = dn`.
pub fn evaluate(predicate: Predicate, seq: &DegreeSequence) -> BoundVerdict {
    match predicate {
        Predicate::ZzGeneral => {
            zz_general(seq, seq.d1(), seq.dn()).expect("d1 and dn are valid parameters")
        }
        Predicate::ZzSimplified => zz_simplified(seq),
        Predicate::ZzCorollary => zz_corollary(seq),
        Predicate::ImprovedFloor => improved_bound(seq),
        Predicate::Bhjw => bhjw_bound(seq),
    }
}

fn criterion(predicate: Predicate, d1: u64, dn: u64) -> Criterion {
    match predicate {
        Predicate::ZzGeneral | Predicate::ZzSimplified => zz_criterion(d1, dn),
        Predicate::ZzCorollary => corollary_criterion(d1),
        Predicate::ImprovedFloor => improved_criterion(d1),
        Predicate::Bhjw => bhjw_criterion(d1, dn),
    }
}

/// Least qualifying length for a predicate given only `d1` and `dn`.
pub fn min_length(predicate: Predicate, d1: u64, dn: u64) -> u128 {
    criterion(predicate, d1, dn).min_n()
}

/// Whether the comparison `lhs >= rhs` succeeds at length `n`, ignoring parity.
pub fn comparison_holds(predicate: Predicate, d1: u64, dn: u64, n: u128) -> bool {
    criterion(predicate, d1, dn).holds_at(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsSummary {
    /// One verdict per predicate, in [`Predicate::ALL`] order.
    pub verdicts: Vec<BoundVerdict>,
    pub erdos_gallai: EgReport,
}

impl BoundsSummary {
    pub fn verdict(&self, predicate: Predicate) -> &BoundVerdict {
        self.verdicts
            .iter()
            .find(|v| v.predicate == predicate)
            .expect("summary carries every predicate")
    }
}

pub fn bounds_summary(seq: &DegreeSequence) -> BoundsSummary {
    bounds_summary_with(seq, EgMethod::RunLength)
}

pub fn bounds_summary_with(seq: &DegreeSequence, method: EgMethod) -> BoundsSummary {
    BoundsSummary {
        verdicts: Predicate::ALL.iter().map(|&p| evaluate(p, seq)).collect(),
        erdos_gallai: erdos_gallai_check_with(seq, method),
    }
}

/// Thresholds on `n` for `d1 = 2x + 1`, `dn = 1`, from the general form,
/// the parity-corrected form and the floor bound respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RemarkThresholds {
    pub zz_simplified: u128,
    pub bhjw: u128,
    pub improved_floor: u128,
}

/// `(x^2 + 3x + 3, x^2 + 3x + 2, x^2 + 3x + 1)`.
pub fn remark_thresholds(x: u64) -> Result<RemarkThresholds, BoundsError> {
    if x < 1 {
        return Err(BoundsError::BadParameters("x must be at least 1".into()));
    }
    if x > (MAX_ENTRY - 1) / 2 {
        return Err(BoundsError::BadParameters(
            "2x + 1 must not exceed 2^63-1".into(),
        ));
    }
    let x = x as u128;
    let base = x * x + 3 * x;
    Ok(RemarkThresholds {
        zz_simplified: base + 3,
        bhjw: base + 2,
        improved_floor: base + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn terms(v: BoundVerdict) -> (bool, u128, u128) {
        (v.holds, v.lhs, v.rhs)
    }

    #[test]
    fn general_examples() {
        let v = zz_general(&seq("3,3,1,1"), 3, 1).unwrap();
        assert_eq!(terms(v), (false, 16, 25));
        let v = zz_general(&seq("1^8"), 1, 1).unwrap();
        assert_eq!(terms(v), (true, 32, 9));
        let v = zz_general(&seq("5,1^11"), 5, 1).unwrap();
        assert_eq!(terms(v), (false, 48, 49));
    }

    #[test]
    fn general_rejects_bad_parameters() {
        let s = seq("3,2,2,1");
        assert!(zz_general(&s, 2, 1).is_err());
        assert!(zz_general(&s, 3, 2).is_err());
        assert!(zz_general(&s, 3, 0).is_err());
        assert!(zz_general(&s, 3, 1).is_ok());
        assert!(zz_general(&s, 100, 1).is_ok());
    }

    #[test]
    fn simplified_examples() {
        assert_eq!(terms(zz_simplified(&seq("1,1,1,1"))), (true, 16, 9));
        assert_eq!(terms(zz_simplified(&seq("5,1^11"))), (false, 48, 49));
        assert_eq!(terms(zz_simplified(&seq("4,4,1^6"))), (false, 32, 36));
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(terms(zz_corollary(&seq("2,1,1,1,1"))), (true, 20, 16));
        assert_eq!(terms(zz_corollary(&seq("4,4,1^6"))), (false, 32, 36));
        assert_eq!(terms(zz_corollary(&seq("5,1^11"))), (false, 48, 49));
    }

    #[test]
    fn improved_examples() {
        assert_eq!(terms(improved_bound(&seq("5,1^11"))), (true, 12, 11));
        assert_eq!(terms(improved_bound(&seq("4,4,1^6"))), (true, 8, 8));
        assert_eq!(terms(improved_bound(&seq("4,4,4,1^4"))), (false, 7, 8));
    }

    #[test]
    fn bhjw_examples() {
        let v = bhjw_bound(&seq("3,1^5"));
        assert_eq!((terms(v), v.epsilon_prime), ((true, 24, 24), Some(1)));
        let v = bhjw_bound(&seq("3,3,1,1"));
        assert_eq!((terms(v), v.epsilon_prime), ((false, 16, 24), Some(1)));
        let v = bhjw_bound(&seq("2,2,2"));
        assert_eq!((terms(v), v.epsilon_prime), ((true, 24, 24), Some(1)));
        assert_eq!(bhjw_bound(&seq("2,1,1")).epsilon_prime, Some(0));
    }

    #[test]
    fn odd_sum_is_not_applicable() {
        let s = seq("3,1,1");
        for p in Predicate::ALL {
            let v = evaluate(p, &s);
            assert!(!v.applicable && !v.holds, "{p:?}");
        }
        // Comparison terms are still reported.
        assert_eq!(improved_bound(&seq("1")).lhs, 1);
        assert_eq!(improved_bound(&seq("1")).rhs, 1);
    }

    #[test]
    fn summary_examples() {
        let s = bounds_summary(&seq("5,1^11"));
        assert!(s.verdict(Predicate::ImprovedFloor).holds);
        assert!(!s.verdict(Predicate::ZzSimplified).holds);
        assert!(s.erdos_gallai.graphic);

        // n = 2 is below 9/4 for the three (1 + d1 + dn)^2 style bounds
        // without the parity correction.
        let s = bounds_summary(&seq("1,1"));
        let holding: Vec<Predicate> = s.verdicts.iter().filter(|v| v.holds).map(|v| v.predicate).collect();
        assert_eq!(holding, [Predicate::ImprovedFloor, Predicate::Bhjw]);
        assert!(s.erdos_gallai.graphic);

        let s = bounds_summary(&seq("2,2"));
        assert_eq!(terms(*s.verdict(Predicate::ImprovedFloor)), (false, 2, 3));
        assert!(!s.erdos_gallai.graphic);

        let order: Vec<Predicate> = s.verdicts.iter().map(|v| v.predicate).collect();
        assert_eq!(order, Predicate::ALL);
    }

    #[test]
    fn remark_examples() {
        let t = |x| {
            let r = remark_thresholds(x).unwrap();
            (r.zz_simplified, r.bhjw, r.improved_floor)
        };
        assert_eq!(t(1), (7, 6, 5));
        assert_eq!(t(2), (13, 12, 11));
        assert_eq!(t(10), (133, 132, 131));
        assert!(remark_thresholds(0).is_err());
    }

    #[test]
    fn min_n_of_examples() {
        assert_eq!(min_length(Predicate::ImprovedFloor, 5, 1), 11);
        assert_eq!(min_length(Predicate::ZzSimplified, 5, 1), 13);
        assert_eq!(min_length(Predicate::ZzCorollary, 4, 1), 9);
        assert_eq!(min_length(Predicate::Bhjw, 3, 1), 6);
        assert_eq!(zz_simplified(&seq("1,1")).min_n, 3);
    }

    #[test]
    fn extreme_values_fit() {
        let m = MAX_ENTRY;
        let s = DegreeSequence::from_runs([(m, 1), (m - 1, m - 1)]).unwrap();
        let v = zz_general(&s, m, m - 1).unwrap();
        assert!(v.rhs > v.lhs);
        let v = bhjw_bound(&s);
        assert_eq!(v.epsilon_prime, Some(0));
        let v = improved_bound(&s);
        assert!(!v.holds);
    }
}
