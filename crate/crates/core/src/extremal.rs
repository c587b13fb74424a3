//! Named sequence families around the floor bound `n >= floor(d^2/4) + d`.
//!
//! * [`witness_nongraphic`]: even-sum, non-graphic sequences one below the
//!   bound, showing it cannot be lowered.
//! * [`gap_example`]: graphic sequences meeting the floor bound exactly while
//!   missing `n >= d^2/4 + d + 1`.
//! * [`proof_extremal_form`]: `(d1^k, 1^(n-k))`, the only shape a
//!   counterexample to the floor bound could take.
//!
//! The first two constructors check their own post-conditions with the exact
//! Erdős–Gallai test and panic if one fails.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{improved_bound, zz_corollary};
use crate::seqcore::{erdos_gallai_check, DegreeSequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("bad parameters: {0}")]
    BadParameters(&'static str),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// `d` together with its half `x`: `d = 2x` or `d = 2x + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub d: u64,
    pub x: u64,
}

impl FamilyParams {
    pub fn new(d: u64) -> Result<Self, ExtremalError> {
        if d < 2 {
            return Err(ExtremalError::BadParameters("d must be at least 2"));
        }
        Ok(Self { d, x: d / 2 })
    }

    pub fn is_even(&self) -> bool {
        self.d.is_multiple_of(2)
    }
}

fn count(c: u128) -> Result<u64, ExtremalError> {
    u64::try_from(c).map_err(|_| ExtremalError::Sequence(SequenceError::Overflow))
}

fn runs(pairs: &[(u64, u128)]) -> Result<DegreeSequence, ExtremalError> {
    let mut out = Vec::with_capacity(pairs.len());
    for &(value, c) in pairs {
        if c > 0 {
            out.push((value, count(c)?));
        }
    }
    Ok(DegreeSequence::from_runs(out)?)
}

/// `(d^(x+1), 1^(x^2+x-2))` for `d = 2x`, `(d^(x+1), 1^(x^2+2x-1))` for
/// `d = 2x + 1`.
///
/// The result has length `floor(d^2/4) + d - 1`, even sum, and is not
/// graphic; its first Erdős–Gallai violation is at `k = x + 1`.
pub fn witness_nongraphic(d: u64) -> Result<DegreeSequence, ExtremalError> {
    let p = FamilyParams::new(d)?;
    let x = p.x as u128;
    let ones = if p.is_even() {
        x * x + x - 2
    } else {
        x * x + 2 * x - 1
    };
    let seq = runs(&[(d, x + 1), (1, ones)])?;

    let d = d as u128;
    assert_eq!(seq.n() as u128, d * d / 4 + d - 1, "witness length for d={d}");
    assert!(seq.has_even_sum(), "witness sum parity for d={d}");
    let eg = erdos_gallai_check(&seq);
    assert!(!eg.graphic, "witness for d={d} must not be graphic");
    Ok(seq)
}

/// `(2x, 1^(x^2+2x-1))` for odd `x`, `(2x, 2x, 1^(x^2+2x-2))` for even `x`.
///
/// Graphic, of length `x^2 + 2x`, meets the floor bound, misses the
/// `d^2/4 + d + 1` bound.
pub fn gap_example(x: u64) -> Result<DegreeSequence, ExtremalError> {
    if x < 1 {
        return Err(ExtremalError::BadParameters("x must be at least 1"));
    }
    let d = x
        .checked_mul(2)
        .ok_or(ExtremalError::Sequence(SequenceError::Overflow))?;
    let xx = x as u128;
    let seq = if x % 2 == 1 {
        runs(&[(d, 1), (1, xx * xx + 2 * xx - 1)])?
    } else {
        runs(&[(d, 2), (1, xx * xx + 2 * xx - 2)])?
    };

    assert_eq!(seq.n() as u128, xx * xx + 2 * xx, "gap example length for x={x}");
    assert!(seq.has_even_sum(), "gap example parity for x={x}");
    assert!(improved_bound(&seq).holds, "gap example x={x} must meet the floor bound");
    assert!(!zz_corollary(&seq).holds, "gap example x={x} must miss the corollary bound");
    assert!(erdos_gallai_check(&seq).graphic, "gap example x={x} must be graphic");
    Ok(seq)
}

/// `(d1^k, 1^(n-k))`.
pub fn proof_extremal_form(d1: u64, n: u64, k: u64) -> Result<DegreeSequence, ExtremalError> {
    if d1 < 1 {
        return Err(ExtremalError::BadParameters("d1 must be at least 1"));
    }
    if k < 1 || k > n {
        return Err(SequenceError::IndexOutOfRange { k, n }.into());
    }
    runs(&[(d1, k as u128), (1, (n - k) as u128)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_nongraphic(2).unwrap(), seq("2,2"));
        assert_eq!(witness_nongraphic(4).unwrap(), seq("4,4,4,1,1,1,1"));
        assert_eq!(witness_nongraphic(5).unwrap(), seq("5^3,1^7"));
        assert_eq!(witness_nongraphic(3).unwrap(), seq("3,3,1,1"));
    }

    #[test]
    fn witness_domain() {
        assert_eq!(
            witness_nongraphic(1),
            Err(ExtremalError::BadParameters("d must be at least 2"))
        );
        assert!(witness_nongraphic(0).is_err());
    }

    #[test]
    fn family_params() {
        assert_eq!(FamilyParams::new(7).unwrap(), FamilyParams { d: 7, x: 3 });
        assert_eq!(FamilyParams::new(8).unwrap(), FamilyParams { d: 8, x: 4 });
    }

    #[test]
    fn gap_examples() {
        assert_eq!(gap_example(1).unwrap(), seq("2,1,1"));
        assert_eq!(gap_example(2).unwrap(), seq("4,4,1^6"));
        assert_eq!(gap_example(3).unwrap(), seq("6,1^14"));
        assert!(gap_example(0).is_err());
    }

    #[test]
    fn extremal_forms() {
        let s = proof_extremal_form(4, 8, 3).unwrap();
        assert_eq!(s, seq("4^3,1^5"));
        assert_eq!(s.sum(), 17);
        assert_eq!(proof_extremal_form(3, 5, 2).unwrap(), seq("3,3,1,1,1"));
        assert_eq!(proof_extremal_form(1, 4, 4).unwrap(), seq("1^4"));
        assert_eq!(
            proof_extremal_form(3, 5, 6),
            Err(ExtremalError::Sequence(SequenceError::IndexOutOfRange { k: 6, n: 5 }))
        );
        assert!(proof_extremal_form(3, 5, 0).is_err());
        assert!(proof_extremal_form(0, 5, 1).is_err());
    }

    #[test]
    fn large_parameters() {
        let w = witness_nongraphic(1 << 20).unwrap();
        assert_eq!(w.n() as u128, (1u128 << 38) + (1 << 20) - 1);
        assert!(witness_nongraphic(u64::MAX).is_err());
    }
}
