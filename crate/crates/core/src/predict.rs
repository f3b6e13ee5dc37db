//! The case split for the number of Galois Weierstrass points carrying a
//! fixed two-generated semigroup `<a, b>`.
//!
//! The count depends on the curve, not only on `(a, b)`; what the pair
//! determines is the finite set of values the count can take. This module
//! encodes that statement as a total function and nothing more.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gcd;

/// Which branch of the case split applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// `b >= a + 2` and `b = a - 1` mod `a`: the count is 0 or `b + 1`.
    CongruentMinusOne,
    /// `b >= a + 2` and `b != a - 1` mod `a`: the count is 0 or 1.
    Generic,
    /// `(a, b) = (3, 4)`, the plane-quartic case: the count is 0, 1 or 4.
    PlaneQuarticSpecial,
    /// `b = a + 1` with `a >= 4`, the plane-curve case: the count is 0 or 1.
    PlaneCurveGeneric,
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::CongruentMinusOne => "congruent-minus-one",
            CaseTag::Generic => "generic",
            CaseTag::PlaneQuarticSpecial => "plane-quartic-special",
            CaseTag::PlaneCurveGeneric => "plane-curve-generic",
        }
    }
}

/// The possible cardinalities of the set of Galois Weierstrass points with
/// semigroup `<a, b>`, over all curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GWCountPrediction {
    pub case_tag: CaseTag,
    pub possible_counts: BTreeSet<u64>,
    /// Informational only; set in the plane-quartic case.
    pub note: Option<String>,
}

/// Total case split over valid pairs: `a >= 3`, `b > a`, `gcd(a, b) = 1`.
pub fn predict_counts(a: u64, b: u64) -> Result<GWCountPrediction> {
    if a < 3 {
        return Err(Error::DomainError(format!("a must be at least 3, got {a}")));
    }
    if b <= a {
        return Err(Error::DomainError(format!(
            "b must exceed a, got a = {a}, b = {b}"
        )));
    }
    if gcd(a, b) != 1 {
        return Err(Error::DomainError(format!(
            "a and b must be coprime, got gcd({a}, {b}) = {}",
            gcd(a, b)
        )));
    }
    let prediction = if b == a + 1 {
        if a == 3 {
            GWCountPrediction {
                case_tag: CaseTag::PlaneQuarticSpecial,
                possible_counts: BTreeSet::from([0, 1, 4]),
                note: Some(
                    "count 4 occurs exactly for curves projectively equivalent to \
                     X*Z^3 + X^4 + Y^4 = 0"
                        .into(),
                ),
            }
        } else {
            GWCountPrediction {
                case_tag: CaseTag::PlaneCurveGeneric,
                possible_counts: BTreeSet::from([0, 1]),
                note: None,
            }
        }
    } else if b % a == a - 1 {
        GWCountPrediction {
            case_tag: CaseTag::CongruentMinusOne,
            possible_counts: BTreeSet::from([0, b + 1]),
            note: None,
        }
    } else {
        GWCountPrediction {
            case_tag: CaseTag::Generic,
            possible_counts: BTreeSet::from([0, 1]),
            note: None,
        }
    };
    Ok(prediction)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn congruent_case() {
        let p = predict_counts(3, 5).unwrap();
        assert_eq!(p.case_tag, CaseTag::CongruentMinusOne);
        assert_eq!(p.possible_counts, BTreeSet::from([0, 6]));
    }

    #[test]
    fn generic_case() {
        let p = predict_counts(3, 7).unwrap();
        assert_eq!(p.case_tag, CaseTag::Generic);
        assert_eq!(p.possible_counts, BTreeSet::from([0, 1]));
    }

    #[test]
    fn plane_quartic_case() {
        let p = predict_counts(3, 4).unwrap();
        assert_eq!(p.case_tag, CaseTag::PlaneQuarticSpecial);
        assert_eq!(p.possible_counts, BTreeSet::from([0, 1, 4]));
        assert!(p.note.is_some());
    }

    #[test]
    fn plane_curve_case() {
        let p = predict_counts(4, 5).unwrap();
        assert_eq!(p.case_tag, CaseTag::PlaneCurveGeneric);
        assert_eq!(p.possible_counts, BTreeSet::from([0, 1]));
    }

    #[test]
    fn more_congruence_splits() {
        assert_eq!(
            predict_counts(5, 9).unwrap().possible_counts,
            BTreeSet::from([0, 10])
        );
        assert_eq!(
            predict_counts(5, 8).unwrap().case_tag,
            CaseTag::Generic
        );
    }

    #[test]
    fn domain_errors() {
        assert!(predict_counts(2, 5).is_err());
        assert!(predict_counts(3, 3).is_err());
        assert!(predict_counts(3, 2).is_err());
        assert!(predict_counts(4, 6).is_err());
    }
}
