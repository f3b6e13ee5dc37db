//! Exact integer arithmetic for numerical semigroups attached to points of
//! superelliptic curves.
//!
//! The crate has five parts:
//!
//! - [`semigroup`]: general numerical-semigroup arithmetic (membership sieve,
//!   gaps, Frobenius number, standard basis, Weierstrass weight).
//! - [`weights`]: closed-form weights `w1`/`w2` for two-generated semigroups,
//!   the floor-sum identities behind them, and the strict total-weight
//!   inequality with an exhaustive sweep verifier.
//! - [`covering`]: semigroup transforms induced by cyclic coverings, namely
//!   the total-ramification quotient and the semigroup of a ramification
//!   point.
//! - [`curve`]: a formal divisor model of the curve `y^a = prod_j (x - c_j)`
//!   that re-derives those semigroups from pole orders of monomial words.
//! - [`predict`]: the case split for the possible number of Galois
//!   Weierstrass points with a given two-generated semigroup.
//!
//! Everything is exact: no floating point, and overflow checks stay on in
//! release builds.

pub mod covering;
pub mod curve;
pub mod error;
pub mod predict;
pub mod semigroup;
pub mod weights;

pub use covering::{
    gap_count_identity, is_ramification_fixed_point, quotient_by_degree, quotient_two_generated,
    ramification_semigroup, ramification_standard_basis, CoprimePair,
};
pub use curve::{
    divisor_of_word, semigroup_at, witness_functions, BranchConfig, Divisor, FunctionWord,
    PointLabel, Witness,
};
pub use error::{Error, Result};
pub use predict::{predict_counts, CaseTag, GWCountPrediction};
pub use semigroup::NumericalSemigroup;
pub use weights::{
    floor_sum_checks, inequality_margin, phi, phi_is_bijective, sweep_inequality, sweep_pairs,
    w1_closed, w2_closed, FloorSumChecks, SweepReport, SweepViolation, WeightPair,
};

/// Greatest common divisor; `gcd(0, n) = n`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::gcd;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 3), 1);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(5, 0), 5);
        assert_eq!(gcd(1, 1), 1);
    }
}
