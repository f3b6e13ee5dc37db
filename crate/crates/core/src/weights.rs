//! Closed-form Weierstrass weights for two-generated semigroups and the
//! floor-sum machinery behind them.
//!
//! For coprime `a >= 2` and `r >= 1`, write `g = (a-1)(a+r-1)/2`. Two weights
//! are attached to the pair:
//!
//! - `w1`, the Weierstrass weight of `<a, a+r>`;
//! - `w2`, the Weierstrass weight of the semigroup at a totally ramified
//!   point of the degree-`a` cyclic covering attached to `<a, a+r>`.
//!
//! Both evaluate in closed form from the floor sums `[lr/a]`, and they obey
//! the strict total-weight inequality
//! `(3a+1)(w1 + (a+r) w2) > (g-1)g(g+1)`,
//! where `(g-1)g(g+1)` is the classical total weight of all Weierstrass
//! points on a genus-`g` curve. [`sweep_inequality`] checks the inequality
//! exhaustively and reports every pair that fails it rather than asserting;
//! the single degenerate pair `(a, r) = (2, 1)` has both sides zero.
//!
//! All arithmetic is exact. The `a/2` and `g(g+1)/2` half-terms are evaluated
//! by doubling the whole expression and halving once at the end, asserting
//! evenness; the rational bounds in [`floor_sum_checks`] are compared after
//! cross-multiplication, never by division.

use crate::error::{Error, Result};
use crate::gcd;

fn require_coprime(a: u64, r: u64) -> Result<()> {
    if a < 2 {
        return Err(Error::DomainError(format!("a must be at least 2, got {a}")));
    }
    if r < 1 {
        return Err(Error::DomainError("r must be positive".into()));
    }
    if gcd(a, r) != 1 {
        return Err(Error::NonCoprime { a, r });
    }
    Ok(())
}

/// The residue permutation `l -> l*r mod a` on `{0, ..., a-1}`.
///
/// Bijective exactly because `gcd(a, r) = 1`.
pub fn phi(a: u64, r: u64, l: u64) -> Result<u64> {
    require_coprime(a, r)?;
    if l >= a {
        return Err(Error::OutOfRange { value: l, max: a - 1 });
    }
    Ok(l * r % a)
}

/// True when `{phi(l) : 0 <= l < a}` is all of `{0, ..., a-1}`.
pub fn phi_is_bijective(a: u64, r: u64) -> Result<bool> {
    require_coprime(a, r)?;
    let mut seen = vec![false; a as usize];
    for l in 0..a {
        let image = (l * r % a) as usize;
        if seen[image] {
            return Ok(false);
        }
        seen[image] = true;
    }
    Ok(seen.iter().all(|&s| s))
}

/// The three floor-sum comparisons for a coprime pair, stored as integer
/// pairs that compare exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FloorSumChecks {
    /// `sum_{l=1}^{a-1} [lr/a]` versus `(r-1)(a-1)/2`; an exact equality.
    pub sum_pair: (i64, i64),
    /// `6 * sum_{l=1}^{a-1} l*[lr/a]` versus `(r-1)(a-1)(2a-1)`; the
    /// left side dominates. Both sides carry the factor 6 so that the
    /// rational bound `(r-1)(a-1)(2a-1)/6` compares without division.
    pub weighted_pair_x6: (i64, i64),
    /// `6a * sum_{l=1}^{a-1} [lr/a]^2` versus `(r-1)^2(a-1)(2a-1)`; the
    /// left side dominates. Scaled by `6a` for the same reason.
    pub square_pair_x6a: (i64, i64),
}

impl FloorSumChecks {
    /// The first pair holds with equality.
    pub fn identity_holds(&self) -> bool {
        self.sum_pair.0 == self.sum_pair.1
    }

    /// The two scaled pairs hold as `lhs >= rhs`.
    pub fn inequalities_hold(&self) -> bool {
        self.weighted_pair_x6.0 >= self.weighted_pair_x6.1
            && self.square_pair_x6a.0 >= self.square_pair_x6a.1
    }

    pub fn all_hold(&self) -> bool {
        self.identity_holds() && self.inequalities_hold()
    }
}

/// Evaluates the floor-sum identity and the two floor-sum lower bounds for a
/// coprime pair.
pub fn floor_sum_checks(a: u64, r: u64) -> Result<FloorSumChecks> {
    require_coprime(a, r)?;
    let (a, r) = (a as i64, r as i64);
    let mut sum = 0i64;
    let mut weighted = 0i64;
    let mut squares = 0i64;
    for l in 1..a {
        let f = l * r / a;
        sum += f;
        weighted += l * f;
        squares += f * f;
    }
    debug_assert_eq!((r - 1) * (a - 1) % 2, 0);
    Ok(FloorSumChecks {
        sum_pair: (sum, (r - 1) * (a - 1) / 2),
        weighted_pair_x6: (6 * weighted, (r - 1) * (a - 1) * (2 * a - 1)),
        square_pair_x6a: (6 * a * squares, (r - 1) * (r - 1) * (a - 1) * (2 * a - 1)),
    })
}

/// Shared evaluation of the two closed-form weights.
///
/// Returns `(w1, w2, g)`. Doubles every half-term, asserts the doubled
/// totals are even, and halves once at the end.
fn weight_pair_values(a: u64, r: u64) -> Result<(i64, i64, i64)> {
    require_coprime(a, r)?;
    let (a, r) = (a as i64, r as i64);
    let two_g = (a - 1) * (a + r - 1);
    debug_assert_eq!(two_g % 2, 0);
    let g = two_g / 2;

    // common = sum (l+f-1)(l+f); mid1 = sum (lr - f*a)(l+f) over the residue
    // permutation; mid2 = sum (a-l)(l+f).
    let mut common = 0i64;
    let mut mid1 = 0i64;
    let mut mid2 = 0i64;
    for l in 1..a {
        let f = l * r / a;
        common += (l + f - 1) * (l + f);
        mid1 += (l * r - f * a) * (l + f);
        mid2 += (a - l) * (l + f);
    }
    let doubled_w1 = a * common + 2 * mid1 - g * (g + 1);
    let doubled_w2 = a * common + 2 * mid2 - g * (g + 1);
    assert_eq!(doubled_w1 % 2, 0, "w1 must be an integer");
    assert_eq!(doubled_w2 % 2, 0, "w2 must be an integer");
    Ok((doubled_w1 / 2, doubled_w2 / 2, g))
}

/// Closed-form Weierstrass weight of `<a, a+r>`:
/// `(a/2) sum (l+[lr/a]-1)(l+[lr/a]) + sum (lr-[lr/a]a)(l+[lr/a]) - g(g+1)/2`.
pub fn w1_closed(a: u64, r: u64) -> Result<i64> {
    weight_pair_values(a, r).map(|(w1, _, _)| w1)
}

/// Closed-form Weierstrass weight of the ramification-point semigroup:
/// `(a/2) sum (l+[lr/a]-1)(l+[lr/a]) + sum (a-l)(l+[lr/a]) - g(g+1)/2`.
pub fn w2_closed(a: u64, r: u64) -> Result<i64> {
    weight_pair_values(a, r).map(|(_, w2, _)| w2)
}

/// Both closed-form weights for a coprime pair, with the strict-inequality
/// margin `(3a+1)(w1 + (a+r) w2) - (g-1)g(g+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightPair {
    pub a: u64,
    pub r: u64,
    /// `(a-1)(a+r-1)/2`, the genus of a curve carrying `<a, a+r>`.
    pub g: u64,
    pub w1: i64,
    pub w2: i64,
    pub margin: i64,
}

impl WeightPair {
    pub fn new(a: u64, r: u64) -> Result<Self> {
        let (w1, w2, g) = weight_pair_values(a, r)?;
        let (ai, ri) = (a as i64, r as i64);
        let margin = (3 * ai + 1) * (w1 + (ai + ri) * w2) - (g - 1) * g * (g + 1);
        Ok(Self {
            a,
            r,
            g: g as u64,
            w1,
            w2,
            margin,
        })
    }
}

/// `(3a+1)(w1 + (a+r) w2) - (g-1)g(g+1)`; claimed strictly positive.
pub fn inequality_margin(a: u64, r: u64) -> Result<i64> {
    WeightPair::new(a, r).map(|p| p.margin)
}

/// A sweep pair whose margin failed to be strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepViolation {
    pub a: u64,
    pub r: u64,
    pub margin: i64,
}

/// Outcome of an exhaustive margin sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub a_max: u64,
    pub r_multiple: u64,
    pub pairs_checked: u64,
    /// The smallest margin seen, with the pair attaining it.
    pub min_margin: Option<(u64, u64, i64)>,
    /// Every pair with `margin <= 0`, in `(a, r)` order.
    pub violations: Vec<SweepViolation>,
}

/// The sweep domain: all coprime `(a, r)` with `2 <= a <= a_max` and
/// `1 <= r <= r_multiple * a`, in lexicographic order.
pub fn sweep_pairs(a_max: u64, r_multiple: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for a in 2..=a_max {
        for r in 1..=r_multiple * a {
            if gcd(a, r) == 1 {
                pairs.push((a, r));
            }
        }
    }
    pairs
}

/// Evaluates the margin over the whole sweep domain. Violations are
/// collected and reported, never asserted away.
pub fn sweep_inequality(a_max: u64, r_multiple: u64) -> SweepReport {
    let mut report = SweepReport {
        a_max,
        r_multiple,
        pairs_checked: 0,
        min_margin: None,
        violations: Vec::new(),
    };
    for (a, r) in sweep_pairs(a_max, r_multiple) {
        let margin = inequality_margin(a, r).expect("sweep pairs are coprime");
        report.pairs_checked += 1;
        if report.min_margin.is_none_or(|(_, _, m)| margin < m) {
            report.min_margin = Some((a, r, margin));
        }
        if margin <= 0 {
            report.violations.push(SweepViolation { a, r, margin });
        }
    }
    report
}
