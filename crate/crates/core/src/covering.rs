//! Semigroup transforms induced by cyclic coverings.
//!
//! A degree-`t` cyclic covering with a total ramification point sends the
//! semigroup upstairs to `{h : t*h in S}` downstairs; for two-generated
//! `<a, b>` with `t | a` the quotient is again two-generated, `<a/t, b>`.
//! For the degree-`a` covering attached to `<a, b>` itself, the semigroup of
//! each of the `b` totally ramified points has an explicit standard basis
//! driven by the remainder of `b + 1` mod `a`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gcd;
use crate::semigroup::NumericalSemigroup;

/// A validated pair `(a, b)` with `a >= 2`, `b > a`, `gcd(a, b) = 1`,
/// carrying the derived quantities used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoprimePair {
    a: u64,
    b: u64,
    /// The representative of `b + 1` mod `a` normalized into `(0, a]`;
    /// equal to `a` exactly when `b = a - 1` mod `a`.
    r_bar: u64,
    /// The quotient in `b + 1 = m*a + r_bar`.
    m: u64,
    /// `(a-1)(b-1)/2`, the genus of a curve carrying `<a, b>`.
    g: u64,
}

impl CoprimePair {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a < 2 {
            return Err(Error::DomainError(format!("a must be at least 2, got {a}")));
        }
        if b <= a {
            return Err(Error::DomainError(format!(
                "b must exceed a, got a = {a}, b = {b}"
            )));
        }
        let d = gcd(a, b);
        if d != 1 {
            return Err(Error::NonCoprime { a, r: b });
        }
        let rem = (b + 1) % a;
        let r_bar = if rem == 0 { a } else { rem };
        let m = (b + 1 - r_bar) / a;
        debug_assert_eq!((a - 1) * (b - 1) % 2, 0);
        Ok(Self {
            a,
            b,
            r_bar,
            m,
            g: (a - 1) * (b - 1) / 2,
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn r_bar(&self) -> u64 {
        self.r_bar
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn genus(&self) -> u64 {
        self.g
    }

    /// The semigroup `<a, b>` itself.
    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators([self.a, self.b])
            .expect("a coprime pair generates a numerical semigroup")
    }
}

/// `{h : t*h in S}`, computed extensionally from the membership of `S`.
///
/// Valid for any `t >= 1` and any semigroup; the result is closed under
/// addition because `S` is. Everything at or past `ceil(conductor(S)/t)` is
/// an element, so the table is complete.
pub fn quotient_by_degree(s: &NumericalSemigroup, t: u64) -> NumericalSemigroup {
    assert!(t >= 1, "covering degree must be positive");
    let horizon = s.conductor().div_ceil(t);
    let table: Vec<bool> = (0..=horizon)
        .map(|h| s.contains((t * h) as i64))
        .collect();
    NumericalSemigroup::from_membership_table(table)
}

/// Closed form of the quotient for `<a, b>` with `t | a`: the pair `(a/t, b)`.
pub fn quotient_two_generated(a: u64, b: u64, t: u64) -> Result<(u64, u64)> {
    if a == 0 || b == 0 || gcd(a, b) != 1 {
        return Err(Error::NonCoprime { a, r: b });
    }
    if t == 0 || !a.is_multiple_of(t) {
        return Err(Error::NotADivisor { t, a });
    }
    Ok((a / t, b))
}

/// Standard basis of the semigroup at a totally ramified point of the
/// degree-`a` covering attached to `<a, b>`.
///
/// When `r_bar = a` this is the basis `{a, b, 2b, ..., (a-1)b}` of `<a, b>`
/// itself; otherwise the basis is
/// `{a} ∪ {l(b+a-r_bar) - [l(a-r_bar+1)/a]·a : l = 1..a-1}`, whose `a - 1`
/// non-multiplicity elements occupy distinct nonzero residues mod `a`.
pub fn ramification_standard_basis(pair: &CoprimePair) -> BTreeSet<u64> {
    let (a, b, r_bar) = (pair.a, pair.b, pair.r_bar);
    let mut basis = BTreeSet::from([a]);
    if r_bar == a {
        for l in 1..a {
            basis.insert(l * b);
        }
    } else {
        for l in 1..a {
            let n_l = l * (a - r_bar + 1) / a;
            basis.insert(l * (b + a - r_bar) - n_l * a);
        }
    }
    basis
}

/// The semigroup generated by [`ramification_standard_basis`]; its genus is
/// `(a-1)(b-1)/2`, the same as that of `<a, b>`.
pub fn ramification_semigroup(pair: &CoprimePair) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(ramification_standard_basis(pair))
        .expect("ramification basis covers every residue class mod a")
}

/// The floor-sum gap count of the ramification semigroup next to the genus:
/// `(sum_l [l(b+a-r_bar)/a] - sum_l [l(a-r_bar+1)/a], (a-1)(b-1)/2)`.
/// The two components agree. Only defined in the `r_bar < a` formula case.
pub fn gap_count_identity(pair: &CoprimePair) -> Result<(u64, u64)> {
    let (a, b, r_bar) = (pair.a, pair.b, pair.r_bar);
    if r_bar == a {
        return Err(Error::FormulaCaseOnly);
    }
    let lhs: u64 = (1..a)
        .map(|l| l * (b + a - r_bar) / a - l * (a - r_bar + 1) / a)
        .sum();
    Ok((lhs, pair.g))
}

/// True exactly when `b = a - 1` mod `a`, i.e. when every totally ramified
/// point carries `<a, b>` itself.
pub fn is_ramification_fixed_point(pair: &CoprimePair) -> bool {
    pair.r_bar == pair.a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: u64, b: u64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens.iter().copied()).unwrap()
    }

    #[test]
    fn pair_normalizes_r_bar() {
        let p = pair(3, 5);
        assert_eq!((p.r_bar(), p.m(), p.genus()), (3, 1, 4));
        let p = pair(3, 7);
        assert_eq!((p.r_bar(), p.m(), p.genus()), (2, 2, 6));
        let p = pair(5, 7);
        assert_eq!((p.r_bar(), p.m(), p.genus()), (3, 1, 12));
        let p = pair(4, 9);
        assert_eq!((p.r_bar(), p.m(), p.genus()), (2, 2, 12));
    }

    #[test]
    fn pair_rejects_bad_input() {
        assert!(CoprimePair::new(1, 5).is_err());
        assert!(CoprimePair::new(3, 3).is_err());
        assert!(CoprimePair::new(3, 2).is_err());
        assert_eq!(CoprimePair::new(4, 6), Err(Error::NonCoprime { a: 4, r: 6 }));
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_by_degree(&sg(&[6, 7]), 2), sg(&[3, 7]));
        let s = sg(&[3, 5]);
        assert_eq!(quotient_by_degree(&s, 1), s);
        assert_eq!(quotient_by_degree(&sg(&[6, 7]), 3), sg(&[2, 7]));
    }

    #[test]
    fn quotient_by_full_multiplicity_is_everything() {
        assert_eq!(quotient_by_degree(&sg(&[3, 5]), 3), sg(&[1]));
    }

    #[test]
    fn quotient_closed_form() {
        assert_eq!(quotient_two_generated(6, 7, 2).unwrap(), (3, 7));
        assert_eq!(quotient_two_generated(6, 7, 1).unwrap(), (6, 7));
        assert_eq!(quotient_two_generated(9, 10, 3).unwrap(), (3, 10));
        assert_eq!(
            quotient_two_generated(6, 7, 4),
            Err(Error::NotADivisor { t: 4, a: 6 })
        );
    }

    #[test]
    fn closed_form_matches_extensional_quotient() {
        let s = sg(&[9, 10]);
        let (a_q, b_q) = quotient_two_generated(9, 10, 3).unwrap();
        assert_eq!(quotient_by_degree(&s, 3), sg(&[a_q, b_q]));
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            ramification_standard_basis(&pair(3, 7)),
            BTreeSet::from([3, 8, 13])
        );
        assert_eq!(
            ramification_standard_basis(&pair(3, 5)),
            BTreeSet::from([3, 5, 10])
        );
        assert_eq!(
            ramification_standard_basis(&pair(5, 7)),
            BTreeSet::from([5, 9, 13, 22, 26])
        );
    }

    #[test]
    fn ramification_semigroup_examples() {
        let s = ramification_semigroup(&pair(3, 7));
        assert_eq!(s, sg(&[3, 8, 13]));
        assert_eq!(s.genus(), 6);
        assert_eq!(ramification_semigroup(&pair(3, 5)), sg(&[3, 5]));
        let s = ramification_semigroup(&pair(5, 7));
        assert_eq!(s, sg(&[5, 9, 13, 22, 26]));
        assert_eq!(s.genus(), 12);
        assert_eq!(s.weierstrass_weight(), 30);
    }

    #[test]
    fn gap_count_identity_examples() {
        assert_eq!(gap_count_identity(&pair(3, 7)).unwrap(), (6, 6));
        assert_eq!(gap_count_identity(&pair(5, 7)).unwrap(), (12, 12));
        assert_eq!(gap_count_identity(&pair(4, 9)).unwrap(), (12, 12));
        assert_eq!(gap_count_identity(&pair(3, 5)), Err(Error::FormulaCaseOnly));
    }

    #[test]
    fn fixed_point_examples() {
        assert!(is_ramification_fixed_point(&pair(3, 5)));
        assert!(!is_ramification_fixed_point(&pair(3, 7)));
        assert!(is_ramification_fixed_point(&pair(4, 7)));
    }

    #[test]
    fn formula_basis_is_the_standard_basis() {
        for (a, b) in [(3, 7), (5, 7), (4, 9), (5, 8), (6, 25), (7, 16)] {
            let p = pair(a, b);
            let s = ramification_semigroup(&p);
            assert_eq!(
                ramification_standard_basis(&p),
                s.standard_basis(a).unwrap(),
                "basis mismatch at ({a}, {b})"
            );
        }
    }

    #[test]
    fn basis_residues_are_distinct() {
        for (a, b) in [(5, 7), (6, 25), (7, 16), (8, 13)] {
            let p = pair(a, b);
            let basis = ramification_standard_basis(&p);
            let residues: BTreeSet<u64> = basis.iter().map(|s| s % a).collect();
            assert_eq!(residues.len() as u64, a, "residue collision at ({a}, {b})");
        }
    }
}
