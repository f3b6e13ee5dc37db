//! Numerical semigroups as explicit membership tables.
//!
//! A numerical semigroup is a cofinite additive submonoid of the non-negative
//! integers. It is stored extensionally: a boolean table up to the conductor
//! (the least `c` with `[c, oo)` fully contained) plus the cached gap list.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gcd;

/// Hard cap on the sieve horizon, guarding allocation on adversarial input.
const MAX_SIEVE: u64 = 1 << 26;

/// A cofinite additive submonoid of the non-negative integers.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    /// The construction input, not necessarily minimal.
    generators: BTreeSet<u64>,
    /// Smallest positive element.
    multiplicity: u64,
    /// Least `c` such that every integer `>= c` is an element.
    conductor: u64,
    /// Membership for every integer in `[0, conductor]`.
    membership: Vec<bool>,
    /// Sorted non-elements; its length is the genus.
    gap_list: Vec<u64>,
}

impl NumericalSemigroup {
    /// Additive closure of a set of positive generators with gcd 1.
    ///
    /// Membership is sieved by dynamic programming out to the product of the
    /// two smallest coprime generators (the Frobenius number of any coprime
    /// pair of elements bounds the conductor), then trimmed to the true
    /// conductor. When no two generators are coprime the horizon doubles
    /// until a run of `multiplicity` consecutive elements appears.
    pub fn from_generators<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let generators: BTreeSet<u64> = gens.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::DomainError("generators must be positive".into()));
        }
        let overall_gcd = generators.iter().fold(0u64, |acc, &g| gcd(acc, g));
        if overall_gcd != 1 {
            return Err(Error::NonCoprimeGenerators { gcd: overall_gcd });
        }
        if generators.contains(&1) {
            return Ok(Self {
                generators,
                multiplicity: 1,
                conductor: 0,
                membership: vec![true],
                gap_list: Vec::new(),
            });
        }

        let gens: Vec<u64> = generators.iter().copied().collect();
        let multiplicity = gens[0];
        let mut horizon = initial_horizon(&gens)?;
        loop {
            let mut table = vec![false; (horizon + 1) as usize];
            table[0] = true;
            for n in 1..=horizon as usize {
                table[n] = gens
                    .iter()
                    .take_while(|&&g| g <= n as u64)
                    .any(|&g| table[n - g as usize]);
            }
            let last_gap = table
                .iter()
                .rposition(|&member| !member)
                .expect("1 is a gap whenever 1 is not a generator")
                as u64;
            // A run of `multiplicity` consecutive elements pins the conductor:
            // everything beyond the run is reached by adding the multiplicity.
            if horizon - last_gap >= multiplicity {
                let conductor = last_gap + 1;
                table.truncate((conductor + 1) as usize);
                let gap_list = collect_gaps(&table);
                return Ok(Self {
                    generators,
                    multiplicity,
                    conductor,
                    membership: table,
                    gap_list,
                });
            }
            horizon = checked_horizon(horizon.checked_mul(2))?;
        }
    }

    /// Builds a semigroup from a complete membership table.
    ///
    /// Caller contract: `table[0]` is true, the table is additively closed,
    /// its last entry is true, and every integer past the end is an element.
    pub(crate) fn from_membership_table(mut table: Vec<bool>) -> Self {
        assert!(!table.is_empty() && table[0], "table must contain 0");
        assert!(
            *table.last().unwrap(),
            "table must extend past the conductor"
        );
        let Some(last_gap) = table.iter().rposition(|&member| !member) else {
            return Self {
                generators: BTreeSet::from([1]),
                multiplicity: 1,
                conductor: 0,
                membership: vec![true],
                gap_list: Vec::new(),
            };
        };
        let conductor = (last_gap + 1) as u64;
        table.truncate(last_gap + 2);
        let gap_list = collect_gaps(&table);
        let multiplicity = table
            .iter()
            .skip(1)
            .position(|&member| member)
            .map(|i| (i + 1) as u64)
            .expect("conductor entry is an element");
        // Residue-class minima generate the semigroup.
        let mut generators = BTreeSet::from([multiplicity]);
        for residue in 1..multiplicity {
            let mut n = residue;
            while !member_of(&table, conductor, n) {
                n += multiplicity;
            }
            generators.insert(n);
        }
        Self {
            generators,
            multiplicity,
            conductor,
            membership: table,
            gap_list,
        }
    }

    /// The generator set this semigroup was constructed from.
    pub fn generators(&self) -> &BTreeSet<u64> {
        &self.generators
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Least `c` with `[c, oo)` fully contained; 0 for the full monoid.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Membership test. Negative integers are never elements; everything at
    /// or above the conductor always is.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        if n >= self.conductor {
            return true;
        }
        self.membership[n as usize]
    }

    /// Sorted list of gaps (non-elements), all below the conductor.
    pub fn gaps(&self) -> &[u64] {
        &self.gap_list
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.gap_list.len() as u64
    }

    /// The largest gap, `conductor - 1`.
    pub fn frobenius(&self) -> Result<u64> {
        if self.gap_list.is_empty() {
            return Err(Error::FullMonoid);
        }
        Ok(self.conductor - 1)
    }

    /// Standard basis with respect to the multiplicity `a`: the set
    /// `{a, s_1, ..., s_{a-1}}` where `s_i` is the least element congruent
    /// to `i` mod `a`.
    pub fn standard_basis(&self, a: u64) -> Result<BTreeSet<u64>> {
        if a != self.multiplicity {
            return Err(Error::NotMultiplicity {
                given: a,
                multiplicity: self.multiplicity,
            });
        }
        let mut basis = BTreeSet::from([a]);
        for residue in 1..a {
            let mut n = residue;
            while !self.contains(n as i64) {
                n += a;
            }
            basis.insert(n);
        }
        Ok(basis)
    }

    /// Weierstrass weight of the gap sequence `l_1 < ... < l_g`, i.e.
    /// `sum_i (l_i - i)`, computed as `(sum of gaps) - g(g+1)/2`.
    pub fn weierstrass_weight(&self) -> u64 {
        let g = self.genus();
        let gap_sum: u64 = self.gap_list.iter().sum();
        gap_sum - g * (g + 1) / 2
    }
}

/// Extensional equality: two semigroups are equal exactly when they agree at
/// every integer, i.e. when their gap sets coincide.
impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gap_list == other.gap_list
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn member_of(table: &[bool], conductor: u64, n: u64) -> bool {
    n >= conductor || table[n as usize]
}

fn collect_gaps(table: &[bool]) -> Vec<u64> {
    table
        .iter()
        .enumerate()
        .filter(|(_, &member)| !member)
        .map(|(n, _)| n as u64)
        .collect()
}

/// Product of the two smallest coprime generators when such a pair exists,
/// otherwise the product of the two smallest overall (the caller doubles
/// from there).
fn initial_horizon(gens: &[u64]) -> Result<u64> {
    let mut best: Option<u64> = None;
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            if gcd(x, y) == 1 {
                let p = x
                    .checked_mul(y)
                    .ok_or_else(|| Error::DomainError("sieve horizon overflows u64".into()))?;
                best = Some(best.map_or(p, |b| b.min(p)));
            }
        }
    }
    let fallback = || gens[0].checked_mul(gens[1]);
    checked_horizon(best.map(Some).unwrap_or_else(fallback))
}

fn checked_horizon(h: Option<u64>) -> Result<u64> {
    match h {
        Some(h) if h <= MAX_SIEVE => Ok(h),
        _ => Err(Error::DomainError(format!(
            "sieve horizon exceeds the supported bound {MAX_SIEVE}"
        ))),
    }
}
