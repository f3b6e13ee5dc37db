//! Formal divisor arithmetic on the model curve `y^a = prod_{j=1}^b (x - c_j)`.
//!
//! The branch values `c_j` are opaque labels. Everything here depends only on
//! the two principal divisors
//!
//! ```text
//! div(x - c_j) = a*Q_j - a*P          div(y) = Q_1 + ... + Q_b - b*P
//! ```
//!
//! so a monomial word `prod_j (x - c_j)^{n_j} * y^m` has a divisor computed
//! by linearity, and "regular away from a point" is a purely divisorial
//! predicate. Pole orders of words regular away from a chosen point, closed
//! under addition, re-derive the semigroup of that point; completeness of the
//! search is certified by the gap count matching `(a-1)(b-1)/2`, not by the
//! size of the exponent box.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::covering::CoprimePair;
use crate::error::{Error, Result};
use crate::gcd;
use crate::semigroup::NumericalSemigroup;

/// A labeled point of the model curve: the common pole `P` of `x` and `y`,
/// or the totally ramified point `Q_i` over the branch value `c_i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointLabel {
    P,
    Q(usize),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::P => write!(f, "P"),
            PointLabel::Q(i) => write!(f, "Q{i}"),
        }
    }
}

/// The labeled-point configuration of the curve `y^a = prod (x - c_j)`:
/// the point `P` plus one `Q_j` per branch value.
#[derive(Debug, Clone, Copy)]
pub struct BranchConfig {
    pair: CoprimePair,
}

impl BranchConfig {
    pub fn new(pair: CoprimePair) -> Self {
        Self { pair }
    }

    pub fn pair(&self) -> &CoprimePair {
        &self.pair
    }

    /// All `b + 1` point labels.
    pub fn points(&self) -> Vec<PointLabel> {
        let mut pts = vec![PointLabel::P];
        pts.extend((1..=self.pair.b() as usize).map(PointLabel::Q));
        pts
    }

    pub fn is_valid_point(&self, pt: PointLabel) -> bool {
        match pt {
            PointLabel::P => true,
            PointLabel::Q(i) => 1 <= i && i as u64 <= self.pair.b(),
        }
    }
}

/// A finite formal integer combination of labeled points.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Divisor {
    coeffs: BTreeMap<PointLabel, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coefficient(&self, pt: PointLabel) -> i64 {
        self.coeffs.get(&pt).copied().unwrap_or(0)
    }

    /// Adds `k * pt`, dropping the entry when it cancels to zero.
    pub fn add_point(&mut self, pt: PointLabel, k: i64) {
        let entry = self.coeffs.entry(pt).or_insert(0);
        *entry += k;
        if *entry == 0 {
            self.coeffs.remove(&pt);
        }
    }

    /// Sum of all coefficients. Principal divisors have degree 0.
    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `max(0, -coefficient)` at the point.
    pub fn pole_order_at(&self, pt: PointLabel) -> u64 {
        (-self.coefficient(pt)).max(0) as u64
    }

    /// True when every coefficient away from `pt` is non-negative.
    pub fn is_regular_away_from(&self, pt: PointLabel) -> bool {
        self.coeffs.iter().all(|(&q, &c)| q == pt || c >= 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (PointLabel, i64)> + '_ {
        self.coeffs.iter().map(|(&pt, &c)| (pt, c))
    }
}

impl std::ops::Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (pt, c) in rhs.iter() {
            out.add_point(pt, c);
        }
        out
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (pt, c)) in self.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match c.abs() {
                1 => write!(f, "{pt}")?,
                k => write!(f, "{k}{pt}")?,
            }
        }
        Ok(())
    }
}

/// A formal monomial `prod_j (x - c_j)^{n_j} * y^m` with `m >= 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FunctionWord {
    branch_exponents: BTreeMap<usize, i64>,
    y_exponent: u64,
}

impl FunctionWord {
    /// The empty word, i.e. the constant function 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn monomial<I>(branch_exponents: I, y_exponent: u64) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut word = Self {
            branch_exponents: BTreeMap::new(),
            y_exponent,
        };
        for (j, e) in branch_exponents {
            word.set_branch_exponent(j, word.branch_exponent(j) + e);
        }
        word
    }

    pub fn branch_exponent(&self, j: usize) -> i64 {
        self.branch_exponents.get(&j).copied().unwrap_or(0)
    }

    pub fn set_branch_exponent(&mut self, j: usize, e: i64) {
        if e == 0 {
            self.branch_exponents.remove(&j);
        } else {
            self.branch_exponents.insert(j, e);
        }
    }

    pub fn y_exponent(&self) -> u64 {
        self.y_exponent
    }

    pub fn branch_exponents(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.branch_exponents.iter().map(|(&j, &e)| (j, e))
    }

    /// The product of two words: exponents add.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, e) in other.branch_exponents() {
            out.set_branch_exponent(j, out.branch_exponent(j) + e);
        }
        out.y_exponent += other.y_exponent;
        out
    }
}

impl fmt::Display for FunctionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, e) in self.branch_exponents() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "(x-c{j})")?;
            } else {
                write!(f, "(x-c{j})^{e}")?;
            }
        }
        match self.y_exponent {
            0 if first => write!(f, "1"),
            0 => Ok(()),
            1 => {
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "y")
            }
            m => {
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "y^{m}")
            }
        }
    }
}

/// Divisor of a word by linearity from `div(x - c_j) = a*Q_j - a*P` and
/// `div(y) = Q_1 + ... + Q_b - b*P`. Always degree 0.
pub fn divisor_of_word(cfg: &BranchConfig, word: &FunctionWord) -> Divisor {
    let a = cfg.pair.a() as i64;
    let b = cfg.pair.b() as i64;
    let m = word.y_exponent as i64;
    let mut div = Divisor::zero();
    let mut branch_total = 0i64;
    for (j, e) in word.branch_exponents() {
        assert!(
            cfg.is_valid_point(PointLabel::Q(j)),
            "branch index {j} outside 1..={b}"
        );
        div.add_point(PointLabel::Q(j), a * e);
        branch_total += e;
    }
    if m != 0 {
        for j in 1..=b as usize {
            div.add_point(PointLabel::Q(j), m);
        }
    }
    div.add_point(PointLabel::P, -a * branch_total - b * m);
    div
}

/// A word regular away from one of the `Q_i`, together with its pole order
/// there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub word: FunctionWord,
    pub pole_order: u64,
}

/// Explicit words realizing the standard basis at `Q_i`: for `l = 1..a-1`
/// the word `(x - c_i)^{N_l - l(m+1)} * y^l` with `N_l = [l(a-r_bar+1)/a]`,
/// whose pole order at `Q_i` is `l(b+a-r_bar) - N_l*a`.
pub fn witness_functions(cfg: &BranchConfig, i: usize) -> Vec<Witness> {
    assert!(
        cfg.is_valid_point(PointLabel::Q(i)),
        "branch index {i} outside 1..={}",
        cfg.pair.b()
    );
    let (a, b, r_bar, m) = (
        cfg.pair.a(),
        cfg.pair.b(),
        cfg.pair.r_bar(),
        cfg.pair.m(),
    );
    (1..a)
        .map(|l| {
            let n_l = l * (a - r_bar + 1) / a;
            let exponent = n_l as i64 - (l * (m + 1)) as i64;
            Witness {
                word: FunctionWord::monomial([(i, exponent)], l),
                pole_order: l * (b + a - r_bar) - n_l * a,
            }
        })
        .collect()
}

const SEARCH_RETRIES: u32 = 4;

/// Re-derives the semigroup of pole orders at `pt`: enumerates monomial
/// words regular away from `pt`, collects their pole orders up to `bound`
/// (default `2(a-1)(b-1)`), and takes the additive closure.
///
/// The search restricts exponents to be equal across the non-distinguished
/// branches, which loses nothing: constraints and pole contributions are
/// symmetric there. Completeness is certified by the gap count of the result
/// matching `(a-1)(b-1)/2`; a mismatch doubles the exponent box and retries
/// before giving up with [`Error::CertificationFailed`].
pub fn semigroup_at(
    cfg: &BranchConfig,
    pt: PointLabel,
    bound: Option<u64>,
) -> Result<NumericalSemigroup> {
    assert!(cfg.is_valid_point(pt), "unknown point {pt}");
    let pair = cfg.pair;
    let expected_genus = pair.genus();
    let order_bound = bound.unwrap_or(2 * (pair.a() - 1) * (pair.b() - 1));
    let mut exponent_cap = (4 * pair.genus() / pair.a()).max(2) as i64;
    let mut y_cap = 2 * pair.a();

    let mut found_genus = 0;
    for _ in 0..=SEARCH_RETRIES {
        let orders = collect_pole_orders(&pair, pt, order_bound, exponent_cap, y_cap);
        if !orders.is_empty() && orders.iter().fold(0, |acc, &n| gcd(acc, n)) == 1 {
            let closure = NumericalSemigroup::from_generators(orders)
                .expect("validated nonempty coprime order set");
            found_genus = closure.genus();
            if found_genus == expected_genus {
                return Ok(closure);
            }
        }
        exponent_cap *= 2;
        y_cap *= 2;
    }
    Err(Error::CertificationFailed {
        expected_genus,
        found_genus,
    })
}

/// Pole orders at `pt` over the symmetric word box. The distinguished branch
/// is `i` when `pt = Q_i` and branch 1 when `pt = P`; `n_dist` is its
/// exponent, `n_rest` the shared exponent of every other branch.
fn collect_pole_orders(
    pair: &CoprimePair,
    pt: PointLabel,
    order_bound: u64,
    exponent_cap: i64,
    y_cap: u64,
) -> BTreeSet<u64> {
    let a = pair.a() as i64;
    let b = pair.b() as i64;
    let mut orders = BTreeSet::new();
    for n_dist in -exponent_cap..=exponent_cap {
        for n_rest in -exponent_cap..=exponent_cap {
            for m in 0..=y_cap as i64 {
                let at_p = -a * (n_dist + (b - 1) * n_rest) - b * m;
                let at_dist = a * n_dist + m;
                let at_rest = a * n_rest + m;
                let pole = match pt {
                    PointLabel::P if at_dist >= 0 && at_rest >= 0 => -at_p,
                    PointLabel::Q(_) if at_p >= 0 && at_rest >= 0 => -at_dist,
                    _ => continue,
                };
                if pole > 0 && pole as u64 <= order_bound {
                    orders.insert(pole as u64);
                }
            }
        }
    }
    orders
}
