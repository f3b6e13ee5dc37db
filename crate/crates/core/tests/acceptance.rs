//! Acceptance suite: one test per verification criterion, each printing a
//! single `criterion N: PASS/FAIL` line (visible with `--nocapture`).
//!
//! All comparisons are exact integer equalities or strict inequalities;
//! there are no tolerances anywhere. Criterion 4 asserts strict positivity
//! of the total-weight inequality margin over its whole domain; the
//! degenerate pair (a, r) = (2, 1) has margin exactly 0 (both sides vanish
//! at genus 1), so that criterion reports its one violation and fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use gwsemi_core::{
    floor_sum_checks, gcd, inequality_margin, is_ramification_fixed_point, phi_is_bijective,
    predict_counts, quotient_by_degree, ramification_semigroup, ramification_standard_basis,
    semigroup_at, sweep_inequality, w1_closed, w2_closed, witness_functions, BranchConfig,
    CoprimePair, NumericalSemigroup, PointLabel, WeightPair,
};

fn conclude(criterion: u32, label: &str, start: Instant, budget: Duration, failures: &[String]) {
    let elapsed = Duration::from_micros(start.elapsed().as_micros() as u64);
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {status} - {label} [{elapsed:.2?} of {budget:?} budget]");
    for failure in failures {
        println!("    {failure}");
    }
    assert!(
        failures.is_empty(),
        "criterion {criterion} recorded {} violation(s); first: {}",
        failures.len(),
        failures[0]
    );
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn sg(gens: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens.iter().copied()).unwrap()
}

#[test]
fn criterion_1_curve_3_5_golden_values() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let pair = CoprimePair::new(3, 5).unwrap();
    if pair.genus() != 4 {
        failures.push(format!("genus of (3,5) is {}, want 4", pair.genus()));
    }
    let cfg = BranchConfig::new(pair);
    match semigroup_at(&cfg, PointLabel::P, None) {
        Ok(h_p) if h_p == sg(&[3, 5]) => {}
        Ok(h_p) => failures.push(format!("semigroup at P is {h_p}, want <3,5>")),
        Err(e) => failures.push(format!("semigroup at P failed: {e}")),
    }
    if ramification_semigroup(&pair) != sg(&[3, 5]) {
        failures.push("ramification semigroup of (3,5) differs from <3,5>".into());
    }
    let prediction = predict_counts(3, 5).unwrap();
    if prediction.possible_counts != BTreeSet::from([0, 6]) {
        failures.push(format!(
            "predicted counts {:?}, want {{0, 6}}",
            prediction.possible_counts
        ));
    }

    conclude(
        1,
        "(3,5): genus 4, semigroup <3,5> at P and at every ramification point, counts {0, 6}",
        start,
        Duration::from_secs(1),
        &failures,
    );
}

#[test]
fn criterion_2_curve_3_7_golden_values() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let pair = CoprimePair::new(3, 7).unwrap();
    if ramification_semigroup(&pair) != sg(&[3, 8, 13]) {
        failures.push("ramification semigroup of (3,7) differs from <3,8,13>".into());
    }
    if ramification_standard_basis(&pair) != BTreeSet::from([3, 8, 13]) {
        failures.push(format!(
            "standard basis {:?}, want {{3, 8, 13}}",
            ramification_standard_basis(&pair)
        ));
    }
    let prediction = predict_counts(3, 7).unwrap();
    if prediction.possible_counts != BTreeSet::from([0, 1]) {
        failures.push(format!(
            "predicted counts {:?}, want {{0, 1}}",
            prediction.possible_counts
        ));
    }

    conclude(
        2,
        "(3,7): ramification semigroup <3,8,13>, counts {0, 1}",
        start,
        Duration::from_secs(1),
        &failures,
    );
}

#[test]
fn criterion_3_weight_oracle_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut pairs = 0u64;

    for a in 2..=30u64 {
        for r in 1..=30u64 {
            if gcd(a, r) != 1 {
                continue;
            }
            pairs += 1;
            let closed = w1_closed(a, r).unwrap();
            let sieved = sg(&[a, a + r]).weierstrass_weight() as i64;
            if closed != sieved {
                failures.push(format!(
                    "w1({a}, {r}) = {closed} but gap sieve of <{a},{}> gives {sieved}",
                    a + r
                ));
            }
            if r < a {
                let closed = w2_closed(a, r).unwrap();
                let pair = CoprimePair::new(a, a + r).unwrap();
                let sieved = ramification_semigroup(&pair).weierstrass_weight() as i64;
                if closed != sieved {
                    failures.push(format!(
                        "w2({a}, {r}) = {closed} but ramification sieve gives {sieved}"
                    ));
                }
            }
        }
    }
    assert!(pairs > 500, "oracle grid unexpectedly small: {pairs}");

    conclude(
        3,
        "w1/w2 closed forms match gap-sieve weights on the oracle grids (a <= 30)",
        start,
        Duration::from_secs(30),
        &failures,
    );
}

#[test]
fn criterion_4_strict_inequality_sweep() {
    let start = Instant::now();
    let report = sweep_inequality(100, 2);
    let failures: Vec<String> = report
        .violations
        .iter()
        .map(|v| {
            format!(
                "margin({}, {}) = {} is not strictly positive",
                v.a, v.r, v.margin
            )
        })
        .collect();
    assert_eq!(report.pairs_checked, 6086);

    conclude(
        4,
        "margin > 0 for all coprime (a, r), 2 <= a <= 100, 1 <= r <= 2a",
        start,
        Duration::from_secs(60),
        &failures,
    );
}

#[test]
fn criterion_5_floor_sum_identity_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();

    for a in 2..=200u64 {
        for r in 1..=2 * a {
            if gcd(a, r) != 1 {
                continue;
            }
            let checks = floor_sum_checks(a, r).unwrap();
            if !checks.identity_holds() {
                failures.push(format!(
                    "floor-sum identity broken at ({a}, {r}): {:?}",
                    checks.sum_pair
                ));
            }
            if !checks.inequalities_hold() {
                failures.push(format!("floor-sum bound broken at ({a}, {r})"));
            }
        }
    }
    for a in 2..=500u64 {
        for r in 1..=2 * a {
            if gcd(a, r) != 1 {
                continue;
            }
            if !phi_is_bijective(a, r).unwrap() {
                failures.push(format!("phi not bijective at ({a}, {r})"));
            }
        }
    }

    conclude(
        5,
        "floor-sum identity and bounds (a <= 200, r <= 2a); phi bijective (a <= 500)",
        start,
        Duration::from_secs(60),
        &failures,
    );
}

#[test]
fn criterion_6_quotient_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();

    for a in 2..=24u64 {
        for b in (a + 1)..=40 {
            if gcd(a, b) != 1 {
                continue;
            }
            let s = sg(&[a, b]);
            for t in 1..=a {
                if a % t != 0 {
                    continue;
                }
                let quotient = quotient_by_degree(&s, t);
                let closed_form = sg(&[a / t, b]);
                if quotient != closed_form {
                    failures.push(format!(
                        "quotient of <{a},{b}> by {t} differs from <{},{b}>",
                        a / t
                    ));
                }
            }
        }
    }

    conclude(
        6,
        "degree-t quotient of <a,b> equals <a/t,b> for a <= 24, b <= 40, t | a",
        start,
        Duration::from_secs(30),
        &failures,
    );
}

#[test]
fn criterion_7_divisor_model_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();

    for a in 2..=6u64 {
        for b in (a + 1)..=20 {
            if gcd(a, b) != 1 {
                continue;
            }
            let pair = CoprimePair::new(a, b).unwrap();
            let cfg = BranchConfig::new(pair);
            match semigroup_at(&cfg, PointLabel::P, None) {
                Ok(h_p) if h_p == pair.semigroup() => {}
                Ok(_) => failures.push(format!("semigroup at P wrong for ({a}, {b})")),
                Err(e) => failures.push(format!("search at P failed for ({a}, {b}): {e}")),
            }
            let expected_q = ramification_semigroup(&pair);
            for i in 1..=b as usize {
                match semigroup_at(&cfg, PointLabel::Q(i), None) {
                    Ok(h_q) if h_q == expected_q => {}
                    Ok(_) => {
                        failures.push(format!("semigroup at Q{i} wrong for ({a}, {b})"));
                    }
                    Err(e) => {
                        failures.push(format!("search at Q{i} failed for ({a}, {b}): {e}"));
                    }
                }
            }
            // Witness pole orders are exactly the non-multiplicity basis
            // elements, realized by divisors regular away from the point.
            let mut basis = ramification_standard_basis(&pair);
            basis.remove(&a);
            let witnesses = witness_functions(&cfg, 1);
            let orders: BTreeSet<u64> = witnesses.iter().map(|w| w.pole_order).collect();
            if orders != basis {
                failures.push(format!(
                    "witness orders {orders:?} differ from basis {basis:?} at ({a}, {b})"
                ));
            }
            for w in &witnesses {
                let div = gwsemi_core::divisor_of_word(&cfg, &w.word);
                if !div.is_regular_away_from(PointLabel::Q(1))
                    || div.pole_order_at(PointLabel::Q(1)) != w.pole_order
                {
                    failures.push(format!(
                        "witness {} is not a pole-order-{} function at ({a}, {b})",
                        w.word, w.pole_order
                    ));
                }
            }
        }
    }

    conclude(
        7,
        "pole-order search re-derives <a,b> at P and the ramification semigroup at every Q_i (a <= 6, b <= 20)",
        start,
        Duration::from_secs(60),
        &failures,
    );
}

#[test]
fn criterion_8_ordering_and_fixed_point_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();

    for a in 2..=100u64 {
        for r in 1..=2 * a {
            if gcd(a, r) != 1 {
                continue;
            }
            let p = WeightPair::new(a, r).unwrap();
            if p.w1 < p.w2 {
                failures.push(format!("w1 < w2 at ({a}, {r})"));
            }
            if (p.w1 == p.w2) != (r % a == a - 1) {
                failures.push(format!(
                    "w1 = w2 equality case disagrees with r = a-1 mod a at ({a}, {r})"
                ));
            }
        }
    }
    for a in 2..=24u64 {
        for b in (a + 1)..=40 {
            if gcd(a, b) != 1 {
                continue;
            }
            let pair = CoprimePair::new(a, b).unwrap();
            let extensional = ramification_semigroup(&pair) == pair.semigroup();
            if is_ramification_fixed_point(&pair) != extensional {
                failures.push(format!(
                    "fixed-point congruence test disagrees with semigroup equality at ({a}, {b})"
                ));
            }
        }
    }
    // Margin consistency across the same domain as criterion 4.
    for a in 2..=100u64 {
        for r in 1..=2 * a {
            if gcd(a, r) != 1 {
                continue;
            }
            let p = WeightPair::new(a, r).unwrap();
            if p.margin != inequality_margin(a, r).unwrap() {
                failures.push(format!("margin routes disagree at ({a}, {r})"));
            }
        }
    }

    conclude(
        8,
        "w1 >= w2 with equality iff r = a-1 mod a; fixed-point flag matches extensional equality",
        start,
        Duration::from_secs(60),
        &failures,
    );
}
