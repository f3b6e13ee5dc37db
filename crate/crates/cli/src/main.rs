//! `gwsemi`: numerical-semigroup and Galois-Weierstrass-point calculator.
//!
//! Exit codes: 0 success, 1 verification failure (oracle mismatch, sweep
//! violation, certification failure), 2 usage or precondition error.

mod report;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{CommandFactory, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use gwsemi_core::{
    divisor_of_word, gap_count_identity, gcd, inequality_margin, is_ramification_fixed_point,
    predict_counts, ramification_semigroup, ramification_standard_basis, semigroup_at,
    witness_functions, BranchConfig, CoprimePair, Error, NumericalSemigroup, PointLabel,
    WeightPair, Witness,
};
use report::{jint, juint, juint_list, Report};

#[derive(Parser)]
#[command(
    name = "gwsemi",
    version,
    about = "Exact numerical-semigroup arithmetic for Galois Weierstrass points"
)]
struct Cli {
    /// Emit the report as JSON instead of an aligned table.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the sweep (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Run the two built-in example curves (3,5) and (3,7) end-to-end as a
    /// smoke test.
    #[arg(long)]
    seed_examples: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Gaps, genus, Frobenius number, standard basis and weight of the
    /// semigroup generated by a comma-separated list.
    Semigroup {
        #[arg(long, value_delimiter = ',', required = true, value_name = "N,N,..")]
        gens: Vec<u64>,
    },
    /// Semigroup of a totally ramified point of the degree-a covering
    /// attached to <a, b>.
    Ramification {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Closed-form weights w1/w2, the inequality margin, and gap-sieve
    /// cross-checks for the pair (a, a+r).
    Weights {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        r: u64,
    },
    /// Evaluate the strict total-weight inequality over every coprime pair
    /// with 2 <= a <= a-max and 1 <= r <= r-multiple * a.
    Sweep {
        #[arg(long)]
        a_max: u64,
        #[arg(long, default_value_t = 2)]
        r_multiple: u64,
    },
    /// The possible counts of Galois Weierstrass points with semigroup <a, b>.
    Predict {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Re-derive the semigroup of a labeled point (P or Q1..Qb) of the curve
    /// y^a = prod (x - c_j) from monomial pole orders, and compare with the
    /// closed form.
    Curve {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        point: String,
        /// Pole-order search ceiling (default 2(a-1)(b-1)).
        #[arg(long)]
        bound: Option<u64>,
    },
}

/// A usage or precondition failure, reported on stderr with exit code 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }

    let started = Instant::now();
    let outcome = match (&cli.command, cli.seed_examples) {
        (Some(_), true) => Err(UsageError(
            "--seed-examples runs on its own, without a subcommand".into(),
        )),
        (Some(command), false) => dispatch(command),
        (None, true) => Ok(seed_examples()),
        (None, false) => {
            Cli::command().print_help().ok();
            return ExitCode::from(2);
        }
    };

    match outcome {
        Ok(mut report) => {
            report.elapsed_ms = started.elapsed().as_millis();
            if cli.json {
                println!("{}", report.render_json());
            } else {
                print!("{}", report.render_table());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: &Command) -> Result<Report, UsageError> {
    match command {
        Command::Semigroup { gens } => cmd_semigroup(gens),
        Command::Ramification { a, b } => cmd_ramification(*a, *b),
        Command::Weights { a, r } => cmd_weights(*a, *r),
        Command::Sweep { a_max, r_multiple } => cmd_sweep(*a_max, *r_multiple),
        Command::Predict { a, b } => cmd_predict(*a, *b),
        Command::Curve { a, b, point, bound } => cmd_curve(*a, *b, point, *bound),
    }
}

/// Full numeric description of a semigroup, shared by several commands.
fn semigroup_value(s: &NumericalSemigroup) -> Value {
    let mut map = Map::new();
    map.insert(
        "generators".into(),
        juint_list(s.generators().iter().copied()),
    );
    map.insert("multiplicity".into(), juint(s.multiplicity()));
    map.insert("conductor".into(), juint(s.conductor()));
    map.insert("genus".into(), juint(s.genus()));
    map.insert("gaps".into(), juint_list(s.gaps().iter().copied()));
    map.insert(
        "frobenius".into(),
        s.frobenius().map(juint).unwrap_or(Value::Null),
    );
    map.insert(
        "standard_basis".into(),
        juint_list(
            s.standard_basis(s.multiplicity())
                .expect("multiplicity is its own basis anchor"),
        ),
    );
    map.insert("weierstrass_weight".into(), juint(s.weierstrass_weight()));
    Value::Object(map)
}

fn cmd_semigroup(gens: &[u64]) -> Result<Report, UsageError> {
    let s = NumericalSemigroup::from_generators(gens.iter().copied())?;
    let mut report = Report::new("semigroup");
    report.inputs = json!({ "gens": juint_list(gens.iter().copied()) });
    report.results = semigroup_value(&s);
    Ok(report)
}

fn cmd_ramification(a: u64, b: u64) -> Result<Report, UsageError> {
    let pair = CoprimePair::new(a, b)?;
    let basis = ramification_standard_basis(&pair);
    let s = ramification_semigroup(&pair);

    let mut report = Report::new("ramification");
    report.inputs = json!({ "a": juint(a), "b": juint(b) });
    let identity = match gap_count_identity(&pair) {
        Ok((lhs, rhs)) => {
            if lhs != rhs {
                report
                    .violations
                    .push(json!(format!("gap-count identity broken: {lhs} != {rhs}")));
            }
            json!({ "floor_sum": juint(lhs), "genus": juint(rhs) })
        }
        Err(Error::FormulaCaseOnly) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    report.results = json!({
        "r_bar": juint(pair.r_bar()),
        "m": juint(pair.m()),
        "genus": juint(pair.genus()),
        "standard_basis": juint_list(basis.into_iter()),
        "fixed_point": is_ramification_fixed_point(&pair),
        "gap_count_identity": identity,
        "semigroup": semigroup_value(&s),
    });
    Ok(report)
}

fn cmd_weights(a: u64, r: u64) -> Result<Report, UsageError> {
    let pair = WeightPair::new(a, r)?;
    let w1_sieve = NumericalSemigroup::from_generators([a, a + r])?.weierstrass_weight() as i64;
    let covering_pair = CoprimePair::new(a, a + r)?;
    let w2_sieve = ramification_semigroup(&covering_pair).weierstrass_weight() as i64;

    let mut report = Report::new("weights");
    report.inputs = json!({ "a": juint(a), "r": juint(r) });
    if pair.w1 != w1_sieve {
        report.violations.push(json!(format!(
            "w1 closed form {} disagrees with gap sieve {}",
            pair.w1, w1_sieve
        )));
    }
    if pair.w2 != w2_sieve {
        report.violations.push(json!(format!(
            "w2 closed form {} disagrees with gap sieve {}",
            pair.w2, w2_sieve
        )));
    }
    report.results = json!({
        "g": juint(pair.g),
        "w1": jint(pair.w1),
        "w2": jint(pair.w2),
        "margin": jint(pair.margin),
        "margin_positive": pair.margin > 0,
        "w1_gap_sieve": jint(w1_sieve),
        "w2_gap_sieve": jint(w2_sieve),
        "cross_check": if report.violations.is_empty() { "ok" } else { "mismatch" },
    });
    Ok(report)
}

fn cmd_sweep(a_max: u64, r_multiple: u64) -> Result<Report, UsageError> {
    if a_max < 2 {
        return Err(UsageError("a-max must be at least 2".into()));
    }
    if r_multiple < 1 {
        return Err(UsageError("r-multiple must be at least 1".into()));
    }

    // Parallel over a; the per-a results are re-assembled in (a, r) order,
    // so the report does not depend on the thread count.
    let per_a: Vec<Vec<(u64, u64, i64)>> = (2..=a_max)
        .into_par_iter()
        .map(|a| {
            (1..=r_multiple * a)
                .filter(|&r| gcd(a, r) == 1)
                .map(|r| (a, r, inequality_margin(a, r).expect("coprime pair")))
                .collect()
        })
        .collect();

    let mut pairs_checked = 0u64;
    let mut min_margin: Option<(u64, u64, i64)> = None;
    let mut report = Report::new("sweep");
    for (a, r, margin) in per_a.into_iter().flatten() {
        pairs_checked += 1;
        if min_margin.is_none_or(|(_, _, m)| margin < m) {
            min_margin = Some((a, r, margin));
        }
        if margin <= 0 {
            report.violations.push(json!({
                "a": juint(a),
                "r": juint(r),
                "margin": jint(margin),
            }));
        }
    }

    report.inputs = json!({ "a_max": juint(a_max), "r_multiple": juint(r_multiple) });
    report.results = json!({
        "pairs_checked": juint(pairs_checked),
        "min_margin": min_margin.map(|(a, r, m)| json!({
            "a": juint(a),
            "r": juint(r),
            "margin": jint(m),
        })),
        "violation_count": report.violations.len(),
    });
    Ok(report)
}

fn cmd_predict(a: u64, b: u64) -> Result<Report, UsageError> {
    let prediction = predict_counts(a, b)?;
    let mut report = Report::new("predict");
    report.inputs = json!({ "a": juint(a), "b": juint(b) });
    report.results = json!({
        "case": prediction.case_tag.name(),
        "possible_counts": juint_list(prediction.possible_counts.iter().copied()),
        "note": prediction.note.map(Value::String).unwrap_or(Value::Null),
    });
    Ok(report)
}

fn parse_point(label: &str, b: u64) -> Result<PointLabel, UsageError> {
    if label.eq_ignore_ascii_case("p") {
        return Ok(PointLabel::P);
    }
    let index: Option<usize> = label
        .strip_prefix(['Q', 'q'])
        .and_then(|rest| rest.parse().ok());
    match index {
        Some(i) if 1 <= i && i as u64 <= b => Ok(PointLabel::Q(i)),
        _ => Err(UsageError(format!(
            "point must be P or Q1..Q{b}, got {label:?}"
        ))),
    }
}

fn witness_value(cfg: &BranchConfig, pt: PointLabel, w: &Witness) -> Value {
    let div = divisor_of_word(cfg, &w.word);
    json!({
        "word": w.word.to_string(),
        "pole_order": juint(w.pole_order),
        "regular_away": div.is_regular_away_from(pt),
    })
}

fn cmd_curve(a: u64, b: u64, point: &str, bound: Option<u64>) -> Result<Report, UsageError> {
    let pair = CoprimePair::new(a, b)?;
    let pt = parse_point(point, b)?;
    let cfg = BranchConfig::new(pair);

    let mut report = Report::new("curve");
    report.inputs = json!({
        "a": juint(a),
        "b": juint(b),
        "point": pt.to_string(),
        "bound": bound.map(juint).unwrap_or(Value::Null),
    });

    let closed_form = match pt {
        PointLabel::P => pair.semigroup(),
        PointLabel::Q(_) => ramification_semigroup(&pair),
    };
    let witnesses: Vec<Value> = match pt {
        PointLabel::P => Vec::new(),
        PointLabel::Q(i) => witness_functions(&cfg, i)
            .iter()
            .map(|w| witness_value(&cfg, pt, w))
            .collect(),
    };

    match semigroup_at(&cfg, pt, bound) {
        Ok(derived) => {
            let matches = derived == closed_form;
            if !matches {
                report.violations.push(json!(format!(
                    "derived semigroup {derived} differs from closed form {closed_form}"
                )));
            }
            report.results = json!({
                "semigroup": semigroup_value(&derived),
                "closed_form": semigroup_value(&closed_form),
                "matches_closed_form": matches,
                "witnesses": witnesses,
            });
        }
        Err(e @ Error::CertificationFailed { .. }) => {
            report.violations.push(json!(e.to_string()));
            report.results = json!({
                "semigroup": Value::Null,
                "closed_form": semigroup_value(&closed_form),
                "matches_closed_form": false,
                "witnesses": witnesses,
            });
        }
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}

/// End-to-end smoke test over the two example curves.
fn seed_examples() -> Report {
    let mut report = Report::new("seed-examples");
    let mut checks: Vec<Value> = Vec::new();

    let mut run_check = |report: &mut Report, name: &str, ok: bool| {
        checks.push(json!({ "check": name, "status": if ok { "PASS" } else { "FAIL" } }));
        if !ok {
            report.violations.push(json!(format!("{name} failed")));
        }
    };

    let sg = |gens: &[u64]| NumericalSemigroup::from_generators(gens.iter().copied()).unwrap();

    // Curve y^3 = (x-c_1)...(x-c_5): every branch point shares <3,5>.
    let pair35 = CoprimePair::new(3, 5).unwrap();
    let cfg35 = BranchConfig::new(pair35);
    run_check(&mut report, "(3,5) genus is 4", pair35.genus() == 4);
    run_check(
        &mut report,
        "(3,5) pole orders at P derive <3,5>",
        semigroup_at(&cfg35, PointLabel::P, None).is_ok_and(|s| s == sg(&[3, 5])),
    );
    run_check(
        &mut report,
        "(3,5) ramification semigroup is <3,5>",
        ramification_semigroup(&pair35) == sg(&[3, 5]),
    );
    run_check(
        &mut report,
        "(3,5) branch points carry the same semigroup",
        is_ramification_fixed_point(&pair35),
    );
    run_check(
        &mut report,
        "(3,5) possible counts are {0, 6}",
        predict_counts(3, 5).unwrap().possible_counts == BTreeSet::from([0, 6]),
    );
    run_check(
        &mut report,
        "(3,5) weight cross-check w1 = 4",
        WeightPair::new(3, 2).unwrap().w1 == 4
            && sg(&[3, 5]).weierstrass_weight() == 4,
    );

    // Curve y^3 = (x-c_1)...(x-c_7): branch points carry <3,8,13> instead.
    let pair37 = CoprimePair::new(3, 7).unwrap();
    let cfg37 = BranchConfig::new(pair37);
    run_check(
        &mut report,
        "(3,7) pole orders at P derive <3,7>",
        semigroup_at(&cfg37, PointLabel::P, None).is_ok_and(|s| s == sg(&[3, 7])),
    );
    run_check(
        &mut report,
        "(3,7) ramification semigroup is <3,8,13>",
        ramification_semigroup(&pair37) == sg(&[3, 8, 13]),
    );
    run_check(
        &mut report,
        "(3,7) pole orders at Q1 derive <3,8,13>",
        semigroup_at(&cfg37, PointLabel::Q(1), None).is_ok_and(|s| s == sg(&[3, 8, 13])),
    );
    run_check(
        &mut report,
        "(3,7) witness pole orders are {8, 13}",
        witness_functions(&cfg37, 1)
            .iter()
            .map(|w| w.pole_order)
            .collect::<BTreeSet<u64>>()
            == BTreeSet::from([8, 13]),
    );
    run_check(
        &mut report,
        "(3,7) possible counts are {0, 1}",
        predict_counts(3, 7).unwrap().possible_counts == BTreeSet::from([0, 1]),
    );

    report.results = json!({ "checks": checks });
    report
}
