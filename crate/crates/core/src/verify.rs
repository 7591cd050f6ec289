//! Verification suites run by `meander verify` and by the acceptance test.
//!
//! Every suite compares two independent computations exactly and returns a
//! machine-readable report. Apart from the performance suite, reports depend
//! only on the configuration.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::decompose::{decompose, reconstruct};
use crate::enumerate::{all_meanders_up_to, count_tables, series_from_table, Census};
use crate::error::{Error, Result};
use crate::meander::MeanderCode;
use crate::operad::{check_operad_axioms, insert, Slot};
use crate::series::{
    iterated_snake_step, iterated_snake_step_unreduced, phi_s, snake_count_formula, solve_phi_is, verify_master_equation,
    Convention,
};
use crate::structure::{common_intervals, contract, extract, Interval};

/// Failures kept verbatim in a report; the rest are only counted.
const FAILURE_CAP: usize = 20;
/// Wall-clock budget of the performance suite.
pub const PERFORMANCE_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Anchors,
    Snakes,
    PhiS,
    PhiIs,
    Master,
    Roundtrip,
    ContractRoundtrip,
    Operad,
    IrreducibleRemark,
    Performance,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Anchors,
        Suite::Snakes,
        Suite::PhiS,
        Suite::PhiIs,
        Suite::Master,
        Suite::Roundtrip,
        Suite::ContractRoundtrip,
        Suite::Operad,
        Suite::IrreducibleRemark,
        Suite::Performance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Anchors => "anchors",
            Suite::Snakes => "snakes",
            Suite::PhiS => "phi-s",
            Suite::PhiIs => "phi-is",
            Suite::Master => "master",
            Suite::Roundtrip => "roundtrip",
            Suite::ContractRoundtrip => "contract-roundtrip",
            Suite::Operad => "operad",
            Suite::IrreducibleRemark => "irreducible-remark",
            Suite::Performance => "performance",
        }
    }

    /// Total order used when none is given.
    pub fn default_max_order(self) -> usize {
        match self {
            Suite::Anchors => 3,
            Suite::Snakes | Suite::PhiIs | Suite::Master | Suite::ContractRoundtrip => 8,
            Suite::Roundtrip => 9,
            Suite::Operad => 7,
            Suite::IrreducibleRemark => 10,
            Suite::PhiS | Suite::Performance => 12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Syntax {
                at: 0,
                msg: format!("unknown suite {s:?}"),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// A soft target was missed.
    Warn,
    Fail,
}

impl Status {
    pub fn is_ok(self) -> bool {
        self != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Overrides every suite's default total order.
    pub max_order: Option<usize>,
    pub convention: Convention,
    pub seed: u64,
    /// Random instances per law in the operad suite.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_order: None,
            convention: Convention::SplitUnits,
            seed: 2024,
            samples: 1000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub status: Status,
    pub max_order: usize,
    pub seed: u64,
    pub convention: String,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub seed: u64,
    pub convention: String,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

struct Tally {
    checked: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.failure_count += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(detail);
        }
    }

    fn status(&self) -> Status {
        if self.failure_count == 0 {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Runs suites, sharing one census among them.
pub struct Verifier {
    config: VerifyConfig,
    census: Option<Census>,
}

impl Verifier {
    pub fn new(config: VerifyConfig) -> Self {
        Verifier { config, census: None }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    fn census(&mut self, max_total: usize) -> Census {
        match &self.census {
            Some(c) if c.max_total >= max_total => c.truncated(max_total),
            _ => {
                let c = count_tables(max_total);
                self.census = Some(c.clone());
                c
            }
        }
    }

    pub fn run_all(&mut self, suites: &[Suite]) -> VerifyReport {
        let reports: Vec<SuiteReport> = suites.iter().map(|&s| self.run(s)).collect();
        VerifyReport {
            passed: reports.iter().all(|r| r.status.is_ok()),
            seed: self.config.seed,
            convention: self.config.convention.name().to_string(),
            suites: reports,
        }
    }

    pub fn run(&mut self, suite: Suite) -> SuiteReport {
        let t = self.config.max_order.unwrap_or_else(|| suite.default_max_order());
        let mut tally = Tally::new();
        let (status, details) = match self.dispatch(suite, t, &mut tally) {
            Ok((status, details)) => (status.unwrap_or_else(|| tally.status()), details),
            Err(e) => {
                tally.fail(format!("error: {e}"));
                (Status::Fail, Value::Null)
            }
        };
        SuiteReport {
            suite: suite.name().to_string(),
            status,
            max_order: t,
            seed: self.config.seed,
            convention: self.config.convention.name().to_string(),
            checked: tally.checked,
            failure_count: tally.failure_count,
            failures: tally.failures,
            details,
        }
    }

    fn dispatch(&mut self, suite: Suite, t: usize, tally: &mut Tally) -> Result<(Option<Status>, Value)> {
        let details = match suite {
            Suite::Anchors => self.anchors(t, tally),
            Suite::Snakes => self.snakes(t, tally),
            Suite::PhiS => phi_s_suite(t, tally),
            Suite::PhiIs => self.phi_is(t, tally)?,
            Suite::Master => self.master(t, tally)?,
            Suite::Roundtrip => roundtrip(t, tally)?,
            Suite::ContractRoundtrip => contract_roundtrip(t, tally)?,
            Suite::Operad => self.operad(t, tally),
            Suite::IrreducibleRemark => self.irreducible_remark(t, tally),
            Suite::Performance => return Ok(performance(t, tally)),
        };
        Ok((None, details))
    }

    fn anchors(&mut self, t: usize, tally: &mut Tally) -> Value {
        let c = self.census(t.max(3));
        let expected = [((1, 0), 1), ((0, 1), 1), ((2, 0), 1), ((0, 2), 1), ((1, 1), 4), ((3, 0), 2)];
        let mut seen = Vec::new();
        for ((n, k), want) in expected {
            let got = c.all.get(n, k);
            tally.check(got == want, || format!("M({n},{k}) = {got}, expected {want}"));
            seen.push(json!({"n": n, "k": k, "count": got, "expected": want}));
        }
        json!({ "anchors": seen })
    }

    fn snakes(&mut self, t: usize, tally: &mut Tally) -> Value {
        let c = self.census(t);
        let series = phi_s(t);
        for (n, k) in degrees(t) {
            let counted = BigInt::from(c.snake.get(n, k));
            let formula = snake_count_formula(n, k);
            let expanded = series.coeff(n, k);
            tally.check(counted == formula && formula == expanded, || {
                format!("({n},{k}): census {counted}, formula {formula}, series {expanded}")
            });
        }
        json!({ "table": c.snake })
    }

    fn phi_is(&mut self, t: usize, tally: &mut Tally) -> Result<Value> {
        let solved = solve_phi_is(t)?;
        let step = iterated_snake_step(&solved)?;
        let c = self.census(t);
        let counted = series_from_table(&c.iterated_snake);
        for (n, k) in degrees(t) {
            let (s, f, e) = (solved.coeff(n, k), step.coeff(n, k), counted.coeff(n, k));
            tally.check(s == f, || format!("({n},{k}): fixed-point residual {}", &s - &f));
            tally.check(s == e, || format!("({n},{k}): solver {s}, census {e}"));
        }
        // The equation with the unit snakes substituted too, evaluated at the
        // census series. Reported, not gated.
        let unreduced: Vec<Value> = match iterated_snake_step_unreduced(&counted) {
            Ok(lit) => degrees(t)
                .filter(|&(n, k)| lit.coeff(n, k) != counted.coeff(n, k))
                .map(|(n, k)| json!({"n": n, "k": k, "census": counted.coeff(n, k).to_string(), "rhs": lit.coeff(n, k).to_string()}))
                .collect(),
            Err(e) => vec![json!({ "error": e.to_string() })],
        };
        Ok(json!({
            "equation": "phi = x + t + (phi_S - x - t)(x + (phi^(1) - x)/2, t)",
            "series": solved.to_json(),
            "unreduced_equation_mismatches": unreduced,
        }))
    }

    fn master(&mut self, t: usize, tally: &mut Tally) -> Result<Value> {
        let c = self.census(t);
        let psi = series_from_table(&c.all);
        let ir = series_from_table(&c.irreducible);
        let is = solve_phi_is(t)?;
        let report = verify_master_equation(t, &psi, &ir, &is, self.config.convention)?;
        for r in &report.entries {
            tally.check(r.lhs == r.rhs, || {
                format!("({},{}): lhs {} rhs {} residual {}", r.n, r.k, r.lhs, r.rhs, r.residual())
            });
        }
        let mut details = report.to_json();
        if self.config.convention != Convention::DropEmpty {
            // The form without the unit split, for comparison. Not gated.
            let literal = verify_master_equation(t, &psi, &ir, &is, Convention::DropEmpty)?;
            details["drop_empty_mismatches"] = literal
                .nonzero()
                .map(|r| json!({"n": r.n, "k": r.k, "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string()}))
                .collect();
        }
        Ok(details)
    }

    fn operad(&mut self, t: usize, tally: &mut Tally) -> Value {
        let report = check_operad_axioms(t, self.config.samples, self.config.seed);
        tally.checked += (report.unit_checks + report.associativity_checks + report.commutation_checks) as u64;
        for c in &report.counterexamples {
            tally.fail(format!("{}: {}", c.law, c.detail));
        }
        if self.config.samples < 1000 {
            tally.fail(format!("only {} sampled instances per law, at least 1000 required", self.config.samples));
        }
        serde_json::to_value(&report).expect("report serializes")
    }

    fn irreducible_remark(&mut self, t: usize, tally: &mut Tally) -> Value {
        let c = self.census(t);
        let mut rows = Vec::new();
        for n in 0..=t {
            let count = c.irreducible.get(n, 0);
            tally.check(count == 0, || format!("{count} irreducible meanders of order ({n}, 0)"));
            rows.push(json!({"n": n, "irreducible": count, "all": c.all.get(n, 0)}));
        }
        json!({ "crossings_only": rows })
    }
}

fn degrees(t: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=t).flat_map(|d| (0..=d).map(move |k| (d - k, k)))
}

fn phi_s_suite(t: usize, tally: &mut Tally) -> Value {
    let series = phi_s(t);
    for (n, k) in degrees(t) {
        let (got, want) = (series.coeff(n, k), snake_count_formula(n, k));
        tally.check(got == want, || format!("({n},{k}): series {got}, formula {want}"));
    }
    let spots = [((1, 0), 1), ((1, 1), 4), ((3, 0), 2), ((2, 3), 10)];
    let mut listed = Vec::new();
    for ((n, k), want) in spots {
        if n + k <= t {
            let got = series.coeff(n, k);
            tally.check(got == BigInt::from(want), || format!("spot ({n},{k}) = {got}, expected {want}"));
            listed.push(json!({"n": n, "k": k, "coeff": got.to_string()}));
        }
    }
    json!({ "spots": listed })
}

fn roundtrip(t: usize, tally: &mut Tally) -> Result<Value> {
    let mut factors = [0u64; 2];
    for m in all_meanders_up_to(t).iter().filter(|m| !m.is_empty()) {
        let tree = decompose(m)?;
        let back = reconstruct(&tree);
        tally.check(back.as_ref() == Ok(m), || format!("{m} reconstructs to {back:?}"));
        if let Err(e) = tree.check_soundness() {
            tally.fail(format!("{m}: {e}"));
        }
        tree.walk(&mut |node, _| match node.kind {
            crate::decompose::FactorKind::IteratedSnake => factors[0] += 1,
            crate::decompose::FactorKind::Irreducible => factors[1] += 1,
            crate::decompose::FactorKind::Point => {}
        });
    }
    Ok(json!({"iterated_snake_factors": factors[0], "irreducible_factors": factors[1]}))
}

/// `insert(contract(M, B), slot, extract(M, B)) = M` for proper nonempty
/// common intervals `B`.
fn contract_roundtrip(t: usize, tally: &mut Tally) -> Result<Value> {
    let mut intervals = 0u64;
    for m in all_meanders_up_to(t) {
        for iv in common_intervals(&m) {
            if iv.is_empty() || iv == Interval::full(&m) {
                continue;
            }
            intervals += 1;
            let (host, piece) = (contract(&m, iv)?, extract(&m, iv)?);
            let slot = Slot::at_position(&host, iv.lo);
            let back = insert(&host, slot, &piece);
            tally.check(back.as_ref() == Ok(&m), || {
                format!("{m} at {iv}: {host} {slot} {piece} gives {back:?}")
            });
        }
    }
    Ok(json!({ "intervals": intervals }))
}

fn performance(t: usize, tally: &mut Tally) -> (Option<Status>, Value) {
    let start = Instant::now();
    let census = count_tables(t);
    let elapsed = start.elapsed();
    tally.checked += 1;
    let total: u64 = (0..=t).map(|d| census.all.total_of_order(d)).sum();
    let status = if elapsed <= PERFORMANCE_BUDGET { Status::Pass } else { Status::Warn };
    (
        Some(status),
        json!({
            "elapsed_ms": elapsed.as_millis() as u64,
            "budget_ms": PERFORMANCE_BUDGET.as_millis() as u64,
            "threads": rayon::current_num_threads(),
            "meanders": total,
        }),
    )
}

/// Parses a code from text or JSON and checks planarity.
pub fn parse_valid(text: &str) -> Result<MeanderCode> {
    let code: MeanderCode = text.parse()?;
    code.ensure_valid()?;
    Ok(code)
}
