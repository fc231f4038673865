//! Reproducible experiment runner: accuracy replication against the oracles,
//! closed-form equivalence sweeps, the complexity probe, and persistence of
//! reports and counterexamples.
//!
//! Every trial derives its own RNG seed from (master seed, n, trial index),
//! so results are independent of scheduling and any disagreement replays
//! bit-exactly from its recorded seed.

use crate::generators::{random_instance, GeneratorSpec};
use crate::linsys::{
    assemble_membership, beta, build_system, closed_form, contribution_table, delta1_expanded,
    delta1_grouped, delta2_expanded, delta2_grouped, eliminate, Arrangement, Assignment,
    LinsysError, SelectionSet,
};
use crate::numerics::{Int, Rat};
use crate::oracles::{dp_decide, exhaustive_decide, OracleVerdict, DP_SUM_GUARD};
use crate::solver::{
    subset_sum, subset_sum_approx, Instance, SolveStats, SolverConfig,
};

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Exact,
    Approx,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Exact => write!(f, "exact"),
            Method::Approx => write!(f, "approx"),
        }
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Method::Exact),
            "approx" => Ok(Method::Approx),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleKind {
    Exhaustive,
    Dp,
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleKind::Exhaustive => write!(f, "exhaustive"),
            OracleKind::Dp => write!(f, "dp"),
        }
    }
}

impl FromStr for OracleKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(OracleKind::Exhaustive),
            "dp" => Ok(OracleKind::Dp),
            other => Err(format!("unknown oracle {other:?}")),
        }
    }
}

/// How many solver calls one trial gets: a single canonical call, or one per
/// element over independently seeded shuffles with any-of success.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Permutations {
    One,
    PerElement,
}

impl fmt::Display for Permutations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Permutations::One => write!(f, "1"),
            Permutations::PerElement => write!(f, "n"),
        }
    }
}

impl FromStr for Permutations {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(Permutations::One),
            "n" => Ok(Permutations::PerElement),
            other => Err(format!("permutations per trial must be 1 or n, got {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub trials_per_n: u64,
    pub seed: u64,
    pub method: Method,
    pub oracle: OracleKind,
    pub permutations: Permutations,
    pub d3_lower_inclusive: bool,
}

impl ExperimentConfig {
    /// Desk-scale defaults used by the acceptance runs.
    pub fn desk_defaults(seed: u64) -> Self {
        ExperimentConfig {
            n_min: 1,
            n_max: 14,
            trials_per_n: 10_000,
            seed,
            method: Method::Exact,
            oracle: OracleKind::Exhaustive,
            permutations: Permutations::One,
            d3_lower_inclusive: true,
        }
    }

    fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            d3_lower_inclusive: self.d3_lower_inclusive,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HarnessError {
    Config(String),
    Io { path: String, detail: String },
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::Config(msg) => write!(f, "configuration error: {msg}"),
            HarnessError::Io { path, detail } => write!(f, "io error on {path}: {detail}"),
        }
    }
}

impl std::error::Error for HarnessError {}

/// Per-n aggregate counters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NRow {
    pub n: usize,
    pub trials: u64,
    pub oracle_yes: u64,
    pub solver_yes: u64,
    pub agreements: u64,
    pub false_negatives: u64,
    pub false_positives: u64,
    pub degenerate_skips: u64,
    pub constrain_calls: u64,
}

impl NRow {
    pub fn mean_constrain_calls(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.constrain_calls as f64 / self.trials as f64
        }
    }
}

/// One persisted disagreement, self-contained enough to replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub trial: u64,
    pub per_trial_seed: u64,
    pub elements: Vec<String>,
    pub target: String,
    pub method: Method,
    pub oracle: OracleKind,
    pub permutations: Permutations,
    pub d3_lower_inclusive: bool,
    pub oracle_satisfiable: bool,
    pub oracle_witness: Option<Vec<usize>>,
    pub solver_satisfiable: bool,
    pub solver_witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub rows: Vec<NRow>,
    pub counterexamples: Vec<Counterexample>,
    pub wall: Duration,
}

impl ExperimentReport {
    pub fn total_false_positives(&self) -> u64 {
        self.rows.iter().map(|r| r.false_positives).sum()
    }

    pub fn total_disagreements(&self) -> u64 {
        self.rows
            .iter()
            .map(|r| r.false_negatives + r.false_positives)
            .sum()
    }

    pub fn total_agreements(&self) -> u64 {
        self.rows.iter().map(|r| r.agreements).sum()
    }

    pub fn total_trials(&self) -> u64 {
        self.rows.iter().map(|r| r.trials).sum()
    }

    /// Fraction of trials where solver and oracle agreed.
    pub fn agreement_rate(&self) -> f64 {
        let trials = self.total_trials();
        if trials == 0 {
            1.0
        } else {
            self.total_agreements() as f64 / trials as f64
        }
    }

    /// CSV rendering, bit-stable for equal inputs.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "n,trials,oracle_yes,solver_yes,agreements,false_neg,false_pos,degenerate_skips,mean_constrain_calls\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{:.6}\n",
                r.n,
                r.trials,
                r.oracle_yes,
                r.solver_yes,
                r.agreements,
                r.false_negatives,
                r.false_positives,
                r.degenerate_skips,
                r.mean_constrain_calls()
            ));
        }
        out
    }
}

/// Stable seed combiner (splitmix64 finalizer over a mixed triple).
pub fn mix_seed(a: u64, b: u64, c: u64) -> u64 {
    let mut x = a
        ^ b.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ c.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 30;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 31;
    x
}

fn decide_with_oracle(inst: &Instance, oracle: OracleKind) -> Result<OracleVerdict, HarnessError> {
    let verdict = match oracle {
        OracleKind::Exhaustive => exhaustive_decide(inst, 30),
        OracleKind::Dp => dp_decide(inst),
    };
    verdict.map_err(|e| HarnessError::Config(e.to_string()))
}

struct TrialResult {
    oracle_sat: bool,
    oracle_witness: Option<Vec<usize>>,
    solver_sat: bool,
    solver_witness: Option<Vec<usize>>,
    stats: SolveStats,
}

/// Runs the solver side of a trial, honoring the permutations mode.
fn solve_trial(
    inst: &Instance,
    trial_seed: u64,
    method: Method,
    permutations: Permutations,
    cfg: &SolverConfig,
) -> (bool, Option<Vec<usize>>, SolveStats) {
    let run = |instance: &Instance| match method {
        Method::Exact => subset_sum(instance, cfg),
        Method::Approx => subset_sum_approx(instance, cfg),
    };
    match permutations {
        Permutations::One => {
            let out = run(inst);
            let witness = out.solution.as_ref().map(|s| s.indices.clone());
            (out.solution.is_some(), witness, out.stats)
        }
        Permutations::PerElement => {
            let mut stats = SolveStats::default();
            for p in 0..inst.len().max(1) as u64 {
                let mut order: Vec<usize> = (0..inst.len()).collect();
                let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(trial_seed, p + 1, 0x5075));
                order.shuffle(&mut rng);
                let shuffled = Instance::new(
                    order.iter().map(|&i| inst.elements[i].clone()).collect(),
                    inst.target.clone(),
                );
                let out = run(&shuffled);
                stats.absorb(&out.stats);
                if let Some(sol) = out.solution {
                    let mut original: Vec<usize> =
                        sol.indices.iter().map(|&i| order[i]).collect();
                    original.sort_unstable();
                    return (true, Some(original), stats);
                }
            }
            (false, None, stats)
        }
    }
}

fn run_trial(cfg: &ExperimentConfig, n: usize, trial: u64) -> Result<TrialResult, HarnessError> {
    let trial_seed = mix_seed(cfg.seed, n as u64, trial);
    let inst = random_instance(&GeneratorSpec::new(n, trial_seed));
    let oracle = decide_with_oracle(&inst, cfg.oracle)?;
    let (solver_sat, solver_witness, stats) = solve_trial(
        &inst,
        trial_seed,
        cfg.method,
        cfg.permutations,
        &cfg.solver_config(),
    );
    Ok(TrialResult {
        oracle_sat: oracle.satisfiable,
        oracle_witness: oracle.witness.map(|w| w.indices),
        solver_sat,
        solver_witness,
        stats,
    })
}

fn validate_oracle_capacity(cfg: &ExperimentConfig) -> Result<(), HarnessError> {
    match cfg.oracle {
        OracleKind::Exhaustive => {
            if cfg.n_max > 30 {
                return Err(HarnessError::Config(format!(
                    "exhaustive oracle capacity exceeded: n_max = {} > 30",
                    cfg.n_max
                )));
            }
        }
        OracleKind::Dp => {
            let worst = (cfg.n_max as u64) * 2 * (cfg.n_max as u64).pow(2);
            if worst > DP_SUM_GUARD {
                return Err(HarnessError::Config(format!(
                    "dp oracle capacity exceeded: worst-case magnitude sum {worst} > {DP_SUM_GUARD}"
                )));
            }
        }
    }
    Ok(())
}

/// Runs the accuracy protocol: per trial, generate a random instance
/// (range 2n^2, target 0), decide with the oracle and with the solver,
/// aggregate agreement per n, and record every disagreement.
pub fn run_accuracy_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    if cfg.n_min < 1 || cfg.n_min > cfg.n_max {
        return Err(HarnessError::Config(format!(
            "invalid n range [{}, {}]",
            cfg.n_min, cfg.n_max
        )));
    }
    validate_oracle_capacity(cfg)?;

    let start = Instant::now();
    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();

    for n in cfg.n_min..=cfg.n_max {
        let results: Result<Vec<TrialResult>, HarnessError> = (0..cfg.trials_per_n)
            .into_par_iter()
            .map(|trial| run_trial(cfg, n, trial))
            .collect();
        let results = results?;

        let mut row = NRow {
            n,
            ..NRow::default()
        };
        for (trial, r) in results.into_iter().enumerate() {
            row.trials += 1;
            row.oracle_yes += r.oracle_sat as u64;
            row.solver_yes += r.solver_sat as u64;
            row.degenerate_skips += r.stats.degenerate_skips;
            row.constrain_calls += r.stats.constrain_calls;
            if r.solver_sat == r.oracle_sat {
                row.agreements += 1;
            } else {
                if r.oracle_sat {
                    row.false_negatives += 1;
                } else {
                    row.false_positives += 1;
                }
                let trial = trial as u64;
                let trial_seed = mix_seed(cfg.seed, n as u64, trial);
                let inst = random_instance(&GeneratorSpec::new(n, trial_seed));
                counterexamples.push(Counterexample {
                    n,
                    trial,
                    per_trial_seed: trial_seed,
                    elements: inst.elements.iter().map(|v| v.to_string()).collect(),
                    target: inst.target.to_string(),
                    method: cfg.method,
                    oracle: cfg.oracle,
                    permutations: cfg.permutations,
                    d3_lower_inclusive: cfg.d3_lower_inclusive,
                    oracle_satisfiable: r.oracle_sat,
                    oracle_witness: r.oracle_witness,
                    solver_satisfiable: r.solver_sat,
                    solver_witness: r.solver_witness,
                });
            }
        }
        rows.push(row);
    }

    Ok(ExperimentReport {
        config: cfg.clone(),
        rows,
        counterexamples,
        wall: start.elapsed(),
    })
}

/// Outcome of re-running a persisted counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    /// The instance regenerated from the recorded seed matches the record.
    pub instance_matches: bool,
    pub oracle_satisfiable: bool,
    pub solver_satisfiable: bool,
    /// Both verdicts came out exactly as recorded.
    pub reproduces: bool,
}

/// Regenerates the instance from the recorded per-trial seed and re-runs
/// both deciders under the recorded configuration.
pub fn replay_counterexample(ce: &Counterexample) -> Result<Replay, HarnessError> {
    let inst = random_instance(&GeneratorSpec::new(ce.n, ce.per_trial_seed));
    let instance_matches = inst.elements.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        == ce.elements
        && inst.target.to_string() == ce.target;
    let oracle = decide_with_oracle(&inst, ce.oracle)?;
    let solver_cfg = SolverConfig {
        d3_lower_inclusive: ce.d3_lower_inclusive,
        ..SolverConfig::default()
    };
    let (solver_sat, _, _) = solve_trial(
        &inst,
        ce.per_trial_seed,
        ce.method,
        ce.permutations,
        &solver_cfg,
    );
    Ok(Replay {
        instance_matches,
        oracle_satisfiable: oracle.satisfiable,
        solver_satisfiable: solver_sat,
        reproduces: instance_matches
            && oracle.satisfiable == ce.oracle_satisfiable
            && solver_sat == ce.solver_satisfiable,
    })
}

/// Summary of the closed-form-versus-elimination sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub trials: u64,
    pub checked: u64,
    pub skipped_degenerate: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn check_one_configuration(rng: &mut ChaCha8Rng) -> Result<Option<String>, LinsysError> {
    let n = rng.gen_range(5..=10usize);
    let elements: Vec<Int> = (0..n).map(|_| Int::from(rng.gen_range(-99i64..=99))).collect();
    let arr = Arrangement::new(elements);
    let asg: Assignment = Assignment::new(
        rng.gen_range(3..=(n as i64 - 1)),
        rng.gen(),
        rng.gen(),
        rng.gen(),
        rng.gen(),
    );
    let c = Int::from(rng.gen_range(-300i64..=300));

    if beta(&arr).is_zero() {
        return Err(LinsysError::DegenerateWindow);
    }

    let sys = build_system(&arr, &asg, &c).expect("n >= 5");
    let (pe, be) = eliminate(&sys)?;
    let (pc, bc) = closed_form(&arr, &asg, &c)?;
    if pe != pc || be != bc {
        return Ok(Some(format!(
            "closed form and elimination disagree on {arr:?} {asg:?} c={c}"
        )));
    }

    let b = Rat::from_integer(beta(&arr));
    let t1 = Rat::from_integer(Int::from(asg.t1 as i64));
    let t2 = Rat::from_integer(Int::from(asg.t2 as i64));
    let d1 = delta1_expanded(&arr, &asg, &c);
    let d2 = delta2_expanded(&arr, &asg, &c);
    if Rat::from_integer(d1.clone()) != (t1 - pc.b1.clone()) * b.clone()
        || Rat::from_integer(d2.clone()) != (t2 - pc.b2.clone()) * b.clone()
    {
        return Ok(Some(format!("delta identity fails on {arr:?} {asg:?} c={c}")));
    }
    if d1 != delta1_grouped(&arr, &asg, &c) || d2 != delta2_grouped(&arr, &asg, &c) {
        return Ok(Some(format!(
            "expanded and grouped delta forms disagree on {arr:?} {asg:?} c={c}"
        )));
    }
    for col in &bc.columns {
        if col.k1.clone() + col.k2.clone() != -Rat::one() {
            return Ok(Some(format!("k1 + k2 != -1 on {arr:?}")));
        }
    }

    match contribution_table(&arr, &asg, &c) {
        Ok(table) => {
            for (i, col) in bc.columns.iter().enumerate() {
                let want_d1 = col.k1.clone() * b.clone() / Rat::from_integer(d1.clone());
                let want_d2 = col.k2.clone() * b.clone() / Rat::from_integer(d2.clone());
                if table.d1[i] != want_d1 || table.d2[i] != want_d2 {
                    return Ok(Some(format!("table rows disagree with k-values on {arr:?}")));
                }
                if table.d3[i] != (table.d1[i].clone() - table.d2[i].clone()).abs() {
                    return Ok(Some(format!("d3 != |d1 - d2| on {arr:?}")));
                }
            }
        }
        Err(LinsysError::DegenerateTargets) => {
            // table checks skipped; the configuration itself already passed
        }
        Err(e) => return Err(e),
    }

    // closure of an assembled membership vector on a random selection
    let free = n - 4;
    let picks: Vec<usize> = (0..free).filter(|_| rng.gen()).collect();
    let m = assemble_membership(&pc, &bc, &SelectionSet::new(picks));
    if !m.satisfies(&sys) {
        return Ok(Some(format!("assembled membership violates the system on {arr:?}")));
    }

    Ok(None)
}

/// Sweeps random configurations, holding [`closed_form`] and [`eliminate`]
/// to exact equality along with the table identities.
pub fn run_closed_form_check(trials: u64, seed: u64) -> ClosedFormReport {
    let mut report = ClosedFormReport {
        trials,
        checked: 0,
        skipped_degenerate: 0,
        failures: 0,
        first_failure: None,
    };
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, trial, 0xCF0));
        match check_one_configuration(&mut rng) {
            Ok(None) => report.checked += 1,
            Ok(Some(desc)) => {
                report.failures += 1;
                report.first_failure.get_or_insert(desc);
            }
            Err(LinsysError::DegenerateWindow) => report.skipped_degenerate += 1,
            Err(e) => {
                report.failures += 1;
                report.first_failure.get_or_insert(e.to_string());
            }
        }
    }
    report
}

/// Per-size measurements from the complexity probe.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRow {
    pub n: usize,
    pub trials: u64,
    pub mean_column_evals: f64,
    pub mean_constrain_calls: f64,
    /// Largest per-TEST column count seen at this size.
    pub max_columns_per_test: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
    /// Least-squares slope of ln(mean column evals) against ln(n).
    pub slope: f64,
}

/// Measures solver work on unsatisfiable instances (positive values, target
/// -1, so no subset can ever hit the target and the enumeration always runs
/// to completion) and fits a log-log growth slope.
pub fn complexity_probe(
    n_values: &[usize],
    trials: u64,
    seed: u64,
) -> Result<ProbeReport, HarnessError> {
    if n_values.len() < 3 {
        return Err(HarnessError::Config(format!(
            "complexity probe needs at least 3 sizes, got {}",
            n_values.len()
        )));
    }
    if !n_values.windows(2).all(|w| w[0] < w[1]) {
        return Err(HarnessError::Config(
            "probe sizes must be strictly ascending".to_string(),
        ));
    }
    if n_values[0] < 5 {
        return Err(HarnessError::Config(
            "probe sizes must be at least 5 to exercise the window machinery".to_string(),
        ));
    }
    if trials == 0 {
        return Err(HarnessError::Config("probe needs at least 1 trial".to_string()));
    }

    let cfg = SolverConfig::default();
    let rows: Vec<ProbeRow> = n_values
        .iter()
        .map(|&n| {
            let outcomes: Vec<SolveStats> = (0..trials)
                .into_par_iter()
                .map(|trial| {
                    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, n as u64, trial));
                    let elements: Vec<Int> = (0..n)
                        .map(|_| Int::from(rng.gen_range(1..=(2 * n * n) as i64)))
                        .collect();
                    let inst = Instance::new(elements, Int::from(-1));
                    let out = subset_sum(&inst, &cfg);
                    assert!(out.solution.is_none(), "probe instances are unsatisfiable");
                    out.stats
                })
                .collect();
            let total_cols: u64 = outcomes.iter().map(|s| s.column_evals).sum();
            let total_constrain: u64 = outcomes.iter().map(|s| s.constrain_calls).sum();
            ProbeRow {
                n,
                trials,
                mean_column_evals: total_cols as f64 / trials as f64,
                mean_constrain_calls: total_constrain as f64 / trials as f64,
                max_columns_per_test: outcomes
                    .iter()
                    .map(|s| s.max_columns_per_test)
                    .max()
                    .unwrap_or(0),
            }
        })
        .collect();

    Ok(ProbeReport {
        slope: log_log_slope(&rows),
        rows,
    })
}

fn log_log_slope(rows: &[ProbeRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.mean_column_evals.max(1.0).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let cov: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let var: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    cov / var
}

fn io_err(path: &Path, e: std::io::Error) -> HarnessError {
    HarnessError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    }
}

/// Writes the CSV report.
pub fn write_report(report: &ExperimentReport, path: &Path) -> Result<(), HarnessError> {
    std::fs::write(path, report.to_csv()).map_err(|e| io_err(path, e))
}

/// Appends one counterexample as a JSON line.
pub fn append_counterexample(ce: &Counterexample, path: &Path) -> Result<(), HarnessError> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| io_err(path, e))?;
    let line = serde_json::to_string(ce).expect("counterexamples always serialize");
    writeln!(file, "{line}").map_err(|e| io_err(path, e))
}

/// Reads back a line-delimited counterexample log.
pub fn load_counterexamples(path: &Path) -> Result<Vec<Counterexample>, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            serde_json::from_str(l).map_err(|e| HarnessError::Io {
                path: path.display().to_string(),
                detail: format!("bad counterexample record: {e}"),
            })
        })
        .collect()
}
