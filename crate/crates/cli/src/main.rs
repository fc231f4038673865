//! `ssplab` — command-line front end: solving, generation, reduction,
//! experiments, and verification sweeps.
//!
//! Every subcommand prints one JSON result block on stdout. Exit codes:
//! 0 success, 1 negative result (no subset, failed check, or a disagreement
//! that breaks a hard invariant), 2 usage or input errors.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use ssplab_core::generators::{parse_cnf, parse_instance, random_instance, reduce_3sat, write_instance, GeneratorSpec};
use ssplab_core::harness::{
    append_counterexample, complexity_probe, run_accuracy_experiment, run_closed_form_check,
    write_report, ExperimentConfig, Method, OracleKind, Permutations,
};
use ssplab_core::numerics::Int;
use ssplab_core::oracles::{dp_decide, exhaustive_decide, OracleVerdict};
use ssplab_core::solver::{subset_sum, subset_sum_approx, Solution, SolverConfig};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "ssplab", version, about = "subset-sum laboratory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide one instance file with a solver or an oracle.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// exact | approx | oracle-exh | oracle-dp
        #[arg(long)]
        method: String,
        /// Use the strict lower bound 0 < D3 in the column scan.
        #[arg(long)]
        d3_exclusive: bool,
        /// Do not append the fabricated sentinel.
        #[arg(long)]
        no_fabrication: bool,
    },
    /// Generate a random instance file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Values are drawn from [-range-bound, range-bound]; default 2n^2.
        #[arg(long)]
        range_bound: Option<String>,
        /// Target sum; default 0.
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reduce a DIMACS 3-CNF file to a subset-sum instance file.
    Reduce {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the accuracy experiment and write a CSV report.
    Experiment {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Trials per set length.
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// exact | approx
        #[arg(long, default_value = "exact")]
        method: String,
        /// exhaustive | dp
        #[arg(long, default_value = "exhaustive")]
        oracle: String,
        /// 1 | n
        #[arg(long, default_value = "1")]
        permutations_per_trial: String,
        #[arg(long)]
        d3_exclusive: bool,
        #[arg(long)]
        out: PathBuf,
        /// Where to persist disagreements (JSON lines).
        #[arg(long)]
        counterexamples: Option<PathBuf>,
    },
    /// Sweep random configurations for closed-form/elimination equality.
    CheckClosedForms {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Measure solver work growth on unsatisfiable instances.
    ProbeComplexity {
        /// Comma-separated ascending sizes, e.g. 6,8,10,12
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

fn parse_int_flag(name: &str, text: &str) -> Result<Int> {
    Int::from_str(text).with_context(|| format!("--{name} expects a decimal integer, got {text:?}"))
}

fn read_instance(path: &Path) -> Result<ssplab_core::Instance> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading instance file {}", path.display()))?;
    parse_instance(&text).map_err(|e| anyhow::anyhow!("parsing {}: {e}", path.display()))
}

fn solution_json(sol: &Solution) -> serde_json::Value {
    json!({
        "indices": sol.indices,
        "values": sol.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "sum": sol.sum.to_string(),
    })
}

fn cmd_solve(input: &Path, method: &str, d3_exclusive: bool, no_fabrication: bool) -> Result<bool> {
    let inst = read_instance(input)?;
    let cfg = SolverConfig {
        d3_lower_inclusive: !d3_exclusive,
        enable_fabrication: !no_fabrication,
        ..SolverConfig::default()
    };
    let (satisfiable, solution, stats) = match method {
        "exact" | "approx" => {
            let out = if method == "exact" {
                subset_sum(&inst, &cfg)
            } else {
                subset_sum_approx(&inst, &cfg)
            };
            let stats = json!({
                "constrain_calls": out.stats.constrain_calls,
                "test_calls": out.stats.test_calls,
                "column_evals": out.stats.column_evals,
                "degenerate_skips": out.stats.degenerate_skips,
            });
            (out.solution.is_some(), out.solution, Some(stats))
        }
        "oracle-exh" | "oracle-dp" => {
            let OracleVerdict { satisfiable, witness } = if method == "oracle-exh" {
                exhaustive_decide(&inst, cfg.max_exhaustive_n)?
            } else {
                dp_decide(&inst)?
            };
            (satisfiable, witness, None)
        }
        other => bail!("unknown method {other:?} (expected exact, approx, oracle-exh, oracle-dp)"),
    };

    let mut block = json!({
        "command": "solve",
        "input": input.display().to_string(),
        "method": method,
        "satisfiable": satisfiable,
    });
    if let Some(sol) = &solution {
        block["solution"] = solution_json(sol);
    }
    if let Some(stats) = stats {
        block["stats"] = stats;
    }
    println!("{block}");
    Ok(satisfiable)
}

fn cmd_gen(
    n: usize,
    seed: u64,
    range_bound: Option<&str>,
    target: Option<&str>,
    out: &Path,
) -> Result<()> {
    let mut spec = GeneratorSpec::new(n, seed);
    if let Some(rb) = range_bound {
        spec.range_bound = parse_int_flag("range-bound", rb)?;
    }
    if let Some(t) = target {
        spec.target = parse_int_flag("target", t)?;
    }
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if spec.range_bound <= Int::from(0) {
        bail!("--range-bound must be positive");
    }
    let inst = random_instance(&spec);
    std::fs::write(out, write_instance(&inst))
        .with_context(|| format!("writing {}", out.display()))?;
    println!(
        "{}",
        json!({
            "command": "gen",
            "n": n,
            "seed": seed,
            "range_bound": spec.range_bound.to_string(),
            "target": spec.target.to_string(),
            "out": out.display().to_string(),
        })
    );
    Ok(())
}

fn cmd_reduce(cnf: &Path, out: &Path) -> Result<()> {
    let text = std::fs::read_to_string(cnf)
        .with_context(|| format!("reading cnf file {}", cnf.display()))?;
    let formula = parse_cnf(&text).map_err(|e| anyhow::anyhow!("parsing {}: {e}", cnf.display()))?;
    let inst = reduce_3sat(&formula);
    std::fs::write(out, write_instance(&inst))
        .with_context(|| format!("writing {}", out.display()))?;
    println!(
        "{}",
        json!({
            "command": "reduce",
            "cnf": cnf.display().to_string(),
            "variables": formula.num_vars(),
            "clauses": formula.clauses().len(),
            "instance_len": inst.len(),
            "out": out.display().to_string(),
        })
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_experiment(
    n_min: usize,
    n_max: usize,
    trials: u64,
    seed: u64,
    method: &str,
    oracle: &str,
    permutations: &str,
    d3_exclusive: bool,
    out: &Path,
    counterexamples: Option<&Path>,
) -> Result<bool> {
    let cfg = ExperimentConfig {
        n_min,
        n_max,
        trials_per_n: trials,
        seed,
        method: Method::from_str(method).map_err(|e| anyhow::anyhow!(e))?,
        oracle: OracleKind::from_str(oracle).map_err(|e| anyhow::anyhow!(e))?,
        permutations: Permutations::from_str(permutations).map_err(|e| anyhow::anyhow!(e))?,
        d3_lower_inclusive: !d3_exclusive,
    };
    let report = run_accuracy_experiment(&cfg)?;
    write_report(&report, out)?;
    if let Some(path) = counterexamples {
        for ce in &report.counterexamples {
            append_counterexample(ce, path)?;
        }
    }
    println!(
        "{}",
        json!({
            "command": "experiment",
            "out": out.display().to_string(),
            "trials": report.total_trials(),
            "agreements": report.total_agreements(),
            "disagreements": report.total_disagreements(),
            "false_positives": report.total_false_positives(),
            "agreement_rate": report.agreement_rate(),
            "counterexamples_persisted": report.counterexamples.len(),
            "wall_seconds": report.wall.as_secs_f64(),
        })
    );
    // false positives break the soundness invariant and fail the run
    Ok(report.total_false_positives() == 0)
}

fn cmd_check_closed_forms(trials: u64, seed: u64) -> bool {
    let report = run_closed_form_check(trials, seed);
    println!(
        "{}",
        json!({
            "command": "check-closed-forms",
            "trials": report.trials,
            "checked": report.checked,
            "skipped_degenerate": report.skipped_degenerate,
            "failures": report.failures,
            "first_failure": report.first_failure,
            "pass": report.passed(),
        })
    );
    report.passed()
}

fn cmd_probe(n: &[usize], trials: u64, seed: u64) -> Result<()> {
    let report = complexity_probe(n, trials, seed)?;
    println!(
        "{}",
        json!({
            "command": "probe-complexity",
            "slope": report.slope,
            "rows": report.rows.iter().map(|r| json!({
                "n": r.n,
                "trials": r.trials,
                "mean_column_evals": r.mean_column_evals,
                "mean_constrain_calls": r.mean_constrain_calls,
                "max_columns_per_test": r.max_columns_per_test,
            })).collect::<Vec<_>>(),
        })
    );
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let code = match &cli.cmd {
        Cmd::Solve {
            input,
            method,
            d3_exclusive,
            no_fabrication,
        } => {
            if cmd_solve(input, method, *d3_exclusive, *no_fabrication)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Gen {
            n,
            seed,
            range_bound,
            target,
            out,
        } => {
            cmd_gen(*n, *seed, range_bound.as_deref(), target.as_deref(), out)?;
            ExitCode::SUCCESS
        }
        Cmd::Reduce { cnf, out } => {
            cmd_reduce(cnf, out)?;
            ExitCode::SUCCESS
        }
        Cmd::Experiment {
            n_min,
            n_max,
            trials,
            seed,
            method,
            oracle,
            permutations_per_trial,
            d3_exclusive,
            out,
            counterexamples,
        } => {
            let sound = cmd_experiment(
                *n_min,
                *n_max,
                *trials,
                *seed,
                method,
                oracle,
                permutations_per_trial,
                *d3_exclusive,
                out,
                counterexamples.as_deref(),
            )?;
            if sound {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::CheckClosedForms { trials, seed } => {
            if cmd_check_closed_forms(*trials, *seed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::ProbeComplexity { n, trials, seed } => {
            cmd_probe(n, *trials, *seed)?;
            ExitCode::SUCCESS
        }
    };
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
