//! Instance ingestion and synthesis: the random-set generator used by the
//! accuracy experiments, the instance file format, DIMACS CNF ingestion, and
//! the 3-SAT digit reduction.

use crate::numerics::Int;
use crate::solver::Instance;
use num_bigint::RandBigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Parameters of the random-set generator: n values drawn uniformly from
/// [-range_bound, range_bound], deterministic per seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub n: usize,
    pub range_bound: Int,
    pub target: Int,
    pub seed: u64,
}

impl GeneratorSpec {
    /// Experiment defaults: range bound 2n^2, target 0.
    pub fn new(n: usize, seed: u64) -> Self {
        GeneratorSpec {
            n,
            range_bound: Int::from(2 * (n as u64) * (n as u64)),
            target: Int::zero(),
            seed,
        }
    }
}

/// Draws a random instance. Same spec, same instance.
pub fn random_instance(spec: &GeneratorSpec) -> Instance {
    assert!(spec.n >= 1, "generator requires n >= 1");
    assert!(
        spec.range_bound > Int::zero(),
        "generator requires a positive range bound"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let low = -spec.range_bound.clone();
    let high = spec.range_bound.clone() + 1;
    let elements = (0..spec.n)
        .map(|_| rng.gen_bigint_range(&low, &high))
        .collect();
    Instance::new(elements, spec.target.clone())
}

/// Malformed input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Structural JSON problem, with source position.
    Json { line: usize, column: usize, detail: String },
    /// A field parsed structurally but held an invalid value.
    Value { field: String, detail: String },
    /// DIMACS problem, with source line.
    Cnf { line: usize, detail: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Json { line, column, detail } => {
                write!(f, "instance document, line {line} column {column}: {detail}")
            }
            ParseError::Value { field, detail } => write!(f, "field {field}: {detail}"),
            ParseError::Cnf { line, detail } => write!(f, "cnf line {line}: {detail}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// On-disk instance document. Values are decimal strings so magnitudes are
/// never capped by a fixed-width integer type.
#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    elements: Vec<String>,
    target: String,
}

fn parse_decimal(field: String, text: &str) -> Result<Int, ParseError> {
    Int::from_str(text.trim()).map_err(|e| ParseError::Value {
        field,
        detail: format!("{e} in {text:?}"),
    })
}

/// Parses the UTF-8 instance document.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        detail: e.to_string(),
    })?;
    let elements = doc
        .elements
        .iter()
        .enumerate()
        .map(|(i, s)| parse_decimal(format!("elements[{i}]"), s))
        .collect::<Result<Vec<_>, _>>()?;
    let target = parse_decimal("target".to_string(), &doc.target)?;
    Ok(Instance::new(elements, target))
}

/// Renders an instance document; `parse_instance` of the result is identity.
pub fn write_instance(inst: &Instance) -> String {
    let doc = InstanceDoc {
        elements: inst.elements.iter().map(|v| v.to_string()).collect(),
        target: inst.target.to_string(),
    };
    serde_json::to_string(&doc).expect("plain strings always serialize")
}

/// Invalid formula construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    ClauseArity { clause: usize, len: usize },
    ZeroLiteral { clause: usize },
    LiteralOutOfRange { clause: usize, literal: i64 },
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::ClauseArity { clause, len } => {
                write!(f, "clause {clause} has {len} literals, need exactly 3")
            }
            ReductionError::ZeroLiteral { clause } => {
                write!(f, "clause {clause} contains literal 0")
            }
            ReductionError::LiteralOutOfRange { clause, literal } => {
                write!(f, "clause {clause} literal {literal} exceeds the variable count")
            }
        }
    }
}

impl std::error::Error for ReductionError {}

/// A 3-CNF formula: positive literal i is variable i (1-based), negative is
/// its negation. Duplicate literals within a clause are permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i64; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i64>>) -> Result<Self, ReductionError> {
        let mut fixed = Vec::with_capacity(clauses.len());
        for (ci, clause) in clauses.into_iter().enumerate() {
            if clause.len() != 3 {
                return Err(ReductionError::ClauseArity {
                    clause: ci,
                    len: clause.len(),
                });
            }
            for &lit in &clause {
                if lit == 0 {
                    return Err(ReductionError::ZeroLiteral { clause: ci });
                }
                if lit.unsigned_abs() as usize > num_vars {
                    return Err(ReductionError::LiteralOutOfRange {
                        clause: ci,
                        literal: lit,
                    });
                }
            }
            fixed.push([clause[0], clause[1], clause[2]]);
        }
        Ok(CnfFormula {
            num_vars,
            clauses: fixed,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i64; 3]] {
        &self.clauses
    }

    /// Evaluates the formula under an assignment given as a bitmask
    /// (bit i-1 set means variable i true).
    pub fn eval(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let on = assignment >> (lit.unsigned_abs() - 1) & 1 == 1;
                if lit > 0 {
                    on
                } else {
                    !on
                }
            })
        })
    }

    /// Brute-force satisfiability over all 2^v assignments.
    pub fn satisfiable(&self) -> bool {
        assert!(self.num_vars < 63, "brute-force check limited to small formulas");
        (0u64..1 << self.num_vars).any(|a| self.eval(a))
    }
}

/// Parses a DIMACS CNF document, requiring exactly three literals per clause.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut current_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(ParseError::Cnf {
                    line: lineno,
                    detail: "duplicate problem line".to_string(),
                });
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["cnf", v, c] => v.parse::<usize>().ok().zip(c.parse::<usize>().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or(ParseError::Cnf {
                line: lineno,
                detail: format!("malformed problem line {line:?}"),
            })?);
            continue;
        }
        if header.is_none() {
            return Err(ParseError::Cnf {
                line: lineno,
                detail: "clause data before the problem line".to_string(),
            });
        }
        for tok in line.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| ParseError::Cnf {
                line: lineno,
                detail: format!("invalid literal {tok:?}"),
            })?;
            if lit == 0 {
                if current.len() != 3 {
                    return Err(ParseError::Cnf {
                        line: lineno,
                        detail: format!("clause has {} literals, need exactly 3", current.len()),
                    });
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
                current_line = lineno;
            }
        }
    }

    if !current.is_empty() {
        return Err(ParseError::Cnf {
            line: current_line,
            detail: "unterminated clause at end of input".to_string(),
        });
    }
    let (num_vars, declared) = header.ok_or(ParseError::Cnf {
        line: 1,
        detail: "missing problem line".to_string(),
    })?;
    if clauses.len() != declared {
        return Err(ParseError::Cnf {
            line: 1,
            detail: format!(
                "problem line declares {declared} clauses, found {}",
                clauses.len()
            ),
        });
    }
    CnfFormula::new(num_vars, clauses).map_err(|e| ParseError::Cnf {
        line: 1,
        detail: e.to_string(),
    })
}

fn pow10(exp: usize) -> Int {
    num_traits::pow(Int::from(10), exp)
}

/// Base-10 digit reduction from 3-SAT to subset sum.
///
/// One digit per clause (low positions) and per variable (high positions).
/// Items, in order: for each variable a positive-literal item and a
/// negative-literal item (1 in the variable digit, 1 in each clause digit
/// where that literal occurs), then per clause two slack items worth 1 and 2
/// in that clause digit. The target has 1 in every variable digit and 4 in
/// every clause digit. No digit column can exceed 3 + 3 < 10, so sums never
/// carry, and the instance is satisfiable exactly when the formula is.
///
/// The empty formula reduces to the empty instance with target 0, whose
/// vacuous truth is not representable as a nonempty subset; callers treat
/// that degenerate case separately.
pub fn reduce_3sat(f: &CnfFormula) -> Instance {
    let k = f.clauses().len();
    let v = f.num_vars();
    let mut elements = Vec::with_capacity(2 * v + 2 * k);

    for var in 1..=v {
        for sign in [1i64, -1] {
            let lit = sign * var as i64;
            let mut item = pow10(k + var - 1);
            for (j, clause) in f.clauses().iter().enumerate() {
                if clause.contains(&lit) {
                    item += pow10(j);
                }
            }
            elements.push(item);
        }
    }
    for j in 0..k {
        elements.push(pow10(j));
        elements.push(Int::from(2) * pow10(j));
    }

    let mut target = Int::zero();
    for var in 1..=v {
        target += pow10(k + var - 1);
    }
    for j in 0..k {
        target += Int::from(4) * pow10(j);
    }
    Instance::new(elements, target)
}
