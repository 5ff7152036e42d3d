//! Command implementations. Each returns the stdout payload plus an exit
//! code: 0 success, 1 domain failure (reducibility, cross-validation
//! disagreement), 2 input failure (parse errors, bad arguments).

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use maxplus::sample::{random_irreducible_finite_diagonal, EntryDistribution};
use maxplus::simulation::{cross_validate_capped, sufficient_horizon};
use maxplus::spectral::{is_irreducible, spectral_analysis_capped, to_digraph};
use maxplus::switched::{eigenvalue_relation_probe, switched_analysis_capped};
use maxplus::{Matrix, MatrixMap, Rational, Scalar, Schedule, SwitchedSpectral, Vector};

use crate::format::{self, ParseError};

/// Failure category, mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    /// exit 2: malformed file
    Parse(ParseError),
    /// exit 2: filesystem trouble
    Io { path: String, detail: String },
    /// exit 2: inconsistent or invalid arguments
    Input(String),
    /// exit 1: the analysis itself failed
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } | CliError::Input(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Io { path, detail } => write!(f, "{path}: {detail}"),
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

/// Library errors split by whether the input or the mathematics refused.
fn lift(e: maxplus::Error) -> CliError {
    use maxplus::Error::*;
    match e {
        NotIrreducible | TransientBoundExceeded { .. } | TheoremViolation(_)
        | NoEigenvectorColumn => CliError::Domain(e.to_string()),
        DimensionMismatch { .. } | NullScalar | UnknownMatrix(_) | ZeroInitialState
        | InvalidSchedule(_) => CliError::Input(e.to_string()),
    }
}

pub type CmdResult = Result<(String, i32), CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

fn load_matrix(path: &Path) -> Result<(String, Matrix), CliError> {
    let text = read(path)?;
    let matrix = format::parse_matrix_text(&path.display().to_string(), &text)?;
    Ok((format::matrix_name(path), matrix))
}

fn load_matrices(paths: &[PathBuf]) -> Result<MatrixMap, CliError> {
    let mut map = HashMap::new();
    for path in paths {
        let (name, matrix) = load_matrix(path)?;
        if map.insert(name.clone(), matrix).is_some() {
            return Err(CliError::Input(format!(
                "duplicate matrix name `{name}` (names come from file stems)"
            )));
        }
    }
    Ok(map)
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn rational_approx(r: &Rational) -> f64 {
    Scalar::Finite(r.clone()).to_f64()
}

/// 1-based closed node cycle, e.g. [0, 2, 1] -> "1 -> 3 -> 2 -> 1".
fn circuit_text(circuit: &[usize]) -> String {
    let mut nodes: Vec<String> = circuit.iter().map(|v| (v + 1).to_string()).collect();
    if let Some(first) = nodes.first().cloned() {
        nodes.push(first);
    }
    nodes.join(" -> ")
}

fn circuit_json(circuit: &[usize]) -> Value {
    let mut nodes: Vec<usize> = circuit.iter().map(|v| v + 1).collect();
    if let Some(&first) = nodes.first() {
        nodes.push(first);
    }
    json!(nodes)
}

fn vector_json(v: &Vector) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(|s| Value::String(s.to_string())).collect()))
            .collect(),
    )
}

pub fn cmd_eig(path: &Path, json: bool, max_transient: usize) -> CmdResult {
    let (name, matrix) = load_matrix(path)?;
    let s = spectral_analysis_capped(&matrix, max_transient).map_err(lift)?;
    if json {
        let payload = json!({
            "matrix": name,
            "n": matrix.dim(),
            "lambda": rational_str(&s.lambda),
            "critical_circuit": circuit_json(&s.critical_circuit),
            "eigenvector": vector_json(&s.eigenvector),
            "period": s.period,
            "transient": s.transient,
        });
        return Ok((format!("{payload}\n"), 0));
    }
    let mut out = String::new();
    out.push_str(&format!("matrix {name}: n = {}\n", matrix.dim()));
    out.push_str(&format!(
        "lambda = {} (~{:.6})\n",
        rational_str(&s.lambda),
        rational_approx(&s.lambda)
    ));
    out.push_str(&format!(
        "critical circuit: {} (mean weight {})\n",
        circuit_text(&s.critical_circuit),
        rational_str(&s.lambda)
    ));
    out.push_str(&format!("eigenvector: {}\n", s.eigenvector));
    out.push_str(&format!("period d = {}\n", s.period));
    out.push_str(&format!("transient k0 = {}\n", s.transient));
    Ok((out, 0))
}

pub fn cmd_irreducible(path: &Path, json: bool) -> CmdResult {
    let (name, matrix) = load_matrix(path)?;
    let irreducible = is_irreducible(&matrix);
    let components = to_digraph(&matrix).strongly_connected_components();
    if json {
        let comps: Vec<Value> = components
            .iter()
            .map(|c| json!(c.iter().map(|v| v + 1).collect::<Vec<_>>()))
            .collect();
        let payload = json!({
            "matrix": name,
            "n": matrix.dim(),
            "irreducible": irreducible,
            "components": comps,
        });
        return Ok((format!("{payload}\n"), 0));
    }
    let mut out = format!("irreducible: {irreducible}\n");
    if !irreducible {
        let rendered: Vec<String> = components
            .iter()
            .map(|c| {
                let nodes: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
                format!("{{{}}}", nodes.join(","))
            })
            .collect();
        out.push_str(&format!("components: {}\n", rendered.join(" ")));
    }
    Ok((out, 0))
}

fn switched_report(s: &SwitchedSpectral, json: bool) -> String {
    if json {
        let payload = json!({
            "cycle_length": s.cycle_length,
            "composed": matrix_json(&s.composed),
            "lambda_per_step": rational_str(&s.lambda_per_step),
            "period": s.period,
            "transient": s.transient,
            "sufficient_condition_held": s.sufficient_condition_held,
            "composed_lambda": rational_str(&s.composed_spectral.lambda),
            "critical_circuit": circuit_json(&s.composed_spectral.critical_circuit),
        });
        return format!("{payload}\n");
    }
    let mut out = String::new();
    out.push_str(&format!("cycle length K = {}\n", s.cycle_length));
    out.push_str("composed matrix:\n");
    out.push_str(&format!("{}\n", s.composed));
    out.push_str(&format!(
        "lambda_per_step = {} (~{:.6})\n",
        rational_str(&s.lambda_per_step),
        rational_approx(&s.lambda_per_step)
    ));
    out.push_str(&format!("period d = {} (original step index)\n", s.period));
    out.push_str(&format!(
        "transient k0 = {} (original step index)\n",
        s.transient
    ));
    out.push_str(&format!(
        "sufficient condition (all factors irreducible with finite diagonals): {}\n",
        if s.sufficient_condition_held {
            "held"
        } else {
            "not held"
        }
    ));
    out
}

pub fn cmd_switched(
    schedule_path: &Path,
    matrix_paths: &[PathBuf],
    json: bool,
    max_transient: usize,
) -> CmdResult {
    let schedule = load_schedule(schedule_path)?;
    let matrices = load_matrices(matrix_paths)?;
    let s = switched_analysis_capped(&schedule, &matrices, max_transient).map_err(lift)?;
    Ok((switched_report(&s, json), 0))
}

fn load_schedule(path: &Path) -> Result<Schedule, CliError> {
    let text = read(path)?;
    Ok(format::parse_schedule_text(
        &path.display().to_string(),
        &text,
    )?)
}

fn parse_x0(raw: &str, n: usize) -> Result<Vector, CliError> {
    let tokens: Vec<&str> = raw.split(',').map(str::trim).collect();
    if tokens.len() != n {
        return Err(CliError::Input(format!(
            "--x0 must hold {n} comma-separated entries, found {}",
            tokens.len()
        )));
    }
    let mut entries = Vec::with_capacity(n);
    for tok in tokens {
        let scalar = tok
            .parse::<Scalar>()
            .map_err(|e| CliError::Input(format!("--x0: {e}")))?;
        entries.push(scalar);
    }
    Ok(Vector::new(entries))
}

fn write_csv(path: &Path, trace: &maxplus::Trace) -> Result<(), CliError> {
    let n = trace.states[0].dim();
    let mut out = String::from("k,matrix");
    for i in 1..=n {
        out.push_str(&format!(",x{i}"));
    }
    out.push('\n');
    let step_names = trace.schedule.step_names();
    for (k, state) in trace.states.iter().enumerate() {
        let name = trace
            .applied
            .get(k)
            .map(String::as_str)
            .unwrap_or(step_names[k % step_names.len()]);
        out.push_str(&format!("{k},{name}"));
        for entry in state.iter() {
            out.push_str(&format!(",{entry}"));
        }
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_simulate(
    schedule_path: &Path,
    matrix_paths: &[PathBuf],
    horizon: Option<usize>,
    x0: Option<&str>,
    csv: Option<&Path>,
    json: bool,
    max_transient: usize,
) -> CmdResult {
    let schedule = load_schedule(schedule_path)?;
    let matrices = load_matrices(matrix_paths)?;

    // the spectral pass both validates the schedule and sizes the default
    // horizon (transient + three periods, which guarantees detection)
    let spectral = switched_analysis_capped(&schedule, &matrices, max_transient).map_err(lift)?;
    let n = spectral.composed.dim();
    let horizon = horizon.unwrap_or_else(|| sufficient_horizon(&spectral).max(10));
    let x0 = match x0 {
        Some(raw) => parse_x0(raw, n)?,
        None => Vector::zeros(n),
    };

    let cv = cross_validate_capped(&schedule, &matrices, &x0, horizon, max_transient)
        .map_err(lift)?;
    if let Some(csv_path) = csv {
        write_csv(csv_path, &cv.trace)?;
    }

    let payload = if json {
        let empirical = match &cv.empirical {
            Some(e) => json!({
                "d": e.d,
                "lambda_per_step": rational_str(&e.lambda_per_step),
                "k0": e.k0,
            }),
            None => Value::Null,
        };
        let doc = json!({
            "horizon": horizon,
            "x0": vector_json(&x0),
            "spectral": {
                "cycle_length": cv.spectral.cycle_length,
                "lambda_per_step": rational_str(&cv.spectral.lambda_per_step),
                "period": cv.spectral.period,
                "transient": cv.spectral.transient,
            },
            "empirical": empirical,
            "agree": cv.agree,
        });
        format!("{doc}\n")
    } else {
        let mut out = String::new();
        out.push_str(&format!("horizon = {horizon}, x0 = {x0}\n"));
        out.push_str(&format!(
            "spectral : lambda_per_step = {}, period = {}, transient = {}\n",
            rational_str(&cv.spectral.lambda_per_step),
            cv.spectral.period,
            cv.spectral.transient
        ));
        match &cv.empirical {
            Some(e) => out.push_str(&format!(
                "empirical: lambda_per_step = {}, period = {}, k0 = {}\n",
                rational_str(&e.lambda_per_step),
                e.d,
                e.k0
            )),
            None => out.push_str(&format!(
                "empirical: no periodicity detected within horizon {horizon}; raise --horizon\n"
            )),
        }
        out.push_str(&format!("agree: {}\n", cv.agree));
        out
    };
    Ok((payload, if cv.agree { 0 } else { 1 }))
}

pub fn cmd_probe_files(path_a: &Path, path_b: &Path, json: bool) -> CmdResult {
    let (name_a, a) = load_matrix(path_a)?;
    let (name_b, b) = load_matrix(path_b)?;
    let report = eigenvalue_relation_probe(&a, &b).map_err(lift)?;
    if json {
        let payload = json!({
            "matrix_a": name_a,
            "matrix_b": name_b,
            "lambda_a": rational_str(&report.lambda_a),
            "lambda_b": rational_str(&report.lambda_b),
            "lambda_ab": rational_str(&report.lambda_ab),
            "sum": rational_str(&report.sum()),
            "comparison": report.comparison_symbol(),
        });
        return Ok((format!("{payload}\n"), 0));
    }
    let mut out = String::new();
    out.push_str(&format!("lambda({name_a}) = {}\n", rational_str(&report.lambda_a)));
    out.push_str(&format!("lambda({name_b}) = {}\n", rational_str(&report.lambda_b)));
    out.push_str(&format!("lambda(product) = {}\n", rational_str(&report.lambda_ab)));
    out.push_str(&format!(
        "lambda({name_a}) + lambda({name_b}) = {}\n",
        rational_str(&report.sum())
    ));
    out.push_str(&format!(
        "comparison: lambda(product) {} lambda({name_a}) + lambda({name_b})\n",
        report.comparison_symbol()
    ));
    Ok((out, 0))
}

pub fn cmd_probe_random(size: usize, count: usize, seed: u64, json: bool) -> CmdResult {
    if size == 0 {
        return Err(CliError::Input("--size must be >= 1".to_string()));
    }
    if count == 0 {
        return Err(CliError::Input("--count must be >= 1".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = EntryDistribution::default();
    let (mut greater, mut equal, mut less, mut skipped) = (0usize, 0usize, 0usize, 0usize);
    for _ in 0..count {
        // irreducible factors with finite diagonals guarantee an irreducible
        // product, so skips stay at zero; the guard still counts any instance
        // that slips past the preconditions
        let a = random_irreducible_finite_diagonal(&mut rng, size, dist);
        let b = random_irreducible_finite_diagonal(&mut rng, size, dist);
        match eigenvalue_relation_probe(&a, &b) {
            Ok(report) => match report.comparison {
                std::cmp::Ordering::Greater => greater += 1,
                std::cmp::Ordering::Equal => equal += 1,
                std::cmp::Ordering::Less => less += 1,
            },
            Err(_) => skipped += 1,
        }
    }
    if json {
        let payload = json!({
            "size": size,
            "count": count,
            "seed": seed,
            "greater": greater,
            "equal": equal,
            "less": less,
            "skipped": skipped,
        });
        return Ok((format!("{payload}\n"), 0));
    }
    let mut out = String::new();
    out.push_str(&format!("random probe: size {size}, count {count}, seed {seed}\n"));
    out.push_str(&format!("lambda(AB) > lambda(A)+lambda(B): {greater}\n"));
    out.push_str(&format!("lambda(AB) = lambda(A)+lambda(B): {equal}\n"));
    out.push_str(&format!("lambda(AB) < lambda(A)+lambda(B): {less}\n"));
    out.push_str(&format!("skipped (reducible): {skipped}\n"));
    Ok((out, 0))
}
