// Copyright contributors to the ftqc-bench project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `ftqc` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand};
use ftqc_core::bench::{
    compare, gen_dj, gen_graphstate, gen_qft, gen_qftentangled, gen_qpe, gen_random, qpe_exact_phase,
    strip_terminal_measurements, CompareError, ComparisonRecord, InvalidSize, ORACLE_TOLERANCE,
};
use ftqc_core::circuit::Circuit;
use ftqc_core::estimator::{
    count_logical, estimate_physical, expected_fidelity, frontier, EstimateError, EstimatorParams, LogicalCounts,
    PhysicalEstimate,
};
use ftqc_core::passes::{parse_pipeline, run_pipeline, PassId};
use ftqc_core::sim::{equivalent_up_to_global_phase, MAX_EQUIV_QUBITS};
use serde::Serialize;

use crate::params::{load_params, ParamOverrides, ParamsError};
use crate::qasm::{emit_qasm, parse_qasm_with_warnings, ParseDiagnostic};
use crate::report::{render_frontier, render_report, Format, FrontierRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

/// Default degree bound and seed of `builtin:graphstate`.
const GRAPHSTATE_DEGREE: usize = 3;
const GRAPHSTATE_SEED: u64 = 0;

#[derive(Debug, Parser)]
#[command(name = "ftqc", version, about = "Circuit optimization passes and fault-tolerant resource estimates")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Logical counts and physical estimate of one circuit.
    Estimate {
        /// QASM file or `builtin:<name>:<n>[:...]`.
        circuit: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Runs a pass pipeline and prints the optimized QASM.
    Optimize {
        circuit: String,
        /// Comma-separated pass names.
        #[arg(long)]
        passes: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Before/after report for every circuit and pipeline.
    Compare {
        /// Comma-separated QASM files or builtins.
        #[arg(long, value_delimiter = ',', required = true)]
        circuits: Vec<String>,
        /// One pipeline per occurrence; `each` expands to every single pass.
        #[arg(long, required = true)]
        passes: Vec<String>,
        #[arg(long, default_value = "md")]
        format: Format,
        /// Runtime stretches; one record per stretch.
        #[arg(long, value_delimiter = ',')]
        stretches: Option<Vec<f64>>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Physical qubits and runtime across runtime stretches.
    Frontier {
        circuit: String,
        #[arg(long, value_delimiter = ',', required = true)]
        stretches: Vec<f64>,
        #[arg(long, default_value = "md")]
        format: Format,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Success probability of a circuit of uniform-fidelity gates.
    Fidelity {
        #[arg(long)]
        gates: u64,
        #[arg(long)]
        gate_fidelity: f64,
    },
}

#[derive(Debug, clap::Args)]
struct ParamArgs {
    /// EstimatorParams JSON file.
    #[arg(long = "params", value_name = "FILE")]
    file: Option<PathBuf>,
    #[command(flatten)]
    overrides: ParamOverrides,
}

impl ParamArgs {
    fn load(&self) -> Result<EstimatorParams, CliError> {
        load_params(self.file.as_deref(), &self.overrides).map_err(|e| match e {
            ParamsError::Invalid(inner) => CliError::from(inner),
            other => CliError::Usage(other.to_string()),
        })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}", render_diagnostics(.source_name, .diagnostics))]
    Parse { source_name: String, diagnostics: Vec<ParseDiagnostic> },
    #[error("{0}")]
    Semantic(String),
    #[error("{0}")]
    Infeasible(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Semantic(_) => EXIT_SEMANTIC,
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
        }
    }
}

impl From<EstimateError> for CliError {
    fn from(e: EstimateError) -> CliError {
        match e {
            EstimateError::Infeasible => CliError::Infeasible(e.to_string()),
            EstimateError::UnsupportedGate(_) => CliError::Semantic(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CompareError> for CliError {
    fn from(e: CompareError) -> CliError {
        match e {
            CompareError::SemanticViolation { .. } => CliError::Semantic(e.to_string()),
            CompareError::Estimate(inner) => inner.into(),
        }
    }
}

impl From<InvalidSize> for CliError {
    fn from(e: InvalidSize) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn render_diagnostics(source_name: &str, diagnostics: &[ParseDiagnostic]) -> String {
    diagnostics.iter().map(|d| format!("{source_name}:{d}")).collect::<Vec<_>>().join("\n")
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Usage(format!("cannot write output: {e}"))
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Estimate { circuit, params, json } => {
            let params = params.load()?;
            let circuit = load_circuit(&circuit, err)?;
            let counts = count_logical(&run_pipeline(&circuit, &[]))?;
            let estimate = estimate_physical(&counts, &params)?;
            let text = if json { estimate_json(&counts, &estimate) } else { estimate_text(&counts, &estimate) };
            out.write_all(text.as_bytes()).map_err(io_error)
        }
        Command::Optimize { circuit, passes, output } => {
            let passes = parse_pipeline(&passes).map_err(|e| CliError::Usage(e.to_string()))?;
            let input = load_circuit(&circuit, err)?;
            let optimized = run_pipeline(&input, &passes);
            check_equivalent(&input, &optimized, &passes, err)?;
            let text = emit_qasm(&optimized);
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
                None => out.write_all(text.as_bytes()).map_err(io_error),
            }
        }
        Command::Compare { circuits, passes, format, stretches, params } => {
            let params = params.load()?;
            let circuits = circuits.iter().map(|c| load_circuit(c, err)).collect::<Result<Vec<_>, _>>()?;
            let mut pipelines = Vec::new();
            for arg in &passes {
                pipelines.extend(expand_pipeline(arg)?);
            }
            let stretches = stretches.unwrap_or_else(|| vec![params.runtime_stretch]);
            for &s in &stretches {
                EstimatorParams { runtime_stretch: s, ..params }.validate()?;
            }
            let records = run_comparisons(&circuits, &pipelines, &stretches, &params)?;
            out.write_all(render_report(&records, format).as_bytes()).map_err(io_error)
        }
        Command::Frontier { circuit, stretches, format, params } => {
            let params = params.load()?;
            let circuit = load_circuit(&circuit, err)?;
            let counts = count_logical(&run_pipeline(&circuit, &[]))?;
            let points = frontier(&counts, &params, &stretches)?;
            let rows: Vec<FrontierRow> = stretches.iter().zip(&points).map(|(&s, e)| FrontierRow::new(s, e)).collect();
            out.write_all(render_frontier(&rows, format).as_bytes()).map_err(io_error)
        }
        Command::Fidelity { gates, gate_fidelity } => {
            if !(gate_fidelity > 0.0 && gate_fidelity <= 1.0) {
                return Err(CliError::Usage(format!("--gate-fidelity must lie in (0, 1], got {gate_fidelity}")));
            }
            writeln!(out, "{}", expected_fidelity(gates, gate_fidelity)).map_err(io_error)
        }
    }
}

/// A pipeline argument: comma-separated pass names, `none`, or `each` for one
/// single-pass pipeline per pass.
fn expand_pipeline(arg: &str) -> Result<Vec<Vec<PassId>>, CliError> {
    match arg.trim() {
        "each" => Ok(PassId::ALL.iter().map(|&p| vec![p]).collect()),
        "none" => Ok(vec![Vec::new()]),
        list => Ok(vec![parse_pipeline(list).map_err(|e| CliError::Usage(e.to_string()))?]),
    }
}

/// Runs every (circuit, pipeline, stretch) comparison on a small worker
/// pool. The first failure in job order wins.
fn run_comparisons(
    circuits: &[Circuit],
    pipelines: &[Vec<PassId>],
    stretches: &[f64],
    params: &EstimatorParams,
) -> Result<Vec<ComparisonRecord>, CliError> {
    let jobs: Vec<(&Circuit, &[PassId], f64)> = circuits
        .iter()
        .flat_map(|c| pipelines.iter().flat_map(move |p| stretches.iter().map(move |&s| (c, p.as_slice(), s))))
        .collect();
    let results: Mutex<Vec<Option<Result<ComparisonRecord, CompareError>>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len()).max(1);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(circuit, passes, stretch)) = jobs.get(i) else { break };
                let r = compare(circuit, passes, &EstimatorParams { runtime_stretch: stretch, ..*params });
                results.lock().expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .expect("workers have finished")
        .into_iter()
        .map(|r| r.expect("every job ran").map_err(CliError::from))
        .collect()
}

fn check_equivalent(input: &Circuit, output: &Circuit, passes: &[PassId], err: &mut dyn Write) -> Result<(), CliError> {
    if input.num_qubits() > MAX_EQUIV_QUBITS {
        let _ = writeln!(err, "note: not verified, more than {MAX_EQUIV_QUBITS} qubits");
        return Ok(());
    }
    let (Some(a), Some(b)) = (strip_terminal_measurements(input), strip_terminal_measurements(output)) else {
        let _ = writeln!(err, "note: not verified, mid-circuit measurement");
        return Ok(());
    };
    let same = equivalent_up_to_global_phase(&a, &b, ORACLE_TOLERANCE).map_err(|e| CliError::Semantic(e.to_string()))?;
    if same {
        Ok(())
    } else {
        let pipeline = ftqc_core::passes::pipeline_label(passes);
        Err(CompareError::SemanticViolation { circuit: input.name().to_string(), pipeline }.into())
    }
}

/// Reads a QASM file (named after its stem) or builds a builtin circuit.
pub fn load_circuit(arg: &str, err: &mut dyn Write) -> Result<Circuit, CliError> {
    if let Some(rest) = arg.strip_prefix("builtin:") {
        return builtin(rest);
    }
    let path = Path::new(arg);
    let source = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")))?;
    let name = path.file_stem().map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
    match parse_qasm_with_warnings(&source, &name) {
        Ok(parsed) => {
            for w in &parsed.warnings {
                let _ = writeln!(err, "{arg}:{w}");
            }
            Ok(parsed.circuit)
        }
        Err(diagnostics) => Err(CliError::Parse { source_name: arg.to_string(), diagnostics }),
    }
}

/// `qft:N`, `qftentangled:N`, `dj:N`, `qpeexact:N` (or `qpe:N`),
/// `graphstate:N[:DEGREE[:SEED]]`, `random:N:DEPTH:SEED`.
pub fn builtin(arg: &str) -> Result<Circuit, CliError> {
    let usage = || CliError::Usage(format!("unknown builtin circuit `builtin:{arg}`"));
    let parts: Vec<&str> = arg.split(':').collect();
    let num = |i: usize| -> Result<u64, CliError> {
        parts.get(i).ok_or_else(usage)?.parse::<u64>().map_err(|_| usage())
    };
    let n = num(1)? as usize;
    let circuit = match (parts[0], parts.len()) {
        ("qft", 2) => gen_qft(n)?,
        ("qftentangled", 2) => gen_qftentangled(n)?,
        ("dj", 2) => gen_dj(n)?,
        ("qpeexact" | "qpe", 2) => gen_qpe(n, qpe_exact_phase(n))?,
        ("graphstate", 2) => gen_graphstate(n, GRAPHSTATE_DEGREE, GRAPHSTATE_SEED)?,
        ("graphstate", 3) => gen_graphstate(n, num(2)? as usize, GRAPHSTATE_SEED)?,
        ("graphstate", 4) => gen_graphstate(n, num(2)? as usize, num(3)?)?,
        ("random", 4) => gen_random(n, num(2)? as usize, num(3)?)?,
        _ => return Err(usage()),
    };
    Ok(circuit)
}

fn estimate_text(counts: &LogicalCounts, e: &PhysicalEstimate) -> String {
    let rows: [(&str, u64); 16] = [
        ("logical_qubits", counts.logical_qubits),
        ("t_gates", counts.t_gates),
        ("rotation_gates", counts.rotation_gates),
        ("rotation_layers", counts.rotation_layers),
        ("ccz_gates", counts.ccz_gates),
        ("ccix_gates", counts.ccix_gates),
        ("measurements", counts.measurements),
        ("code_distance", u64::from(e.code_distance)),
        ("logical_depth", e.logical_depth),
        ("layout_qubits", e.layout_qubits),
        ("algorithm_physical_qubits", e.algorithm_physical_qubits),
        ("factory_count", e.factory_count),
        ("factory_physical_qubits", e.factory_physical_qubits),
        ("total_physical_qubits", e.total_physical_qubits),
        ("runtime_ns", e.runtime_ns),
        ("t_states_total", e.t_states_total),
    ];
    rows.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn estimate_json(counts: &LogicalCounts, estimate: &PhysicalEstimate) -> String {
    #[derive(Serialize)]
    struct Output<'a> {
        counts: &'a LogicalCounts,
        estimate: &'a PhysicalEstimate,
    }
    let mut text = serde_json::to_string_pretty(&Output { counts, estimate }).expect("estimates serialize to JSON");
    text.push('\n');
    text
}
