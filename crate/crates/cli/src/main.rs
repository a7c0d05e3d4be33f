//! `intval`: exact integer-valued polynomial computations from the shell.
//! Each run prints one JSON report on stdout.

mod commands;
mod density;
mod examples;
mod input;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "intval", version, about = "Integer-valued polynomials on orders, exactly")]
pub struct Cli {
    /// Pretty-print the report.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Order: built-in name (integers, quadratic(m), quadratic_half(m),
    /// lipschitz, hurwitz, matrix(k), triangular(k)) or order file.
    #[arg(long)]
    pub order: Option<String>,
    /// Polynomial coefficients, ascending degree, as JSON or a JSON file.
    #[arg(long)]
    pub poly: Option<String>,
    /// Square matrix as JSON rows or a JSON file.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Residue modulus for exhaustive verification.
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Coordinate bound for sampled elements.
    #[arg(long, default_value_t = 20)]
    pub bound: i64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal polynomial of a matrix.
    Minpoly(Common),
    /// Characteristic polynomial of a matrix.
    Charpoly(Common),
    /// Whether a matrix is integral over Z.
    IntegralCheck(Common),
    /// Root set of a matrix as a squarefree polynomial.
    Spectrum(Common),
    /// Decide f(A) ⊆ A.
    MemberInt(Common),
    /// Test integrality of f on listed elements, or on a seeded sample.
    MemberIntval {
        #[command(flatten)]
        common: Common,
        /// Element coordinates (one vector or an array of vectors).
        #[arg(long)]
        elements: Option<String>,
    },
    /// Membership of f in Z[X] + μ(X)Q[X].
    Pullback {
        #[command(flatten)]
        common: Common,
        /// Monic integer polynomial μ.
        #[arg(long)]
        mu: String,
    },
    /// Build (or take) a monic certificate φ and verify φ(f) in the sampled pullbacks.
    Certificate {
        #[command(flatten)]
        common: Common,
        /// Verify this φ instead of building one.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Check pullback ⇒ Int ⇒ integral-valued on a sample.
    Chain(Common),
    /// Decompose n as a sum of three squares.
    ThreeSquares { n: u64 },
    /// Hurwitz element with the same minimal polynomial as an integral quaternion.
    HurwitzMatch {
        /// Quaternion coordinates [q0, q1, q2, q3] in the basis 1, i, j, k.
        quaternion: String,
    },
    /// Density experiments.
    Density {
        #[arg(value_enum)]
        check: DensityCheck,
        #[command(flatten)]
        common: Common,
        /// Degree of the companion family.
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Coefficient height of the companion family.
        #[arg(long, default_value_t = 2)]
        height: u64,
        /// Keep only certified irreducible characteristic polynomials.
        #[arg(long)]
        irreducible: bool,
        /// Upper limit for the three-squares scan.
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
    },
    /// End-to-end reproductions of the standard examples.
    Examples {
        #[arg(value_enum)]
        name: Example,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum DensityCheck {
    Triangular,
    Companion,
    Refute,
    Transfer,
    ThreeSquares,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Example {
    Zsqrt3,
    Hurwitz,
    Lipschitz,
    Triangular,
    Companion,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<intval_core::Error> for CliError {
    fn from(e: intval_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Result of a command: its JSON outcome and whether it reports a
/// negative membership or a violated property.
pub struct Outcome {
    pub inputs: Value,
    pub value: Value,
    pub negative: bool,
}

fn emit(report: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(report)
    } else {
        serde_json::to_string(report)
    };
    println!("{}", text.expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            let pretty = std::env::args().any(|a| a == "--pretty");
            emit(&json!({ "command": Value::Null, "error": e.kind().to_string() }), pretty);
            return ExitCode::from(2);
        }
    };
    let name = commands::name(&cli.command);
    let start = Instant::now();
    let result = commands::run(&cli.command);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(out) => {
            let report = json!({
                "command": name,
                "inputs": out.inputs,
                "outcome": out.value,
                "elapsed_ms": elapsed_ms,
            });
            emit(&report, cli.pretty);
            if out.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            emit(&json!({ "command": name, "error": msg, "elapsed_ms": elapsed_ms }), cli.pretty);
            ExitCode::from(2)
        }
    }
}
