//! `solvlie`: curvature and attached-subalgebra reports for solvable metric
//! Lie algebras.
//!
//! Exit codes: 0 success, 1 input error, 2 validation failure, 3 internal
//! consistency violation.

mod analyze;
mod failure;
mod render;
mod report;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use solvlie::catalog::{example, example_names, parse_algebra, serialize_algebra, AlgebraFile};
use solvlie::numerics::{parse_rational, RatVector};

use failure::Failure;

#[derive(Parser)]
#[command(name = "solvlie", version, about = "Exact curvature reports for solvable metric Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate, split, compute roots, curvature and the Einstein verdict.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Build the subalgebra attached to a subset of the simple roots.
    Attached {
        #[command(flatten)]
        input: Input,
        /// Comma-separated simple roots, e.g. `a2` or `a1,a2`; empty for none.
        #[arg(long = "lambda-prime", value_name = "SUBSET", allow_hyphen_values = true)]
        lambda_prime: String,
        #[command(flatten)]
        output: Output,
    },
    /// List the built-in examples or print one as an algebra file.
    Example {
        #[command(subcommand)]
        action: ExampleAction,
    },
}

#[derive(Subcommand)]
enum ExampleAction {
    List,
    Emit { name: String },
}

#[derive(Args)]
struct Input {
    /// Algebra file, or `-` for standard input.
    #[arg(value_name = "FILE", conflicts_with = "example")]
    file: Option<String>,
    /// Built-in example instead of a file.
    #[arg(long, value_name = "NAME")]
    example: Option<String>,
    /// Simple roots as coordinates on the a-basis, `;`-separated, e.g. `2,-1;-1,2`.
    #[arg(long, value_name = "ROOTS", allow_hyphen_values = true)]
    simple: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    /// Tolerance of float comparisons (float mode only; default 1e-9).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

const DEFAULT_TOL: f64 = 1e-9;

impl Output {
    /// The float tolerance, or `None` in exact mode.
    fn float_tolerance(&self) -> Result<Option<f64>, Failure> {
        match (self.mode, self.tol) {
            (Mode::Exact, Some(_)) => Err(Failure::Input("--tol applies only with --mode float".into())),
            (Mode::Exact, None) => Ok(None),
            (Mode::Float, t) => {
                let t = t.unwrap_or(DEFAULT_TOL);
                if t.is_finite() && t > 0.0 {
                    Ok(Some(t))
                } else {
                    Err(Failure::Input(format!("--tol must be a positive number, got {t}")))
                }
            }
        }
    }
}

fn load(input: &Input) -> Result<AlgebraFile, Failure> {
    match (&input.file, &input.example) {
        (_, Some(name)) => Ok(example(name)?),
        (Some(path), None) => {
            let text = if path == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
                s
            } else {
                std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("reading {path}: {e}")))?
            };
            parse_algebra(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
        }
        (None, None) => Err(Failure::Input("give an algebra FILE, `-`, or --example NAME".into())),
    }
}

fn parse_simple(text: &str) -> Result<Vec<RatVector>, Failure> {
    text.split(';')
        .map(|root| {
            root.split(',')
                .map(|c| parse_rational(c.trim()))
                .collect::<Result<RatVector, _>>()
                .map_err(|e| Failure::Input(format!("--simple: {e}")))
        })
        .collect()
}

fn emit<T: Serialize>(value: &T, format: Format, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Text => text(value),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
            s.push('\n');
            s
        }
    }
}

/// Standard output and the exit status of one command.
struct Outcome {
    stdout: String,
    failure: Option<Failure>,
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Analyze { input, output } => {
            let tol = output.float_tolerance()?;
            let file = load(&input)?;
            let simple = input.simple.as_deref().map(parse_simple).transpose()?;
            let stdout = match tol {
                None => emit(&analyze::analyze_exact(&file, simple.as_deref())?, output.format, render::analysis),
                Some(t) => emit(&analyze::analyze_float(&file, t)?, output.format, render::float_analysis),
            };
            Ok(Outcome { stdout, failure: None })
        }
        Command::Attached {
            input,
            lambda_prime,
            output,
        } => {
            let tol = output.float_tolerance()?;
            let file = load(&input)?;
            let simple = input.simple.as_deref().map(parse_simple).transpose()?;
            let report = analyze::attached_report(&file, simple.as_deref(), &lambda_prime, tol)?;
            let failure = report
                .admissibility
                .violation
                .as_ref()
                .map(|v| Failure::Validation(format!("lambda-prime {{{}}} is not admissible: {v}", report.subset.join(","))));
            let stdout = emit(&report, output.format, render::attached);
            Ok(Outcome { stdout, failure })
        }
        Command::Example { action } => match action {
            ExampleAction::List => {
                let width = example_names().iter().map(|(n, _)| n.len()).max().unwrap_or(0);
                let stdout = example_names()
                    .iter()
                    .map(|(name, about)| format!("{name:<width$}  {about}\n"))
                    .collect();
                Ok(Outcome { stdout, failure: None })
            }
            ExampleAction::Emit { name } => Ok(Outcome {
                stdout: serialize_algebra(&example(&name)?),
                failure: None,
            }),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let (stdout, failure) = match run(cli) {
        Ok(o) => (o.stdout, o.failure),
        Err(f) => (String::new(), Some(f)),
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(stdout.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("solvlie: {f}");
            ExitCode::from(f.code())
        }
    }
}
