//! `fixpoint`: build the fixed-point triangle, verify its sum identities,
//! print bijection traces and export sequences.
//!
//! Exit codes: 0 when every check passes, 1 on an identity or cross-method
//! mismatch, 2 on a usage error.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fixpoint_core::bijections::{bijection_table, Bijection};
use fixpoint_core::identities::{identity_report, Identity};
use fixpoint_core::qseries;
use fixpoint_core::triangle::{
    a_count, antidiag_rows_needed, convolution, isqrt, stabilization_boundary_check,
    stabilization_check, ACountMethod,
};
use fixpoint_core::{FixedPointTriangle, Method, SequenceReport};
use num_bigint::BigUint;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "fixpoint", version, about = "Partitions with a fixed point, counted by its position")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the f(n,d) triangle.
    Triangle(RunConfig),
    /// Check the row, diagonal and antidiagonal sum identities and column stabilization.
    Verify(RunConfig),
    /// Print every element of a bijection's domain with its image.
    Bijection(BijectionArgs),
    /// Export a sequence, one value per index.
    Sequence(SequenceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Gf,
    Recur,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Brute => vec![Method::BruteForce],
            MethodArg::Gf => vec![Method::GeneratingFunction],
            MethodArg::Recur => vec![Method::Recurrence],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct RunConfig {
    #[arg(long)]
    n_max: usize,
    /// Highest column to show; at most floor(sqrt(n-max)).
    #[arg(long)]
    d_max: Option<usize>,
    #[arg(long, value_enum, default_value = "recur")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionName {
    Thm13,
    Thm15,
    Thm16,
    Prop31,
}

impl From<BijectionName> for Bijection {
    fn from(b: BijectionName) -> Self {
        match b {
            BijectionName::Thm13 => Bijection::Recurrence,
            BijectionName::Thm15 => Bijection::Diagonal,
            BijectionName::Thm16 => Bijection::Antidiagonal,
            BijectionName::Prop31 => Bijection::Conjugation,
        }
    }
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(value_enum)]
    name: BijectionName,
    #[arg(long)]
    n: usize,
    /// Column, required by thm13 only.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceName {
    Column,
    A,
    Rowsum,
    Diagsum,
    Antidiagsum,
    Convolution,
}

#[derive(Args)]
struct SequenceArgs {
    #[arg(value_enum)]
    name: SequenceName,
    /// Column, required by `column`.
    #[arg(long)]
    d: Option<usize>,
    #[command(flatten)]
    config: RunConfig,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure { code: EXIT_MISMATCH, message: message.into() }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate(config: &RunConfig) -> Result<usize, Failure> {
    if config.n_max == 0 {
        return Err(Failure::usage("--n-max must be at least 1"));
    }
    let limit = isqrt(config.n_max);
    match config.d_max {
        Some(0) => Err(Failure::usage("--d-max must be at least 1")),
        Some(d) if d > limit => Err(Failure::usage(format!(
            "--d-max {d} exceeds floor(sqrt({})) = {limit}",
            config.n_max
        ))),
        Some(d) => Ok(d),
        None => Ok(limit),
    }
}

/// Builds the triangle with each requested method and fails on any disagreement.
fn build_checked(n_max: usize, method: MethodArg) -> Result<(FixedPointTriangle, Option<String>), Failure> {
    let methods = method.methods();
    let triangles: Vec<FixedPointTriangle> =
        methods.iter().map(|&m| FixedPointTriangle::build(n_max, m)).collect();
    let reference = triangles.last().expect("at least one method").clone();
    if triangles.len() == 1 {
        return Ok((reference, None));
    }
    let mut diffs = Vec::new();
    for t in &triangles[..triangles.len() - 1] {
        for c in t.diff(&reference) {
            diffs.push(format!(
                "f({},{}): {}={} {}={}",
                c.n,
                c.d,
                t.method(),
                c.left,
                reference.method(),
                c.right
            ));
        }
    }
    if diffs.is_empty() {
        let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
        let cells = n_max * isqrt(n_max);
        Ok((reference, Some(format!("all methods agree ({}; {cells} cells)", names.join(", ")))))
    } else {
        Err(Failure::mismatch(format!("methods disagree:\n{}", diffs.join("\n"))))
    }
}

fn cmd_triangle(config: RunConfig) -> Result<(), Failure> {
    let d_max = validate(&config)?;
    let (t, summary) = build_checked(config.n_max, config.method)?;
    let body = match config.format {
        Format::Table => render::triangle_table(&t, d_max),
        Format::Csv => render::triangle_csv(&t, d_max),
        Format::Json => render::triangle_json(&t, d_max),
    };
    emit(&config.out, &body)?;
    if let Some(s) = summary {
        // keep machine-readable output clean
        if config.format == Format::Table && config.out.is_none() {
            println!("{s}");
        } else {
            eprintln!("{s}");
        }
    }
    Ok(())
}

fn cmd_verify(config: RunConfig) -> Result<(), Failure> {
    let d_max = validate(&config)?;
    let report = identity_report(config.n_max);
    let extra = render::ExtraChecks {
        stabilization: (1..=d_max).map(|d| (d, stabilization_check(d))).collect(),
        boundary: (2..=d_max).map(|d| (d, stabilization_boundary_check(d))).collect(),
    };
    let body = match config.format {
        Format::Table => render::verify_table(&report, &extra),
        Format::Csv => render::verify_csv(&report),
        Format::Json => render::verify_json(&report, &extra),
    };
    emit(&config.out, &body)?;

    let mut failures: Vec<String> = Identity::ALL
        .into_iter()
        .filter_map(|id| report.first_counterexample(id))
        .map(ToString::to_string)
        .collect();
    for (d, ok) in extra.stabilization.iter().chain(&extra.boundary) {
        if !ok {
            failures.push(format!("stabilization fails at d={d}"));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::mismatch(failures.join("\n")))
    }
}

fn cmd_bijection(args: BijectionArgs) -> Result<(), Failure> {
    let which = Bijection::from(args.name);
    if which != Bijection::Recurrence && args.d.is_some() {
        return Err(Failure::usage(format!("--d only applies to thm13, not {which}")));
    }
    let traces = bijection_table(which, args.n, args.d).map_err(|e| Failure::usage(e.to_string()))?;
    let body = match args.format {
        Format::Table => render::traces_table(&traces),
        Format::Csv => render::traces_csv(&traces),
        Format::Json => render::traces_json(&traces),
    };
    emit(&args.out, &body)
}

fn to_counts(values: impl IntoIterator<Item = num_bigint::BigInt>) -> Vec<BigUint> {
    values
        .into_iter()
        .map(|v| v.to_biguint().expect("generating function coefficients are counts"))
        .collect()
}

fn cmd_sequence(args: SequenceArgs) -> Result<(), Failure> {
    let config = &args.config;
    validate(config)?;
    if args.name != SequenceName::Column && args.d.is_some() {
        return Err(Failure::usage("--d only applies to the column sequence"));
    }
    let n_max = config.n_max;
    let method_names = || {
        config.method.methods().iter().map(|m| m.name()).collect::<Vec<_>>().join("+")
    };
    let report = match args.name {
        SequenceName::Column => {
            let d = args.d.ok_or_else(|| Failure::usage("column needs --d"))?;
            if d == 0 {
                return Err(Failure::usage("--d must be at least 1"));
            }
            let values = if d * d > n_max {
                // the column is still zero throughout
                vec![BigUint::default(); n_max]
            } else {
                let (t, _) = build_checked(n_max, config.method)?;
                (1..=n_max).map(|n| t.get(n, d).expect("in range")).collect()
            };
            SequenceReport::new(format!("f(n,{d})"), 1, values, method_names())
        }
        SequenceName::A => {
            let (values, method) = if config.method == MethodArg::Brute {
                let v = (1..=n_max).map(|n| a_count(n, ACountMethod::DurfeeNotPart)).collect();
                (v, "brute")
            } else {
                (to_counts(qseries::a_gf(n_max).coeffs()[1..].to_vec()), "gf")
            };
            SequenceReport::new("a", 1, values, method)
        }
        SequenceName::Rowsum | SequenceName::Diagsum | SequenceName::Antidiagsum => {
            let (t, _) = build_checked(antidiag_rows_needed(n_max), config.method)?;
            let values = (1..=n_max)
                .map(|n| match args.name {
                    SequenceName::Rowsum => t.row_sum(n),
                    SequenceName::Diagsum => t.diag_sum(n),
                    _ => t.antidiag_sum(n),
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::usage(e.to_string()))?;
            let name = match args.name {
                SequenceName::Rowsum => "rowsum",
                SequenceName::Diagsum => "diagsum",
                _ => "antidiagsum",
            };
            SequenceReport::new(name, 1, values, method_names())
        }
        SequenceName::Convolution => {
            SequenceReport::new("convolution", 0, (0..n_max).map(convolution).collect(), "pentagonal")
        }
    };
    let body = match config.format {
        Format::Table => render::sequence_table(&report),
        Format::Csv => render::sequence_csv(&report),
        Format::Json => render::sequence_json(&report),
    };
    emit(&config.out, &body)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Triangle(c) => cmd_triangle(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Bijection(b) => cmd_bijection(b),
        Command::Sequence(s) => cmd_sequence(s),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
