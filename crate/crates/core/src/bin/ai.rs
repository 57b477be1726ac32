use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ai_core::error::{Error, Result};
use ai_core::groebner::{MonomialOrder, OrderKind, PolynomialIdeal};
use ai_core::parse::{parse_ideal, ParsedIdeal};
use ai_core::rational::parse_rational;
use ai_core::report::{
    monomial_invariants, polynomial_invariants, sequence_report, Column, ExperimentSpec, Format,
};
use ai_core::sequences::{DEFAULT_M, DEFAULT_P_BUDGET, DEFAULT_R_BUDGET};
use ai_core::verify::{run_suite, Suite};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_WORK_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "ai", version, about = "Multiplicities, volumes and log canonical thresholds of ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a single ideal.
    Invariants {
        /// Comma-separated generators, e.g. "x^2, y^3".
        ideal: String,
        /// Also compute the multiplier ideal at this coefficient.
        #[arg(long, value_name = "p/q")]
        lambda: Option<String>,
        /// Monomial order for polynomial input.
        #[arg(long, value_name = "O", default_value = "grevlex")]
        order: String,
        /// Sample e(in(I^m))/m^n for m = 1..=M.
        #[arg(long, value_name = "M")]
        powers: Option<u32>,
        /// Number of variables, when not implied by the generators.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Per-index table for a graded sequence.
    Sequence {
        /// `powers <ideal>`, `weighted <w1> .. <wn> <c>`, `maxpow <k>`,
        /// `purepow <n>` or `table <file>`.
        #[arg(required = true, num_args = 1..)]
        descriptor: Vec<String>,
        #[arg(long = "M", value_name = "n", default_value_t = DEFAULT_M)]
        max_index: u64,
        #[arg(long, value_name = "n", default_value_t = DEFAULT_P_BUDGET)]
        pbudget: u64,
        #[arg(long, value_name = "n", default_value_t = DEFAULT_R_BUDGET)]
        rbudget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// csv, json or text; defaults to the extension of --out, else text.
        #[arg(long)]
        format: Option<String>,
        /// Any of mult, vol, lct, bracket, ord, saturate, colon.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        columns: Vec<String>,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Seeded property suite: teissier, subadd, lcbound, chain, saturation
    /// or integrality.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

enum Failure {
    Input(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn invariants(
    ideal: &str,
    lambda: Option<&str>,
    order: &str,
    powers: Option<u32>,
    dim: Option<usize>,
    format: Format,
) -> std::result::Result<(), Failure> {
    let lambda = lambda.map(parse_rational).transpose()?;
    let kind: OrderKind = order.parse()?;
    let mut out = String::new();
    let mut holds = true;
    let poly = match parse_ideal(ideal, dim)? {
        ParsedIdeal::Monomial(a) => {
            let inv = monomial_invariants(&a, lambda.as_ref())?;
            holds = inv.check.as_ref().is_none_or(|c| c.holds);
            match format {
                Format::Json => out.push_str(&json_text(&inv.to_json())),
                _ => out.push_str(&inv.to_text()),
            }
            powers.map(|_| PolynomialIdeal::from_monomial(&a))
        }
        ParsedIdeal::Polynomial(i) => {
            if lambda.is_some() {
                return Err(Error::InvalidArgument("--lambda needs monomial generators".into()).into());
            }
            Some(i)
        }
    };
    if let Some(i) = poly {
        let inv = polynomial_invariants(&i, &MonomialOrder::new(kind, i.dim()), powers)?;
        match format {
            Format::Json => out.push_str(&json_text(&inv.to_json())),
            _ => out.push_str(&inv.to_text()),
        }
    }
    emit(&out, None)?;
    if holds {
        Ok(())
    } else {
        Err(Failure::Verification("e >= n^n/lct^n fails".into()))
    }
}

#[allow(clippy::too_many_arguments)]
fn sequence(
    descriptor: Vec<String>,
    max_index: u64,
    pbudget: u64,
    rbudget: u64,
    out: Option<PathBuf>,
    format: Option<String>,
    columns: Vec<String>,
    dim: Option<usize>,
) -> std::result::Result<(), Failure> {
    let format = match format {
        Some(f) => f.parse()?,
        None => out
            .as_deref()
            .and_then(|p| p.extension())
            .and_then(|e| e.to_str())
            .and_then(|e| e.parse().ok())
            .unwrap_or(Format::Text),
    };
    let mut spec = ExperimentSpec::new(descriptor);
    spec.dim = dim;
    spec.max_index = max_index;
    spec.p_budget = pbudget;
    spec.r_budget = rbudget;
    if !columns.is_empty() {
        spec.columns = columns.iter().map(|c| c.parse::<Column>()).collect::<Result<_>>()?;
    }
    let report = sequence_report(&spec)?;
    emit(&report.render(format)?, out.as_deref())?;
    Ok(())
}

fn verify(suite: &str, seed: u64, count: usize, format: Format) -> std::result::Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, seed, count)?;
    match format {
        Format::Json => emit(&json_text(&serde_json::to_value(&report).expect("json")), None)?,
        _ => emit(&format!("{report}\n"), None)?,
    }
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} failing checks", report.failed)))
    }
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    match cli.command {
        Command::Invariants {
            ideal,
            lambda,
            order,
            powers,
            dim,
            format,
        } => invariants(&ideal, lambda.as_deref(), &order, powers, dim, format.parse()?),
        Command::Sequence {
            descriptor,
            max_index,
            pbudget,
            rbudget,
            out,
            format,
            columns,
            dim,
        } => sequence(descriptor, max_index, pbudget, rbudget, out, format, columns, dim),
        Command::Verify {
            suite,
            seed,
            count,
            format,
        } => verify(&suite, seed, count, format.parse()?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("ai: verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Input(e)) => {
            eprintln!("ai: {e}");
            match e {
                Error::WorkLimit(_) | Error::GeneratorExplosion { .. } => ExitCode::from(EXIT_WORK_LIMIT),
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}
