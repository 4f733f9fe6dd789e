//! Command-line front end. Every subcommand is a pure function of its flags
//! with deterministic output; exit codes are 0 for success, 1 for a property
//! violation found by `sweep`, and 2 for usage or precondition errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use csys::arith::Rational;
use csys::bundle::generic_polystable;
use csys::moduli::{generic_shape, ModuliQuery};
use csys::picard::{iso_test, picard_invariants};
use csys::report::{
    analyze, iso_text, picard_text, report_text, shape_text, verify_text, walls_text, VerifyReport,
};
use csys::stability::GenericSystemModel;
use csys::sweep::{run_sweep, sweep_text, SweepCheck};
use csys::walls::enumerate_walls;

#[derive(Parser)]
#[command(
    name = "csys",
    version,
    about = "Exact calculator for moduli of coherent systems on an elliptic curve"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Positivity,
    IntervalConsistency,
    OracleAgreement,
}

impl From<CheckKind> for SweepCheck {
    fn from(c: CheckKind) -> Self {
        match c {
            CheckKind::Positivity => SweepCheck::Positivity,
            CheckKind::IntervalConsistency => SweepCheck::IntervalConsistency,
            CheckKind::OracleAgreement => SweepCheck::OracleAgreement,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report: non-emptiness, dimension, parameter range, critical
    /// values, generic shape, Chern data
    Analyze {
        /// Rank (n >= 1).
        #[arg(long)]
        n: i64,
        /// Degree.
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// Section-space dimension (k >= 0).
        #[arg(long)]
        k: i64,
        /// Stability parameter, as `p/q` or an integer.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<Rational>,
    },
    /// Critical values with their decompositions and flip invariants
    Walls {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        k: i64,
    },
    /// Integer Chern coefficients of the Picard bundle of type (n, d)
    Picard {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Projective-bundle isomorphism obstruction for type (n, d, k)
    Iso {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        k: i64,
    },
    /// Shape of the generic element of a non-empty moduli space
    Shape {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<Rational>,
    },
    /// Generic-position stability check on the generic polystable bundle
    Verify {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
    },
    /// Batch property checks over a parameter grid; exits 1 on violation
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_d: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_k: i64,
        #[arg(long, value_enum)]
        check: CheckKind,
    },
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(value).expect("serializable")
            );
        }
        Format::Text => print!("{}", text(value)),
    }
}

fn query(n: i64, d: i64, k: i64, alpha: Option<Rational>) -> Result<ModuliQuery, String> {
    let mut q = ModuliQuery::new(n, d, k).map_err(|e| e.to_string())?;
    if let Some(a) = alpha {
        q = q.with_alpha(a);
    }
    Ok(q)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::Analyze { n, d, k, alpha } => {
            let report = analyze(&query(n, d, k, alpha)?).map_err(|e| e.to_string())?;
            emit(format, &report, report_text);
        }
        Command::Walls { n, d, k } => {
            let walls = enumerate_walls(n, d, k).map_err(|e| e.to_string())?;
            emit(format, &walls, |w| walls_text(w));
        }
        Command::Picard { n, d } => {
            let inv = picard_invariants(n, d).map_err(|e| e.to_string())?;
            emit(format, &inv, picard_text);
        }
        Command::Iso { n, d, k } => {
            let verdict = iso_test(n, d, k).map_err(|e| e.to_string())?;
            emit(format, &verdict, iso_text);
        }
        Command::Shape { n, d, k, alpha } => {
            let shape = generic_shape(&query(n, d, k, alpha)?).map_err(|e| e.to_string())?;
            emit(format, &shape, |s| format!("{}\n", shape_text(s)));
        }
        Command::Verify { n, d, k, alpha } => {
            if n < 1 {
                return Err("rank must be >= 1".to_string());
            }
            let model =
                GenericSystemModel::new(generic_polystable(n, d), k).map_err(|e| e.to_string())?;
            let stable = model
                .is_stable_for_small_alpha(&alpha)
                .map_err(|e| e.to_string())?;
            let report = VerifyReport {
                n,
                d,
                k,
                alpha,
                candidates: model.candidates(),
                bundle: model.bundle().clone(),
                stable,
            };
            emit(format, &report, verify_text);
        }
        Command::Sweep {
            max_n,
            max_d,
            max_k,
            check,
        } => {
            let summary = run_sweep(check.into(), max_n, max_d, max_k);
            emit(format, &summary, sweep_text);
            if !summary.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
