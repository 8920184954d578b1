//! `eqpent`: classify, verify, plot data and root tables.
//!
//! Exit status is 0 on success, 1 when a computation or a check fails, 2 on
//! a malformed request. Failures are reported on stderr as a TOML
//! `[integrity_failure]` record.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use eqpent_core::cert::{
    classify_cached, figure, integrity_record, roots_table, verify, CertError, CertificateDocument,
    FigureKind, RootRange, RootTarget, RuntimeRecord,
};
use eqpent_core::classify::{ClassifyOptions, Precision};
use eqpent_core::numeric::{parse_rational, pow10};

#[derive(Parser)]
#[command(
    name = "eqpent",
    version,
    about = "Certified classification of equilateral pentagonal central configurations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline and write a certificate.
    Classify {
        /// Finest cell width tried during adjudication, a power of ten such as 1e-30.
        #[arg(long, default_value = "1e-30")]
        precision: String,
        /// Certificate path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also factor Q(s) = Res_t(H1, H2) and count its roots in S.
        #[arg(long)]
        cross_check: bool,
        /// Directory holding the cached resultant P(t).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        /// Record wall time and thread count (makes the output non-reproducible).
        #[arg(long)]
        runtime: bool,
    },
    /// Re-check every record of a certificate.
    Verify { path: PathBuf },
    /// Vertex coordinates as CSV.
    Figure {
        which: Which,
        /// Certificate to read the solutions from (required for regular and concave).
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Isolated real roots as CSV.
    Roots {
        /// One of P, p120, p132, R60, Q.
        target: String,
        /// all, window = (3/25,1), tprime = (3/25,100), S, or lo,hi.
        #[arg(long, default_value = "all")]
        range: String,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Regular,
    Concave,
    Gallery,
}

enum Failure {
    Usage(String),
    Integrity(String),
}

impl From<CertError> for Failure {
    fn from(e: CertError) -> Self {
        let record = integrity_record(e.kind(), &e.to_string(), &[]);
        if e.is_usage() {
            Failure::Usage(record)
        } else {
            Failure::Integrity(record)
        }
    }
}

/// Decimal digits `k` such that `width = 10^-k`.
fn precision_digits(width: &str) -> Result<u32, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "error: --precision {width:?} is not a power of ten 1e-k with 1 <= k <= 30\n"
        ))
    };
    let w = parse_rational(width).map_err(|_| bad())?;
    (1..=30).find(|&k| pow10(-(k as i32)) == w).ok_or_else(bad)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Failure::from(CertError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify {
            precision,
            out,
            cross_check,
            cache_dir,
            runtime,
        } => {
            let options = ClassifyOptions {
                precision: Precision::up_to(precision_digits(&precision)?),
                cross_check,
            };
            let start = Instant::now();
            let c = classify_cached(&options, cache_dir.as_deref())?;
            let runtime = runtime.then(|| RuntimeRecord::new(start.elapsed()));
            let doc = CertificateDocument::from_classification(&c, runtime);
            emit(out.as_deref(), &doc.to_toml()?)?;
            if out.is_some() {
                let certified = doc.solutions.len();
                eprintln!(
                    "{certified} certified of {} candidates",
                    doc.candidates.len()
                );
            }
            Ok(())
        }
        Command::Verify { path } => {
            let doc = CertificateDocument::read(&path)?;
            let report = verify(&doc);
            if report.passed() {
                println!("ok: {} records checked", report.checked);
                Ok(())
            } else {
                let message = format!(
                    "{} of {} records failed",
                    report.failures.len(),
                    report.checked
                );
                Err(Failure::Integrity(integrity_record(
                    "verification",
                    &message,
                    &report.failures,
                )))
            }
        }
        Command::Figure { which, cert, out } => {
            let kind = match which {
                Which::Regular => FigureKind::Regular,
                Which::Concave => FigureKind::Concave,
                Which::Gallery => FigureKind::Gallery,
            };
            let doc = match (kind, cert) {
                (FigureKind::Gallery, _) | (_, None) => None,
                (_, Some(path)) => Some(CertificateDocument::read(&path)?),
            };
            emit(out.as_deref(), &figure(kind, doc.as_ref())?.to_csv())
        }
        Command::Roots {
            target,
            range,
            cache_dir,
            out,
        } => {
            let target = RootTarget::parse(&target)?;
            let range = RootRange::parse(&range)?;
            emit(
                out.as_deref(),
                &roots_table(target, &range, cache_dir.as_deref())?.to_csv(),
            )
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on malformed arguments.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprint!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Integrity(msg)) => {
            eprint!("{msg}");
            ExitCode::from(1)
        }
    }
}
