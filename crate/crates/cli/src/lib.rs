//! Command-line frontend for `weylcoh`.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing invariant or
//! the engine reports an internal inconsistency, 2 for usage errors
//! (including malformed Cartan types and exceeded size caps).

pub mod document;
pub mod render;

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use weylcoh::chartab::CharacterTable;
use weylcoh::cohomology;
use weylcoh::config::Limits;
use weylcoh::verify::{self, Status};
use weylcoh::{CartanType, Error, WeylData};

use document::{OutputDocument, Provenance, Query, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "weylcoh",
    version,
    about = "Cohomology of commuting tuples in compact Lie groups via Weyl-group averaging"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Args, Debug)]
struct TypeArg {
    /// Cartan type: A<r>, B<r>, C<r>, D<r>, SU(m) or Sp(m).
    #[arg(long = "type", value_parser = parse_cartan)]
    cartan: CartanType,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conjugacy classes with sizes and det(1 - s*w).
    Classes {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Poincaré polynomial of R_{n,G}.
    Poincare {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// G-equivariant Hilbert series of R_{n,G}.
    Equivariant {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 20)]
        truncate: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// A single Betti number of R_{n,G}.
    Betti {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Character table of the symmetric group S_m.
    CharTable {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Character-coefficient factors for type A.
    CharPoly {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Primes at which integral cohomology may have torsion.
    TorsionPrimes {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Run the invariant self-checks.
    Verify {
        #[arg(long = "type", value_parser = parse_cartan, required_unless_present = "all")]
        cartan: Option<CartanType>,
        #[arg(long, required_unless_present = "all")]
        n: Option<u32>,
        /// Run the standard suite over A1..A4, B2, B3, C3, D4 with n = 0..3.
        #[arg(long)]
        all: bool,
    },
}

fn parse_cartan(s: &str) -> Result<CartanType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Engine(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. }
            | Error::InvalidCartan { .. }
            | Error::UnsupportedFamily(_) => Failure::Usage(e.to_string()),
            other => Failure::Engine(other.to_string()),
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let limits = Limits::from_env();
    match dispatch(cli.command, &limits, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Engine(msg)) => {
            let _ = writeln!(err, "engine error: {msg}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn emit(
    out: &mut dyn Write,
    format: Format,
    query: Query,
    started: Instant,
    json: impl FnOnce() -> Value,
    plain: impl FnOnce() -> String,
    latex: impl FnOnce() -> String,
) -> Result<i32, Failure> {
    let text = match format {
        Format::Json => {
            let doc = OutputDocument {
                schema_version: SCHEMA_VERSION.to_string(),
                query,
                result: json(),
                provenance: Provenance::new(started.elapsed().as_micros() as u64),
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
        Format::Plain => plain(),
        Format::Latex => latex(),
    };
    writeln!(out, "{}", text.trim_end()).map_err(|e| Failure::Engine(e.to_string()))?;
    Ok(EXIT_OK)
}

fn checked(limits: &Limits, cartan: CartanType, n: Option<u32>) -> Result<(), Failure> {
    limits.check_rank(cartan)?;
    if let Some(n) = n {
        limits.check_n(n as usize)?;
    }
    Ok(())
}

fn dispatch(command: Command, limits: &Limits, out: &mut dyn Write) -> Result<i32, Failure> {
    let started = Instant::now();
    match command {
        Command::Classes { ty, format } => {
            let cartan = ty.cartan;
            checked(limits, cartan, None)?;
            let w = WeylData::new(cartan);
            emit(
                out,
                format,
                Query::new("classes", Some(cartan)),
                started,
                || document::classes_result(&w),
                || render::classes_plain(&w),
                || render::classes_plain(&w),
            )
        }
        Command::Poincare { ty, n, format } => {
            let cartan = ty.cartan;
            checked(limits, cartan, Some(n))?;
            let r = cohomology::poincare_poly(cartan, n)?;
            let query = Query {
                n: Some(n),
                ..Query::new("poincare", Some(cartan))
            };
            emit(
                out,
                format,
                query,
                started,
                || document::poincare_result(&r),
                || r.poly.to_string(),
                || render::poincare_latex(&r),
            )
        }
        Command::Equivariant {
            ty,
            n,
            truncate,
            format,
        } => {
            let cartan = ty.cartan;
            checked(limits, cartan, Some(n))?;
            let r = cohomology::equivariant_hilbert(cartan, n, truncate)?;
            let query = Query {
                n: Some(n),
                truncate: Some(truncate),
                ..Query::new("equivariant", Some(cartan))
            };
            emit(
                out,
                format,
                query,
                started,
                || document::equivariant_result(&r),
                || render::equivariant_plain(&r),
                || render::equivariant_latex(&r),
            )
        }
        Command::Betti {
            ty,
            n,
            degree,
            format,
        } => {
            let cartan = ty.cartan;
            checked(limits, cartan, Some(n))?;
            let b = cohomology::betti(cartan, n, degree)?;
            let query = Query {
                n: Some(n),
                degree: Some(degree),
                ..Query::new("betti", Some(cartan))
            };
            emit(
                out,
                format,
                query,
                started,
                || document::betti_result(cartan, n, degree, &b),
                || b.to_string(),
                || b.to_string(),
            )
        }
        Command::CharTable { m, format } => {
            let t = CharacterTable::new(m, limits)?;
            let query = Query {
                m: Some(m),
                ..Query::new("char-table", None)
            };
            emit(
                out,
                format,
                query,
                started,
                || document::char_table_result(&t),
                || render::char_table_plain(&t),
                || render::char_table_latex(&t),
            )
        }
        Command::CharPoly { ty, n, format } => {
            let cartan = ty.cartan;
            checked(limits, cartan, Some(n))?;
            limits.check_table(cartan.rank() + 1)?;
            let d = cohomology::graded_w_decomposition(cartan, n)?;
            let query = Query {
                n: Some(n),
                ..Query::new("char-poly", Some(cartan))
            };
            emit(
                out,
                format,
                query,
                started,
                || document::char_poly_result(&d),
                || d.render(false),
                || d.render(true),
            )
        }
        Command::TorsionPrimes { ty, format } => {
            let cartan = ty.cartan;
            checked(limits, cartan, None)?;
            let primes: Vec<u64> = cohomology::torsion_primes(cartan).into_iter().collect();
            let order = weylcoh::weyl::weyl_order(cartan);
            let listed: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
            emit(
                out,
                format,
                Query::new("torsion-primes", Some(cartan)),
                started,
                || document::torsion_result(cartan, &order, &primes),
                || listed.join(", "),
                || format!("\\{{{}\\}}", listed.join(", ")),
            )
        }
        Command::Verify { cartan, n, all } => {
            let mut cases = Vec::new();
            if let (Some(c), Some(n)) = (cartan, n) {
                checked(limits, c, Some(n))?;
                cases.push((c, n));
            }
            if all {
                cases.extend(verify::standard_suite());
            }
            let mut failures = 0usize;
            let mut total = 0usize;
            for (c, n) in cases {
                for outcome in verify::run_checks(c, n) {
                    if outcome.status != Status::Info {
                        total += 1;
                    }
                    if outcome.status == Status::Fail {
                        failures += 1;
                    }
                    writeln!(out, "{outcome}").map_err(|e| Failure::Engine(e.to_string()))?;
                }
            }
            writeln!(out, "{total} checks, {failures} failed")
                .map_err(|e| Failure::Engine(e.to_string()))?;
            Ok(if failures == 0 {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
    }
}
