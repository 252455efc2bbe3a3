mod render;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use foulkes_core::oracle::{configured_cap, oracle_plethysm};
use foulkes_core::{
    generate_partitions, lr_coefficient, table1_multiplicity, Error, Inner, Method, Partition,
    Table1Class, TableKind,
};

use render::{Format, TableRow};
use report::DecompositionReport;

/// Decompose s_nu o s_(2) (and s_nu o s_(1,1)) into Schur functions.
#[derive(Parser, Debug)]
#[command(name = "foulkes", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose with a closed formula chosen by the shape of nu.
    Decompose {
        /// Partition such as `3,1` or `2^2,1`; `-` for the empty partition.
        nu: String,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Apply omega and report s_nu o s_(1,1).
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Print phase timings to stderr.
        #[arg(long)]
        timings: bool,
    },
    /// Brute-force plethysm through the power-sum basis.
    Oracle {
        nu: String,
        #[arg(long, default_value = "s2", value_parser = parse_inner)]
        inner: Inner,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run formula and oracle and report any disagreement (exit 1).
    Compare {
        nu: String,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        timings: bool,
    },
    /// Closed-form multiplicities for nu = (n-2,1,1) or (n-2,2).
    Table {
        n: usize,
        #[arg(long, value_parser = parse_kind)]
        kind: TableKind,
        /// Check every row against the theorem formula.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
    Lr {
        lambda: String,
        mu: String,
        nu: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_inner(s: &str) -> Result<Inner, String> {
    match s {
        "s2" => Ok(Inner::S2),
        "e2" => Ok(Inner::E2),
        other => Err(format!("unknown inner factor {other:?}; expected s2 or e2")),
    }
}

fn parse_kind(s: &str) -> Result<TableKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::ResourceBound { .. } => EXIT_RESOURCE,
        Error::DegreeMismatch { .. } | Error::NonIntegerCoefficient { .. } => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Rendered output and the exit status it implies.
struct Outcome {
    stdout: String,
    status: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, status: 0 }
    }
}

fn print_timings(report: &DecompositionReport) {
    for (phase, elapsed) in &report.timings {
        eprintln!("{phase}: {elapsed:.3?}");
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Decompose {
            nu,
            method,
            dual,
            format,
            timings,
        } => {
            let nu: Partition = nu.parse()?;
            let report = DecompositionReport::formula(&nu, method, dual)?;
            if timings {
                print_timings(&report);
            }
            let label = report.method.name();
            Ok(Outcome::ok(render::expansion(
                &nu,
                report.inner,
                label,
                &report.formula_result,
                format,
            )))
        }
        Command::Oracle { nu, inner, format } => {
            let nu: Partition = nu.parse()?;
            let f = oracle_plethysm(&nu, inner, configured_cap())?;
            Ok(Outcome::ok(render::expansion(&nu, inner, "oracle", &f, format)))
        }
        Command::Compare {
            nu,
            method,
            dual,
            format,
            timings,
        } => {
            let nu: Partition = nu.parse()?;
            let report = DecompositionReport::compare(&nu, method, dual)?;
            if timings {
                print_timings(&report);
            }
            let status = if report.agrees() { 0 } else { EXIT_DISAGREE };
            if status != 0 {
                eprintln!(
                    "formula and oracle disagree on {} constituent(s)",
                    report.diff.len()
                );
            }
            Ok(Outcome {
                stdout: render::comparison(&report, format),
                status,
            })
        }
        Command::Table {
            n,
            kind,
            verify,
            format,
        } => {
            let nu = kind.nu(n)?;
            let theorem = if verify { Some(kind.formula(n)?) } else { None };
            let mut rows = Vec::new();
            for lambda in generate_partitions(2 * n) {
                let mult = BigInt::from(table1_multiplicity(&lambda, kind, n)?);
                let expected = theorem.as_ref().map(|t| t.coefficient(&lambda));
                let shown = mult != BigInt::from(0)
                    || expected.as_ref().is_some_and(|e| *e != BigInt::from(0));
                if shown {
                    rows.push(TableRow {
                        class: Table1Class::of(&lambda).label(),
                        lambda,
                        mult,
                        theorem: expected,
                    });
                }
            }
            let mismatches = rows.iter().filter(|r| r.verified() == Some(false)).count();
            if mismatches > 0 {
                eprintln!("{mismatches} row(s) disagree with the theorem formula");
            }
            Ok(Outcome {
                stdout: render::table(&nu, &rows, format),
                status: if mismatches > 0 { EXIT_DISAGREE } else { 0 },
            })
        }
        Command::Lr {
            lambda,
            mu,
            nu,
            format,
        } => {
            let (lambda, mu, nu): (Partition, Partition, Partition) =
                (lambda.parse()?, mu.parse()?, nu.parse()?);
            let c = lr_coefficient(&lambda, &mu, &nu);
            let stdout = match format {
                Format::Text => format!("c^{lambda}_({mu},{nu}) = {c}\n"),
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "lambda": lambda.parts(),
                        "mu": mu.parts(),
                        "nu": nu.parts(),
                        "coefficient": c,
                    })
                ),
                Format::Csv => format!(
                    "lambda;mu;nu;coefficient\n{};{};{};{c}\n",
                    lambda.to_text(),
                    mu.to_text(),
                    nu.to_text()
                ),
            };
            Ok(Outcome::ok(stdout))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.status)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
