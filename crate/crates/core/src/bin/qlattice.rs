//! Command-line front end: build lattice objects, run verification suites,
//! reproduce the determinant tables, and dump matrices in the text exchange
//! format.
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 usage or budget
//! error. Identical invocations produce byte-identical output on stdout;
//! timing lives in the JSON `ms` fields and on stderr only.

use clap::{Parser, Subcommand};
use qlattice_core::field::FieldCtx;
use qlattice_core::gorenstein;
use qlattice_core::incidence::build_incidence;
use qlattice_core::lattice::enum_points;
use qlattice_core::report::{render_report, run_suite, Suite};
use qlattice_core::table::{compute_table, render_table, OutputFormat};
use qlattice_core::{Error, DEFAULT_BUDGET};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qlattice",
    version,
    about = "Exact incidence and Hessian determinants for the subspace lattice of GF(q)^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the |det A| / |det B| table over a range of dimensions.
    Table {
        /// Field order (prime or prime power).
        #[arg(long)]
        q: u64,
        /// Inclusive dimension range, e.g. 3..8.
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// Cost ceiling for each row, in elimination steps.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run a verification suite at one parameter point.
    Verify {
        #[arg(long)]
        n: u32,
        /// Field order (prime or prime power).
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Cost ceiling for the brute-force oracles.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Write a lattice object to a file in the text exchange format.
    Dump {
        /// One of: A, B, M, H, basis-set, points.
        #[arg(long)]
        object: String,
        #[arg(long)]
        n: u32,
        /// Field order (prime or prime power).
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: PathBuf,
        /// Cost ceiling for the objects that need enumeration.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| "bad range start")?;
        let hi: u32 = hi.trim().parse().map_err(|_| "bad range end")?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok((lo, hi))
    } else {
        let n: u32 = s.trim().parse().map_err(|_| "bad dimension")?;
        Ok((n, n))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Table {
            q,
            n: (n_min, n_max),
            format,
            budget,
        } => {
            let table = compute_table(q, n_min, n_max, budget)?;
            print!("{}", render_table(&table, format));
            Ok(table.all_pass())
        }
        Command::Verify {
            n,
            q,
            suite,
            budget,
            format,
        } => {
            let report = run_suite(n, q, suite, budget)?;
            print!("{}", render_report(&report, format));
            if format == OutputFormat::Text {
                // Timing stays off stdout so the data section is
                // byte-deterministic.
                for c in &report.checks {
                    eprintln!("timing {}: {} ms", c.name, c.ms);
                }
            }
            Ok(report.all_pass())
        }
        Command::Dump {
            object,
            n,
            q,
            out,
            budget,
        } => {
            let content = dump_object(&object, n, q, budget)?;
            std::fs::write(&out, content).map_err(|source| Error::Io {
                context: format!("writing {}", out.display()),
                source,
            })?;
            Ok(true)
        }
    }
}

fn dump_object(object: &str, n: u32, q: u64, budget: u64) -> Result<String, Error> {
    let ctx = FieldCtx::from_order(q)?;
    match object {
        "A" => Ok(build_incidence(n, &ctx)?.a.to_text()),
        "B" => Ok(build_incidence(n, &ctx)?.b.to_text()),
        "M" => Ok(gorenstein::lefschetz_matrix(n, &ctx, budget)?
            .matrix
            .to_text()),
        "H" => {
            let bs = gorenstein::build_basis_set(n, &ctx, budget)?;
            Ok(gorenstein::hessian_at_ones(&bs).matrix.to_text())
        }
        "basis-set" => Ok(gorenstein::build_basis_set(n, &ctx, budget)?.to_text()),
        "points" => {
            let mut out = String::new();
            for p in enum_points(n as usize, &ctx)? {
                let reps: Vec<String> = p.coords().iter().map(|c| c.rep().to_string()).collect();
                let _ = writeln!(out, "{}", reps.join(" "));
            }
            Ok(out)
        }
        other => Err(Error::ParseMatrix(format!(
            "unknown object '{other}' (expected A, B, M, H, basis-set, points)"
        ))),
    }
}
