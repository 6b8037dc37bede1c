use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use liesymp::catalog::{parse_assignment, Selection};
use liesymp::cli::commands::{self, Outcome, SymplecticOptions};
use liesymp::exactmath::Rational;
use liesymp::Result;

/// Exact symplectic-structure decisions for Lie algebras given by structure
/// constants.
///
/// Exit status: 0 success, 1 computed result disagrees with the expected one,
/// 2 input error.
#[derive(Parser)]
#[command(name = "liesymp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify antisymmetry and the Jacobi identity (and the torus, if any).
    Check { file: PathBuf },
    /// Center, derived and lower central series, solvability and nilpotency.
    Props { file: PathBuf },
    /// Dimension of the derivation algebra.
    Der {
        file: PathBuf,
        /// Also decide completeness.
        #[arg(long)]
        complete: bool,
    },
    /// Decide whether a symplectic (and an exact symplectic) form exists.
    Symplectic {
        file: PathBuf,
        #[arg(long)]
        exact_only: bool,
        /// Print a concrete nondegenerate cocycle.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Built-in algebras and the regression against their printed verdicts.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Re-derive the statements about the abelian, L_n and Q_n families.
    ReproProps {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        /// `n4_1`, `L4`, `Q5`, `abelian3`, ...
        name: String,
        /// Parameter override, e.g. `a=3`.
        #[arg(long = "set", value_name = "a=R")]
        set: Option<String>,
    },
    Verify {
        /// Only table rows whose nilradical has this dimension.
        #[arg(long)]
        dim: Option<usize>,
        /// Only these entries.
        #[arg(long = "name", value_name = "NAME")]
        names: Vec<String>,
        #[arg(long = "set", value_name = "a=R")]
        set: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn parameter_a(set: Option<&str>) -> Result<Option<Rational>> {
    let Some(s) = set else { return Ok(None) };
    match parse_assignment(s)? {
        (k, v) if k == "a" => Ok(Some(v)),
        (k, _) => Err(liesymp::Error::InvalidConfig(format!("unknown parameter `{k}`; only `a` can be set"))),
    }
}

fn run(cmd: Command, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Check { file } => commands::check(&file, out),
        Command::Props { file } => commands::props(&file, out),
        Command::Der { file, complete } => commands::der(&file, complete, out),
        Command::Symplectic { file, exact_only, witness, json } => {
            commands::symplectic(&file, &SymplecticOptions { exact_only, witness, json }, out)
        }
        Command::Catalog { action: CatalogAction::List } => commands::catalog_list(out),
        Command::Catalog { action: CatalogAction::Show { name, set } } => {
            commands::catalog_show(&name, parameter_a(set.as_deref())?, out)
        }
        Command::Catalog { action: CatalogAction::Verify { dim, names, set, json } } => {
            let selection = Selection { dim, names, a: parameter_a(set.as_deref())? };
            commands::catalog_verify(&selection, json, out)
        }
        Command::ReproProps { json } => commands::repro_props(json, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let outcome = match run(cli.command, &mut out) {
        Ok(o) => o,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            Outcome::InputError
        }
    };
    ExitCode::from(outcome.code())
}
