//! `galcodes`: idempotents, minimal codes and code equivalence from the command line.

mod commands;
mod goldens;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use galcodes::codes::ENUMERATION_BUDGET;
use galcodes::report::{render_all, Format, Table};
use galcodes::{Error, Result};

use commands::Construction;

#[derive(Parser, Debug)]
#[command(name = "galcodes", version, about = "Idempotents and minimal codes of finite group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: json, csv or md.
    #[arg(long, global = true, default_value = "md")]
    format: Format,

    /// Cap on exhaustively enumerated codewords.
    #[arg(long, global = true)]
    budget: Option<u128>,

    /// Accepted for reproducible invocations; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GroupField {
    /// Group such as C9xC3 or D4.
    #[arg(long)]
    group: String,

    /// Field order.
    #[arg(long)]
    q: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List idempotents of F_q G.
    Idempotents {
        #[command(flatten)]
        gf: GroupField,
        #[arg(long, value_enum, default_value = "primitive")]
        construction: Construction,
    },
    /// Dimensions and minimum weights of the codes the idempotents generate.
    Codes {
        #[command(flatten)]
        gf: GroupField,
        #[arg(long, value_enum, default_value = "primitive")]
        construction: Construction,
    },
    /// G-equivalence classes of the minimal codes.
    Equivalence {
        #[command(flatten)]
        gf: GroupField,
    },
    /// Central idempotents and minimal codes of F_q D_n.
    Dihedral {
        /// Rotation order n of D_n.
        #[arg(long, required_unless_present = "group")]
        n: Option<u64>,
        /// Alternatively D<n>.
        #[arg(long, conflicts_with = "n")]
        group: Option<String>,
        #[arg(long)]
        q: u64,
    },
    /// Cyclic codes over Z_{p^k}: lifted idempotents, census, codeword counts, duals.
    Chainring {
        /// Ring such as Z4 or Z9.
        #[arg(long)]
        ring: String,
        /// Cyclic group such as C7.
        #[arg(long)]
        group: String,
    },
    /// Regenerate a golden suite and compare with the stored copies.
    Verify {
        #[arg(long, default_value = "published-tables")]
        suite: String,
        /// Compare against (or with --bless, write) the files in DIR instead of the bundled copies.
        #[arg(long, value_name = "DIR")]
        goldens: Option<PathBuf>,
        #[arg(long, requires = "goldens")]
        bless: bool,
    },
}

fn tables(cli: &Cli) -> Result<Vec<Table>> {
    let budget = cli.budget.unwrap_or(ENUMERATION_BUDGET);
    match &cli.command {
        Command::Idempotents { gf, construction } => commands::idempotents(&gf.group, gf.q, *construction),
        Command::Codes { gf, construction } => commands::codes(&gf.group, gf.q, *construction, budget),
        Command::Equivalence { gf } => commands::equivalence(&gf.group, gf.q, budget),
        Command::Dihedral { n, group, q } => {
            let n = match (n, group) {
                (Some(n), _) => *n,
                (None, Some(g)) => match commands::parse_group(g)? {
                    commands::Target::Dihedral(n) => n,
                    commands::Target::Abelian(_) => return Err(Error::Parse(format!("{g} is not dihedral"))),
                },
                (None, None) => unreachable!("clap requires one of --n, --group"),
            };
            commands::dihedral(n, *q, budget)
        }
        Command::Chainring { ring, group } => commands::chainring(ring, group),
        Command::Verify { .. } => unreachable!("verify produces no tables"),
    }
}

/// Runs a subcommand given as argument words (used to regenerate goldens).
pub(crate) fn run_args(args: &[&str]) -> Result<Vec<Table>> {
    let cli = Cli::try_parse_from(std::iter::once("galcodes").chain(args.iter().copied()))
        .map_err(|e| Error::Parse(e.to_string()))?;
    tables(&cli)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::NotPrime(_)
        | Error::FieldTooLarge { .. }
        | Error::ZeroDegree
        | Error::InvalidGroup(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if let Command::Verify { suite, goldens, bless } = &cli.command {
        return goldens::verify(suite, goldens.as_deref(), *bless);
    }
    let text = render_all(&tables(cli)?, cli.format);
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Invariant(format!("writing {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
