//! `artin`: exact invariants of local Galois representations and the
//! global series built from them, driven by fixture files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use artin_cli::assemble::CliError;
use artin_cli::commands;
use artin_cli::fixture::{parse_fixture, Fixture};
use artin_cli::report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "artin",
    version,
    about = "Exact local and global invariants of Galois representations"
)]
struct Cli {
    /// Output shape: human-readable lines or key=value records.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Records,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Format {
        match arg {
            FormatArg::Text => Format::Text,
            FormatArg::Records => Format::Records,
        }
    }
}

#[derive(Args)]
struct FixtureArg {
    /// Fixture file to read.
    path: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every section of a fixture assembles.
    Validate(FixtureArg),
    /// Print the conjugacy classes and character table of the group.
    Table(FixtureArg),
    /// Induce the trivial character of a named subgroup and decompose it.
    Induce {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Subgroup name from the [subgroups] section.
        #[arg(long)]
        subgroup: String,
    },
    /// Local polynomial of a named character.
    LocalPoly {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Character name from the [characters] section.
        #[arg(long)]
        rep: String,
    },
    /// Conductor exponent of a named character, with the Swan cross-check.
    Conductor {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Character name from the [characters] section.
        #[arg(long)]
        rep: String,
    },
    /// Discriminant valuation of the fixed field of a subgroup.
    Disc {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Subgroup name; the trivial subgroup (the whole field) if absent.
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Operations on the [wd] representation.
    #[command(subcommand)]
    Wd(WdCommand),
    /// Elliptic-curve local data.
    #[command(subcommand)]
    Ec(EcCommand),
    /// Frobenius conjugacy class of an unramified prime.
    Frobenius {
        #[command(flatten)]
        fixture: FixtureArg,
        #[arg(long)]
        prime: u64,
        /// Also print the orbit resolvent at this stride.
        #[arg(long)]
        stride: Option<usize>,
    },
    /// Dirichlet coefficients of the global series.
    Lseries {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Number of coefficients to produce.
        #[arg(long)]
        limit: u64,
    },
    /// Functional-equation parameters of the global series.
    FeData(FixtureArg),
    /// Verify the zeta factorization encoded by the fixture's tower.
    ZetaIdentity {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Compare coefficients up to this bound.
        #[arg(long, default_value_t = 200)]
        limit: u64,
    },
}

#[derive(Subcommand)]
enum WdCommand {
    /// Local polynomial of the representation.
    Poly(FixtureArg),
    /// Conductor including the monodromy contribution.
    Cond(FixtureArg),
    /// Tensor square, listed by component.
    Tensor(FixtureArg),
}

#[derive(Subcommand)]
enum EcCommand {
    /// Brute-force point count over the base field.
    Count {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Count over this prime field instead of the fixture's q.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Point count over an extension field via the trace recurrence.
    Extension {
        #[command(flatten)]
        fixture: FixtureArg,
        /// Extension degree over the prime field.
        #[arg(long)]
        degree: u32,
        /// Base prime; the fixture's q if absent.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// The attached Weil-Deligne representation.
    Wd(FixtureArg),
}

fn load(path: &Path) -> Result<Fixture> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let fixture = parse_fixture(&text)
        .map_err(CliError::from)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(fixture)
}

fn dispatch(command: &Command) -> Result<Report> {
    let report = match command {
        Command::Validate(arg) => commands::validate(&load(&arg.path)?)?,
        Command::Table(arg) => commands::table(&load(&arg.path)?)?,
        Command::Induce { fixture, subgroup } => {
            commands::induce_trivial(&load(&fixture.path)?, subgroup)?
        }
        Command::LocalPoly { fixture, rep } => commands::local_poly(&load(&fixture.path)?, rep)?,
        Command::Conductor { fixture, rep } => commands::conductor(&load(&fixture.path)?, rep)?,
        Command::Disc { fixture, subgroup } => {
            commands::disc(&load(&fixture.path)?, subgroup.as_deref())?
        }
        Command::Wd(WdCommand::Poly(arg)) => commands::wd_poly(&load(&arg.path)?)?,
        Command::Wd(WdCommand::Cond(arg)) => commands::wd_cond(&load(&arg.path)?)?,
        Command::Wd(WdCommand::Tensor(arg)) => commands::wd_tensor_square(&load(&arg.path)?)?,
        Command::Ec(EcCommand::Count { fixture, prime }) => {
            commands::ec_count(&load(&fixture.path)?, *prime)?
        }
        Command::Ec(EcCommand::Extension {
            fixture,
            degree,
            prime,
        }) => commands::ec_extension(&load(&fixture.path)?, *degree, *prime)?,
        Command::Ec(EcCommand::Wd(arg)) => commands::ec_wd(&load(&arg.path)?)?,
        Command::Frobenius {
            fixture,
            prime,
            stride,
        } => commands::frobenius(&load(&fixture.path)?, *prime, *stride)?,
        Command::Lseries { fixture, limit } => commands::lseries(&load(&fixture.path)?, *limit)?,
        Command::FeData(arg) => commands::fe_data(&load(&arg.path)?)?,
        Command::ZetaIdentity { fixture, limit } => {
            commands::zeta_identity(&load(&fixture.path)?, *limit)?
        }
    };
    Ok(report)
}

/// 3 for filesystem problems, the classified code for command errors,
/// 1 otherwise.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<std::io::Error>().is_some() {
            return 3;
        }
        if let Some(cli) = cause.downcast_ref::<CliError>() {
            return cli.exit_code() as u8;
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format.into()));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
