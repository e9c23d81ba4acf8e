use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use monozeta::cli::{self, ChiQuery, CliError, Output};

#[derive(Parser)]
#[command(name = "monozeta", version, about = "Monodromy zeta functions of polynomial families")]
struct Args {
    /// Append the power series of the result through t^N.
    #[arg(long, global = true, value_name = "N")]
    series: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Milnor-fibre zeta of an isolated germ.
    Germ {
        expr: Option<String>,
        /// Read the expression from a file instead.
        #[arg(long, conflicts_with = "expr")]
        file: Option<PathBuf>,
        /// Variable order, comma or space separated.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Local zeta of a family `f + s*g` read from a family file.
    Family {
        file: PathBuf,
        /// Divide by the family restricted to this variable's hyperplane.
        #[arg(long, value_name = "VAR")]
        hat: Option<String>,
    },
    /// Assemble a global zeta from a strata file.
    Integrate { file: PathBuf },
    /// Built-in worked examples 1 to 4.
    Example {
        id: u32,
        #[arg(long)]
        d0: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Euler characteristics of projective varieties.
    Chi {
        #[command(subcommand)]
        what: Chi,
    },
}

#[derive(Subcommand)]
enum Chi {
    /// CP^m.
    Projective { m: u32 },
    /// Smooth hypersurface of degree d in CP^m.
    Hypersurface {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
    },
    /// Smooth complete intersection of degrees d1, d2 in CP^m.
    Intersection {
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
        #[arg(long)]
        m: u32,
    },
    /// Complement of two transversal smooth hypersurfaces in CP^m.
    Complement {
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
        #[arg(long)]
        m: u32,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(args: Args) -> Result<Output, CliError> {
    let series = args.series;
    match args.command {
        Command::Germ { expr, file, vars } => {
            let text = match (expr, file) {
                (Some(e), _) => e,
                (None, Some(path)) => read(&path)?,
                (None, None) => return Err(CliError::Input("give an expression or --file".into())),
            };
            let vars = vars.map(|v| cli::split_vars(&v));
            cli::germ_command(text.trim(), vars.as_deref(), series)
        }
        Command::Family { file, hat } => cli::family_command(&read(&file)?, hat.as_deref(), series),
        Command::Integrate { file } => cli::integrate_command(&read(&file)?, series),
        Command::Example { id, d0, d, n } => cli::example_command(id, d0, d, n, series),
        Command::Chi { what } => cli::chi_command(match what {
            Chi::Projective { m } => ChiQuery::Projective { m },
            Chi::Hypersurface { d, m } => ChiQuery::Hypersurface { d, m },
            Chi::Intersection { d1, d2, m } => ChiQuery::Intersection { d1, d2, m },
            Chi::Complement { d1, d2, m } => ChiQuery::Complement { d1, d2, m },
        }),
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("{w}");
            }
            println!("{}", out.stdout);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
