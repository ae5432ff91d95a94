//! `skewbrace`: enumerate, store and analyze finite skew braces.

mod commands;
mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "skewbrace", version, about = "Finite skew braces and their Yang–Baxter solutions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate braces up to isomorphism and print the census.
    Enumerate(EnumerateArgs),
    /// Full report on one brace.
    Analyze(SourceArgs),
    /// Check the radical theorems on every brace of a population.
    Check(PopulationArgs),
    /// Two-sidedness sweep, simple-brace census and series witnesses.
    Experiments(PopulationArgs),
    /// Database maintenance.
    #[command(subcommand)]
    Db(DbCommand),
    /// Verify the Yang–Baxter solution of one brace.
    Ybe(SourceArgs),
}

/// Either a single order `N` or an inclusive range `A..B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orders(RangeInclusive<usize>);

impl FromStr for Orders {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| format!("invalid order `{t}`"))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => parse(a)?..=parse(b.trim_start_matches('='))?,
            None => {
                let n = parse(s)?;
                n..=n
            }
        };
        if range.is_empty() {
            return Err(format!("empty order range `{s}`"));
        }
        Ok(Orders(range))
    }
}

impl Orders {
    pub fn iter(&self) -> RangeInclusive<usize> {
        self.0.clone()
    }
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    /// Order or range of orders, e.g. `8` or `1..13`.
    #[arg(long)]
    order: Orders,
    /// Only braces with abelian additive group.
    #[arg(long)]
    classical: bool,
    /// Allow order 16.
    #[arg(long)]
    deep: bool,
    /// Write the braces as an SBDB file.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Where a single brace comes from: a table file, or an order and index in a
/// database (enumerated on the fly when no database is given).
#[derive(Debug, Args)]
struct SourceArgs {
    /// Brace table file (`brace <n>`, additive table, multiplicative table).
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, env = "SKEWBRACE_DB")]
    db: Option<PathBuf>,
    #[arg(long)]
    order: Option<usize>,
    /// 1-based index within the order.
    #[arg(long)]
    index: Option<usize>,
    /// Allow on-the-fly enumeration of order 16.
    #[arg(long)]
    deep: bool,
}

/// A set of braces: the given orders of a database, or enumerated on the fly.
#[derive(Debug, Args)]
struct PopulationArgs {
    #[arg(long, env = "SKEWBRACE_DB")]
    db: Option<PathBuf>,
    /// Order or range of orders (default: every order in the database, or
    /// `1..12` without one).
    #[arg(long)]
    order: Option<Orders>,
    /// Allow on-the-fly enumeration of order 16.
    #[arg(long)]
    deep: bool,
}

#[derive(Debug, Subcommand)]
enum DbCommand {
    /// Pack a brace table file into a one-record database.
    Pack {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the tables of one record.
    Unpack(SourceArgs),
    /// Unpack and re-pack every record.
    Verify {
        #[arg(long, env = "SKEWBRACE_DB")]
        db: PathBuf,
    },
    /// Per-order counts of skew and classical braces.
    Census {
        #[arg(long, env = "SKEWBRACE_DB")]
        db: PathBuf,
    },
    /// List braces matching structural conditions.
    Query(QueryArgs),
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[arg(long, env = "SKEWBRACE_DB")]
    db: PathBuf,
    #[arg(long)]
    order: Option<Orders>,
    /// Catalog name of the additive group, e.g. `C8` or `S3`.
    #[arg(long)]
    additive: Option<String>,
    /// Catalog name of the multiplicative group.
    #[arg(long)]
    multiplicative: Option<String>,
    #[arg(long)]
    classical: bool,
    #[arg(long)]
    non_trivial: bool,
    #[arg(long)]
    simple: bool,
    /// Exact number of ideals.
    #[arg(long)]
    ideals: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(commands::Outcome::Clean) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
