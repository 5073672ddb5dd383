//! `linial`: tables, characteristic polynomials and verification suites for
//! homogenized Linial arrangements and their Dowling analogues.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(name = "linial", version, about = "Intersection lattices of homogenized Linial arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    csv: bool,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Lift the built-in tractability limits.
    #[arg(long, global = true)]
    force: bool,
}

impl GlobalOpts {
    fn format(&self) -> Format {
        if self.csv {
            Format::Csv
        } else {
            self.format
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number sequences: g, h, D, DC, Dm, rB, descent.
    Table(TableArgs),
    /// Characteristic polynomial by one route, or by every available route.
    Chi(ChiArgs),
    /// Möbius values from the bottom of a lattice.
    Mobius(MobiusArgs),
    /// Region counts and the Poincaré polynomial.
    Regions(FamilyArgs),
    /// Truncated generating functions.
    Series(SeriesArgs),
    /// Run a verification suite (or `all`).
    Verify(VerifyArgs),
    /// Map an ID tree to its D-cycle, or search for the tree of a D-cycle.
    Psi(PsiArgs),
    /// List the members of a permutation family.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    G,
    H,
    #[value(name = "D")]
    D,
    #[value(name = "DC")]
    Dc,
    #[value(name = "Dm")]
    Dm,
    #[value(name = "rB")]
    Rb,
    Descent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enumeration,
    Series,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    family: TableFamily,
    /// Largest index.
    #[arg(long)]
    n: u32,
    /// Smallest index (default 0 for h, 1 otherwise).
    #[arg(long)]
    from: Option<u32>,
    #[arg(long, default_value_t = 2)]
    m: u32,
    /// How values are obtained; by default h and rB come from their series.
    #[arg(long, value_enum)]
    method: Option<Method>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// braid, typeA, typeB or dowling.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
}

#[derive(Args, Debug)]
pub struct ChiArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    /// poset_mobius, dperm_counts, id_forests, rational_arrangement,
    /// finite_field_interpolation, or `all`.
    #[arg(long, default_value = "all")]
    route: String,
}

#[derive(Args, Debug)]
pub struct MobiusArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    /// An element such as `12|34` or `0 5|1^0 3^1|2^0 4^2`; default is the top.
    #[arg(long)]
    element: Option<String>,
    /// List every element with its Möbius value.
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// median Genocchi series
    Bd,
    /// type B region series
    Bbd,
    /// characteristic polynomial series (uses --m)
    Char,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    kind: SeriesKind,
    #[arg(long, default_value_t = 6)]
    trunc: usize,
    #[arg(long, default_value_t = 1)]
    m: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name or `all`.
    suite: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    trunc: Option<usize>,
    /// Include per-item wall-clock times (output is then not reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
pub struct PsiArgs {
    /// Edge-list file of the tree (`parent child` per line), `-` for stdin.
    #[arg(long, conflicts_with = "find")]
    tree: Option<PathBuf>,
    /// A D-cycle such as `(4,2,1,5,6,3,7,8)`; prints its ID tree.
    #[arg(long)]
    find: Option<String>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// dumont, dumont_derangement, dperm, dcycle, labeled_dperm, labeled_dcycle.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 2)]
    m: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let fmt = cli.global.format();
    let force = cli.global.force;
    let result = match cli.command {
        Command::Table(a) => commands::table(&a, fmt, force),
        Command::Chi(a) => commands::chi(&a, fmt, force),
        Command::Mobius(a) => commands::mobius(&a, fmt, force),
        Command::Regions(a) => commands::regions(&a, fmt, force),
        Command::Series(a) => commands::series(&a, fmt, force),
        Command::Verify(a) => commands::verify(&a, fmt, force),
        Command::Psi(a) => commands::psi(&a, fmt, force),
        Command::Enumerate(a) => commands::list(&a, fmt, force),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
