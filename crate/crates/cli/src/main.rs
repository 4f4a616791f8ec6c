//! `ferrers`: verify Gröbner bases, Hilbert series, vertex decomposability
//! and diagonal reductions for (specialized) Ferrers tableaux.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ferrers_core::complex::MAX_VERTICES;
use ferrers_core::hilbert::Variant;
use ferrers_core::ideals::DEFAULT_POWER_BUDGET;

#[derive(Parser, Debug)]
#[command(name = "ferrers", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    GbVerify,
    Hilbert,
    Reduction,
    VdCheck,
    Sweep,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::GbVerify => "gb-verify",
            CommandKind::Hilbert => "hilbert",
            CommandKind::Reduction => "reduction",
            CommandKind::VdCheck => "vd-check",
            CommandKind::Sweep => "sweep",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the 2-minors of T and S form Gröbner bases.
    GbVerify(RunArgs),
    /// Compare the Hilbert numerator from four independent methods.
    Hilbert(RunArgs),
    /// Compute the reduction number of the diagonal candidate.
    Reduction(RunArgs),
    /// Check vertex decomposability and heights of the initial complexes.
    VdCheck(RunArgs),
    /// Run gb-verify, vd-check and hilbert on every shape.
    Sweep(RunArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantArg {
    Ferrers,
    Specialized,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Ferrers => Variant::Ferrers,
            VariantArg::Specialized => Variant::Specialized,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
pub struct RunArgs {
    /// Inline shape, e.g. '{"lambda":[5,5,4],"mu":[1,3,3]}'.
    #[arg(long, group = "source")]
    pub shape: Option<String>,
    /// JSON array of shapes, or one shape object per line.
    #[arg(long, group = "source")]
    pub shapes_file: Option<PathBuf>,
    /// Enumerate shapes, e.g. 'n<=3,m<=5,cells<=10'.
    #[arg(long, group = "source")]
    pub sweep: Option<String>,
    #[arg(long, value_enum, default_value_t = VariantArg::Specialized)]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Largest r tried by `reduction` (default n + 2).
    #[arg(long)]
    pub r_max: Option<usize>,
    /// Degree window of the Hilbert-function oracle (default max(6, n + 2)).
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    pub degree_bound: Option<u64>,
    /// Shapes with more cells are skipped.
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
    pub cell_cap: u64,
    /// Complexes on more vertices are skipped by vd-check.
    #[arg(long, default_value_t = MAX_VERTICES as u64, value_parser = clap::value_parser!(u64).range(1..=MAX_VERTICES as u64))]
    pub vd_vertex_cap: u64,
    /// Products allowed per power or slice step of `reduction`.
    #[arg(long, default_value_t = DEFAULT_POWER_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub power_budget: u64,
    /// Extra reduction generator in the fiber variables, e.g. 'x[1]*x[2]+x[3]*x[4]'.
    #[arg(long = "extra-gen")]
    pub extra_gens: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = match cli.command {
        Command::GbVerify(a) => (CommandKind::GbVerify, a),
        Command::Hilbert(a) => (CommandKind::Hilbert, a),
        Command::Reduction(a) => (CommandKind::Reduction, a),
        Command::VdCheck(a) => (CommandKind::VdCheck, a),
        Command::Sweep(a) => (CommandKind::Sweep, a),
    };
    let shapes = match input::load_shapes(kind, &args) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let results = match commands::run_all(kind, &args, &shapes) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = output::Report::new(kind, results);
    for r in report
        .results
        .iter()
        .filter(|r| r.status == output::Status::Error)
    {
        eprintln!("error: {}: {}", r.shape, r.summary);
    }
    if let Err(e) = output::emit(&report, args.format) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code)
}
