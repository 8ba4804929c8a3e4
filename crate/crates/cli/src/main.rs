//! `kexchange`: local search for vertex cover from the command line.
//!
//! Exit codes: `0` success (improved cover found, check passed), `1` a
//! negative answer (no improvement within k, check failed), `2` bad input.

mod check;
mod files;
mod generate;
mod reduce;
mod report;
mod solve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "kexchange", version, about = "k-exchange local search for vertex cover")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Look for a smaller vertex cover near a given one.
    Solve(SolveArgs),
    /// Build derived instances (hardness reductions, subdivisions).
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Generate random instances.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Validate certificates and witnesses.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Strict,
    Permissive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Universal when q <= 16 and the family is tractable, else randomized.
    Auto,
    Universal,
    Randomized,
}

/// `auto` or an explicit non-negative integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaArg {
    Auto,
    Fixed(usize),
}

fn parse_beta(s: &str) -> Result<BetaArg, String> {
    if s == "auto" {
        return Ok(BetaArg::Auto);
    }
    s.parse()
        .map(BetaArg::Fixed)
        .map_err(|_| format!("expected `auto` or a non-negative integer, got {s:?}"))
}

#[derive(Args)]
pub struct SolveArgs {
    /// DIMACS edge file.
    #[arg(long)]
    graph: PathBuf,
    /// Current vertex cover (1-based ids).
    #[arg(long)]
    cover: PathBuf,
    /// Exchange radius.
    #[arg(short)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Engine::Permissive)]
    engine: Engine,
    /// Separability parameter for the permissive engine.
    #[arg(long, value_parser = parse_beta, default_value = "auto")]
    beta: BetaArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    /// Seed for randomized coloring families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Target miss probability; raises the number of random colorings.
    #[arg(long)]
    delta: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Repeat from each improved cover until no improvement is found.
    #[arg(long)]
    iterate: bool,
    /// Write the final cover here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Clique instance to a bipartite Hall-set instance.
    CliqueToHallset(CliqueArgs),
    /// Same, with the A side 2-subdivided.
    #[command(name = "clique-to-hallset-2sub")]
    CliqueToHallset2sub(CliqueArgs),
    /// Hall-set instance to a cover instance with radius 2k-1.
    HallsetToLsvc(HallArgs),
    /// Double subdivision of every edge.
    Subdivide(SubdivideArgs),
}

#[derive(Args)]
pub struct CliqueArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Clique size (at least 4).
    #[arg(short)]
    k: usize,
    /// Output prefix: writes `<out>.dimacs` and `<out>.side-a`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
pub struct HallArgs {
    /// Bipartite DIMACS graph.
    #[arg(long)]
    graph: PathBuf,
    /// Vertices of side A; the rest form side B.
    #[arg(long)]
    side_a: PathBuf,
    /// Hall-set size bound.
    #[arg(short)]
    k: usize,
    /// Output prefix: writes `<out>.dimacs` and `<out>.cover`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
pub struct SubdivideArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Output prefix: writes `<out>.dimacs`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum GenCommand {
    /// `G(n, p)` with a maximal-matching cover.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random bipartite graph; side A is written as the sidecar.
    Bipartite {
        #[arg(long)]
        na: usize,
        #[arg(long)]
        nb: usize,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Double subdivision of `G(base_n, base_m)` with a maximal-matching cover.
    Subdivided {
        #[arg(long)]
        base_n: usize,
        #[arg(long)]
        base_m: usize,
        #[command(flatten)]
        common: GenCommon,
    },
}

#[derive(Args)]
pub struct GenCommon {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output prefix.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Whether the graph is β-separable.
    Separability {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_parser = parse_beta)]
        beta: BetaArg,
    },
    /// Whether a set covers every edge.
    Cover {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Whether `W ⊆ A` has fewer neighbors than elements.
    HallWitness {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        side_a: PathBuf,
        #[arg(long)]
        set: PathBuf,
        /// Optional size bound on W.
        #[arg(short)]
        k: Option<usize>,
    },
    /// Whether `S* ⊆ S` certifies an improvement within distance k.
    StructuralWitness {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        set: PathBuf,
        #[arg(short)]
        k: usize,
    },
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Solve(args) => solve::run(args),
        Command::Reduce(cmd) => reduce::run(cmd),
        Command::Gen(cmd) => generate::run(cmd),
        Command::Check(cmd) => check::run(cmd),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
