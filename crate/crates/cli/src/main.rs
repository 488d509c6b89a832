mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "closedgraphs", version, about = "Maximal dense subgraphs of c-closed graphs")]
pub struct Cli {
    /// Worker threads for parallel enumerators.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Include wall time in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Refuse inputs with more than this many vertices.
    #[arg(long = "limit-n", global = true)]
    pub limit_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Edge-list or DIMACS file; `-` reads standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closure number and a witness pair.
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        csv: bool,
    },
    /// Run a structured enumerator.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// One result per line instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Brute-force reference enumeration of maximal sets.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        predicate: PredicateArg,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Ball radius for local treewidth.
        #[arg(long, default_value_t = 5)]
        radius: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Check the counting bounds on small graphs.
    VerifyBounds {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Number of vertices; all sizes up to the scan limit when omitted.
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// Prefix size for the moon-moser and m1 suites.
        #[arg(long, default_value_t = 0)]
        prefix: usize,
        /// Degree cap for the m1 suite, largest d for kappa.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 2)]
        l: usize,
        /// Independent-set sizes for the example1 suite.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Graph for the lemmas suite; all graphs up to `--N` vertices otherwise.
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        csv: bool,
    },
    /// Write a generated graph as an edge list.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Part sizes for complete multipartite graphs.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        l: usize,
        /// Edge probability for random graphs.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Raise the closure number to at most this value by adding edges.
        #[arg(long)]
        closure: Option<usize>,
    },
    /// CSV of sizes, times and candidate counts against the bounds.
    Bench {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// Random graph sizes, used when no files are given.
        #[arg(long, value_delimiter = ',', default_value = "8,10,12")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.3,0.6")]
        p: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Input graph files.
        files: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Cliques,
    IndependentSets,
    Plexes,
    CoForests,
    CoTreewidth,
    LocalCoTreewidth,
    CoDegeneracy,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Superset,
    Exact,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredicateArg {
    IndependentSet,
    Clique,
    MaxDegree,
    Plex,
    Forest,
    Treewidth,
    Degeneracy,
    LocalTreewidth,
    NonedgesLeSize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    MoonMoser,
    M1,
    Lemmas,
    Example1,
    Kappa,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Multipartite,
    MoonMoser,
    K5Union,
    Example1,
    Random,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CLOSEDGRAPHS_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        log::warn!("thread pool: {e}");
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
