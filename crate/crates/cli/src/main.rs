use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use romdom_cli::commands::{self, GammaMethod, GraphFormat, LabelFormat, LabelMethod, EXIT_USAGE};
use romdom_cli::{formats, CliError, Input, Outcome, Settings};
use romdom_core::solve;
use romdom_core::Subcase;

/// Roman domination numbers of comets, double comets, combs and arbitrary
/// small graphs.
///
/// Graph arguments accept a family spec (`comet:t,r`, `dcomet:n,a,b`,
/// `comb:n`) or a path to an edge-list file.
#[derive(Parser)]
#[command(name = "romdom", version, about)]
struct Cli {
    /// Disable branch-and-bound pruning in the brute-force solver.
    #[arg(long, global = true)]
    no_prune: bool,

    /// Skip brute force above this many vertices (gamma --method all, sweep).
    #[arg(long, global = true, default_value_t = 14)]
    brute_cutoff: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubcaseArg {
    I,
    Ii,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family graph, or a seeded random tree.
    Gen {
        #[arg(required_unless_present = "random_tree")]
        spec: Option<String>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
        /// Uniform random labeled tree on this many vertices instead of a family.
        #[arg(long, conflicts_with = "spec")]
        random_tree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute the Roman domination number.
    Gamma {
        input: String,
        #[arg(long, value_enum, default_value = "all")]
        method: GammaMethod,
    },
    /// Emit an optimal Roman dominating function.
    Label {
        input: String,
        #[arg(long, value_enum, default_value = "construction")]
        method: LabelMethod,
        #[arg(long, value_enum, default_value = "pairs")]
        format: LabelFormat,
        /// Alternative tail construction, where one exists.
        #[arg(long, value_enum)]
        subcase: Option<SubcaseArg>,
    },
    /// Check a labeling against a graph.
    Verify { graph: String, labeling: String },
    /// Tabulate closed form vs. tree DP vs. brute force as CSV.
    ///
    /// Ranges are inclusive: `romdom sweep comet t=2..10 r=1..3`,
    /// `romdom sweep dcomet p=3..9 a=1 b=1`, `romdom sweep comb n=1..7`.
    Sweep { family: String, ranges: Vec<String> },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let settings = Settings {
        prune: !cli.no_prune,
        brute_cutoff: cli.brute_cutoff,
    };
    match cli.command {
        Command::Gen {
            spec,
            format,
            random_tree,
            seed,
        } => {
            let g = match (random_tree, spec) {
                (Some(n), _) => solve::random_tree(n, seed)?,
                (None, Some(spec)) => Input::load(&spec)?.graph()?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            Ok(commands::gen(&g, format))
        }
        Command::Gamma { input, method } => {
            commands::gamma(&Input::load(&input)?, method, &settings)
        }
        Command::Label {
            input,
            method,
            format,
            subcase,
        } => {
            let subcase = subcase.map(|s| match s {
                SubcaseArg::I => Subcase::I,
                SubcaseArg::Ii => Subcase::II,
            });
            commands::label(&Input::load(&input)?, method, subcase, format, &settings)
        }
        Command::Verify { graph, labeling } => {
            let g = Input::load(&graph)?.graph()?;
            let f = formats::parse_labeling(&commands::read(&labeling)?)?;
            commands::verify(&g, &f)
        }
        Command::Sweep { family, ranges } => {
            let specs = commands::sweep_specs(&family, &ranges)?;
            commands::sweep(&specs, &settings)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
