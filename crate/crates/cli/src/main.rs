//! `vpower`: exact voting power and blocker-postulate checks from the shell.
//!
//! Exit status: 0 on success (or every checked postulate holds), 1 when a
//! postulate fails, a search finds a counterexample or a reproduced value
//! does not match, 2 on usage or input errors.

mod commands;
mod output;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "vpower", version, about = "Exact a priori voting power and blocker postulates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Power of every player under one or more measures.
    Power {
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        measures: MeasureArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check postulates on a game, on one qualifier or on every instance.
    Check(CheckArgs),
    /// Form a bloc and print the resulting game.
    Bloc {
        #[command(flatten)]
        game: GameArgs,
        /// Comma-separated 1-based members, e.g. "1,2".
        #[arg(long)]
        bloc: String,
        /// 1-based lead player (default: lowest member).
        #[arg(long)]
        lead: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Append a YES-blocker or NO-blocker and print the resulting game.
    #[command(group(ArgGroup::new("kind").required(true).args(["yes", "no"])))]
    AddBlocker {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        yes: bool,
        #[arg(long)]
        no: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Search a space of games for postulate counterexamples.
    Search(SearchArgs),
    /// Recompute the published values and check them exactly.
    #[command(group(ArgGroup::new("which").required(true).args(["all", "theorem", "item"])))]
    Reproduce {
        #[arg(long)]
        all: bool,
        /// Theorem number, 1 to 9.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
        theorem: Option<u8>,
        /// One of the extra items listed by `vpower list`.
        #[arg(long)]
        item: Option<String>,
    },
    /// Validate a game and describe its structure.
    Validate {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List corpus games, measures, postulates and reproduction items.
    List,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GameArgs {
    /// Game file (JSON); `-` reads standard input.
    #[arg(long)]
    game: Option<PathBuf>,
    /// Built-in game, e.g. g_311, unanimity5, dictator3_2.
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Args, Debug)]
struct MeasureArgs {
    /// Measure name (repeatable): pb, ss, rm, pb-fast, ss-fast. Default: pb, ss, rm.
    #[arg(long = "measure", value_name = "NAME")]
    measures: Vec<String>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    game: GameArgs,
    /// Postulate id (repeatable), e.g. sbk1, wmp2, add1, or `all`.
    #[arg(long = "postulate", value_name = "ID", required = true)]
    postulates: Vec<String>,
    #[command(flatten)]
    measures: MeasureArgs,
    /// Bloc for bloc postulates, e.g. "1,2".
    #[arg(long)]
    bloc: Option<String>,
    /// 1-based bloc lead (default: lowest member).
    #[arg(long, requires = "bloc")]
    lead: Option<usize>,
    /// Ordered player pair for the added-blocker postulates.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pair: Option<Vec<usize>>,
    /// Relabelling for ISO, e.g. "2,3,1" sends player 1 to 2.
    #[arg(long)]
    perm: Option<String>,
    /// Largest bloc tried when no bloc is given.
    #[arg(long)]
    bloc_cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = SpaceKind::Exhaustive)]
    space: SpaceKind,
    /// Exact player count for the exhaustive space.
    #[arg(long, conflicts_with = "max_n")]
    n: Option<usize>,
    /// Largest player count (exhaustive: every n up to it).
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_weight: Option<u64>,
    /// Quota range for the grid, e.g. "2..5".
    #[arg(long)]
    quota: Option<String>,
    /// Number of random games.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Postulate id (repeatable) or `all`.
    #[arg(long = "postulate", value_name = "ID", required = true)]
    postulates: Vec<String>,
    #[command(flatten)]
    measures: MeasureArgs,
    #[arg(long)]
    bloc_cap: Option<usize>,
    /// Tally holds/fails/n-a over the whole space instead of stopping at
    /// the first counterexample.
    #[arg(long)]
    tally: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceKind {
    Exhaustive,
    Grid,
    Random,
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    /// A postulate failed, a search found a counterexample, or a reproduced
    /// value did not match.
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
