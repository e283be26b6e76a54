//! Game spaces, the built-in corpus, and counterexample search.

mod corpus;
mod counterexample;
mod space;
mod sweep;

pub use corpus::{corpus_game, builtin_corpus, CorpusEntry};
pub use counterexample::{find_counterexample, search_games, summary_footer, CounterexampleReport, SearchOptions, SearchOutcome, SearchStats};
pub use space::{enumerate_games, monotone_families, GameSpace, MAX_EXHAUSTIVE_PLAYERS, MAX_SPACE_SIZE};
pub use sweep::{sweep, Counts, Summary, SummaryRow};
