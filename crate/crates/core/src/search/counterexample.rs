//! First-failure search for postulate counterexamples.

use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::game::{Game, Limits};
use crate::measures::{MeasureKind, PowerMeasure};
use crate::postulates::{InstanceOptions, PostulateId, PostulateRegistry, Qualifier, Verdict, Witness};

use super::space::{enumerate_games, GameSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub instances: InstanceOptions,
    /// Games checked concurrently per batch; results are merged in order.
    pub batch_size: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { instances: InstanceOptions::default(), batch_size: 64 }
    }
}

/// Work done by a search. Contains no timing so that reports are
/// reproducible byte for byte; callers time the search themselves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub space: String,
    pub games_tested: usize,
    pub instances_checked: usize,
    pub not_applicable: usize,
    pub bloc_cap: String,
}

/// A failing instance together with the game it was found in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub postulate: PostulateId,
    pub measure: MeasureKind,
    pub game: Game,
    #[serde(flatten)]
    pub witness: Witness,
    pub stats: SearchStats,
}

impl CounterexampleReport {
    pub fn qualifier(&self) -> &Qualifier {
        &self.witness.qualifier
    }

    /// Re-runs the check with the reference measure of the same kind.
    pub fn replay(&self) -> Result<Verdict> {
        let measure = self.measure.measure(Limits::default());
        PostulateRegistry::standard().get(self.postulate).check(&self.game, measure.as_ref(), self.qualifier())
    }

    /// True when replaying fails again with identical fractions.
    pub fn replays_exactly(&self) -> Result<bool> {
        let verdict = self.replay()?;
        Ok(verdict.fails()
            && verdict
                .witness
                .as_ref()
                .is_some_and(|w| w.lhs == self.witness.lhs && w.rhs == self.witness.rhs))
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Box<CounterexampleReport>),
    NoneFound(SearchStats),
}

impl SearchOutcome {
    pub fn report(&self) -> Option<&CounterexampleReport> {
        match self {
            SearchOutcome::Found(r) => Some(r),
            SearchOutcome::NoneFound(_) => None,
        }
    }

    pub fn stats(&self) -> &SearchStats {
        match self {
            SearchOutcome::Found(r) => &r.stats,
            SearchOutcome::NoneFound(s) => s,
        }
    }
}

struct GameResult {
    checked: usize,
    not_applicable: usize,
    failure: Option<Verdict>,
}

fn first_failure(
    registry: &PostulateRegistry,
    game: &Game,
    measure: &dyn PowerMeasure,
    postulate: PostulateId,
    options: &InstanceOptions,
) -> Result<GameResult> {
    let checker = registry.get(postulate);
    let mut result = GameResult { checked: 0, not_applicable: 0, failure: None };
    for qualifier in checker.instances(game, options) {
        let verdict = checker.check(game, measure, &qualifier)?;
        result.checked += 1;
        if verdict.is_not_applicable() {
            result.not_applicable += 1;
        }
        if verdict.fails() {
            result.failure = Some(verdict);
            break;
        }
    }
    Ok(result)
}

/// Searches `space` in enumeration order for the first game with a failing
/// instance of `postulate` under `measure`. Within a game, instances are
/// tried in the checker's documented order (blocs by size then bitmask,
/// pairs lexicographically, permutations lexicographically).
pub fn find_counterexample(
    space: &GameSpace,
    measure: &dyn PowerMeasure,
    postulate: PostulateId,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    let games = enumerate_games(space)?;
    search_games(&games, &space.to_string(), measure, postulate, options)
}

/// As [`find_counterexample`], over an explicit list of games.
pub fn search_games(
    games: &[Game],
    label: &str,
    measure: &dyn PowerMeasure,
    postulate: PostulateId,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    let registry = PostulateRegistry::standard();
    let mut stats = SearchStats {
        space: label.to_string(),
        games_tested: 0,
        instances_checked: 0,
        not_applicable: 0,
        bloc_cap: match options.instances.bloc_cap {
            Some(cap) => cap.to_string(),
            None => "n when n <= 4, else 3".to_string(),
        },
    };
    for batch in games.chunks(options.batch_size.max(1)) {
        let results: Vec<Result<GameResult>> = batch
            .par_iter()
            .map(|g| first_failure(&registry, g, measure, postulate, &options.instances))
            .collect();
        for (game, result) in batch.iter().zip(results) {
            let result = result?;
            stats.games_tested += 1;
            stats.instances_checked += result.checked;
            stats.not_applicable += result.not_applicable;
            if let Some(verdict) = result.failure {
                let witness = verdict.witness.expect("failing verdicts carry a witness");
                return Ok(SearchOutcome::Found(Box::new(CounterexampleReport {
                    postulate,
                    measure: measure.kind(),
                    game: game.clone(),
                    witness,
                    stats,
                })));
            }
        }
    }
    Ok(SearchOutcome::NoneFound(stats))
}

/// Human-readable footer for a search, including its wall time.
pub fn summary_footer(outcome: &SearchOutcome, elapsed: Duration) -> String {
    let s = outcome.stats();
    let found = if outcome.report().is_some() { "counterexample found" } else { "no counterexample" };
    format!(
        "{found}: {} games, {} instances ({} not applicable), bloc cap {}, {:.3}s",
        s.games_tested,
        s.instances_checked,
        s.not_applicable,
        s.bloc_cap,
        elapsed.as_secs_f64()
    )
}
