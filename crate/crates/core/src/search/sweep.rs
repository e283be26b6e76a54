//! Holds/fails/not-applicable tallies over many games.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::game::Game;
use crate::measures::{MeasureKind, PowerMeasure};
use crate::postulates::{InstanceOptions, PostulateId, PostulateRegistry, Verdict};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
}

impl Counts {
    fn add(&mut self, verdict: &Verdict) {
        if verdict.holds() {
            self.holds += 1;
        } else if verdict.fails() {
            self.fails += 1;
        } else {
            self.not_applicable += 1;
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.fails + self.not_applicable
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummaryRow {
    pub postulate: PostulateId,
    pub measure: MeasureKind,
    pub counts: Counts,
    /// The first failing verdict in game order, with its game.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<(Game, Verdict)>,
}

/// One row per (postulate, measure), in the order requested.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub games: usize,
    pub rows: Vec<SummaryRow>,
}

impl Summary {
    pub fn row(&self, postulate: PostulateId, measure: MeasureKind) -> Option<&SummaryRow> {
        self.rows.iter().find(|r| r.postulate == postulate && r.measure == measure)
    }

    pub fn counts(&self, postulate: PostulateId, measure: MeasureKind) -> Counts {
        self.row(postulate, measure).map(|r| r.counts).unwrap_or_default()
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<9} {:<7} {:>9} {:>9} {:>9}", "postulate", "measure", "holds", "fails", "n/a")?;
        for row in &self.rows {
            writeln!(
                f,
                "{:<9} {:<7} {:>9} {:>9} {:>9}",
                row.postulate.label(),
                row.measure.label(),
                row.counts.holds,
                row.counts.fails,
                row.counts.not_applicable
            )?;
        }
        write!(f, "{} games", self.games)
    }
}

/// Checks every instance of every postulate under every measure on every
/// game. Games are processed in parallel; the tally and the first failures
/// are merged in game order.
pub fn sweep(
    games: &[Game],
    measures: &[&dyn PowerMeasure],
    postulates: &[PostulateId],
    options: &InstanceOptions,
) -> Result<Summary> {
    let registry = PostulateRegistry::standard();
    let pairs: Vec<(PostulateId, &dyn PowerMeasure)> =
        postulates.iter().flat_map(|&p| measures.iter().map(move |&m| (p, m))).collect();

    type GameTally = Vec<(Counts, Option<Verdict>)>;
    let per_game: Vec<Result<GameTally>> = games
        .par_iter()
        .map(|game| {
            pairs
                .iter()
                .map(|&(id, measure)| {
                    let checker = registry.get(id);
                    let mut counts = Counts::default();
                    let mut failure = None;
                    for q in checker.instances(game, options) {
                        let verdict = checker.check(game, measure, &q)?;
                        counts.add(&verdict);
                        if failure.is_none() && verdict.fails() {
                            failure = Some(verdict);
                        }
                    }
                    Ok((counts, failure))
                })
                .collect()
        })
        .collect();

    let mut rows: Vec<SummaryRow> = pairs
        .iter()
        .map(|&(postulate, m)| SummaryRow { postulate, measure: m.kind(), counts: Counts::default(), first_failure: None })
        .collect();
    for (game, results) in games.iter().zip(per_game) {
        for (row, (counts, failure)) in rows.iter_mut().zip(results?) {
            row.counts.holds += counts.holds;
            row.counts.fails += counts.fails;
            row.counts.not_applicable += counts.not_applicable;
            if row.first_failure.is_none() {
                row.first_failure = failure.map(|v| (game.clone(), v));
            }
        }
    }
    Ok(Summary { games: games.len(), rows })
}
