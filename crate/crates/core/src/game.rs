//! Simple voting games: representation, validation, winning queries,
//! blockers and dummies, plus the JSON game file format.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, PlayerId, MAX_MASK_PLAYERS};
use crate::error::{Error, Result};

/// Bounds on exponential and pseudo-polynomial work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Ceiling on `n` for anything that enumerates all `2^n` divisions.
    pub max_players: usize,
    /// Ceiling on the total weight for the weighted dynamic programs.
    pub max_weight_sum: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_players: 24, max_weight_sum: 1_000_000 }
    }
}

impl Limits {
    pub fn with_max_players(max_players: usize) -> Self {
        Limits { max_players, ..Limits::default() }
    }

    pub fn check_players(&self, n: usize) -> Result<()> {
        if n > self.max_players || n >= MAX_MASK_PLAYERS {
            return Err(Error::TooManyPlayers { n, max: self.max_players.min(MAX_MASK_PLAYERS - 1) });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Weighted { quota: u64, weights: Vec<u64> },
    /// Minimal winning coalitions; always a sorted antichain once validated.
    Explicit { min_winning: Vec<Coalition> },
}

/// A monotone, non-trivial binary voting game on players `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GameFile", into = "GameFile")]
pub struct Game {
    n: usize,
    rule: Rule,
}

impl Game {
    pub fn weighted(quota: u64, weights: Vec<u64>) -> Result<Game> {
        let game = Game { n: weights.len(), rule: Rule::Weighted { quota, weights } };
        game.validate()?;
        Ok(game)
    }

    /// Builds a game from its minimal winning coalitions. Duplicates are
    /// dropped; comparable pairs are rejected.
    pub fn explicit(n: usize, min_winning: Vec<Coalition>) -> Result<Game> {
        let game = Game::from_rule_unchecked(n, Rule::Explicit { min_winning });
        game.validate()?;
        Ok(game)
    }

    /// Builds a game from any generating family of winning coalitions by
    /// keeping only its minimal elements.
    pub fn from_generators(n: usize, generators: Vec<Coalition>) -> Result<Game> {
        Game::explicit(n, minimal_elements(generators))
    }

    /// No validation; pair with [`Game::validate`].
    pub fn from_rule_unchecked(n: usize, rule: Rule) -> Game {
        let rule = match rule {
            Rule::Explicit { mut min_winning } => {
                min_winning.sort();
                min_winning.dedup();
                Rule::Explicit { min_winning }
            }
            weighted => weighted,
        };
        Game { n, rule }
    }

    pub fn unanimity(n: usize) -> Game {
        Game::weighted(n as u64, vec![1; n]).expect("unanimity is a valid game")
    }

    /// Player `d` alone decides; every other player is a dummy.
    pub fn dictator(n: usize, d: PlayerId) -> Game {
        assert!(d < n, "dictator index out of range");
        let weights = (0..n).map(|p| u64::from(p == d)).collect();
        Game::weighted(1, weights).expect("dictator game is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn is_weighted(&self) -> bool {
        matches!(self.rule, Rule::Weighted { .. })
    }

    pub fn full(&self) -> Coalition {
        Coalition::full(self.n)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Malformed("a game needs at least one player".into()));
        }
        if self.n > MAX_MASK_PLAYERS {
            return Err(Error::TooManyPlayers { n: self.n, max: MAX_MASK_PLAYERS });
        }
        match &self.rule {
            Rule::Weighted { quota, weights } => {
                if weights.len() != self.n {
                    return Err(Error::Malformed(format!(
                        "{} weights given for {} players",
                        weights.len(),
                        self.n
                    )));
                }
                if *quota == 0 {
                    return Err(Error::TrivialGame("the empty coalition wins"));
                }
                if u128::from(*quota) > total_weight(weights) {
                    return Err(Error::TrivialGame("the grand coalition loses"));
                }
            }
            Rule::Explicit { min_winning } => {
                if min_winning.is_empty() {
                    return Err(Error::TrivialGame("the grand coalition loses"));
                }
                let full = self.full();
                for m in min_winning {
                    if m.is_empty() {
                        return Err(Error::TrivialGame("the empty coalition wins"));
                    }
                    if !m.is_subset_of(full) {
                        return Err(Error::Malformed(format!("coalition {m} names a player beyond {}", self.n)));
                    }
                }
                for (k, a) in min_winning.iter().enumerate() {
                    for b in &min_winning[k + 1..] {
                        if a.is_subset_of(*b) {
                            return Err(Error::NotAntichain(a.to_string(), b.to_string()));
                        }
                        if b.is_subset_of(*a) {
                            return Err(Error::NotAntichain(b.to_string(), a.to_string()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_player(&self, p: PlayerId) -> Result<()> {
        if p >= self.n {
            return Err(Error::PlayerOutOfRange { player: p, n: self.n });
        }
        Ok(())
    }

    pub fn is_winning(&self, coalition: Coalition) -> bool {
        match &self.rule {
            Rule::Weighted { quota, weights } => coalition_weight(weights, coalition) >= u128::from(*quota),
            Rule::Explicit { min_winning } => min_winning.iter().any(|m| m.is_subset_of(coalition)),
        }
    }

    /// Minimal winning coalitions in ascending mask order. Exponential in `n`
    /// for weighted games.
    pub fn minimal_winning(&self) -> Vec<Coalition> {
        match &self.rule {
            Rule::Explicit { min_winning } => min_winning.clone(),
            Rule::Weighted { quota, weights } => {
                let quota = u128::from(*quota);
                (0..1u64 << self.n)
                    .map(Coalition)
                    .filter(|&s| {
                        let w = coalition_weight(weights, s);
                        let lightest = s.players().map(|p| u128::from(weights[p])).min().unwrap_or(0);
                        w >= quota && w - lightest < quota
                    })
                    .collect()
            }
        }
    }

    /// Smallest size of a winning coalition.
    pub fn min_winning_size(&self) -> usize {
        self.minimal_winning().iter().map(|m| m.len()).min().unwrap_or(self.n)
    }

    /// Players in every winning coalition.
    pub fn yes_blockers(&self) -> Coalition {
        match &self.rule {
            Rule::Weighted { quota, weights } => {
                let total = total_weight(weights);
                Coalition::from_players(
                    (0..self.n).filter(|&p| total - u128::from(weights[p]) < u128::from(*quota)),
                )
            }
            Rule::Explicit { min_winning } => {
                min_winning.iter().fold(self.full(), |acc, m| acc.intersection(*m))
            }
        }
    }

    /// Players whose YES vote alone carries the motion.
    pub fn no_blockers(&self) -> Coalition {
        Coalition::from_players((0..self.n).filter(|&p| self.is_winning(Coalition::singleton(p))))
    }

    /// Players that are both YES- and NO-blockers.
    pub fn dictators(&self) -> Coalition {
        self.yes_blockers().intersection(self.no_blockers())
    }

    /// True when `p` belongs to no minimal winning coalition, which is
    /// equivalent to never being decisive.
    pub fn is_dummy(&self, p: PlayerId) -> bool {
        match &self.rule {
            Rule::Explicit { min_winning } => !min_winning.iter().any(|m| m.contains(p)),
            Rule::Weighted { quota, weights } => {
                let own = u128::from(weights[p]);
                let quota = u128::from(*quota);
                if own == 0 {
                    return true;
                }
                // Reachable weights of the other players, saturated at the quota.
                let mut reach: BTreeSet<u128> = BTreeSet::from([0]);
                for (q, &w) in weights.iter().enumerate() {
                    if q == p || w == 0 {
                        continue;
                    }
                    let shifted: Vec<u128> = reach.iter().map(|&s| (s + u128::from(w)).min(quota)).collect();
                    reach.extend(shifted);
                }
                reach.range(quota.saturating_sub(own)..quota).next().is_none()
            }
        }
    }

    pub fn dummies(&self) -> Coalition {
        Coalition::from_players((0..self.n).filter(|&p| self.is_dummy(p)))
    }

    /// True when both games have the same player count and winning family.
    pub fn same_winning_family(&self, other: &Game) -> bool {
        self.n == other.n && self.minimal_winning() == other.minimal_winning()
    }

    /// The explicit form of this game.
    pub fn to_explicit(&self) -> Game {
        Game { n: self.n, rule: Rule::Explicit { min_winning: self.minimal_winning() } }
    }

    pub fn weights(&self) -> Option<(&u64, &[u64])> {
        match &self.rule {
            Rule::Weighted { quota, weights } => Some((quota, weights)),
            Rule::Explicit { .. } => None,
        }
    }

    pub fn win_table(&self, limits: &Limits) -> Result<WinTable> {
        WinTable::new(self, limits)
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            Rule::Weighted { quota, weights } => {
                let ws: Vec<String> = weights.iter().map(u64::to_string).collect();
                write!(f, "{{{}; {}}}", quota, ws.join(","))
            }
            Rule::Explicit { min_winning } => {
                let ms: Vec<String> = min_winning.iter().map(Coalition::to_string).collect();
                write!(f, "n={} min-winning {}", self.n, ms.join(" "))
            }
        }
    }
}

pub(crate) fn total_weight(weights: &[u64]) -> u128 {
    weights.iter().map(|&w| u128::from(w)).sum()
}

fn coalition_weight(weights: &[u64], coalition: Coalition) -> u128 {
    coalition.players().filter(|&p| p < weights.len()).map(|p| u128::from(weights[p])).sum()
}

/// Drops every set that strictly contains another set of the family.
pub fn minimal_elements(mut family: Vec<Coalition>) -> Vec<Coalition> {
    family.sort_by_key(|c| (c.len(), c.bits()));
    family.dedup();
    let mut kept: Vec<Coalition> = Vec::with_capacity(family.len());
    for c in family {
        if !kept.iter().any(|k| k.is_subset_of(c)) {
            kept.push(c);
        }
    }
    kept.sort();
    kept
}

/// Outcome of every coalition, indexed by mask.
#[derive(Clone, Debug)]
pub struct WinTable {
    n: usize,
    wins: Vec<bool>,
}

impl WinTable {
    pub fn new(game: &Game, limits: &Limits) -> Result<WinTable> {
        limits.check_players(game.n)?;
        let size = 1usize << game.n;
        let wins = match &game.rule {
            Rule::Weighted { .. } => (0..size as u64).map(|s| game.is_winning(Coalition(s))).collect(),
            Rule::Explicit { min_winning } => {
                let mut wins = vec![false; size];
                for m in min_winning {
                    wins[m.bits() as usize] = true;
                }
                // Superset closure.
                for p in 0..game.n {
                    let bit = 1usize << p;
                    for s in 0..size {
                        if s & bit != 0 && wins[s ^ bit] {
                            wins[s] = true;
                        }
                    }
                }
                wins
            }
        };
        Ok(WinTable { n: game.n, wins })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn wins(&self, coalition: Coalition) -> bool {
        self.wins[coalition.bits() as usize]
    }
}

#[derive(Serialize, Deserialize)]
struct GameFile {
    n: usize,
    rule: RuleFile,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RuleFile {
    Weighted { quota: u64, weights: Vec<u64> },
    Explicit { min_winning: Vec<Vec<usize>> },
}

impl TryFrom<GameFile> for Game {
    type Error = Error;

    fn try_from(file: GameFile) -> Result<Game> {
        let rule = match file.rule {
            RuleFile::Weighted { quota, weights } => Rule::Weighted { quota, weights },
            RuleFile::Explicit { min_winning } => {
                let mut sets = Vec::with_capacity(min_winning.len());
                for labels in min_winning {
                    let mut set = Coalition::EMPTY;
                    for label in labels {
                        if label == 0 || label > file.n {
                            return Err(Error::GameFile(format!(
                                "player label {label} outside 1..={}",
                                file.n
                            )));
                        }
                        set = set.with(label - 1);
                    }
                    sets.push(set);
                }
                Rule::Explicit { min_winning: sets }
            }
        };
        if file.n > MAX_MASK_PLAYERS {
            return Err(Error::TooManyPlayers { n: file.n, max: MAX_MASK_PLAYERS });
        }
        let game = Game::from_rule_unchecked(file.n, rule);
        game.validate()?;
        Ok(game)
    }
}

impl From<Game> for GameFile {
    fn from(game: Game) -> GameFile {
        let rule = match game.rule {
            Rule::Weighted { quota, weights } => RuleFile::Weighted { quota, weights },
            Rule::Explicit { min_winning } => RuleFile::Explicit {
                min_winning: min_winning.iter().map(|m| m.labels()).collect(),
            },
        };
        GameFile { n: game.n, rule }
    }
}

impl Game {
    pub fn from_json(text: &str) -> Result<Game> {
        serde_json::from_str(text).map_err(|e| Error::GameFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("game serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    #[test]
    fn weighted_winning() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        assert!(g.is_winning(c(&[0, 1])));
        assert!(!g.is_winning(c(&[1, 2])));
        assert!(!g.is_winning(Coalition::EMPTY));
        assert!(g.is_winning(g.full()));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Game::weighted(0, vec![1, 1]), Err(Error::TrivialGame("the empty coalition wins")));
        assert_eq!(Game::weighted(3, vec![1, 1]), Err(Error::TrivialGame("the grand coalition loses")));
        assert!(matches!(Game::explicit(2, vec![c(&[0]), c(&[0, 1])]), Err(Error::NotAntichain(..))));
        assert!(matches!(Game::explicit(2, vec![]), Err(Error::TrivialGame(_))));
        assert!(matches!(Game::explicit(2, vec![Coalition::EMPTY]), Err(Error::TrivialGame(_))));
        assert!(matches!(Game::explicit(2, vec![c(&[2])]), Err(Error::Malformed(_))));
        assert!(Game::weighted(3, vec![2, 1, 1]).is_ok());
    }

    #[test]
    fn blockers_of_corpus_games() {
        let g311 = Game::weighted(3, vec![2, 1, 1]).unwrap();
        assert_eq!(g311.yes_blockers(), c(&[0]));
        assert_eq!(g311.no_blockers(), Coalition::EMPTY);

        let unanimity = Game::unanimity(3);
        assert_eq!(unanimity.yes_blockers(), c(&[0, 1, 2]));
        assert_eq!(unanimity.no_blockers(), Coalition::EMPTY);

        let g11222 = Game::weighted(2, vec![1, 1, 2, 2, 2]).unwrap();
        assert_eq!(g11222.yes_blockers(), Coalition::EMPTY);
        assert_eq!(g11222.no_blockers(), c(&[2, 3, 4]));

        let dictator = Game::dictator(3, 1);
        assert_eq!(dictator.yes_blockers(), c(&[1]));
        assert_eq!(dictator.no_blockers(), c(&[1]));
        assert_eq!(dictator.dictators(), c(&[1]));
    }

    #[test]
    fn dummies() {
        let g = Game::weighted(3, vec![3, 1]).unwrap();
        assert!(g.is_dummy(1));
        assert!(!g.is_dummy(0));
        let g311 = Game::weighted(3, vec![2, 1, 1]).unwrap();
        assert!(!g311.is_dummy(1));
        let d = Game::dictator(4, 2);
        assert_eq!(d.dummies(), c(&[0, 1, 3]));
        assert_eq!(d.to_explicit().dummies(), c(&[0, 1, 3]));
    }

    #[test]
    fn minimal_winning_of_weighted() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        assert_eq!(g.minimal_winning(), vec![c(&[0, 1]), c(&[0, 2])]);
        assert_eq!(g.min_winning_size(), 2);
        assert!(g.same_winning_family(&g.to_explicit()));
    }

    #[test]
    fn win_table_matches_is_winning() {
        let g = Game::explicit(4, vec![c(&[0, 1]), c(&[2, 3]), c(&[1, 2])]).unwrap();
        let table = g.win_table(&Limits::default()).unwrap();
        for s in 0..16 {
            assert_eq!(table.wins(Coalition(s)), g.is_winning(Coalition(s)));
        }
        assert!(matches!(
            Game::unanimity(30).win_table(&Limits::default()),
            Err(Error::TooManyPlayers { .. })
        ));
    }

    #[test]
    fn game_file_format() {
        let g = Game::from_json(r#"{"n": 3, "rule": {"weighted": {"quota": 3, "weights": [2,1,1]}}}"#).unwrap();
        assert_eq!(g, Game::weighted(3, vec![2, 1, 1]).unwrap());
        let e = Game::from_json(r#"{"n": 3, "rule": {"explicit": {"min_winning": [[1,2],[1,3]]}}}"#).unwrap();
        assert!(e.same_winning_family(&g));
        assert_eq!(Game::from_json(&e.to_json()).unwrap(), e);
        assert!(Game::from_json(r#"{"n": 2, "rule": {"explicit": {"min_winning": [[3]]}}}"#).is_err());
        assert!(Game::from_json(r#"{"n": 2, "rule": {"weighted": {"quota": 0, "weights": [1,1]}}}"#).is_err());
        assert!(Game::from_json(r#"{"n": 3, "rule": {"weighted": {"quota": 1, "weights": [1,1]}}}"#).is_err());
    }

    #[test]
    fn minimal_elements_drops_supersets() {
        let fam = vec![c(&[0, 1, 2]), c(&[0, 1]), c(&[2]), c(&[0, 1])];
        assert_eq!(minimal_elements(fam), vec![c(&[0, 1]), c(&[2])]);
    }
}
