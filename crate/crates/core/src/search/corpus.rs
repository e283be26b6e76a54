//! Named games that recur throughout the examples and reproduction runs.

use crate::error::{Error, Result};
use crate::game::Game;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub game: Game,
    pub description: &'static str,
}

fn entry(name: &str, game: Game, description: &'static str) -> CorpusEntry {
    CorpusEntry { name: name.to_string(), game, description }
}

fn weighted(quota: u64, weights: &[u64]) -> Game {
    Game::weighted(quota, weights.to_vec()).expect("corpus games are valid")
}

/// The fixed corpus. Parameterised families (`unanimity<N>`,
/// `dictator<N>` and `dictator<N>_<D>`) are also resolved by [`corpus_game`].
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    vec![
        entry(
            "unanimity3",
            weighted(3, &[1, 1, 1]),
            "three-player unanimity; the all-player bloc is superadditive under PB",
        ),
        entry(
            "unanimity6",
            weighted(6, &[1; 6]),
            "six-player unanimity; PB blocker power 1/32 falls below 1/6",
        ),
        entry(
            "g_311",
            weighted(3, &[2, 1, 1]),
            "{3;2,1,1}: player 1 is a YES-blocker; SS bloc {1,2} and added-blocker witness",
        ),
        entry(
            "g_11222",
            weighted(2, &[1, 1, 2, 2, 2]),
            "{2;1,1,2,2,2}: the bloc {1,2} gains power under SS and RM",
        ),
        entry(
            "g_8_2115",
            weighted(8, &[2, 1, 1, 5]),
            "{8;2,1,1,5}: g_311 with an added YES-blocker as player 4",
        ),
        entry("dictator1", Game::dictator(1, 0), "one-player dictator game; the benchmark power"),
        entry("dictator3", Game::dictator(3, 0), "three players, player 1 dictates"),
    ]
}

/// Looks up a corpus game by name (case-insensitive).
pub fn corpus_game(name: &str) -> Result<Game> {
    let key = name.to_ascii_lowercase();
    if let Some(e) = builtin_corpus().into_iter().find(|e| e.name == key) {
        return Ok(e.game);
    }
    let unknown = || Error::UnknownCorpusGame(name.to_string());
    if let Some(n) = key.strip_prefix("unanimity") {
        let n: usize = n.trim_start_matches(['-', '_']).parse().map_err(|_| unknown())?;
        if n == 0 || n > 64 {
            return Err(unknown());
        }
        return Ok(Game::unanimity(n));
    }
    if let Some(rest) = key.strip_prefix("dictator") {
        let (n, d) = match rest.split_once('_') {
            Some((n, d)) => (n, d),
            None => (rest, "1"),
        };
        let n: usize = n.parse().map_err(|_| unknown())?;
        let d: usize = d.parse().map_err(|_| unknown())?;
        if n == 0 || n > 64 || d == 0 || d > n {
            return Err(unknown());
        }
        return Ok(Game::dictator(n, d - 1));
    }
    Err(unknown())
}
