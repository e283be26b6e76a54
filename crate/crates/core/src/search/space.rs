//! Spaces of games to sweep: every monotone game on a few players, a grid of
//! weighted games, or a seeded random sample of weighted games.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{Game, Rule};

/// Monotone games are enumerated exhaustively up to this many players
/// (7579 non-trivial games at 5; about 7.8 million at 6).
pub const MAX_EXHAUSTIVE_PLAYERS: usize = 5;

/// Largest number of games a single space may produce.
pub const MAX_SPACE_SIZE: u128 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameSpace {
    /// Every non-trivial monotone game on exactly `n` players, ordered by
    /// the number of minimal winning coalitions, then lexicographically.
    ExhaustiveMonotone { n: usize },
    /// Weighted games on `2..=max_n` players with non-increasing weights in
    /// `1..=max_weight`, every quota in `quota` (default `1..=total`).
    /// Games with a winning family already produced are skipped.
    WeightedGrid { max_n: usize, max_weight: u64, quota: Option<(u64, u64)> },
    /// `count` weighted games: `n` uniform in `2..=max_n`, weights uniform
    /// in `0..=max_weight`, quota uniform in `1..=total`.
    RandomWeighted { max_n: usize, max_weight: u64, count: usize, seed: u64 },
}

impl fmt::Display for GameSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameSpace::ExhaustiveMonotone { n } => write!(f, "exhaustive monotone games, n = {n}"),
            GameSpace::WeightedGrid { max_n, max_weight, quota } => {
                write!(f, "weighted grid, n <= {max_n}, weights <= {max_weight}")?;
                if let Some((lo, hi)) = quota {
                    write!(f, ", quota {lo}..={hi}")?;
                }
                Ok(())
            }
            GameSpace::RandomWeighted { max_n, max_weight, count, seed } => {
                write!(f, "{count} random weighted games, n <= {max_n}, weights <= {max_weight}, seed {seed}")
            }
        }
    }
}

impl GameSpace {
    fn check_size(&self) -> Result<()> {
        let too_large = |why: String| Err(Error::SpaceTooLarge(why));
        match *self {
            GameSpace::ExhaustiveMonotone { n } => {
                if n == 0 || n > MAX_EXHAUSTIVE_PLAYERS {
                    return too_large(format!(
                        "exhaustive enumeration supports 1..={MAX_EXHAUSTIVE_PLAYERS} players, got {n}"
                    ));
                }
            }
            GameSpace::WeightedGrid { max_n, max_weight, quota } => {
                if max_n > crate::Limits::default().max_players || max_weight == 0 {
                    return too_large(format!("grid with max_n = {max_n}, max_weight = {max_weight}"));
                }
                let mut size: u128 = 0;
                for n in 2..=max_n {
                    // non-increasing sequences of length n over max_weight values
                    let sequences = binomial(n as u128 + u128::from(max_weight) - 1, n as u128);
                    let quotas = match quota {
                        Some((lo, hi)) => u128::from(hi.saturating_sub(lo) + 1),
                        None => n as u128 * u128::from(max_weight),
                    };
                    size = size.saturating_add(sequences.saturating_mul(quotas));
                }
                if size > MAX_SPACE_SIZE {
                    return too_large(format!("grid would hold up to {size} games (limit {MAX_SPACE_SIZE})"));
                }
            }
            GameSpace::RandomWeighted { max_n, max_weight, count, .. } => {
                if max_n < 2 || max_n > crate::Limits::default().max_players || max_weight == 0 {
                    return too_large(format!("random space with max_n = {max_n}, max_weight = {max_weight}"));
                }
                if count as u128 > MAX_SPACE_SIZE {
                    return too_large(format!("{count} games requested (limit {MAX_SPACE_SIZE})"));
                }
            }
        }
        Ok(())
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Every game in the space, in its deterministic order. Each game validates.
pub fn enumerate_games(space: &GameSpace) -> Result<Vec<Game>> {
    space.check_size()?;
    Ok(match *space {
        GameSpace::ExhaustiveMonotone { n } => monotone_families(n)
            .into_iter()
            .map(|family| Game::from_rule_unchecked(n, Rule::Explicit { min_winning: family }))
            .collect(),
        GameSpace::WeightedGrid { max_n, max_weight, quota } => weighted_grid(max_n, max_weight, quota),
        GameSpace::RandomWeighted { max_n, max_weight, count, seed } => {
            random_weighted(max_n, max_weight, count, seed)
        }
    })
}

/// Minimal winning families of every non-trivial monotone game on `n`
/// players: all antichains of the subset lattice except `{}` (nothing wins)
/// and `{{}}` (everything wins). Sorted by family size, then by the
/// coalitions' (size, bitmask) keys.
pub fn monotone_families(n: usize) -> Vec<Vec<Coalition>> {
    assert!(n <= MAX_EXHAUSTIVE_PLAYERS, "too many players for exhaustive enumeration");
    // Subsets in (size, bits) order, so every family comes out sorted.
    let mut subsets: Vec<Coalition> = Coalition::full(n).subsets().filter(|s| !s.is_empty()).collect();
    subsets.sort_by_key(|s| (s.len(), s.bits()));

    fn extend(subsets: &[Coalition], from: usize, current: &mut Vec<Coalition>, out: &mut Vec<Vec<Coalition>>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        for k in from..subsets.len() {
            let s = subsets[k];
            // Later subsets are never proper subsets of earlier ones, so only
            // supersets of chosen members need to be excluded.
            if current.iter().all(|c| !c.is_subset_of(s)) {
                current.push(s);
                extend(subsets, k + 1, current, out);
                current.pop();
            }
        }
    }

    let mut out = Vec::new();
    extend(&subsets, 0, &mut Vec::new(), &mut out);
    let key = |f: &Vec<Coalition>| (f.len(), f.iter().map(|s| (s.len(), s.bits())).collect::<Vec<_>>());
    out.sort_by_cached_key(key);
    out
}

fn weighted_grid(max_n: usize, max_weight: u64, quota: Option<(u64, u64)>) -> Vec<Game> {
    let mut seen: HashSet<(usize, Vec<Coalition>)> = HashSet::new();
    let mut games = Vec::new();
    for n in 2..=max_n {
        let mut weights = vec![1u64; n];
        loop {
            let total: u64 = weights.iter().sum();
            let (lo, hi) = quota.unwrap_or((1, total));
            for q in lo.max(1)..=hi.min(total) {
                let game = Game::weighted(q, weights.clone()).expect("quota within 1..=total");
                if seen.insert((n, game.minimal_winning())) {
                    games.push(game);
                }
            }
            if !next_non_increasing(&mut weights, max_weight) {
                break;
            }
        }
    }
    games
}

/// Advances to the next non-increasing sequence over `1..=max`, in
/// lexicographic order read left to right; false after the last one.
fn next_non_increasing(weights: &mut [u64], max: u64) -> bool {
    // Find the rightmost position that can grow without exceeding its left neighbour.
    for k in (0..weights.len()).rev() {
        let cap = if k == 0 { max } else { weights[k - 1] };
        if weights[k] < cap {
            weights[k] += 1;
            for w in &mut weights[k + 1..] {
                *w = 1;
            }
            return true;
        }
    }
    false
}

fn random_weighted(max_n: usize, max_weight: u64, count: usize, seed: u64) -> Vec<Game> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut games = Vec::with_capacity(count);
    while games.len() < count {
        let n = rng.random_range(2..=max_n);
        let weights: Vec<u64> = (0..n).map(|_| rng.random_range(0..=max_weight)).collect();
        let total: u64 = weights.iter().sum();
        if total == 0 {
            continue;
        }
        let quota = rng.random_range(1..=total);
        games.push(Game::weighted(quota, weights).expect("quota within 1..=total"));
    }
    games
}
