//! Path-enumeration oracle for Recursive Measure efficacy scores.
//!
//! Walks every path of the loyal-children graph explicitly, giving each step
//! probability `1/|LC|`, and adds up the probability of the paths that reach
//! a division where the player is decisive. Shares no code with the
//! memoized recursion it checks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::EfficacyScore;
use crate::coalition::{Coalition, Division, PlayerId};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::rational::Rational;

/// Path counts grow like `n!`; refuse beyond this.
pub const ORACLE_MAX_PLAYERS: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Start from a winning division; walks drop YES-voters.
    Yes,
    /// Start from a losing division; walks add YES-voters.
    No,
}

/// Oracle for the side the division's outcome selects.
pub fn rm_path_oracle(game: &Game, i: PlayerId, division: &Division) -> Result<EfficacyScore> {
    let side = if game.is_winning(division.yes_set()) { Side::Yes } else { Side::No };
    side_path_oracle(game, i, division, side)
}

/// YES-side (resp. NO-side) efficacy by path enumeration. A start division
/// with the wrong outcome for the side scores 0.
pub fn side_path_oracle(game: &Game, i: PlayerId, division: &Division, side: Side) -> Result<EfficacyScore> {
    game.check_player(i)?;
    if game.n() > ORACLE_MAX_PLAYERS {
        return Err(Error::TooManyPlayers { n: game.n(), max: ORACLE_MAX_PLAYERS });
    }
    let start = division.yes_set();
    let winning_side = side == Side::Yes;
    if game.is_winning(start) != winning_side {
        return Ok(EfficacyScore::new(Rational::zero()));
    }
    let full = game.full();
    let mut reached = Rational::zero();
    // Each entry is a path prefix ending at `yes`, with its probability.
    let mut stack: Vec<(Coalition, Rational)> = vec![(start, Rational::one())];
    while let Some((yes, weight)) = stack.pop() {
        let votes_yes = yes.contains(i);
        if votes_yes != winning_side {
            continue; // unsuccessful
        }
        let flipped = if votes_yes { yes.without(i) } else { yes.with(i) };
        if game.is_winning(flipped) != winning_side {
            reached += weight;
            continue; // decisive
        }
        let steps: Vec<Coalition> = if winning_side {
            yes.players().map(|j| yes.without(j)).filter(|&t| game.is_winning(t)).collect()
        } else {
            full.difference(yes).players().map(|j| yes.with(j)).filter(|&t| !game.is_winning(t)).collect()
        };
        if steps.is_empty() {
            continue;
        }
        let share = weight / Rational::from_integer(BigInt::from(steps.len()));
        stack.extend(steps.into_iter().map(|t| (t, share.clone())));
    }
    Ok(EfficacyScore::new(reached))
}
