use crate::coalition::{Coalition, Division, PlayerId};
use crate::game::{Game, WinTable};

/// Anything that can say whether a YES-set carries the motion.
pub trait Outcome {
    fn wins(&self, yes: Coalition) -> bool;
}

impl Outcome for Game {
    fn wins(&self, yes: Coalition) -> bool {
        self.is_winning(yes)
    }
}

impl Outcome for WinTable {
    fn wins(&self, yes: Coalition) -> bool {
        WinTable::wins(self, yes)
    }
}

/// `i` votes YES, the division wins, and it would lose without `i`.
pub fn is_yes_decisive<G: Outcome + ?Sized>(game: &G, i: PlayerId, division: &Division) -> bool {
    let s = division.yes_set();
    s.contains(i) && game.wins(s) && !game.wins(s.without(i))
}

/// `i` votes NO, the division loses, and it would win with `i`.
pub fn is_no_decisive<G: Outcome + ?Sized>(game: &G, i: PlayerId, division: &Division) -> bool {
    let s = division.yes_set();
    !s.contains(i) && !game.wins(s) && game.wins(s.with(i))
}

pub fn is_decisive<G: Outcome + ?Sized>(game: &G, i: PlayerId, division: &Division) -> bool {
    is_yes_decisive(game, i, division) || is_no_decisive(game, i, division)
}

/// `i`'s vote matches the outcome.
pub fn is_successful<G: Outcome + ?Sized>(game: &G, i: PlayerId, division: &Division) -> bool {
    division.votes_yes(i) == game.wins(division.yes_set())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div(players: &[usize], n: usize) -> Division {
        Division::new(Coalition::from_players(players.iter().copied()), n)
    }

    #[test]
    fn decisiveness_examples() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        assert!(is_yes_decisive(&g, 0, &div(&[0, 1], 3)));
        assert!(!is_yes_decisive(&g, 0, &div(&[1, 2], 3)));
        assert!(is_no_decisive(&g, 0, &div(&[1], 3)));
        assert!(!is_no_decisive(&g, 0, &div(&[0, 1], 3)));

        let u = Game::unanimity(3);
        assert!(is_no_decisive(&u, 0, &div(&[1, 2], 3)));
        assert!(!is_no_decisive(&u, 0, &div(&[1], 3)));

        let d = Game::dictator(3, 1);
        for s in 0..8u64 {
            let division = Division::new(Coalition(s), 3);
            assert_eq!(is_yes_decisive(&d, 1, &division), division.votes_yes(1));
            assert!(is_decisive(&d, 1, &division));
            assert!(!is_decisive(&d, 0, &division));
        }
    }

    #[test]
    fn successful_matches_outcome() {
        let g = Game::unanimity(2);
        assert!(is_successful(&g, 0, &div(&[], 2)));
        assert!(!is_successful(&g, 0, &div(&[0], 2)));
        assert!(is_successful(&g, 1, &div(&[0], 2)));
    }
}
