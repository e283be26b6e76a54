use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{MeasureKind, Outcome, PlayerPower, PowerMeasure, PowerReport};
use crate::coalition::{Coalition, Division, PlayerId};
use crate::error::Result;
use crate::game::{Game, Limits, WinTable};
use crate::rational::Rational;

/// A division efficacy score in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EfficacyScore(Rational);

impl EfficacyScore {
    pub fn new(value: Rational) -> Self {
        debug_assert!(value >= Rational::zero() && value <= Rational::one());
        EfficacyScore(value)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

/// The a priori Recursive Measure: expected efficacy over equiprobable
/// divisions, where efficacy is 1 when decisive, 0 when unsuccessful, and
/// otherwise the mean efficacy over the loyal children.
#[derive(Clone, Copy, Debug, Default)]
pub struct Recursive {
    pub limits: Limits,
}

impl PowerMeasure for Recursive {
    fn kind(&self) -> MeasureKind {
        MeasureKind::Rm
    }

    fn name(&self) -> &'static str {
        "rm"
    }

    fn power(&self, game: &Game) -> Result<PowerReport> {
        rm_with(game, &self.limits)
    }
}

pub fn rm(game: &Game) -> Result<PowerReport> {
    rm_with(game, &Limits::default())
}

pub fn rm_with(game: &Game, limits: &Limits) -> Result<PowerReport> {
    let table = game.win_table(limits)?;
    let n = game.n();
    let denom = BigInt::one() << n;
    let players = (0..n)
        .into_par_iter()
        .map(|i| {
            let alpha = player_efficacies(&table, i);
            let mut yes = Rational::zero();
            let mut no = Rational::zero();
            for (bits, a) in alpha.iter().enumerate() {
                if Coalition(bits as u64).contains(i) {
                    yes += a;
                } else {
                    no += a;
                }
            }
            let scale = Rational::new(BigInt::one(), denom.clone());
            PlayerPower::new(yes * &scale, no * scale)
        })
        .collect();
    Ok(PowerReport::new(MeasureKind::Rm, players))
}

/// Neighbouring divisions with the same outcome and one fewer voter on the
/// winning side: for a winning division, one YES-voter switches to NO and
/// it still wins; for a losing one, one NO-voter switches to YES and it
/// still loses. Ordered by the player who switches.
pub fn loyal_children<G: Outcome + ?Sized>(game: &G, division: &Division) -> Vec<Division> {
    let s = division.yes_set();
    let n = division.n();
    if game.wins(s) {
        s.players()
            .map(|j| s.without(j))
            .filter(|&t| game.wins(t))
            .map(|t| Division::new(t, n))
            .collect()
    } else {
        division
            .no_set()
            .players()
            .map(|j| s.with(j))
            .filter(|&t| !game.wins(t))
            .map(|t| Division::new(t, n))
            .collect()
    }
}

/// Efficacy of player `i` in every division, indexed by YES-set mask.
///
/// Winning divisions are filled in increasing mask order and losing ones in
/// decreasing order, so every loyal child is ready before its parent.
pub fn player_efficacies(table: &WinTable, i: PlayerId) -> Vec<Rational> {
    let size = 1usize << table.n();
    let mut alpha = vec![Rational::zero(); size];
    for bits in 0..size {
        let s = Coalition(bits as u64);
        if !table.wins(s) || !s.contains(i) {
            continue;
        }
        alpha[bits] = if !table.wins(s.without(i)) {
            Rational::one()
        } else {
            mean_over(&alpha, s.players().map(|j| s.without(j)).filter(|&t| table.wins(t)))
        };
    }
    for bits in (0..size).rev() {
        let s = Coalition(bits as u64);
        if table.wins(s) || s.contains(i) {
            continue;
        }
        alpha[bits] = if table.wins(s.with(i)) {
            Rational::one()
        } else {
            let full = Coalition::full(table.n());
            mean_over(&alpha, full.difference(s).players().map(|j| s.with(j)).filter(|&t| !table.wins(t)))
        };
    }
    alpha
}

fn mean_over(alpha: &[Rational], children: impl Iterator<Item = Coalition>) -> Rational {
    let mut sum = Rational::zero();
    let mut count = 0i64;
    for child in children {
        sum += &alpha[child.bits() as usize];
        count += 1;
    }
    // A successful, non-decisive player always has a loyal child.
    debug_assert!(count > 0);
    sum / Rational::from_integer(count.into())
}

/// Efficacy of every player in every division.
#[derive(Clone, Debug)]
pub struct EfficacyTable {
    n: usize,
    alpha: Vec<Vec<Rational>>,
}

impl EfficacyTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: PlayerId, division: &Division) -> &Rational {
        &self.alpha[i][division.yes_set().bits() as usize]
    }

    /// Efficacy when `i` votes YES, zero otherwise.
    pub fn yes_part(&self, i: PlayerId, division: &Division) -> Rational {
        if division.votes_yes(i) {
            self.get(i, division).clone()
        } else {
            Rational::zero()
        }
    }

    /// Efficacy when `i` votes NO, zero otherwise.
    pub fn no_part(&self, i: PlayerId, division: &Division) -> Rational {
        if division.votes_yes(i) {
            Rational::zero()
        } else {
            self.get(i, division).clone()
        }
    }
}

pub fn efficacy_table(game: &Game, limits: &Limits) -> Result<EfficacyTable> {
    let table = game.win_table(limits)?;
    let alpha = (0..game.n()).into_par_iter().map(|i| player_efficacies(&table, i)).collect();
    Ok(EfficacyTable { n: game.n(), alpha })
}

pub fn rm_efficacy(game: &Game, i: PlayerId, division: &Division) -> Result<EfficacyScore> {
    game.check_player(i)?;
    let table = game.win_table(&Limits::default())?;
    let alpha = player_efficacies(&table, i);
    Ok(EfficacyScore::new(alpha[division.yes_set().bits() as usize].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn div(players: &[usize], n: usize) -> Division {
        Division::new(Coalition::from_players(players.iter().copied()), n)
    }

    #[test]
    fn loyal_children_examples() {
        let u = Game::unanimity(3);
        assert!(loyal_children(&u, &div(&[0, 1, 2], 3)).is_empty());
        assert_eq!(loyal_children(&u, &div(&[], 3)), vec![div(&[0], 3), div(&[1], 3), div(&[2], 3)]);
        let g = Game::weighted(2, vec![1, 1, 2, 2, 2]).unwrap();
        assert_eq!(loyal_children(&g, &div(&[], 5)), vec![div(&[0], 5), div(&[1], 5)]);
    }

    #[test]
    fn efficacy_branches() {
        let majority = Game::weighted(2, vec![1, 1, 1]).unwrap();
        assert_eq!(rm_efficacy(&majority, 0, &div(&[], 3)).unwrap().into_inner(), ratio(2, 3));
        assert_eq!(rm_efficacy(&majority, 0, &div(&[0, 1], 3)).unwrap().into_inner(), int(1));
        assert_eq!(rm_efficacy(&majority, 0, &div(&[0], 3)).unwrap().into_inner(), int(0));
    }

    #[test]
    fn two_player_unanimity() {
        let report = rm(&Game::unanimity(2)).unwrap();
        assert_eq!(*report.total(0), ratio(5, 8));
        assert_eq!(*report.yes(0), ratio(1, 4));
        assert_eq!(*report.no(0), ratio(3, 8));
    }

    #[test]
    fn g11222_and_its_bloc() {
        let g = Game::weighted(2, vec![1, 1, 2, 2, 2]).unwrap();
        let report = rm(&g).unwrap();
        assert_eq!(*report.total(0), ratio(41, 320));
        assert_eq!(*report.total(1), ratio(41, 320));
        let bloc = Game::weighted(2, vec![2, 2, 2, 2]).unwrap();
        assert_eq!(*rm(&bloc).unwrap().total(0), ratio(19, 64));
    }

    #[test]
    fn dictator_is_one() {
        assert_eq!(rm(&Game::dictator(1, 0)).unwrap().totals(), vec![int(1)]);
        assert_eq!(rm(&Game::dictator(3, 2)).unwrap().totals(), vec![int(0), int(0), int(1)]);
    }

    #[test]
    fn table_agrees_with_single_player_path() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        let table = efficacy_table(&g, &Limits::default()).unwrap();
        for d in Division::all(3) {
            for i in 0..3 {
                assert_eq!(table.get(i, &d), rm_efficacy(&g, i, &d).unwrap().value());
                assert_eq!(table.yes_part(i, &d) + table.no_part(i, &d), *table.get(i, &d));
            }
        }
    }
}
