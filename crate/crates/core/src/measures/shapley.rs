use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{MeasureKind, PlayerPower, PowerMeasure, PowerReport};
use crate::coalition::Coalition;
use crate::error::Result;
use crate::game::{Game, Limits};
use crate::rational::{factorial, Rational};

/// Shapley-Shubik, written as a decisiveness measure: a division where `i`
/// is decisive and `k` voters (including `i`) vote as `i` does carries
/// weight `(k-1)!(n-k)!/(2 n!)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShapleyShubik {
    pub limits: Limits,
}

impl PowerMeasure for ShapleyShubik {
    fn kind(&self) -> MeasureKind {
        MeasureKind::Ss
    }

    fn name(&self) -> &'static str {
        "ss"
    }

    fn power(&self, game: &Game) -> Result<PowerReport> {
        ss_with(game, &self.limits)
    }
}

pub fn ss(game: &Game) -> Result<PowerReport> {
    ss_with(game, &Limits::default())
}

pub fn ss_with(game: &Game, limits: &Limits) -> Result<PowerReport> {
    let table = game.win_table(limits)?;
    let n = game.n();
    let weights = agreement_weights(n);
    let denom: BigInt = BigInt::from(factorial(n)) * 2u32;
    let mut yes = vec![BigUint::zero(); n];
    let mut no = vec![BigUint::zero(); n];
    for bits in 0..1u64 << n {
        let s = Coalition(bits);
        let size = s.len();
        let wins = table.wins(s);
        for i in 0..n {
            if s.contains(i) {
                if wins && !table.wins(s.without(i)) {
                    yes[i] += &weights[size];
                }
            } else if !wins && table.wins(s.with(i)) {
                no[i] += &weights[n - size];
            }
        }
    }
    let players = yes
        .into_iter()
        .zip(no)
        .map(|(y, m)| PlayerPower::new(Rational::new(y.into(), denom.clone()), Rational::new(m.into(), denom.clone())))
        .collect();
    Ok(PowerReport::new(MeasureKind::Ss, players))
}

/// Shortcut form over YES-decisive divisions with weight
/// `(|S|-1)!(n-|S|)!/n!`.
pub fn ss_star(game: &Game) -> Result<Vec<Rational>> {
    let table = game.win_table(&Limits::default())?;
    let n = game.n();
    let weights = agreement_weights(n);
    let denom = BigInt::from(factorial(n));
    let mut sums = vec![BigUint::zero(); n];
    for bits in 0..1u64 << n {
        let s = Coalition(bits);
        if !table.wins(s) {
            continue;
        }
        for i in s.players() {
            if !table.wins(s.without(i)) {
                sums[i] += &weights[s.len()];
            }
        }
    }
    Ok(sums.into_iter().map(|v| Rational::new(v.into(), denom.clone())).collect())
}

/// `w[k] = (k-1)!(n-k)!` for `k` in `1..=n`; `w[0]` is unused.
fn agreement_weights(n: usize) -> Vec<BigUint> {
    let facts: Vec<BigUint> = (0..=n).map(factorial).collect();
    (0..=n).map(|k| if k == 0 { BigUint::zero() } else { &facts[k - 1] * &facts[n - k] }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn g311_values() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        let report = ss(&g).unwrap();
        assert_eq!(report.totals(), vec![ratio(2, 3), ratio(1, 6), ratio(1, 6)]);
        assert_eq!(*report.yes(0), ratio(2, 6));
        assert_eq!(*report.yes(1), ratio(1, 12));
        assert_eq!(ss_star(&g).unwrap(), report.totals());
    }

    #[test]
    fn g11222_values() {
        let g = Game::weighted(2, vec![1, 1, 2, 2, 2]).unwrap();
        let report = ss(&g).unwrap();
        assert_eq!(*report.total(0), ratio(1, 20));
        assert_eq!(*report.total(1), ratio(1, 20));
        assert_eq!(report.sum(), int(1));
    }

    #[test]
    fn g8_2115_values() {
        let g = Game::weighted(8, vec![2, 1, 1, 5]).unwrap();
        let report = ss(&g).unwrap();
        assert_eq!(report.yes(0), &ratio(5, 24));
        assert_eq!(report.yes(1), &ratio(1, 24));
        assert_eq!(report.yes(3), &ratio(5, 24));
        assert_eq!(ss_star(&g).unwrap(), vec![ratio(5, 12), ratio(1, 12), ratio(1, 12), ratio(5, 12)]);
    }

    #[test]
    fn small_games() {
        assert_eq!(ss_star(&Game::unanimity(2)).unwrap(), vec![ratio(1, 2); 2]);
        assert_eq!(ss(&Game::dictator(1, 0)).unwrap().totals(), vec![int(1)]);
    }
}
