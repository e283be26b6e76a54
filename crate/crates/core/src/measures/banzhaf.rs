use num_bigint::BigInt;

use super::{MeasureKind, PlayerPower, PowerMeasure, PowerReport};
use crate::coalition::{Coalition, PlayerId};
use crate::error::Result;
use crate::game::{Game, Limits, WinTable};
use crate::rational::Rational;

/// Penrose-Banzhaf: probability of being decisive under equiprobable divisions.
#[derive(Clone, Copy, Debug, Default)]
pub struct Banzhaf {
    pub limits: Limits,
}

impl PowerMeasure for Banzhaf {
    fn kind(&self) -> MeasureKind {
        MeasureKind::Pb
    }

    fn name(&self) -> &'static str {
        "pb"
    }

    fn power(&self, game: &Game) -> Result<PowerReport> {
        pb_with(game, &self.limits)
    }
}

pub fn pb(game: &Game) -> Result<PowerReport> {
    pb_with(game, &Limits::default())
}

pub fn pb_with(game: &Game, limits: &Limits) -> Result<PowerReport> {
    let table = game.win_table(limits)?;
    let n = game.n();
    let denom = BigInt::from(1u8) << n;
    let players = (0..n)
        .map(|i| {
            let (yes, no) = decisive_counts(&table, i);
            PlayerPower::new(Rational::new(yes.into(), denom.clone()), Rational::new(no.into(), denom.clone()))
        })
        .collect();
    Ok(PowerReport::new(MeasureKind::Pb, players))
}

/// Shortcut form: YES-decisive divisions only, each weighted `1/2^(n-1)`.
pub fn pb_star(game: &Game) -> Result<Vec<Rational>> {
    let table = game.win_table(&Limits::default())?;
    let n = game.n();
    let denom = BigInt::from(1u8) << (n - 1);
    Ok((0..n).map(|i| Rational::new(decisive_counts(&table, i).0.into(), denom.clone())).collect())
}

/// Numbers of divisions where `i` is YES-decisive and NO-decisive.
fn decisive_counts(table: &WinTable, i: PlayerId) -> (u64, u64) {
    let mut yes = 0;
    let mut no = 0;
    for bits in 0..1u64 << table.n() {
        let s = Coalition(bits);
        if s.contains(i) {
            if table.wins(s) && !table.wins(s.without(i)) {
                yes += 1;
            }
        } else if !table.wins(s) && table.wins(s.with(i)) {
            no += 1;
        }
    }
    (yes, no)
}
