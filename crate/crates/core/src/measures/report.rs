use serde::{Deserialize, Serialize};

use super::MeasureKind;
use crate::coalition::PlayerId;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayerPower {
    pub total: Rational,
    pub yes: Rational,
    pub no: Rational,
}

impl PlayerPower {
    pub fn new(yes: Rational, no: Rational) -> Self {
        PlayerPower { total: &yes + &no, yes, no }
    }
}

/// Per-player total, YES- and NO-power under one measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerReport {
    measure: MeasureKind,
    players: Vec<PlayerPower>,
}

impl PowerReport {
    pub fn new(measure: MeasureKind, players: Vec<PlayerPower>) -> Self {
        debug_assert!(players.iter().all(|p| p.total == &p.yes + &p.no));
        PowerReport { measure, players }
    }

    pub fn measure(&self) -> MeasureKind {
        self.measure
    }

    pub fn n(&self) -> usize {
        self.players.len()
    }

    pub fn players(&self) -> &[PlayerPower] {
        &self.players
    }

    pub fn player(&self, i: PlayerId) -> &PlayerPower {
        &self.players[i]
    }

    pub fn total(&self, i: PlayerId) -> &Rational {
        &self.players[i].total
    }

    pub fn yes(&self, i: PlayerId) -> &Rational {
        &self.players[i].yes
    }

    pub fn no(&self, i: PlayerId) -> &Rational {
        &self.players[i].no
    }

    pub fn totals(&self) -> Vec<Rational> {
        self.players.iter().map(|p| p.total.clone()).collect()
    }

    pub fn sum(&self) -> Rational {
        self.players.iter().map(|p| &p.total).sum()
    }

    pub fn rows(&self) -> Vec<ReportRow> {
        self.players
            .iter()
            .enumerate()
            .map(|(i, p)| ReportRow {
                player: i + 1,
                measure: self.measure,
                total: p.total.clone(),
                yes: p.yes.clone(),
                no: p.no.clone(),
                decimal: rational::to_decimal(&p.total),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows()).expect("report serializes")
    }

    /// Header `player,measure,total,yes,no,decimal`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("player,measure,total,yes,no,decimal\n");
        for row in self.rows() {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.player,
                row.measure,
                rational::to_fraction_string(&row.total),
                rational::to_fraction_string(&row.yes),
                rational::to_fraction_string(&row.no),
                row.decimal
            ));
        }
        out
    }
}

/// One serialized line of a [`PowerReport`]; the player label is 1-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub player: usize,
    pub measure: MeasureKind,
    #[serde(with = "rational::serde_fraction")]
    pub total: Rational,
    #[serde(with = "rational::serde_fraction")]
    pub yes: Rational,
    #[serde(with = "rational::serde_fraction")]
    pub no: Rational,
    pub decimal: f64,
}

/// `(yes, no)` per player. PB and SS are strategy symmetric, so for them the
/// two halves must coincide.
pub fn power_split(report: &PowerReport) -> Vec<(Rational, Rational)> {
    let split: Vec<_> = report.players.iter().map(|p| (p.yes.clone(), p.no.clone())).collect();
    if matches!(report.measure, MeasureKind::Pb | MeasureKind::Ss) {
        for (i, (yes, no)) in split.iter().enumerate() {
            assert_eq!(yes, no, "{} is strategy symmetric but player {} splits {yes} / {no}", report.measure, i + 1);
        }
    }
    split
}
