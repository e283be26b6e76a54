//! Power measures behind a common trait, registered by name.
//!
//! Each measure assigns every player a total, YES- and NO-power as exact
//! rationals. The registry maps CLI names (`pb`, `ss`, `rm`, `pb-fast`,
//! `ss-fast`) to constructors so callers can select measures at runtime.

mod banzhaf;
mod decisive;
mod fast;
mod oracle;
mod recursive;
mod report;
mod shapley;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Game, Limits};
use crate::rational::Rational;

pub use banzhaf::{pb, pb_star, pb_with, Banzhaf};
pub use decisive::{is_decisive, is_no_decisive, is_successful, is_yes_decisive, Outcome};
pub use fast::{pb_fast, ss_fast, BanzhafFast, ShapleyShubikFast};
pub use oracle::{rm_path_oracle, side_path_oracle, Side, ORACLE_MAX_PLAYERS};
pub use recursive::{efficacy_table, loyal_children, player_efficacies, rm, rm_efficacy, rm_with, EfficacyScore, EfficacyTable, Recursive};
pub use report::{power_split, PlayerPower, PowerReport, ReportRow};
pub use shapley::{ss, ss_star, ss_with, ShapleyShubik};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MeasureKind {
    #[serde(rename = "PB")]
    Pb,
    #[serde(rename = "SS")]
    Ss,
    #[serde(rename = "RM")]
    Rm,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 3] = [MeasureKind::Pb, MeasureKind::Ss, MeasureKind::Rm];

    pub fn label(self) -> &'static str {
        match self {
            MeasureKind::Pb => "PB",
            MeasureKind::Ss => "SS",
            MeasureKind::Rm => "RM",
        }
    }

    /// The enumeration-based measure of this kind.
    pub fn measure(self, limits: Limits) -> Box<dyn PowerMeasure> {
        match self {
            MeasureKind::Pb => Box::new(Banzhaf { limits }),
            MeasureKind::Ss => Box::new(ShapleyShubik { limits }),
            MeasureKind::Rm => Box::new(Recursive { limits }),
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pb" => Ok(MeasureKind::Pb),
            "ss" => Ok(MeasureKind::Ss),
            "rm" => Ok(MeasureKind::Rm),
            _ => Err(Error::UnknownMeasure(s.to_string())),
        }
    }
}

/// A measure of a priori voting power.
pub trait PowerMeasure: Send + Sync {
    fn kind(&self) -> MeasureKind;

    /// Registry name.
    fn name(&self) -> &'static str;

    fn power(&self, game: &Game) -> Result<PowerReport>;
}

type Constructor = fn(Limits) -> Box<dyn PowerMeasure>;

struct Entry {
    name: &'static str,
    aliases: &'static [&'static str],
    summary: &'static str,
    construct: Constructor,
}

/// Name-indexed table of measure constructors.
pub struct MeasureRegistry {
    entries: Vec<Entry>,
}

impl MeasureRegistry {
    pub fn standard() -> Self {
        let mut registry = MeasureRegistry { entries: Vec::new() };
        registry.register("pb", &["banzhaf", "penrose-banzhaf"], "Penrose-Banzhaf by division enumeration", |limits| {
            Box::new(Banzhaf { limits })
        });
        registry.register("ss", &["shapley-shubik"], "Shapley-Shubik by division enumeration", |limits| {
            Box::new(ShapleyShubik { limits })
        });
        registry.register("rm", &["recursive", "rm'"], "a priori Recursive Measure", |limits| {
            Box::new(Recursive { limits })
        });
        registry.register("pb-fast", &[], "Penrose-Banzhaf by weight-sum dynamic programming", |limits| {
            Box::new(BanzhafFast { limits })
        });
        registry.register("ss-fast", &[], "Shapley-Shubik by weight-sum dynamic programming", |limits| {
            Box::new(ShapleyShubikFast { limits })
        });
        registry
    }

    pub fn register(
        &mut self,
        name: &'static str,
        aliases: &'static [&'static str],
        summary: &'static str,
        construct: Constructor,
    ) {
        self.entries.retain(|e| e.name != name);
        self.entries.push(Entry { name, aliases, summary, construct });
    }

    pub fn get(&self, name: &str, limits: Limits) -> Result<Box<dyn PowerMeasure>> {
        let wanted = name.to_ascii_lowercase();
        self.entries
            .iter()
            .find(|e| e.name == wanted || e.aliases.contains(&wanted.as_str()))
            .map(|e| (e.construct)(limits))
            .ok_or_else(|| Error::UnknownMeasure(name.to_string()))
    }

    /// `(name, aliases, summary)` for every registered measure.
    pub fn list(&self) -> Vec<(&'static str, &'static [&'static str], &'static str)> {
        self.entries.iter().map(|e| (e.name, e.aliases, e.summary)).collect()
    }
}

impl Default for MeasureRegistry {
    fn default() -> Self {
        MeasureRegistry::standard()
    }
}

/// Power of the dictator in the one-player dictator game.
pub fn dictator_power(measure: &dyn PowerMeasure) -> Result<Rational> {
    Ok(measure.power(&Game::dictator(1, 0))?.total(0).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_resolves_names_and_aliases() {
        let registry = MeasureRegistry::standard();
        let limits = Limits::default();
        assert_eq!(registry.get("pb", limits).unwrap().kind(), MeasureKind::Pb);
        assert_eq!(registry.get("Banzhaf", limits).unwrap().kind(), MeasureKind::Pb);
        assert_eq!(registry.get("recursive", limits).unwrap().kind(), MeasureKind::Rm);
        assert_eq!(registry.get("ss-fast", limits).unwrap().name(), "ss-fast");
        assert!(matches!(registry.get("nope", limits), Err(Error::UnknownMeasure(_))));
        assert_eq!(registry.list().len(), 5);
    }

    #[test]
    fn measure_kind_parsing() {
        assert_eq!("RM".parse::<MeasureKind>().unwrap(), MeasureKind::Rm);
        assert!("xx".parse::<MeasureKind>().is_err());
        assert_eq!(serde_json::to_string(&MeasureKind::Ss).unwrap(), "\"SS\"");
    }
}
