//! Postulate checkers. Each postulate is a [`Postulate`] trait object in the
//! [`PostulateRegistry`]; a check takes a game, a measure and a qualifier
//! (bloc, player pair, permutation, or the game as a whole) and returns an
//! exact [`Verdict`].

mod added;
mod adequacy;
mod bloc;
mod minimum;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, PlayerId};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::measures::{MeasureKind, PowerMeasure};
use crate::rational::{self, Rational};
use crate::transform::BlocSpec;

pub use added::{check_add, Added};
pub use adequacy::{check_dummy, check_iso, Dummy, IsoInvariance};
pub use bloc::{check_bloc, BlocPostulate};
pub use minimum::{check_minimum, MinimumPower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PostulateId {
    Spb,
    Mpb,
    Sbb,
    Sbk1,
    Sbk2,
    Wbk1,
    Wbk2,
    Bsp1,
    Bsp2,
    Smp1,
    Smp2,
    Wmp1,
    Wmp2,
    Add0,
    Add1,
    Add2,
    Dummy,
    Iso,
}

impl PostulateId {
    pub const ALL: [PostulateId; 18] = [
        PostulateId::Spb,
        PostulateId::Mpb,
        PostulateId::Sbb,
        PostulateId::Sbk1,
        PostulateId::Sbk2,
        PostulateId::Wbk1,
        PostulateId::Wbk2,
        PostulateId::Bsp1,
        PostulateId::Bsp2,
        PostulateId::Smp1,
        PostulateId::Smp2,
        PostulateId::Wmp1,
        PostulateId::Wmp2,
        PostulateId::Add0,
        PostulateId::Add1,
        PostulateId::Add2,
        PostulateId::Dummy,
        PostulateId::Iso,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PostulateId::Spb => "SPB",
            PostulateId::Mpb => "MPB",
            PostulateId::Sbb => "SBB",
            PostulateId::Sbk1 => "SBK1",
            PostulateId::Sbk2 => "SBK2",
            PostulateId::Wbk1 => "WBK1",
            PostulateId::Wbk2 => "WBK2",
            PostulateId::Bsp1 => "BSP1",
            PostulateId::Bsp2 => "BSP2",
            PostulateId::Smp1 => "SMP1",
            PostulateId::Smp2 => "SMP2",
            PostulateId::Wmp1 => "WMP1",
            PostulateId::Wmp2 => "WMP2",
            PostulateId::Add0 => "ADD0",
            PostulateId::Add1 => "ADD1",
            PostulateId::Add2 => "ADD2",
            PostulateId::Dummy => "DUMMY",
            PostulateId::Iso => "ISO",
        }
    }
}

impl fmt::Display for PostulateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Accepts `sbk1`, `SBK-1`, `sbk_1` and so on.
impl FromStr for PostulateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_uppercase();
        PostulateId::ALL
            .into_iter()
            .find(|id| id.label() == key)
            .ok_or_else(|| Error::UnknownPostulate(s.to_string()))
    }
}

impl Serialize for PostulateId {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for PostulateId {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// What a single check is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Qualifier {
    Game,
    Bloc(BlocSpec),
    /// Ordered pair `(i, j)`; the ratio compared is `psi_i / psi_j`.
    Pair(PlayerId, PlayerId),
    /// `perm[old] = new`.
    Permutation(Vec<PlayerId>),
}

impl fmt::Display for Qualifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Qualifier::Game => f.write_str("whole game"),
            Qualifier::Bloc(b) => write!(f, "bloc {} lead {}", b.members(), b.lead() + 1),
            Qualifier::Pair(i, j) => write!(f, "pair ({}, {})", i + 1, j + 1),
            Qualifier::Permutation(p) => {
                let labels: Vec<String> = p.iter().map(|q| (q + 1).to_string()).collect();
                write!(f, "permutation [{}]", labels.join(","))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum QualifierFile {
    Game,
    Bloc { members: Vec<usize>, lead: usize },
    Pair(usize, usize),
    Permutation(Vec<usize>),
}

impl Serialize for Qualifier {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let file = match self {
            Qualifier::Game => QualifierFile::Game,
            Qualifier::Bloc(b) => QualifierFile::Bloc { members: b.members().labels(), lead: b.lead() + 1 },
            Qualifier::Pair(i, j) => QualifierFile::Pair(i + 1, j + 1),
            Qualifier::Permutation(p) => QualifierFile::Permutation(p.iter().map(|q| q + 1).collect()),
        };
        file.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Qualifier {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let unlabel = |label: usize| label.checked_sub(1).ok_or_else(|| D::Error::custom("player labels start at 1"));
        Ok(match QualifierFile::deserialize(de)? {
            QualifierFile::Game => Qualifier::Game,
            QualifierFile::Bloc { members, lead } => {
                let members = members.into_iter().map(unlabel).collect::<std::result::Result<Vec<_>, _>>()?;
                let bloc = BlocSpec::new(Coalition::from_players(members), unlabel(lead)?).map_err(D::Error::custom)?;
                Qualifier::Bloc(bloc)
            }
            QualifierFile::Pair(i, j) => Qualifier::Pair(unlabel(i)?, unlabel(j)?),
            QualifierFile::Permutation(p) => {
                Qualifier::Permutation(p.into_iter().map(unlabel).collect::<std::result::Result<_, _>>()?)
            }
        })
    }
}

/// The relation the postulate requires between `lhs` and `rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">")]
    Greater,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::AtMost => lhs <= rhs,
            Relation::AtLeast => lhs >= rhs,
            Relation::Equal => lhs == rhs,
            Relation::Greater => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

/// The comparison a verdict rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub qualifier: Qualifier,
    /// 1-based labels of the players the comparison is about (blocker,
    /// pair, or offending player).
    pub players: Vec<usize>,
    /// A coalition involved in the bound, e.g. the smallest winning set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalition: Option<Vec<usize>>,
    #[serde(with = "rational::serde_fraction")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_fraction")]
    pub rhs: Rational,
    pub relation: Relation,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub derived_games: Vec<Game>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Witness {
    pub fn new(qualifier: Qualifier, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        Witness {
            qualifier,
            players: Vec::new(),
            coalition: None,
            lhs,
            rhs,
            relation,
            derived_games: Vec::new(),
            note: String::new(),
        }
    }

    pub fn players(mut self, players: impl IntoIterator<Item = PlayerId>) -> Self {
        self.players = players.into_iter().map(|p| p + 1).collect();
        self
    }

    pub fn coalition(mut self, coalition: Coalition) -> Self {
        self.coalition = Some(coalition.labels());
        self
    }

    pub fn derived(mut self, game: Game) -> Self {
        self.derived_games.push(game);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn satisfied(&self) -> bool {
        self.relation.holds(&self.lhs, &self.rhs)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = if self.satisfied() {
            self.relation.symbol()
        } else {
            match self.relation {
                Relation::AtMost => ">",
                Relation::AtLeast => "<",
                Relation::Equal => "!=",
                Relation::Greater => "<=",
            }
        };
        write!(f, "{} {} {}", self.lhs, shown, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub postulate: PostulateId,
    pub measure: MeasureKind,
    pub status: Status,
    /// Always present when the verdict fails.
    pub witness: Option<Witness>,
}

impl Verdict {
    /// Holds or fails according to the witness comparison.
    pub fn from_witness(postulate: PostulateId, measure: MeasureKind, witness: Witness) -> Self {
        let status = if witness.satisfied() { Status::Holds } else { Status::Fails };
        Verdict { postulate, measure, status, witness: Some(witness) }
    }

    pub fn holds_without_witness(postulate: PostulateId, measure: MeasureKind) -> Self {
        Verdict { postulate, measure, status: Status::Holds, witness: None }
    }

    pub fn not_applicable(postulate: PostulateId, measure: MeasureKind, reason: impl Into<String>) -> Self {
        Verdict { postulate, measure, status: Status::NotApplicable(reason.into()), witness: None }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }

    pub fn is_not_applicable(&self) -> bool {
        matches!(self.status, Status::NotApplicable(_))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Holds => write!(f, "HOLDS({}) {}", self.postulate, self.measure)?,
            Status::Fails => write!(f, "FAIL({}) {}", self.postulate, self.measure)?,
            Status::NotApplicable(reason) => {
                return write!(f, "N/A({}) {}: {}", self.postulate, self.measure, reason);
            }
        }
        if let Some(w) = &self.witness {
            write!(f, ": {} [{}]", w, w.qualifier)?;
            if !w.note.is_empty() {
                write!(f, " {}", w.note)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct VerdictFile {
    postulate: PostulateId,
    measure: MeasureKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    not_applicable: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let (holds, not_applicable) = match &self.status {
            Status::Holds => (Some(true), None),
            Status::Fails => (Some(false), None),
            Status::NotApplicable(reason) => (None, Some(reason.clone())),
        };
        VerdictFile {
            postulate: self.postulate,
            measure: self.measure,
            holds,
            not_applicable,
            witness: self.witness.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let file = VerdictFile::deserialize(de)?;
        let status = match (file.holds, file.not_applicable) {
            (Some(true), None) => Status::Holds,
            (Some(false), None) => Status::Fails,
            (None, Some(reason)) => Status::NotApplicable(reason),
            _ => return Err(serde::de::Error::custom("exactly one of `holds` and `not_applicable` expected")),
        };
        Ok(Verdict { postulate: file.postulate, measure: file.measure, status, witness: file.witness })
    }
}

/// Controls which instances [`Postulate::instances`] generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceOptions {
    /// Largest bloc tried; `None` means every size up to `n` when `n <= 4`
    /// and at most 3 otherwise.
    pub bloc_cap: Option<usize>,
    /// Every permutation is tried up to this many players; beyond it, only
    /// adjacent transpositions and the reversal.
    pub all_permutations_up_to: usize,
}

impl Default for InstanceOptions {
    fn default() -> Self {
        InstanceOptions { bloc_cap: None, all_permutations_up_to: 4 }
    }
}

impl InstanceOptions {
    pub fn bloc_cap_for(&self, n: usize) -> usize {
        self.bloc_cap.unwrap_or(if n <= 4 { n } else { 3 }).min(n)
    }
}

/// A postulate about a measure of voting power.
pub trait Postulate: Send + Sync {
    fn id(&self) -> PostulateId;

    /// Qualifying instances for `game`, in a fixed order.
    fn instances(&self, game: &Game, options: &InstanceOptions) -> Vec<Qualifier>;

    fn check(&self, game: &Game, measure: &dyn PowerMeasure, qualifier: &Qualifier) -> Result<Verdict>;
}

/// Postulate checkers indexed by id.
pub struct PostulateRegistry {
    entries: Vec<Box<dyn Postulate>>,
}

impl PostulateRegistry {
    pub fn standard() -> Self {
        let mut entries: Vec<Box<dyn Postulate>> = Vec::new();
        for id in [
            PostulateId::Spb,
            PostulateId::Mpb,
            PostulateId::Sbb,
            PostulateId::Sbk1,
            PostulateId::Sbk2,
            PostulateId::Wbk1,
            PostulateId::Wbk2,
        ] {
            entries.push(Box::new(BlocPostulate(id)));
        }
        for id in [
            PostulateId::Bsp1,
            PostulateId::Bsp2,
            PostulateId::Smp1,
            PostulateId::Smp2,
            PostulateId::Wmp1,
            PostulateId::Wmp2,
        ] {
            entries.push(Box::new(MinimumPower(id)));
        }
        for id in [PostulateId::Add0, PostulateId::Add1, PostulateId::Add2] {
            entries.push(Box::new(Added(id)));
        }
        entries.push(Box::new(Dummy));
        entries.push(Box::new(IsoInvariance));
        PostulateRegistry { entries }
    }

    pub fn register(&mut self, postulate: Box<dyn Postulate>) {
        self.entries.retain(|p| p.id() != postulate.id());
        self.entries.push(postulate);
    }

    pub fn get(&self, id: PostulateId) -> &dyn Postulate {
        self.entries
            .iter()
            .find(|p| p.id() == id)
            .map(|p| p.as_ref())
            .expect("standard registry covers every postulate id")
    }

    pub fn ids(&self) -> Vec<PostulateId> {
        self.entries.iter().map(|p| p.id()).collect()
    }

    /// Checks every instance of `id` on `game`.
    pub fn check_all(
        &self,
        game: &Game,
        measure: &dyn PowerMeasure,
        id: PostulateId,
        options: &InstanceOptions,
    ) -> Result<Vec<Verdict>> {
        let postulate = self.get(id);
        postulate.instances(game, options).iter().map(|q| postulate.check(game, measure, q)).collect()
    }
}

impl Default for PostulateRegistry {
    fn default() -> Self {
        PostulateRegistry::standard()
    }
}

fn wrong_qualifier(id: PostulateId, qualifier: &Qualifier) -> Error {
    Error::WrongQualifier { postulate: id.to_string(), qualifier: qualifier.to_string() }
}
