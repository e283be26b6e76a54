//! Game transforms: vote donation and bloc formation, added blockers,
//! dummy deletion and player relabelling.

use crate::coalition::{Coalition, PlayerId};
use crate::error::{Error, Result};
use crate::game::{minimal_elements, total_weight, Game, Rule};

/// A transformed game together with where each old player went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformed {
    pub game: Game,
    /// `index_map[old]` is the player's index in `game`, or `None` if deleted.
    pub index_map: Vec<Option<PlayerId>>,
}

impl Transformed {
    pub fn new_index(&self, old: PlayerId) -> Option<PlayerId> {
        self.index_map.get(old).copied().flatten()
    }
}

/// Players forming a voting bloc, with the member who receives the votes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlocSpec {
    members: Coalition,
    lead: PlayerId,
}

impl BlocSpec {
    pub fn new(members: Coalition, lead: PlayerId) -> Result<BlocSpec> {
        if members.is_empty() {
            return Err(Error::EmptyBloc);
        }
        if !members.contains(lead) {
            return Err(Error::LeadNotInBloc(lead));
        }
        Ok(BlocSpec { members, lead })
    }

    /// Lead defaults to the lowest-indexed member.
    pub fn with_lowest_lead(members: Coalition) -> Result<BlocSpec> {
        let lead = members.players().next().ok_or(Error::EmptyBloc)?;
        BlocSpec::new(members, lead)
    }

    pub fn members(&self) -> Coalition {
        self.members
    }

    pub fn lead(&self) -> PlayerId {
        self.lead
    }

    pub fn donors(&self) -> impl Iterator<Item = PlayerId> + '_ {
        self.members.players().filter(move |&p| p != self.lead)
    }
}

/// Player `from` hands its vote to `to`; `from` is left a dummy in a game
/// on the same player set.
///
/// With `S` free of both players: `S+{to,from}` and `S+{to}` win iff
/// `S+{to,from}` won before, and `S+{from}` and `S` win iff `S` won before.
pub fn donate(game: &Game, from: PlayerId, to: PlayerId) -> Result<Game> {
    game.check_player(from)?;
    game.check_player(to)?;
    if from == to {
        return Ok(game.clone());
    }
    let n = game.n();
    match game.rule() {
        Rule::Weighted { quota, weights } => {
            let mut weights = weights.clone();
            weights[to] = weights[to]
                .checked_add(weights[from])
                .ok_or_else(|| Error::Malformed("weight overflow during donation".into()))?;
            weights[from] = 0;
            Game::weighted(*quota, weights)
        }
        Rule::Explicit { min_winning } => {
            let generators = min_winning
                .iter()
                .map(|&m| if m.contains(from) { m.without(from).with(to) } else { m })
                .collect();
            Game::from_generators(n, generators)
        }
    }
}

/// Forms the bloc by successive full donations to the lead, in ascending
/// donor order, then deletes the donors (now dummies).
pub fn form_bloc(game: &Game, bloc: &BlocSpec) -> Result<Transformed> {
    if !bloc.members.is_subset_of(game.full()) {
        let stray = bloc.members.difference(game.full()).players().next().unwrap_or(game.n());
        return Err(Error::PlayerOutOfRange { player: stray, n: game.n() });
    }
    let mut current = game.clone();
    for donor in bloc.donors() {
        current = donate(&current, donor, bloc.lead)?;
    }
    let donors = bloc.members.without(bloc.lead);
    debug_assert!(donors.players().all(|p| current.is_dummy(p)));
    Ok(compact(&current, donors))
}

/// Deletes a dummy player, renumbering the rest in order.
pub fn delete_dummy(game: &Game, p: PlayerId) -> Result<Transformed> {
    game.check_player(p)?;
    if !game.is_dummy(p) {
        return Err(Error::NotADummy(p));
    }
    if game.n() == 1 {
        return Err(Error::Malformed("cannot delete the only player".into()));
    }
    Ok(compact(game, Coalition::singleton(p)))
}

/// Appends player `n`, who must be in every winning coalition and otherwise
/// leaves the game unchanged.
pub fn add_yes_blocker(game: &Game) -> Result<Game> {
    let n = game.n();
    match game.rule() {
        Rule::Weighted { quota, weights } => {
            // One more than everyone else together, so nobody wins without it.
            let blocker = total_weight(weights) + 1;
            let new_quota = u128::from(*quota) + blocker;
            if let (Ok(blocker), Ok(new_quota)) = (u64::try_from(blocker), u64::try_from(new_quota)) {
                let mut weights = weights.clone();
                weights.push(blocker);
                return Game::weighted(new_quota, weights);
            }
            add_yes_blocker(&game.to_explicit())
        }
        Rule::Explicit { min_winning } => {
            Game::explicit(n + 1, min_winning.iter().map(|m| m.with(n)).collect())
        }
    }
}

/// Appends player `n`, whose YES vote alone carries the motion; old winning
/// coalitions still win without it.
pub fn add_no_blocker(game: &Game) -> Result<Game> {
    let n = game.n();
    match game.rule() {
        Rule::Weighted { quota, weights } => {
            let mut weights = weights.clone();
            weights.push(*quota);
            Game::weighted(*quota, weights)
        }
        Rule::Explicit { min_winning } => {
            let mut family = min_winning.clone();
            family.push(Coalition::singleton(n));
            Game::explicit(n + 1, family)
        }
    }
}

/// Relabels players: old player `p` becomes `perm[p]`.
pub fn permute_players(game: &Game, perm: &[PlayerId]) -> Result<Game> {
    let n = game.n();
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    for &q in perm {
        if q >= n || seen[q] {
            return Err(Error::NotAPermutation(n));
        }
        seen[q] = true;
    }
    match game.rule() {
        Rule::Weighted { quota, weights } => {
            let mut permuted = vec![0; n];
            for (p, &w) in weights.iter().enumerate() {
                permuted[perm[p]] = w;
            }
            Game::weighted(*quota, permuted)
        }
        Rule::Explicit { min_winning } => {
            Game::explicit(n, min_winning.iter().map(|&m| permute_coalition(m, perm)).collect())
        }
    }
}

pub fn permute_coalition(coalition: Coalition, perm: &[PlayerId]) -> Coalition {
    Coalition::from_players(coalition.players().map(|p| perm[p]))
}

/// Removes `removed` (all dummies) and renumbers survivors in order.
fn compact(game: &Game, removed: Coalition) -> Transformed {
    let n = game.n();
    let mut index_map = Vec::with_capacity(n);
    let mut next = 0;
    for p in 0..n {
        if removed.contains(p) {
            index_map.push(None);
        } else {
            index_map.push(Some(next));
            next += 1;
        }
    }
    let remap = |m: Coalition| Coalition::from_players(m.players().filter_map(|p| index_map[p]));
    let rule = match game.rule() {
        Rule::Weighted { quota, weights } => Rule::Weighted {
            quota: *quota,
            weights: weights.iter().enumerate().filter(|(p, _)| !removed.contains(*p)).map(|(_, &w)| w).collect(),
        },
        Rule::Explicit { min_winning } => {
            Rule::Explicit { min_winning: minimal_elements(min_winning.iter().map(|&m| remap(m)).collect()) }
        }
    };
    let compacted = Game::from_rule_unchecked(next, rule);
    debug_assert!(compacted.validate().is_ok());
    Transformed { game: compacted, index_map }
}
