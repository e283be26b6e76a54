//! Adequacy postulates: dummies have zero power (and deleting one changes
//! nobody's power), and relabelling players relabels their powers.

use crate::coalition::PlayerId;
use crate::error::Result;
use crate::game::Game;
use crate::measures::PowerMeasure;
use crate::rational::zero;
use crate::transform::{delete_dummy, permute_players};

use super::{wrong_qualifier, InstanceOptions, Postulate, PostulateId, Qualifier, Relation, Verdict, Witness};

#[derive(Clone, Copy, Debug)]
pub struct Dummy;

impl Postulate for Dummy {
    fn id(&self) -> PostulateId {
        PostulateId::Dummy
    }

    fn instances(&self, _game: &Game, _options: &InstanceOptions) -> Vec<Qualifier> {
        vec![Qualifier::Game]
    }

    fn check(&self, game: &Game, measure: &dyn PowerMeasure, qualifier: &Qualifier) -> Result<Verdict> {
        if *qualifier != Qualifier::Game {
            return Err(wrong_qualifier(PostulateId::Dummy, qualifier));
        }
        check_dummy(game, measure)
    }
}

/// Zero power exactly for dummies, and deleting any dummy leaves every other
/// player's power (total, YES and NO parts) unchanged. Holding verdicts carry
/// no witness; a failure reports the first offending player.
pub fn check_dummy(game: &Game, measure: &dyn PowerMeasure) -> Result<Verdict> {
    let id = PostulateId::Dummy;
    let report = measure.power(game)?;
    for p in 0..game.n() {
        let power = report.total(p).clone();
        let dummy = game.is_dummy(p);
        let is_zero = power == zero();
        if dummy != is_zero {
            let (relation, note) = if dummy {
                (Relation::Equal, "dummy with non-zero power")
            } else {
                (Relation::Greater, "non-dummy with zero power")
            };
            let witness = Witness::new(Qualifier::Game, power, relation, zero()).players([p]).note(note);
            return Ok(Verdict::from_witness(id, measure.kind(), witness));
        }
    }

    if game.n() > 1 {
        for d in game.dummies().players() {
            let reduced = delete_dummy(game, d)?;
            let after = measure.power(&reduced.game)?;
            for p in (0..game.n()).filter(|&p| p != d) {
                let q = reduced.new_index(p).expect("only the dummy is deleted");
                if after.player(q) != report.player(p) {
                    let part = if after.total(q) != report.total(p) { "total" } else { "YES/NO split" };
                    let witness = Witness::new(Qualifier::Game, after.total(q).clone(), Relation::Equal, report.total(p).clone())
                        .players([p])
                        .derived(reduced.game)
                        .note(format!("{part} changes when dummy {} is deleted", d + 1));
                    return Ok(Verdict::from_witness(id, measure.kind(), witness));
                }
            }
        }
    }
    Ok(Verdict::holds_without_witness(id, measure.kind()))
}

#[derive(Clone, Copy, Debug)]
pub struct IsoInvariance;

impl Postulate for IsoInvariance {
    fn id(&self) -> PostulateId {
        PostulateId::Iso
    }

    /// All non-identity permutations for small games; adjacent transpositions
    /// and the reversal otherwise.
    fn instances(&self, game: &Game, options: &InstanceOptions) -> Vec<Qualifier> {
        let n = game.n();
        let identity: Vec<PlayerId> = (0..n).collect();
        let perms = if n <= options.all_permutations_up_to {
            all_permutations(n)
        } else {
            let mut perms: Vec<Vec<PlayerId>> = (0..n - 1)
                .map(|k| {
                    let mut p = identity.clone();
                    p.swap(k, k + 1);
                    p
                })
                .collect();
            perms.push(identity.iter().rev().copied().collect());
            perms
        };
        perms.into_iter().filter(|p| *p != identity).map(Qualifier::Permutation).collect()
    }

    fn check(&self, game: &Game, measure: &dyn PowerMeasure, qualifier: &Qualifier) -> Result<Verdict> {
        let Qualifier::Permutation(perm) = qualifier else {
            return Err(wrong_qualifier(PostulateId::Iso, qualifier));
        };
        check_iso(game, measure, perm)
    }
}

/// Permutations of `0..n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Vec<PlayerId>> {
    let mut current: Vec<PlayerId> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1]) else {
            return out;
        };
        let l = (k + 1..n).rev().find(|&l| current[k] < current[l]).expect("successor exists");
        current.swap(k, l);
        current[k + 1..].reverse();
        out.push(current.clone());
    }
}

/// Power of old player `p` in `game` equals the power of `perm[p]` in the
/// relabelled game, componentwise.
pub fn check_iso(game: &Game, measure: &dyn PowerMeasure, perm: &[PlayerId]) -> Result<Verdict> {
    let id = PostulateId::Iso;
    let permuted = permute_players(game, perm)?;
    let before = measure.power(game)?;
    let after = measure.power(&permuted)?;
    for p in 0..game.n() {
        let q = perm[p];
        if after.player(q) != before.player(p) {
            let part = if after.total(q) != before.total(p) { "total" } else { "YES/NO split" };
            let witness = Witness::new(
                Qualifier::Permutation(perm.to_vec()),
                after.total(q).clone(),
                Relation::Equal,
                before.total(p).clone(),
            )
            .players([p])
            .derived(permuted)
            .note(format!("{part} of player {} moves under relabelling", p + 1));
            return Ok(Verdict::from_witness(id, measure.kind(), witness));
        }
    }
    Ok(Verdict::holds_without_witness(id, measure.kind()))
}
