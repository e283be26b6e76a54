//! Added-blocker postulates: ADD0 (totals, YES-blocker), ADD1 (YES
//! components, YES-blocker) and ADD2 (NO components, NO-blocker).

use crate::coalition::PlayerId;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::measures::{PowerMeasure, PowerReport};
use crate::rational::{zero, Rational};
use crate::transform::{add_no_blocker, add_yes_blocker};

use super::{wrong_qualifier, InstanceOptions, Postulate, PostulateId, Qualifier, Relation, Verdict, Witness};

#[derive(Clone, Copy, Debug)]
pub struct Added(pub PostulateId);

impl Postulate for Added {
    fn id(&self) -> PostulateId {
        self.0
    }

    /// Every ordered pair of distinct players.
    fn instances(&self, game: &Game, _options: &InstanceOptions) -> Vec<Qualifier> {
        let n = game.n();
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| Qualifier::Pair(i, j)))
            .collect()
    }

    fn check(&self, game: &Game, measure: &dyn PowerMeasure, qualifier: &Qualifier) -> Result<Verdict> {
        let Qualifier::Pair(i, j) = *qualifier else {
            return Err(wrong_qualifier(self.0, qualifier));
        };
        check_add(game, measure, self.0, i, j)
    }
}

fn component(id: PostulateId, report: &PowerReport, p: PlayerId) -> Rational {
    match id {
        PostulateId::Add1 => report.yes(p).clone(),
        PostulateId::Add2 => report.no(p).clone(),
        _ => report.total(p).clone(),
    }
}

/// Checks `psi_i(G) / psi_j(G) = psi_i(G') / psi_j(G')` where `G'` is `G`
/// with a YES-blocker (ADD0, ADD1) or NO-blocker (ADD2) appended. The ratios
/// are compared by cross-multiplication. A zero denominator makes the check
/// not applicable, except that two dummies are taken to have equal ratios.
pub fn check_add(game: &Game, measure: &dyn PowerMeasure, id: PostulateId, i: PlayerId, j: PlayerId) -> Result<Verdict> {
    assert!(
        matches!(id, PostulateId::Add0 | PostulateId::Add1 | PostulateId::Add2),
        "{id} is not an added-blocker postulate"
    );
    game.check_player(i)?;
    game.check_player(j)?;
    if i == j {
        return Err(Error::Malformed(format!("pair needs two distinct players, got {} twice", i + 1)));
    }
    let extended = if id == PostulateId::Add2 { add_no_blocker(game)? } else { add_yes_blocker(game)? };
    let before = measure.power(game)?;
    let after = measure.power(&extended)?;
    let (a, b) = (component(id, &before, i), component(id, &before, j));
    let (a2, b2) = (component(id, &after, i), component(id, &after, j));
    let qualifier = Qualifier::Pair(i, j);

    if b == zero() || b2 == zero() {
        let dummies = game.is_dummy(i) && game.is_dummy(j) && extended.is_dummy(i) && extended.is_dummy(j);
        if dummies {
            let witness = Witness::new(qualifier, zero(), Relation::Equal, zero())
                .players([i, j])
                .derived(extended)
                .note("both players are dummies in both games");
            return Ok(Verdict::from_witness(id, measure.kind(), witness));
        }
        return Ok(Verdict::not_applicable(
            id,
            measure.kind(),
            format!("player {} has zero power, ratio undefined", j + 1),
        ));
    }

    let equal = &a * &b2 == &a2 * &b;
    let mut witness = Witness::new(qualifier, &a / &b, Relation::Equal, &a2 / &b2)
        .players([i, j])
        .derived(extended)
        .note("power ratio before vs after adding the blocker");
    debug_assert_eq!(equal, witness.satisfied());
    if !equal {
        // keep the exact cross-multiplied comparison visible alongside the ratios
        witness.note = format!("{}; cross products {} vs {}", witness.note, &a * &b2, &a2 * &b);
    }
    Ok(Verdict::from_witness(id, measure.kind(), witness))
}
