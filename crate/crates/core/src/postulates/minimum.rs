//! Share and minimum-power postulates for blockers: BSP, SMP, WMP.

use crate::coalition::{Coalition, PlayerId};
use crate::error::Result;
use crate::game::Game;
use crate::measures::{dictator_power, PowerMeasure, PowerReport};
use crate::rational::{ratio, Rational};

use super::{wrong_qualifier, InstanceOptions, Postulate, PostulateId, Qualifier, Relation, Verdict, Witness};

/// One of the six game-level blocker postulates.
#[derive(Clone, Copy, Debug)]
pub struct MinimumPower(pub PostulateId);

impl Postulate for MinimumPower {
    fn id(&self) -> PostulateId {
        self.0
    }

    fn instances(&self, _game: &Game, _options: &InstanceOptions) -> Vec<Qualifier> {
        vec![Qualifier::Game]
    }

    fn check(&self, game: &Game, measure: &dyn PowerMeasure, qualifier: &Qualifier) -> Result<Verdict> {
        if *qualifier != Qualifier::Game {
            return Err(wrong_qualifier(self.0, qualifier));
        }
        check_minimum(game, measure, self.0)
    }
}

/// The blockers in scope and the binding coalition: the smallest winning set
/// for the YES variants, the smallest NO-successful set (complement of a
/// largest losing set) for the NO variants.
struct Scope {
    blockers: Coalition,
    binding: Coalition,
    kind: &'static str,
}

fn scope(game: &Game, id: PostulateId) -> std::result::Result<Scope, &'static str> {
    let yes_side = matches!(id, PostulateId::Bsp1 | PostulateId::Smp1 | PostulateId::Wmp1);
    if yes_side {
        let blockers = game.yes_blockers();
        if blockers.is_empty() {
            return Err("game has no YES-blocker");
        }
        if id == PostulateId::Wmp1 {
            // A winning set made only of YES-blockers must be the blocker set itself.
            if !game.is_winning(blockers) {
                return Err("no winning set consists only of YES-blockers");
            }
            return Ok(Scope { blockers, binding: blockers, kind: "winning set" });
        }
        Ok(Scope { blockers, binding: smallest_winning(game), kind: "smallest winning set" })
    } else {
        let blockers = game.no_blockers();
        if blockers.is_empty() {
            return Err("game has no NO-blocker");
        }
        if id == PostulateId::Wmp2 {
            // Likewise, the NO-successful set of NO-blockers must be all of them.
            if game.is_winning(game.full().difference(blockers)) {
                return Err("no NO-successful set consists only of NO-blockers");
            }
            return Ok(Scope { blockers, binding: blockers, kind: "NO-successful set" });
        }
        Ok(Scope { blockers, binding: smallest_no_successful(game), kind: "smallest NO-successful set" })
    }
}

fn smallest_winning(game: &Game) -> Coalition {
    game.minimal_winning()
        .into_iter()
        .min_by_key(|s| (s.len(), s.bits()))
        .expect("non-trivial game has a winning set")
}

/// Complement of a largest losing coalition.
fn smallest_no_successful(game: &Game) -> Coalition {
    let full = game.full();
    full.subsets()
        .filter(|t| !game.is_winning(*t))
        .map(|t| full.difference(t))
        .min_by_key(|s| (s.len(), s.bits()))
        .expect("non-trivial game has a losing set")
}

/// Checks `BSP1/2`, `SMP1/2` or `WMP1/2` for every blocker of the relevant
/// kind. Bounds shrink as the coalition grows, so the smallest qualifying
/// coalition is the binding case; the witness is the blocker closest to (or
/// furthest below) its bound.
pub fn check_minimum(game: &Game, measure: &dyn PowerMeasure, id: PostulateId) -> Result<Verdict> {
    assert!(
        matches!(
            id,
            PostulateId::Bsp1
                | PostulateId::Bsp2
                | PostulateId::Smp1
                | PostulateId::Smp2
                | PostulateId::Wmp1
                | PostulateId::Wmp2
        ),
        "{id} is not a minimum-power postulate"
    );
    let scope = match scope(game, id) {
        Ok(scope) => scope,
        Err(reason) => return Ok(Verdict::not_applicable(id, measure.kind(), reason)),
    };
    let report = measure.power(game)?;
    let share = matches!(id, PostulateId::Bsp1 | PostulateId::Bsp2);
    let size = scope.binding.len() as i64;
    let (rhs, what) = if share {
        (ratio(1, size), "share of total power vs 1/|S|")
    } else {
        (dictator_power(measure)? * ratio(1, size), "power vs dictator power/|S|")
    };

    let value = |b: PlayerId, report: &PowerReport| -> Rational {
        if share {
            report.total(b) / report.sum()
        } else {
            report.total(b).clone()
        }
    };
    let (tightest, lhs) = scope
        .blockers
        .players()
        .map(|b| (b, value(b, &report)))
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("blocker set is non-empty");

    let witness = Witness::new(Qualifier::Game, lhs, Relation::AtLeast, rhs)
        .players([tightest])
        .coalition(scope.binding)
        .note(format!("{what}, {} {}", scope.kind, scope.binding));
    Ok(Verdict::from_witness(id, measure.kind(), witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{Banzhaf, Recursive, ShapleyShubik};

    #[test]
    fn wmp_fails_for_pb_on_unanimity_six() {
        let g = Game::unanimity(6);
        let pb = Banzhaf::default();
        let v = check_minimum(&g, &pb, PostulateId::Wmp1).unwrap();
        assert!(v.fails());
        let w = v.witness.unwrap();
        assert_eq!((w.lhs, w.rhs), (ratio(1, 32), ratio(1, 6)));
        assert!(check_minimum(&g, &pb, PostulateId::Smp1).unwrap().fails());
    }

    #[test]
    fn pb_share_meets_equality_on_unanimity() {
        let g = Game::unanimity(5);
        let v = check_minimum(&g, &Banzhaf::default(), PostulateId::Bsp1).unwrap();
        assert!(v.holds());
        let w = v.witness.unwrap();
        assert_eq!(w.lhs, w.rhs);
    }

    #[test]
    fn ss_minimum_power_on_311() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        let ss = ShapleyShubik::default();
        let v = check_minimum(&g, &ss, PostulateId::Smp1).unwrap();
        assert!(v.holds());
        let w = v.witness.unwrap();
        assert_eq!((w.lhs, w.rhs), (ratio(2, 3), ratio(1, 2)));
        assert_eq!(w.coalition.unwrap(), vec![1, 2]);
        // no NO-blocker: no singleton wins
        assert!(check_minimum(&g, &ss, PostulateId::Smp2).unwrap().is_not_applicable());
        // player 1 alone is not winning
        assert!(check_minimum(&g, &ss, PostulateId::Wmp1).unwrap().is_not_applicable());
    }

    #[test]
    fn no_side_uses_largest_losing_set() {
        // Any single player can say YES: everyone is a NO-blocker.
        let g = Game::weighted(1, vec![1, 1, 1]).unwrap();
        let rm = Recursive::default();
        let v = check_minimum(&g, &rm, PostulateId::Smp2).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.coalition.unwrap().len(), 3);
        assert!(check_minimum(&g, &rm, PostulateId::Wmp2).unwrap().holds());
        assert!(check_minimum(&g, &rm, PostulateId::Smp1).unwrap().is_not_applicable());
    }

    #[test]
    fn dictator_game_meets_bounds_exactly() {
        let g = Game::dictator(3, 1);
        for kind in crate::measures::MeasureKind::ALL {
            let m = kind.measure(Default::default());
            for id in [PostulateId::Smp1, PostulateId::Smp2, PostulateId::Wmp1, PostulateId::Wmp2] {
                let v = check_minimum(&g, m.as_ref(), id).unwrap();
                let w = v.witness.unwrap();
                assert_eq!(w.lhs, ratio(1, 1), "{id} {kind}");
                assert_eq!(w.rhs, ratio(1, 1), "{id} {kind}");
            }
        }
    }
}
