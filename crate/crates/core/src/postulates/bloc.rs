//! Bloc postulates: SPB, MPB, SBB and the blocker-restricted SBK/WBK.

use crate::coalition::Coalition;
use crate::error::Result;
use crate::game::Game;
use crate::measures::PowerMeasure;
use crate::rational::{zero, Rational};
use crate::transform::{form_bloc, BlocSpec};

use super::{wrong_qualifier, InstanceOptions, Postulate, PostulateId, Qualifier, Relation, Verdict, Witness};

/// One of the seven postulates comparing a bloc's power with its members'.
#[derive(Clone, Copy, Debug)]
pub struct BlocPostulate(pub PostulateId);

impl BlocPostulate {
    /// Why the bloc does not qualify, if it does not.
    fn precondition(&self, game: &Game, members: Coalition) -> Option<&'static str> {
        let yes = game.yes_blockers();
        let no = game.no_blockers();
        match self.0 {
            PostulateId::Sbk1 if members.intersection(yes).is_empty() => Some("bloc contains no YES-blocker"),
            PostulateId::Sbk2 if members.intersection(no).is_empty() => Some("bloc contains no NO-blocker"),
            PostulateId::Wbk1 if !members.is_subset_of(yes) => Some("bloc has a member who is not a YES-blocker"),
            PostulateId::Wbk2 if !members.is_subset_of(no) => Some("bloc has a member who is not a NO-blocker"),
            _ => None,
        }
    }
}

impl Postulate for BlocPostulate {
    fn id(&self) -> PostulateId {
        self.0
    }

    /// Every bloc of at least two players up to the size cap whose
    /// membership meets the postulate's precondition, led by its lowest
    /// member.
    fn instances(&self, game: &Game, options: &InstanceOptions) -> Vec<Qualifier> {
        let cap = options.bloc_cap_for(game.n());
        let mut blocs: Vec<Coalition> = game
            .full()
            .subsets()
            .filter(|s| s.len() >= 2 && s.len() <= cap && self.precondition(game, *s).is_none())
            .collect();
        blocs.sort_by_key(|s| (s.len(), s.bits()));
        blocs
            .into_iter()
            .map(|s| Qualifier::Bloc(BlocSpec::with_lowest_lead(s).expect("non-empty bloc")))
            .collect()
    }

    fn check(&self, game: &Game, measure: &dyn PowerMeasure, qualifier: &Qualifier) -> Result<Verdict> {
        let Qualifier::Bloc(bloc) = qualifier else {
            return Err(wrong_qualifier(self.0, qualifier));
        };
        check_bloc(game, measure, self.0, bloc)
    }
}

/// Checks a bloc postulate (`SPB`, `MPB`, `SBB`, `SBK1/2`, `WBK1/2`) on one
/// bloc. The bloc's power is the lead's power in the post-bloc game.
pub fn check_bloc(game: &Game, measure: &dyn PowerMeasure, id: PostulateId, bloc: &BlocSpec) -> Result<Verdict> {
    let checker = BlocPostulate(id);
    assert!(
        matches!(
            id,
            PostulateId::Spb
                | PostulateId::Mpb
                | PostulateId::Sbb
                | PostulateId::Sbk1
                | PostulateId::Sbk2
                | PostulateId::Wbk1
                | PostulateId::Wbk2
        ),
        "{id} is not a bloc postulate"
    );
    for p in bloc.members().players() {
        game.check_player(p)?;
    }
    if let Some(reason) = checker.precondition(game, bloc.members()) {
        return Ok(Verdict::not_applicable(id, measure.kind(), reason));
    }

    let before = measure.power(game)?;
    let transformed = form_bloc(game, bloc)?;
    let after = measure.power(&transformed.game)?;
    let lead = transformed.new_index(bloc.lead()).expect("bloc lead survives");
    let bloc_power = after.total(lead).clone();

    let member_powers = bloc.members().players().map(|p| before.total(p).clone());
    let (relation, rhs, note) = match id {
        PostulateId::Spb => (Relation::AtLeast, member_powers.fold(zero(), |a, b| a + b), "sum of member powers"),
        PostulateId::Mpb => (
            Relation::AtLeast,
            member_powers.max().unwrap_or_else(zero),
            "largest member power",
        ),
        _ => (Relation::AtMost, member_powers.fold(zero(), |a: Rational, b| a + b), "sum of member powers"),
    };
    let witness = Witness::new(Qualifier::Bloc(*bloc), bloc_power, relation, rhs)
        .players(bloc.members().players())
        .coalition(bloc.members())
        .derived(transformed.game)
        .note(format!("bloc power vs {note}"));
    Ok(Verdict::from_witness(id, measure.kind(), witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{Banzhaf, Recursive, ShapleyShubik};
    use crate::rational::ratio;

    fn all(n: usize) -> BlocSpec {
        BlocSpec::with_lowest_lead(Coalition::full(n)).unwrap()
    }

    fn pair(i: usize, j: usize) -> BlocSpec {
        BlocSpec::with_lowest_lead(Coalition::from_players([i, j])).unwrap()
    }

    #[test]
    fn unanimity_three_bloc_is_superadditive_under_pb() {
        let g = Game::unanimity(3);
        let pb = Banzhaf::default();
        let v = check_bloc(&g, &pb, PostulateId::Sbb, &all(3)).unwrap();
        assert!(v.fails());
        let w = v.witness.unwrap();
        assert_eq!((w.lhs, w.rhs), (ratio(1, 1), ratio(3, 4)));
        assert!(check_bloc(&g, &pb, PostulateId::Wbk1, &all(3)).unwrap().fails());
        assert!(check_bloc(&g, &pb, PostulateId::Spb, &all(3)).unwrap().holds());
    }

    #[test]
    fn sbb_examples_on_five_player_game() {
        let g = Game::weighted(2, vec![1, 1, 2, 2, 2]).unwrap();
        let ss = ShapleyShubik::default();
        let v = check_bloc(&g, &ss, PostulateId::Sbb, &pair(0, 1)).unwrap();
        let w = v.witness.as_ref().unwrap();
        assert!(v.fails());
        assert_eq!((w.lhs.clone(), w.rhs.clone()), (ratio(1, 4), ratio(1, 10)));

        let rm = Recursive::default();
        let v = check_bloc(&g, &rm, PostulateId::Sbb, &pair(0, 1)).unwrap();
        let w = v.witness.as_ref().unwrap();
        assert!(v.fails());
        assert_eq!((w.lhs.clone(), w.rhs.clone()), (ratio(19, 64), ratio(41, 160)));
    }

    #[test]
    fn sbk1_fails_for_ss_on_311() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        let ss = ShapleyShubik::default();
        let v = check_bloc(&g, &ss, PostulateId::Sbk1, &pair(0, 1)).unwrap();
        assert!(v.fails());
        let w = v.witness.unwrap();
        assert_eq!((w.lhs.clone(), w.rhs.clone()), (ratio(1, 1), ratio(5, 6)));
        assert_eq!(w.to_string(), "1 > 5/6");
    }

    #[test]
    fn preconditions_give_not_applicable() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        let pb = Banzhaf::default();
        // players 2 and 3 are not YES-blockers
        let v = check_bloc(&g, &pb, PostulateId::Sbk1, &pair(1, 2)).unwrap();
        assert!(v.is_not_applicable());
        let v = check_bloc(&g, &pb, PostulateId::Wbk1, &pair(0, 1)).unwrap();
        assert!(v.is_not_applicable());
    }

    #[test]
    fn instances_respect_precondition_and_cap() {
        let g = Game::weighted(3, vec![2, 1, 1]).unwrap();
        let sbk1 = BlocPostulate(PostulateId::Sbk1);
        let blocs = sbk1.instances(&g, &InstanceOptions::default());
        assert_eq!(blocs.len(), 3); // {1,2}, {1,3}, {1,2,3}
        let capped = sbk1.instances(&g, &InstanceOptions { bloc_cap: Some(2), ..Default::default() });
        assert_eq!(capped.len(), 2);
        assert!(BlocPostulate(PostulateId::Wbk1).instances(&g, &InstanceOptions::default()).is_empty());
    }

    #[test]
    fn rejects_other_qualifiers() {
        let g = Game::unanimity(2);
        let pb = Banzhaf::default();
        assert!(BlocPostulate(PostulateId::Sbb).check(&g, &pb, &Qualifier::Game).is_err());
    }
}
