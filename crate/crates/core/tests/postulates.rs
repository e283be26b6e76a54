//! Postulate checkers on the worked examples and on whole spaces.

use voting_power::coalition::Coalition;
use voting_power::measures::{Banzhaf, MeasureKind, PowerMeasure, Recursive, ShapleyShubik};
use voting_power::postulates::{
    check_add, check_bloc, check_dummy, check_iso, check_minimum, InstanceOptions, PostulateId, PostulateRegistry,
    Qualifier, Verdict,
};
use voting_power::rational::ratio;
use voting_power::search::{corpus_game, enumerate_games, GameSpace};
use voting_power::transform::BlocSpec;
use voting_power::{Error, Game, Limits};

fn bloc(players: &[usize]) -> BlocSpec {
    BlocSpec::with_lowest_lead(Coalition::from_players(players.iter().copied())).unwrap()
}

#[test]
fn unanimity_three_violates_both_bloc_blocker_postulates_under_pb() {
    let g = corpus_game("unanimity3").unwrap();
    let pb = Banzhaf::default();
    for id in [PostulateId::Sbb, PostulateId::Sbk1, PostulateId::Wbk1] {
        let v = check_bloc(&g, &pb, id, &bloc(&[0, 1, 2])).unwrap();
        assert!(v.fails(), "{id}");
        let w = v.witness.unwrap();
        assert_eq!((w.lhs, w.rhs), (ratio(1, 1), ratio(3, 4)));
    }
    // every member is a NO-blocker only in the one-player game
    assert!(check_bloc(&g, &pb, PostulateId::Wbk2, &bloc(&[0, 1, 2])).unwrap().is_not_applicable());
}

#[test]
fn mpb_holds_on_worked_examples() {
    let g = corpus_game("g_11222").unwrap();
    let measures: [&dyn PowerMeasure; 3] = [&Banzhaf::default(), &ShapleyShubik::default(), &Recursive::default()];
    for m in measures {
        assert!(check_bloc(&g, m, PostulateId::Mpb, &bloc(&[0, 1])).unwrap().holds());
        assert!(check_bloc(&g, m, PostulateId::Spb, &bloc(&[0, 1])).unwrap().holds());
    }
}

#[test]
fn minimum_power_verdicts_on_unanimity() {
    let pb = Banzhaf::default();
    let ss = ShapleyShubik::default();
    let rm = Recursive::default();
    for n in 2..=7 {
        let g = Game::unanimity(n);
        // 1/2^(n-1) against 1/n: equality at two players, a violation beyond
        assert_eq!(check_minimum(&g, &pb, PostulateId::Wmp1).unwrap().fails(), n >= 3);
        for m in [&ss as &dyn PowerMeasure, &rm] {
            let v = check_minimum(&g, m, PostulateId::Wmp1).unwrap();
            assert!(v.holds(), "{} n = {n}: {v}", m.kind());
        }
        // PB meets the share bound with equality: 1/n of the total
        let v = check_minimum(&g, &pb, PostulateId::Bsp1).unwrap();
        let w = v.witness.unwrap();
        assert_eq!((w.lhs, w.rhs), (ratio(1, n as i64), ratio(1, n as i64)));
    }
}

#[test]
fn added_blocker_examples() {
    let g = corpus_game("g_311").unwrap();
    let v = check_add(&g, &ShapleyShubik::default(), PostulateId::Add1, 0, 1).unwrap();
    assert!(v.fails());
    let w = v.witness.as_ref().unwrap();
    assert_eq!((w.lhs.clone(), w.rhs.clone()), (ratio(4, 1), ratio(5, 1)));
    for id in [PostulateId::Add0, PostulateId::Add1, PostulateId::Add2] {
        assert!(check_add(&g, &Banzhaf::default(), id, 0, 1).unwrap().holds());
    }
}

#[test]
fn adequacy_on_small_examples() {
    let g = Game::weighted(3, vec![3, 1]).unwrap();
    for kind in MeasureKind::ALL {
        let m = kind.measure(Limits::default());
        assert!(check_dummy(&g, m.as_ref()).unwrap().holds());
        assert!(check_iso(&corpus_game("g_311").unwrap(), m.as_ref(), &[2, 0, 1]).unwrap().holds());
    }
    assert!(matches!(
        check_iso(&g, &Banzhaf::default(), &[0, 0]),
        Err(Error::NotAPermutation(_))
    ));
}

#[test]
fn registry_rejects_mismatched_qualifiers() {
    let registry = PostulateRegistry::standard();
    let g = corpus_game("g_311").unwrap();
    let pb = Banzhaf::default();
    assert!(registry.get(PostulateId::Add0).check(&g, &pb, &Qualifier::Game).is_err());
    assert!(registry.get(PostulateId::Smp1).check(&g, &pb, &Qualifier::Pair(0, 1)).is_err());
    assert!(registry.get(PostulateId::Iso).check(&g, &pb, &Qualifier::Bloc(bloc(&[0, 1]))).is_err());
}

/// Every failing verdict over the three-player space replays to the same
/// fractions, and carries a witness.
#[test]
fn failing_witnesses_replay_exactly() {
    let registry = PostulateRegistry::standard();
    let options = InstanceOptions::default();
    let mut failures = 0;
    for g in enumerate_games(&GameSpace::ExhaustiveMonotone { n: 3 }).unwrap() {
        for kind in MeasureKind::ALL {
            let m = kind.measure(Limits::default());
            for id in PostulateId::ALL {
                let checker = registry.get(id);
                for q in checker.instances(&g, &options) {
                    let v = checker.check(&g, m.as_ref(), &q).unwrap();
                    if v.fails() {
                        failures += 1;
                        let w = v.witness.as_ref().expect("failing verdict has a witness");
                        assert!(!w.satisfied());
                        let again = checker.check(&g, m.as_ref(), &w.qualifier).unwrap();
                        assert_eq!(again, v);
                        let parsed: Verdict = serde_json::from_str(&v.to_json()).unwrap();
                        assert_eq!(parsed, v);
                    }
                }
            }
        }
    }
    assert!(failures > 0);
}
