//! Property tests over random weighted and explicit games.

use proptest::prelude::*;

use voting_power::coalition::{Coalition, Division};
use voting_power::game::{Game, Limits};
use voting_power::measures::{
    efficacy_table, pb, pb_fast, rm, rm_path_oracle, side_path_oracle, ss, ss_fast, MeasureKind, Side,
};
use voting_power::rational::{ratio, zero};
use voting_power::transform::{add_no_blocker, add_yes_blocker, delete_dummy, form_bloc, permute_players, BlocSpec};

fn weighted_game(max_n: usize, max_weight: u64) -> impl Strategy<Value = Game> {
    prop::collection::vec(0..=max_weight, 1..=max_n)
        .prop_filter("some weight", |w| w.iter().sum::<u64>() > 0)
        .prop_flat_map(|weights| {
            let total: u64 = weights.iter().sum();
            (1..=total).prop_map(move |q| Game::weighted(q, weights.clone()).unwrap())
        })
}

/// Monotone games given by random generators (minimised on construction).
fn explicit_game(max_n: usize) -> impl Strategy<Value = Game> {
    (1..=max_n).prop_flat_map(|n| {
        let full = (1u64 << n) - 1;
        prop::collection::vec(1..=full, 1..=4)
            .prop_map(move |gens| Game::from_generators(n, gens.into_iter().map(Coalition).collect()).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_paths_agree(game in weighted_game(8, 12)) {
        let limits = Limits::default();
        prop_assert_eq!(pb_fast(&game, &limits).unwrap(), pb(&game).unwrap());
        prop_assert_eq!(ss_fast(&game, &limits).unwrap(), ss(&game).unwrap());
    }

    #[test]
    fn ss_is_normalised_and_symmetric(game in weighted_game(7, 9)) {
        let report = ss(&game).unwrap();
        prop_assert_eq!(report.sum(), ratio(1, 1));
        let banzhaf = pb(&game).unwrap();
        for i in 0..game.n() {
            prop_assert_eq!(report.yes(i), report.no(i));
            prop_assert_eq!(banzhaf.yes(i), banzhaf.no(i));
        }
    }

    #[test]
    fn powers_lie_in_unit_interval_and_vanish_for_dummies(game in explicit_game(6)) {
        for kind in MeasureKind::ALL {
            let report = kind.measure(Limits::default()).power(&game).unwrap();
            for i in 0..game.n() {
                let v = report.total(i);
                prop_assert!(*v >= zero() && *v <= ratio(1, 1));
                prop_assert_eq!(*v == zero(), game.is_dummy(i));
            }
        }
    }

    #[test]
    fn weighted_and_explicit_forms_agree(game in weighted_game(6, 6)) {
        let explicit = game.to_explicit();
        prop_assert!(explicit.same_winning_family(&game));
        for kind in MeasureKind::ALL {
            let m = kind.measure(Limits::default());
            prop_assert_eq!(m.power(&game).unwrap(), m.power(&explicit).unwrap());
        }
    }

    #[test]
    fn relabelling_relabels_power(
        (game, perm) in explicit_game(6).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })
    ) {
        let permuted = permute_players(&game, &perm).unwrap();
        for kind in MeasureKind::ALL {
            let m = kind.measure(Limits::default());
            let before = m.power(&game).unwrap();
            let after = m.power(&permuted).unwrap();
            for (p, &q) in perm.iter().enumerate() {
                prop_assert_eq!(after.player(q), before.player(p));
            }
        }
    }

    #[test]
    fn bloc_formation_commutes_with_representation(game in weighted_game(6, 5), mask in 1u64..64) {
        let members = Coalition(mask).intersection(game.full());
        prop_assume!(!members.is_empty());
        let spec = BlocSpec::with_lowest_lead(members).unwrap();
        let a = form_bloc(&game, &spec).unwrap();
        let b = form_bloc(&game.to_explicit(), &spec).unwrap();
        prop_assert_eq!(a.index_map.clone(), b.index_map.clone());
        prop_assert!(a.game.same_winning_family(&b.game));
        prop_assert_eq!(a.game.n(), game.n() - members.len() + 1);
    }

    #[test]
    fn added_blockers_extend_the_game(game in explicit_game(5)) {
        let n = game.n();
        let gy = add_yes_blocker(&game).unwrap();
        prop_assert!(gy.yes_blockers().contains(n));
        // removing the blocker from every minimal winning coalition recovers the game
        let stripped: Vec<Coalition> = gy.minimal_winning().iter().map(|m| m.without(n)).collect();
        let mut original = game.minimal_winning();
        let mut recovered = stripped;
        original.sort();
        recovered.sort();
        prop_assert_eq!(recovered, original);

        let gn = add_no_blocker(&game).unwrap();
        prop_assert!(gn.no_blockers().contains(n));
        for s in game.full().subsets() {
            prop_assert_eq!(gn.is_winning(s), game.is_winning(s));
        }
    }

    #[test]
    fn deleting_dummies_preserves_power(game in weighted_game(6, 4)) {
        prop_assume!(game.n() > 1);
        for d in game.dummies().players() {
            let reduced = delete_dummy(&game, d).unwrap();
            for kind in MeasureKind::ALL {
                let m = kind.measure(Limits::default());
                let before = m.power(&game).unwrap();
                let after = m.power(&reduced.game).unwrap();
                for p in (0..game.n()).filter(|&p| p != d) {
                    prop_assert_eq!(after.player(reduced.new_index(p).unwrap()), before.player(p));
                }
            }
        }
    }

    #[test]
    fn recursion_matches_path_oracle(game in explicit_game(6)) {
        let table = efficacy_table(&game, &Limits::default()).unwrap();
        for d in Division::all(game.n()) {
            for i in 0..game.n() {
                let oracle = rm_path_oracle(&game, i, &d).unwrap();
                prop_assert_eq!(oracle.value(), table.get(i, &d));
            }
        }
    }

    #[test]
    fn efficacies_are_probabilities(game in explicit_game(6)) {
        let table = efficacy_table(&game, &Limits::default()).unwrap();
        for d in Division::all(game.n()) {
            for i in 0..game.n() {
                let a = table.get(i, &d);
                prop_assert!(*a >= zero() && *a <= ratio(1, 1));
            }
        }
    }

    #[test]
    fn game_json_round_trips(game in prop_oneof![weighted_game(7, 20), explicit_game(6)]) {
        let json = game.to_json();
        prop_assert_eq!(Game::from_json(&json).unwrap(), game);
    }
}

#[test]
fn wrong_side_oracle_scores_zero() {
    let g = Game::unanimity(3);
    let winning = Division::new(Coalition::full(3), 3);
    assert_eq!(side_path_oracle(&g, 0, &winning, Side::No).unwrap().value(), &zero());
    assert_eq!(side_path_oracle(&g, 0, &winning, Side::Yes).unwrap().value(), &ratio(1, 1));
}

#[test]
fn rm_is_not_normalised() {
    // RM totals need not sum to one, unlike SS.
    let g = Game::weighted(2, vec![1, 1, 2, 2, 2]).unwrap();
    assert_ne!(rm(&g).unwrap().sum(), ratio(1, 1));
}
