//! Recomputes every published number and verdict and compares exactly.

use anyhow::{bail, Result};

use voting_power::coalition::{Coalition, Division};
use voting_power::measures::{dictator_power, efficacy_table, pb, rm, ss, Banzhaf, PowerMeasure, Recursive, ShapleyShubik};
use voting_power::postulates::{check_add, check_bloc, check_minimum, PostulateId, Verdict};
use voting_power::rational::{ratio, to_fraction_string, Rational};
use voting_power::search::{corpus_game, enumerate_games, builtin_corpus, search_games, GameSpace, SearchOptions, SearchOutcome};
use voting_power::transform::{add_no_blocker, add_yes_blocker, form_bloc, BlocSpec};
use voting_power::{Game, Limits};

use crate::Status;

/// Extra items beyond the numbered theorems.
pub const ITEMS: [(&str, &str); 5] = [
    ("bloc", "bloc {1,2} of {2;1,1,2,2,2} under SS and RM"),
    ("dictator", "the dictator benchmark is 1 under every measure"),
    ("ss-sum", "SS sums to 1 on every corpus game"),
    ("bsp", "blocker's share violations for PB and RM"),
    ("symmetry", "PB and SS are strategy symmetric, RM is not"),
];

#[derive(Default)]
struct Reporter {
    checks: usize,
    mismatches: usize,
}

impl Reporter {
    fn claim(&mut self, ok: bool, text: impl AsRef<str>) {
        self.checks += 1;
        if ok {
            println!("  [ok] {}", text.as_ref());
        } else {
            self.mismatches += 1;
            println!("  [MISMATCH] {}", text.as_ref());
        }
    }

    fn value(&mut self, label: &str, actual: &Rational, expected: &Rational) {
        if actual == expected {
            self.claim(true, format!("{label} = {}", to_fraction_string(actual)));
        } else {
            self.claim(
                false,
                format!("{label} = {}, expected {}", to_fraction_string(actual), to_fraction_string(expected)),
            );
        }
    }

    /// A verdict expected to fail with exactly `lhs` and `rhs`.
    fn failure(&mut self, verdict: &Verdict, lhs: &Rational, rhs: &Rational) {
        let matches = verdict.fails()
            && verdict.witness.as_ref().is_some_and(|w| &w.lhs == lhs && &w.rhs == rhs);
        if let Some(w) = &verdict.witness {
            self.claim(matches, format!("inequality {w}"));
        }
        self.claim(matches, format!("verdict {verdict}"));
    }

    /// No counterexample over every monotone game with up to four players.
    fn holds_exhaustively(&mut self, measure: &dyn PowerMeasure, id: PostulateId) -> Result<()> {
        let games = small_games()?;
        let outcome = search_games(&games, "monotone games, n <= 4", measure, id, &SearchOptions::default())?;
        let stats = outcome.stats();
        match &outcome {
            SearchOutcome::NoneFound(_) => self.claim(
                true,
                format!(
                    "{} satisfies {id}: no counterexample in {} games ({} instances, {} not applicable)",
                    measure.kind(),
                    stats.games_tested,
                    stats.instances_checked,
                    stats.not_applicable
                ),
            ),
            SearchOutcome::Found(r) => self.claim(
                false,
                format!("{} violates {id} on {}: {} [{}]", measure.kind(), r.game, r.witness, r.witness.qualifier),
            ),
        }
        Ok(())
    }
}

fn small_games() -> Result<Vec<Game>> {
    let mut games = Vec::new();
    for n in 1..=4 {
        games.extend(enumerate_games(&GameSpace::ExhaustiveMonotone { n })?);
    }
    Ok(games)
}

fn bloc_of(players: &[usize]) -> BlocSpec {
    BlocSpec::with_lowest_lead(Coalition::from_players(players.iter().copied())).expect("non-empty bloc")
}

fn bloc_power(game: &Game, measure: &dyn PowerMeasure, players: &[usize]) -> Result<Rational> {
    let spec = bloc_of(players);
    let t = form_bloc(game, &spec)?;
    let lead = t.new_index(spec.lead()).expect("lead survives");
    Ok(measure.power(&t.game)?.total(lead).clone())
}

pub fn run(all: bool, theorem: Option<u8>, item: Option<&str>) -> Result<Status> {
    let mut r = Reporter::default();
    let theorems: Vec<u8> = if all { (1..=9).collect() } else { theorem.into_iter().collect() };
    for t in theorems {
        println!("Theorem {t}");
        match t {
            1 => theorem1(&mut r)?,
            2 => theorem2(&mut r)?,
            3 => theorem3(&mut r)?,
            4 => theorem4(&mut r)?,
            5 => theorem5(&mut r)?,
            6 => theorem6(&mut r)?,
            7 => theorem7(&mut r)?,
            8 => theorem8(&mut r)?,
            9 => theorem9(&mut r)?,
            _ => bail!("no theorem {t}"),
        }
    }
    let items: Vec<&str> = if all { ITEMS.iter().map(|(name, _)| *name).collect() } else { item.into_iter().collect() };
    for name in items {
        println!("{name}");
        match name {
            "bloc" => item_bloc(&mut r)?,
            "dictator" => item_dictator(&mut r)?,
            "ss-sum" => item_ss_sum(&mut r)?,
            "bsp" => item_bsp(&mut r)?,
            "symmetry" => item_symmetry(&mut r)?,
            other => bail!("unknown item `{other}`; see `vpower list`"),
        }
    }
    println!("{} checks, {} mismatches", r.checks, r.mismatches);
    Ok(if r.mismatches == 0 { Status::Ok } else { Status::Failed })
}

fn theorem1(r: &mut Reporter) -> Result<()> {
    let g = corpus_game("unanimity3")?;
    let report = pb(&g)?;
    for i in 0..3 {
        r.value(&format!("PB_{}", i + 1), report.total(i), &ratio(1, 4));
    }
    let m = Banzhaf::default();
    r.value("bloc {1,2,3} power", &bloc_power(&g, &m, &[0, 1, 2])?, &ratio(1, 1));
    let all = bloc_of(&[0, 1, 2]);
    r.failure(&check_bloc(&g, &m, PostulateId::Wbk1, &all)?, &ratio(1, 1), &ratio(3, 4));
    r.failure(&check_bloc(&g, &m, PostulateId::Sbk1, &all)?, &ratio(1, 1), &ratio(3, 4));
    Ok(())
}

fn theorem2(r: &mut Reporter) -> Result<()> {
    let g = corpus_game("g_311")?;
    let report = ss(&g)?;
    for (i, expected) in [ratio(2, 3), ratio(1, 6), ratio(1, 6)].iter().enumerate() {
        r.value(&format!("SS_{}", i + 1), report.total(i), expected);
    }
    let m = ShapleyShubik::default();
    r.value("bloc {1,2} power", &bloc_power(&g, &m, &[0, 1])?, &ratio(1, 1));
    r.failure(&check_bloc(&g, &m, PostulateId::Sbk1, &bloc_of(&[0, 1]))?, &ratio(1, 1), &ratio(5, 6));
    r.holds_exhaustively(&m, PostulateId::Wbk1)?;
    r.holds_exhaustively(&m, PostulateId::Wbk2)?;
    Ok(())
}

fn theorem3(r: &mut Reporter) -> Result<()> {
    let m = Recursive::default();
    r.holds_exhaustively(&m, PostulateId::Sbk1)?;
    r.holds_exhaustively(&m, PostulateId::Sbk2)?;
    Ok(())
}

fn theorem4(r: &mut Reporter) -> Result<()> {
    let m = Banzhaf::default();
    for n in 3..=10usize {
        let g = Game::unanimity(n);
        let power = pb(&g)?.total(0).clone();
        let expected = ratio(1, 1 << (n - 1));
        r.value(&format!("unanimity-{n}: PB_b"), &power, &expected);
        r.failure(&check_minimum(&g, &m, PostulateId::Wmp1)?, &expected, &ratio(1, n as i64));
    }
    Ok(())
}

fn theorem5(r: &mut Reporter) -> Result<()> {
    let m = ShapleyShubik::default();
    r.holds_exhaustively(&m, PostulateId::Smp1)?;
    r.holds_exhaustively(&m, PostulateId::Smp2)?;
    Ok(())
}

fn theorem6(r: &mut Reporter) -> Result<()> {
    let m = Recursive::default();
    r.holds_exhaustively(&m, PostulateId::Smp1)?;
    r.holds_exhaustively(&m, PostulateId::Smp2)?;

    // The NO-efficacy of a YES-blocker b when S* minus T (|T| = l) still has
    // to be won over is at least 1/(k - l).
    let mut instances = 0usize;
    let mut worst: Option<String> = None;
    for g in small_games()? {
        let blockers = g.yes_blockers();
        if blockers.is_empty() {
            continue;
        }
        let n = g.n();
        let table = efficacy_table(&g, &Limits::default())?;
        let k = g.min_winning_size();
        for s_star in g.minimal_winning().into_iter().filter(|s| s.len() == k) {
            let rest = Coalition::full(n).difference(s_star);
            for b in blockers.players() {
                for s in rest.subsets() {
                    for t in s_star.subsets().filter(|t| *t != s_star && !t.contains(b)) {
                        let d = Division::new(s.union(t), n);
                        instances += 1;
                        if *table.get(b, &d) < ratio(1, (k - t.len()) as i64) && worst.is_none() {
                            worst = Some(format!("{g}, blocker {}, YES-voters {}", b + 1, s.union(t)));
                        }
                    }
                }
            }
        }
    }
    match worst {
        None => r.claim(true, format!("blocker NO-efficacy >= 1/(k - l) on {instances} instances, n <= 4")),
        Some(w) => r.claim(false, format!("blocker NO-efficacy bound violated: {w}")),
    }
    Ok(())
}

fn theorem7(r: &mut Reporter) -> Result<()> {
    let m = Banzhaf::default();
    for id in [PostulateId::Add0, PostulateId::Add1, PostulateId::Add2] {
        r.holds_exhaustively(&m, id)?;
    }
    Ok(())
}

fn theorem8(r: &mut Reporter) -> Result<()> {
    let g = corpus_game("g_311")?;
    let gy = corpus_game("g_8_2115")?;
    r.claim(
        add_yes_blocker(&g)?.same_winning_family(&gy),
        format!("{g} with an added YES-blocker is {gy}"),
    );
    let before = ss(&g)?;
    let after = ss(&gy)?;
    r.value("SS+_1 in {3;2,1,1}", before.yes(0), &ratio(2, 6));
    r.value("SS+_2 in {3;2,1,1}", before.yes(1), &ratio(1, 12));
    r.value("SS+_1 in {8;2,1,1,5}", after.yes(0), &ratio(5, 24));
    r.value("SS+_2 in {8;2,1,1,5}", after.yes(1), &ratio(1, 24));
    let m = ShapleyShubik::default();
    r.failure(&check_add(&g, &m, PostulateId::Add1, 0, 1)?, &ratio(4, 1), &ratio(5, 1));
    Ok(())
}

fn theorem9(r: &mut Reporter) -> Result<()> {
    let m = Recursive::default();
    r.holds_exhaustively(&m, PostulateId::Add1)?;
    r.holds_exhaustively(&m, PostulateId::Add2)?;
    let half = ratio(1, 2);
    let mut bad = None;
    let games = small_games()?;
    for g in &games {
        let base = rm(g)?;
        let yes = rm(&add_yes_blocker(g)?)?;
        let no = rm(&add_no_blocker(g)?)?;
        for i in 0..g.n() {
            if *yes.yes(i) != base.yes(i) * &half || *no.no(i) != base.no(i) * &half {
                bad.get_or_insert_with(|| format!("{g}, player {}", i + 1));
            }
        }
    }
    match bad {
        None => r.claim(true, format!("added blockers halve RM+ (YES) and RM- (NO) on all {} games", games.len())),
        Some(w) => r.claim(false, format!("halving fails on {w}")),
    }
    Ok(())
}

fn item_bloc(r: &mut Reporter) -> Result<()> {
    let g = corpus_game("g_11222")?;
    let s = ss(&g)?;
    r.value("SS_1", s.total(0), &ratio(1, 20));
    r.value("SS_2", s.total(1), &ratio(1, 20));
    let ssm = ShapleyShubik::default();
    r.value("SS bloc {1,2}", &bloc_power(&g, &ssm, &[0, 1])?, &ratio(1, 4));
    r.failure(&check_bloc(&g, &ssm, PostulateId::Sbb, &bloc_of(&[0, 1]))?, &ratio(1, 4), &ratio(1, 10));
    let q = rm(&g)?;
    r.value("RM_1", q.total(0), &ratio(41, 320));
    r.value("RM_2", q.total(1), &ratio(41, 320));
    let rmm = Recursive::default();
    r.value("RM bloc {1,2}", &bloc_power(&g, &rmm, &[0, 1])?, &ratio(19, 64));
    r.failure(&check_bloc(&g, &rmm, PostulateId::Sbb, &bloc_of(&[0, 1]))?, &ratio(19, 64), &ratio(41, 160));
    Ok(())
}

fn item_dictator(r: &mut Reporter) -> Result<()> {
    let measures: [&dyn PowerMeasure; 3] = [&Banzhaf::default(), &ShapleyShubik::default(), &Recursive::default()];
    for m in measures {
        r.value(&format!("{} dictator power", m.kind()), &dictator_power(m)?, &ratio(1, 1));
    }
    Ok(())
}

fn item_ss_sum(r: &mut Reporter) -> Result<()> {
    for e in builtin_corpus() {
        r.value(&format!("sum of SS on {}", e.name), &ss(&e.game)?.sum(), &ratio(1, 1));
    }
    Ok(())
}

fn item_bsp(r: &mut Reporter) -> Result<()> {
    let measures: [&dyn PowerMeasure; 2] = [&Banzhaf::default(), &Recursive::default()];
    for m in measures {
        let mut hit = None;
        'search: for n in 2..=5 {
            let games = enumerate_games(&GameSpace::ExhaustiveMonotone { n })?;
            for id in [PostulateId::Bsp1, PostulateId::Bsp2] {
                let outcome = search_games(&games, "monotone games", m, id, &SearchOptions::default())?;
                if let SearchOutcome::Found(report) = outcome {
                    hit = Some(report);
                    break 'search;
                }
            }
        }
        match hit {
            Some(report) => r.claim(
                report.replays_exactly()?,
                format!("{} violates {} on {}: {}", m.kind(), report.postulate, report.game, report.witness),
            ),
            None => r.claim(false, format!("no blocker's share violation for {} up to n = 5", m.kind())),
        }
    }
    Ok(())
}

fn item_symmetry(r: &mut Reporter) -> Result<()> {
    let games = small_games()?;
    let mut symmetric = true;
    let mut rm_split = None;
    for g in &games {
        let (p, s, q) = (pb(g)?, ss(g)?, rm(g)?);
        for i in 0..g.n() {
            symmetric &= p.yes(i) == p.no(i) && s.yes(i) == s.no(i);
            if rm_split.is_none() && q.yes(i) != q.no(i) {
                rm_split = Some(format!("{g} player {}: RM+ = {}, RM- = {}", i + 1, q.yes(i), q.no(i)));
            }
        }
    }
    r.claim(symmetric, format!("PB+ = PB- and SS+ = SS- on all {} games", games.len()));
    match rm_split {
        Some(text) => r.claim(true, format!("RM is not strategy symmetric: {text}")),
        None => r.claim(false, "RM+ = RM- on every game"),
    }
    Ok(())
}
