use std::io::Read;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;

use voting_power::measures::{MeasureRegistry, PowerMeasure};
use voting_power::postulates::{InstanceOptions, PostulateId, PostulateRegistry, Qualifier, Verdict};
use voting_power::search::{
    corpus_game, enumerate_games, builtin_corpus, search_games, summary_footer, sweep, GameSpace, SearchOptions,
    SearchOutcome,
};
use voting_power::transform::{add_no_blocker, add_yes_blocker, form_bloc, BlocSpec};
use voting_power::{Coalition, Game, Limits};

use crate::output::{power_csv, power_json, power_table, verdict_csv, verdict_csv_header};
use crate::reproduce;
use crate::{CheckArgs, Command, Format, GameArgs, MeasureArgs, SearchArgs, SpaceKind, Status};

pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::Power { game, measures, format } => power(&game, &measures, format),
        Command::Check(args) => check(&args),
        Command::Bloc { game, bloc, lead, format } => bloc_cmd(&game, &bloc, lead, format),
        Command::AddBlocker { game, yes, no: _, format } => add_blocker(&game, yes, format),
        Command::Search(args) => search(&args),
        Command::Reproduce { all, theorem, item } => reproduce::run(all, theorem, item.as_deref()),
        Command::Validate { game, format } => validate(&game, format),
        Command::List => list(),
    }
}

fn load_game(args: &GameArgs) -> Result<Game> {
    if let Some(name) = &args.corpus {
        return Ok(corpus_game(name)?);
    }
    let path = args.game.as_ref().ok_or_else(|| anyhow!("either --game or --corpus is required"))?;
    let text = if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading game from standard input")?;
        text
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Game::from_json(&text).with_context(|| format!("loading {}", path.display()))
}

fn load_measures(args: &MeasureArgs) -> Result<Vec<Box<dyn PowerMeasure>>> {
    let registry = MeasureRegistry::standard();
    let names: Vec<&str> =
        if args.measures.is_empty() { vec!["pb", "ss", "rm"] } else { args.measures.iter().map(String::as_str).collect() };
    names.into_iter().map(|name| Ok(registry.get(name, Limits::default())?)).collect()
}

fn parse_postulates(ids: &[String]) -> Result<Vec<PostulateId>> {
    if ids.iter().any(|id| id.eq_ignore_ascii_case("all")) {
        return Ok(PostulateId::ALL.to_vec());
    }
    ids.iter().map(|id| Ok(id.parse::<PostulateId>()?)).collect()
}

/// Parses "1,2,3" into 0-based players.
fn parse_players(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            let label: usize = part.trim().parse().with_context(|| format!("bad player label `{part}`"))?;
            label.checked_sub(1).ok_or_else(|| anyhow!("player labels start at 1"))
        })
        .collect()
}

fn parse_bloc(game: &Game, text: &str, lead: Option<usize>) -> Result<BlocSpec> {
    let members = parse_players(text)?;
    for &p in &members {
        game.check_player(p)?;
    }
    let members = Coalition::from_players(members);
    let spec = match lead {
        Some(label) => BlocSpec::new(members, label.checked_sub(1).ok_or_else(|| anyhow!("player labels start at 1"))?)?,
        None => BlocSpec::with_lowest_lead(members)?,
    };
    Ok(spec)
}

fn power(game_args: &GameArgs, measure_args: &MeasureArgs, format: Format) -> Result<Status> {
    let game = load_game(game_args)?;
    let measures = load_measures(measure_args)?;
    let reports = measures.iter().map(|m| m.power(&game)).collect::<voting_power::Result<Vec<_>>>()?;
    match format {
        Format::Table => {
            let tables: Vec<String> = reports.iter().map(|r| power_table(&game, r)).collect();
            print!("{}", tables.join("\n"));
        }
        Format::Json => println!("{}", power_json(&reports)),
        Format::Csv => print!("{}", power_csv(&reports)),
    }
    Ok(Status::Ok)
}

fn is_bloc_postulate(id: PostulateId) -> bool {
    use PostulateId::*;
    matches!(id, Spb | Mpb | Sbb | Sbk1 | Sbk2 | Wbk1 | Wbk2)
}

fn check(args: &CheckArgs) -> Result<Status> {
    let game = load_game(&args.game)?;
    let measures = load_measures(&args.measures)?;
    let postulates = parse_postulates(&args.postulates)?;
    let registry = PostulateRegistry::standard();
    let options = InstanceOptions { bloc_cap: args.bloc_cap, ..Default::default() };

    let bloc = args.bloc.as_deref().map(|b| parse_bloc(&game, b, args.lead)).transpose()?;
    let pair = match args.pair.as_deref() {
        Some([i, j]) => {
            let (i, j) = (i.checked_sub(1), j.checked_sub(1));
            let (Some(i), Some(j)) = (i, j) else { bail!("player labels start at 1") };
            game.check_player(i)?;
            game.check_player(j)?;
            Some(Qualifier::Pair(i, j))
        }
        Some(_) => bail!("--pair takes two players"),
        None => None,
    };
    let perm = args.perm.as_deref().map(parse_players).transpose()?.map(Qualifier::Permutation);

    let mut verdicts: Vec<Verdict> = Vec::new();
    for &id in &postulates {
        let checker = registry.get(id);
        let given = if is_bloc_postulate(id) {
            bloc.map(Qualifier::Bloc)
        } else if matches!(id, PostulateId::Add0 | PostulateId::Add1 | PostulateId::Add2) {
            pair.clone()
        } else if id == PostulateId::Iso {
            perm.clone()
        } else {
            None
        };
        let qualifiers = match given {
            Some(q) => vec![q],
            None => checker.instances(&game, &options),
        };
        for measure in &measures {
            for q in &qualifiers {
                verdicts.push(checker.check(&game, measure.as_ref(), q)?);
            }
        }
    }

    match args.format {
        Format::Table => {
            for v in &verdicts {
                println!("{v}");
            }
            let holds = verdicts.iter().filter(|v| v.holds()).count();
            let fails = verdicts.iter().filter(|v| v.fails()).count();
            println!("{} checks: {holds} hold, {fails} fail, {} not applicable", verdicts.len(), verdicts.len() - holds - fails);
        }
        Format::Json => {
            for v in &verdicts {
                println!("{}", v.to_json());
            }
        }
        Format::Csv => {
            println!("{}", verdict_csv_header());
            for v in &verdicts {
                println!("{}", verdict_csv(v));
            }
        }
    }
    Ok(if verdicts.iter().any(Verdict::fails) { Status::Failed } else { Status::Ok })
}

fn emit_game(game: &Game, format: Format, describe: impl FnOnce() -> String) -> Result<Status> {
    match format {
        Format::Json => println!("{}", game.to_json()),
        Format::Table => {
            println!("{}", describe());
            println!("{}", game.to_json());
        }
        Format::Csv => bail!("games have no CSV form; use --format json or table"),
    }
    Ok(Status::Ok)
}

fn bloc_cmd(game_args: &GameArgs, bloc: &str, lead: Option<usize>, format: Format) -> Result<Status> {
    let game = load_game(game_args)?;
    let spec = parse_bloc(&game, bloc, lead)?;
    let transformed = form_bloc(&game, &spec)?;
    emit_game(&transformed.game, format, || {
        let mut text = format!("bloc {} led by {} in {game}\nresult: {}", spec.members(), spec.lead() + 1, transformed.game);
        for (old, new) in transformed.index_map.iter().enumerate() {
            match new {
                Some(new) => text.push_str(&format!("\n  player {} -> {}", old + 1, new + 1)),
                None => text.push_str(&format!("\n  player {} -> (merged into the bloc)", old + 1)),
            }
        }
        text
    })
}

fn add_blocker(game_args: &GameArgs, yes: bool, format: Format) -> Result<Status> {
    let game = load_game(game_args)?;
    let extended = if yes { add_yes_blocker(&game)? } else { add_no_blocker(&game)? };
    let kind = if yes { "YES" } else { "NO" };
    emit_game(&extended, format, || format!("{game} with {kind}-blocker {} added: {extended}", extended.n()))
}

fn build_spaces(args: &SearchArgs) -> Result<Vec<GameSpace>> {
    Ok(match args.space {
        SpaceKind::Exhaustive => match (args.n, args.max_n) {
            (Some(n), _) => vec![GameSpace::ExhaustiveMonotone { n }],
            (None, max_n) => (1..=max_n.unwrap_or(4)).map(|n| GameSpace::ExhaustiveMonotone { n }).collect(),
        },
        SpaceKind::Grid => {
            let quota = match args.quota.as_deref() {
                Some(text) => {
                    let (lo, hi) = text
                        .split_once("..")
                        .ok_or_else(|| anyhow!("quota range must look like 2..5"))?;
                    Some((lo.trim().parse()?, hi.trim_start_matches('=').trim().parse()?))
                }
                None => None,
            };
            vec![GameSpace::WeightedGrid {
                max_n: args.max_n.or(args.n).unwrap_or(4),
                max_weight: args.max_weight.unwrap_or(3),
                quota,
            }]
        }
        SpaceKind::Random => vec![GameSpace::RandomWeighted {
            max_n: args.max_n.or(args.n).unwrap_or(6),
            max_weight: args.max_weight.unwrap_or(10),
            count: args.count,
            seed: args.seed,
        }],
    })
}

fn search(args: &SearchArgs) -> Result<Status> {
    let measures = load_measures(&args.measures)?;
    let postulates = parse_postulates(&args.postulates)?;
    let spaces = build_spaces(args)?;
    let label = spaces.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
    let mut games = Vec::new();
    for space in &spaces {
        games.extend(enumerate_games(space)?);
    }
    let options = SearchOptions {
        instances: InstanceOptions { bloc_cap: args.bloc_cap, ..Default::default() },
        ..Default::default()
    };

    if args.tally {
        let start = Instant::now();
        let refs: Vec<&dyn PowerMeasure> = measures.iter().map(|m| m.as_ref()).collect();
        let summary = sweep(&games, &refs, &postulates, &options.instances)?;
        match args.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&summary)?),
            _ => println!("{summary}"),
        }
        eprintln!("{label}: {:.3}s", start.elapsed().as_secs_f64());
        let any_fail = summary.rows.iter().any(|r| r.counts.fails > 0);
        return Ok(if any_fail { Status::Failed } else { Status::Ok });
    }

    let mut found = false;
    for &id in &postulates {
        for measure in &measures {
            let start = Instant::now();
            let outcome = search_games(&games, &label, measure.as_ref(), id, &options)?;
            let elapsed = start.elapsed();
            if let SearchOutcome::Found(report) = &outcome {
                found = true;
                match args.format {
                    Format::Table => println!(
                        "FOUND {id}/{} on {}: {} [{}]",
                        report.measure,
                        report.game,
                        report.witness,
                        report.witness.qualifier
                    ),
                    _ => println!("{}", report.to_json_line()),
                }
            }
            eprintln!("# {id}/{}: {}", measure.kind(), summary_footer(&outcome, elapsed));
        }
    }
    Ok(if found { Status::Failed } else { Status::Ok })
}

#[derive(Serialize)]
struct Description {
    valid: bool,
    n: usize,
    weighted: bool,
    min_winning: Vec<Vec<usize>>,
    yes_blockers: Vec<usize>,
    no_blockers: Vec<usize>,
    dictators: Vec<usize>,
    dummies: Vec<usize>,
}

fn validate(game_args: &GameArgs, format: Format) -> Result<Status> {
    let game = load_game(game_args)?;
    game.validate()?;
    let d = Description {
        valid: true,
        n: game.n(),
        weighted: game.is_weighted(),
        min_winning: game.minimal_winning().iter().map(|c| c.labels()).collect(),
        yes_blockers: game.yes_blockers().labels(),
        no_blockers: game.no_blockers().labels(),
        dictators: game.dictators().labels(),
        dummies: game.dummies().labels(),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&d)?),
        _ => {
            let show = |v: &[usize]| if v.is_empty() { "none".to_string() } else { format!("{v:?}") };
            println!("valid game: {game}");
            println!("players: {}", d.n);
            println!("minimal winning: {}", game.minimal_winning().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
            println!("YES-blockers: {}", show(&d.yes_blockers));
            println!("NO-blockers: {}", show(&d.no_blockers));
            println!("dictators: {}", show(&d.dictators));
            println!("dummies: {}", show(&d.dummies));
        }
    }
    Ok(Status::Ok)
}

fn list() -> Result<Status> {
    println!("corpus games:");
    for e in builtin_corpus() {
        println!("  {:<11} {}  {}", e.name, e.game, e.description);
    }
    println!("  unanimity<N>, dictator<N>, dictator<N>_<D> for any size");
    println!("measures:");
    for (name, aliases, summary) in MeasureRegistry::standard().list() {
        let aka = if aliases.is_empty() { String::new() } else { format!(" (also {})", aliases.join(", ")) };
        println!("  {name:<8} {summary}{aka}");
    }
    println!("postulates:");
    let ids: Vec<&str> = PostulateId::ALL.iter().map(|p| p.label()).collect();
    println!("  {}", ids.join(" "));
    println!("reproduce items:");
    for (name, summary) in reproduce::ITEMS {
        println!("  {name:<9} {summary}");
    }
    Ok(Status::Ok)
}
