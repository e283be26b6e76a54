use std::path::Path;
use std::process::{Command, Output};

fn vpower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vpower")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn power_table_shows_exact_rm_values() {
    let out = vpower(&["power", "--corpus", "g_11222", "--measure", "rm"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("1 ")).expect("player 1 row");
    assert!(row.contains("41/320"), "{row}");
}

#[test]
fn power_json_and_csv() {
    let out = vpower(&["power", "--corpus", "g_311", "--measure", "ss", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows[0][0]["total"], "2/3");
    assert_eq!(rows[0][1]["yes"], "1/12");

    let out = vpower(&["power", "--corpus", "g_311", "--measure", "pb", "--measure", "ss", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "player,measure,total,yes,no,decimal");
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().filter(|l| l.starts_with("player")).count() == 1);
}

#[test]
fn reproduce_theorem_two() {
    let out = vpower(&["reproduce", "--theorem", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for needle in ["SS_1 = 2/3", "SS_2 = 1/6", "SS_3 = 1/6", "bloc {1,2} power = 1", "inequality 1 > 5/6", "FAIL(SBK1)"] {
        assert!(text.contains(needle), "missing `{needle}` in\n{text}");
    }
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn reproduce_everything_matches() {
    let out = vpower(&["reproduce", "--all"]);
    let text = stdout(&out);
    assert_eq!(code(&out), 0, "{text}");
    assert!(text.ends_with("0 mismatches\n"));
    // idempotent
    assert_eq!(stdout(&vpower(&["reproduce", "--all"])), text);
}

#[test]
fn failing_check_exits_one_with_ratios() {
    let out = vpower(&["check", "--corpus", "g_311", "--postulate", "add1", "--measure", "ss", "--pair", "1", "2", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let verdict: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(verdict["holds"], false);
    assert_eq!(verdict["witness"]["lhs"], "4");
    assert_eq!(verdict["witness"]["rhs"], "5");
}

#[test]
fn holding_check_exits_zero() {
    let out = vpower(&["check", "--corpus", "g_311", "--postulate", "add1", "--postulate", "add2", "--measure", "rm"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("0 fail"));
}

#[test]
fn not_applicable_is_not_failure() {
    let out = vpower(&["check", "--corpus", "g_311", "--postulate", "wbk1", "--bloc", "2,3", "--measure", "pb", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("not_applicable"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(code(&vpower(&["power"])), 2);
    assert_eq!(code(&vpower(&["power", "--corpus", "no_such_game"])), 2);
    assert_eq!(code(&vpower(&["check", "--corpus", "g_311", "--postulate", "xyz"])), 2);
    assert_eq!(code(&vpower(&["bloc", "--corpus", "g_311", "--bloc", "1,9"])), 2);
    assert_eq!(code(&vpower(&["reproduce", "--theorem", "12"])), 2);
    assert_eq!(code(&vpower(&["power", "--game", "/definitely/missing.json"])), 2);
}

#[test]
fn malformed_game_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("trivial.json", r#"{"n":2,"rule":{"weighted":{"quota":0,"weights":[1,1]}}}"#),
        ("not_antichain.json", r#"{"n":2,"rule":{"explicit":{"min_winning":[[1],[1,2]]}}}"#),
        ("bad_label.json", r#"{"n":2,"rule":{"explicit":{"min_winning":[[3]]}}}"#),
        ("garbage.json", "not json"),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let out = vpower(&["validate", "--game", path.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{name} accepted");
    }
}

fn round_trip(args: &[&str], dir: &Path) {
    let out = vpower(args);
    assert_eq!(code(&out), 0);
    let emitted = stdout(&out);
    let path = dir.join("emitted.json");
    std::fs::write(&path, &emitted).unwrap();
    let out = vpower(&["validate", "--game", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0);
    // Reloading and re-emitting through an identity operation gives the same file.
    let game = voting_power::Game::from_json(&emitted).unwrap();
    assert_eq!(format!("{}\n", game.to_json()), emitted);
}

#[test]
fn emitted_games_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    round_trip(&["bloc", "--corpus", "g_11222", "--bloc", "1,2"], dir.path());
    round_trip(&["bloc", "--corpus", "unanimity4", "--bloc", "2,3", "--lead", "3"], dir.path());
    round_trip(&["add-blocker", "--corpus", "g_311", "--yes"], dir.path());
    round_trip(&["add-blocker", "--corpus", "unanimity3", "--no"], dir.path());

    let out = vpower(&["add-blocker", "--corpus", "g_311", "--yes"]);
    let game = voting_power::Game::from_json(&stdout(&out)).unwrap();
    assert_eq!(game, voting_power::Game::weighted(8, vec![2, 1, 1, 5]).unwrap());
}

#[test]
fn search_reports_are_reproducible_json_lines() {
    let args = ["search", "--space", "random", "--max-n", "5", "--count", "40", "--seed", "11", "--measure", "ss", "--postulate", "add1"];
    let first = vpower(&args);
    let second = vpower(&args);
    assert_eq!(stdout(&first), stdout(&second));
    for line in stdout(&first).lines() {
        let report: voting_power::search::CounterexampleReport = serde_json::from_str(line).unwrap();
        assert!(report.replays_exactly().unwrap());
    }
    // the footer, with timing, goes to standard error
    assert!(String::from_utf8_lossy(&first.stderr).contains("games"));
}

#[test]
fn search_finds_unanimity_witness_and_exits_one() {
    let out = vpower(&["search", "--space", "exhaustive", "--n", "3", "--measure", "pb", "--postulate", "wbk1"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["game"]["rule"]["explicit"]["min_winning"], serde_json::json!([[1, 2, 3]]));
    assert_eq!(report["qualifier"]["bloc"]["members"], serde_json::json!([1, 2, 3]));
}

#[test]
fn search_without_counterexample_exits_zero() {
    let out = vpower(&["search", "--space", "exhaustive", "--max-n", "3", "--measure", "rm", "--postulate", "sbk1", "--postulate", "smp1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
}

#[test]
fn tally_prints_summary_table() {
    let out = vpower(&["search", "--n", "3", "--measure", "pb", "--postulate", "wbk1", "--tally", "--format", "table"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("postulate"));
    assert!(text.contains("WBK1"));
}

#[test]
fn validate_describes_structure() {
    let out = vpower(&["validate", "--corpus", "g_311", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let d: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(d["yes_blockers"], serde_json::json!([1]));
    assert_eq!(d["min_winning"], serde_json::json!([[1, 2], [1, 3]]));
}

#[test]
fn list_names_everything() {
    let text = stdout(&vpower(&["list"]));
    for needle in ["g_8_2115", "pb-fast", "WMP2", "symmetry"] {
        assert!(text.contains(needle), "{needle}");
    }
}
