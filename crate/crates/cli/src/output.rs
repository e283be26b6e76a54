//! Rendering of reports and verdicts as tables, JSON and CSV.

use std::fmt::Write as _;

use voting_power::measures::PowerReport;
use voting_power::postulates::{Status, Verdict};
use voting_power::rational::{to_decimal, to_fraction_string};
use voting_power::Game;

pub fn power_table(game: &Game, report: &PowerReport) -> String {
    let rows: Vec<[String; 5]> = (0..report.n())
        .map(|i| {
            [
                (i + 1).to_string(),
                to_fraction_string(report.total(i)),
                to_fraction_string(report.yes(i)),
                to_fraction_string(report.no(i)),
                format!("{}", to_decimal(report.total(i))),
            ]
        })
        .collect();
    let header = ["player", "total", "yes", "no", "decimal"];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = format!("{} on {game}\n", report.measure());
    let line = |cells: &[&str]| {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    out.push_str(&line(&header));
    out.push('\n');
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        out.push_str(&line(&cells));
        out.push('\n');
    }
    let _ = writeln!(out, "sum: {}", to_fraction_string(&report.sum()));
    out
}

/// Rows of every report under one CSV header.
pub fn power_csv(reports: &[PowerReport]) -> String {
    let mut out = String::new();
    for (k, report) in reports.iter().enumerate() {
        let csv = report.to_csv();
        let body = if k == 0 { csv.as_str() } else { csv.split_once('\n').map_or("", |(_, rest)| rest) };
        out.push_str(body);
    }
    out
}

pub fn power_json(reports: &[PowerReport]) -> String {
    let rows: Vec<_> = reports.iter().map(|r| r.rows()).collect();
    serde_json::to_string_pretty(&rows).expect("rows serialize")
}

pub fn verdict_csv_header() -> &'static str {
    "postulate,measure,status,qualifier,lhs,relation,rhs"
}

pub fn verdict_csv(verdict: &Verdict) -> String {
    let status = match &verdict.status {
        Status::Holds => "holds",
        Status::Fails => "fails",
        Status::NotApplicable(_) => "not_applicable",
    };
    let (qualifier, lhs, relation, rhs) = match &verdict.witness {
        Some(w) => (
            w.qualifier.to_string(),
            to_fraction_string(&w.lhs),
            w.relation.symbol().to_string(),
            to_fraction_string(&w.rhs),
        ),
        None => Default::default(),
    };
    format!("{},{},{status},\"{qualifier}\",{lhs},{relation},{rhs}", verdict.postulate, verdict.measure)
}
