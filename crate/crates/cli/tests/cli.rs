use std::process::{Command, Output};

use esscert_core::sseq::FIGURE_1;
use esscert_core::{Status, VerificationReport};

fn esscert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_esscert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn small_window_is_a_usage_error() {
    let o = esscert(&["verify", "all", "--qmax", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("qmax ≥ 10"));
}

#[test]
fn unknown_group_and_page_are_usage_errors() {
    assert_eq!(esscert(&["verify", "e9"]).status.code(), Some(2));
    assert_eq!(esscert(&["dims", "--page", "e7"]).status.code(), Some(2));
    assert_eq!(esscert(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn dims_reproduces_the_figure() {
    let o = esscert(&["dims", "--page", "einf"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in text.lines().filter(|l| l.contains('|')) {
        let (q, cells) = line.split_once('|').unwrap();
        let q: i32 = q.trim().parse().unwrap();
        let mut expected: Vec<(i32, usize)> = FIGURE_1
            .iter()
            .filter(|e| e.1 == q && e.2 > 0)
            .map(|e| (e.0, e.2))
            .collect();
        expected.sort();
        let width = 3;
        let got: Vec<(i32, usize)> = cells
            .as_bytes()
            .chunks(width)
            .enumerate()
            .filter_map(|(p, c)| {
                let s = std::str::from_utf8(c).unwrap().trim();
                (!s.is_empty()).then(|| (p as i32, s.parse().unwrap()))
            })
            .collect();
        assert_eq!(got, expected, "row {q}");
    }
}

#[test]
fn dims_json_matches_the_figure() {
    let o = esscert(&["dims", "--page", "einf", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for &(p, q, d) in FIGURE_1.iter() {
        assert_eq!(v["rows"][q as usize][p as usize].as_u64(), Some(d as u64), "({p},{q})");
    }
}

#[test]
fn json_report_round_trips_and_is_deterministic() {
    let args = ["verify", "group", "series", "--format", "json"];
    let first = esscert(&args);
    let second = esscert(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let report = VerificationReport::from_json(&text).unwrap();
    assert!(report.passed());
    assert_eq!(format!("{}\n", report.to_json()), text);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["pass", "fail", "info"] {
        assert!(raw["summary"][key].is_u64());
    }
    for c in raw["checks"].as_array().unwrap() {
        assert!(c["id"].is_string() && c["status"].is_string() && c["message"].is_string());
    }
}

#[test]
fn only_restricts_groups() {
    let o = esscert(&["verify", "--only", "group", "--format", "json"]);
    let report = VerificationReport::from_json(&stdout(&o)).unwrap();
    assert!(report.checks.iter().all(|c| c.id.starts_with("group.")));
}

#[test]
fn verify_all_passes_with_named_propositions() {
    let o = esscert(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("products.prop-ess10-4: pass"));
    assert!(text.contains("products.prop-ess8-6: pass"));
}

#[test]
fn essential_check_reports_witnesses_or_fails() {
    let o = esscert(&["essential", "--check", "a2^4*a4*t3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = VerificationReport::from_json(&stdout(&o)).unwrap();
    let c = report.get("essential.check").unwrap();
    assert_eq!(c.status, Status::Pass);
    assert_eq!(c.witness.as_ref().unwrap()["witnesses"].as_array().unwrap().len(), 15);

    let o = esscert(&["essential", "--check", "a1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("essential.check"));
}

#[test]
fn report_writes_json_to_file() {
    let path = std::env::temp_dir().join(format!("esscert-report-{}.json", std::process::id()));
    let o = esscert(&["report", "--only", "group", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report = VerificationReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.get("group.order").is_some());
    std::fs::remove_file(path).ok();
}

#[test]
fn series_prints_the_layout() {
    let o = esscert(&["series"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("P(t) = (1+4t+8t^2+10t^3+12t^4+13t^5+16t^6+20t^7+16t^8+13t^9+12t^10+10t^11+8t^12+4t^13+t^14)/(1-t^8)^2\n"));
}
