use std::path::Path;
use std::process::{Command, Output};

use gobench::audit::LedgerRow;
use serde_json::Value;

fn bench(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bench")).args(args).current_dir(cwd).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_shortest_decimal() {
    let dir = tempfile::tempdir().unwrap();
    let o = bench(&["eval", "sphere", "--point", "0,0"], dir.path());
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "0\n"));
}

#[test]
fn info_reports_cached_audit() {
    let dir = tempfile::tempdir().unwrap();
    let before = stdout(&bench(&["info", "egg-holder"], dir.path()));
    assert!(!before.contains("Discrepant"));
    assert_eq!(bench(&["check", "egg-holder"], dir.path()).status.code(), Some(1));
    let after = stdout(&bench(&["info", "egg-holder"], dir.path()));
    assert!(after.contains("audit: Discrepant"), "{after}");
    assert!(dir.path().join("bench-audit.json").exists());
}

#[test]
fn list_filters_step_family() {
    let dir = tempfile::tempdir().unwrap();
    let o = bench(&["list", "--modality", "unimodal", "--separability", "separable", "--format", "csv"], dir.path());
    let mut rd = csv::Reader::from_reader(o.stdout.as_slice());
    let idx: Vec<usize> = rd.records().map(|r| r.unwrap()[0].parse().unwrap()).collect();
    for i in 138..=141 {
        assert!(idx.contains(&i));
    }
}

#[test]
fn catalog_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let a = bench(&["catalog", "--format", "json"], dir.path());
    let b = bench(&["catalog", "--format", "json"], dir.path());
    assert_eq!(a.stdout, b.stdout);
    let entries: Vec<Value> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(entries.len(), 175);
    let f150 = &entries[149];
    assert_eq!(f150["dimension"]["n"], 6);
    assert_eq!(f150["optima"][0]["value"], -50.0);
    let csv = bench(&["catalog", "--format", "csv"], dir.path());
    assert_eq!(stdout(&csv).lines().count(), 176);
}

#[test]
fn grid_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = bench(&["grid", "sphere", "--x1", "-1:1", "--x2", "-1:1", "--resolution", "3", "--out", "g.csv"], dir.path());
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.path().join("g.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x1,x2,f");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[5], "0,0,0");
    assert_eq!(lines[1], "-1,-1,2");
    assert!(!text.contains('\r'));

    bench(&["grid", "sphere", "--resolution", "2", "--out", "two.csv"], dir.path());
    assert_eq!(std::fs::read_to_string(dir.path().join("two.csv")).unwrap().lines().count(), 5);

    let bad = bench(&["grid", "hartman-3", "--resolution", "3", "--out", "h.csv"], dir.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(!dir.path().join("h.csv").exists());
}

#[test]
fn grid_values_round_trip_through_eval() {
    let dir = tempfile::tempdir().unwrap();
    bench(&["grid", "egg-holder", "--resolution", "7", "--out", "e.csv"], dir.path());
    let text = std::fs::read_to_string(dir.path().join("e.csv")).unwrap();
    for line in text.lines().skip(1).step_by(5) {
        let (point, f) = line.rsplit_once(',').unwrap();
        let o = bench(&["eval", "egg-holder", "--point", point], dir.path());
        assert_eq!(stdout(&o).trim(), f, "at {point}");
    }
}

#[test]
fn check_formats_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = bench(&["check", "beale"], dir.path());
    assert_eq!(ok.status.code(), Some(0));
    let rows: Vec<Value> = serde_json::from_slice(&ok.stdout).unwrap();
    for key in ["fn", "point", "claimed", "evaluated", "residual", "refined", "stationarity", "status", "note"] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
    let csv = bench(&["check", "beale", "--format", "csv"], dir.path());
    assert!(stdout(&csv).starts_with("fn,point,claimed,evaluated,residual,refined,stationarity,status,note\n"));

    let expected = dir.path().join("errata.json");
    std::fs::write(&expected, r#"[{"fn": "egg-holder", "reason": "sign"}]"#).unwrap();
    let e = expected.to_str().unwrap();
    assert_eq!(bench(&["check", "egg-holder", "--expected-errata", e], dir.path()).status.code(), Some(0));
    assert_eq!(bench(&["check", "beale", "--expected-errata", e], dir.path()).status.code(), Some(0));
    std::fs::write(&expected, "[]").unwrap();
    assert_eq!(bench(&["check", "egg-holder", "--expected-errata", e], dir.path()).status.code(), Some(1));
    assert_eq!(bench(&["check", "beale", "--tol", "0"], dir.path()).status.code(), Some(1));
}

#[test]
fn ledger_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    bench(&["check", "--all", "--ledger", "ledger.json"], dir.path());
    let text = std::fs::read_to_string(dir.path().join("ledger.json")).unwrap();
    let rows: Vec<LedgerRow> = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&rows).unwrap() + "\n";
    assert_eq!(again, text);
    assert!(rows.iter().any(|r| r.index == 126 && r.kind == "interpretation"));
}

#[test]
fn probe_prints_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let o = bench(&["probe", "sphere", "--dim", "3", "--seed", "4"], dir.path());
    assert!(stdout(&o).starts_with("AdditivelySeparable "));
    let o = bench(&["probe", "matyas"], dir.path());
    assert!(stdout(&o).starts_with("NonSeparable "));
    assert_eq!(bench(&["probe", "sphere", "--samples", "3"], dir.path()).status.code(), Some(1));
}

#[test]
fn run_manifest_outputs() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("m.json"),
        r#"{"functions": ["beale", "sphere"], "optimizers": [{"name": "nelder-mead"}],
            "dimensions": [2], "budget": 300, "seeds": [0, 1, 2]}"#,
    )
    .unwrap();
    let o = bench(&["run", "--manifest", "m.json"], dir.path());
    assert!(o.status.success());
    let rows: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["evals"].as_u64().unwrap() <= 300));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nelder-mead"));

    bench(&["run", "--manifest", "m.json", "--out", "r.csv"], dir.path());
    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert!(csv.starts_with("fn,optimizer,dim,seed,best_value,evals,success\n"));
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn bad_manifest_lists_every_problem() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("m.json"),
        r#"{"functions": ["nope", "sphere"], "optimizers": [{"name": "cma-es"}, {"name": "random-search"}],
            "budget": 0, "seeds": [0]}"#,
    )
    .unwrap();
    let o = bench(&["run", "--manifest", "m.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("nope") && err.contains("cma-es") && err.contains("budget"), "{err}");
    std::fs::write(dir.path().join("x.json"), r#"{"budgets": 3}"#).unwrap();
    assert_eq!(bench(&["run", "--manifest", "x.json"], dir.path()).status.code(), Some(1));
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = bench(&["frobnicate"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty() && !o.stderr.is_empty());
    assert_eq!(bench(&["eval", "sphere", "--point", "0,0", "--bogus"], dir.path()).status.code(), Some(1));
    assert_eq!(bench(&["--help"], dir.path()).status.code(), Some(0));
}
