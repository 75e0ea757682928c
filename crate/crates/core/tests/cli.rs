use std::process::{Command, Output};

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reduce_prints_trace_polynomial() {
    let o = charvar(&["reduce", "g1^2 g2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t1*t12 - t2\n");
}

#[test]
fn davenport_prints_constant() {
    let o = charvar(&["davenport", "-m", "2", "-N", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn verify_all_json_is_ok_and_deterministic() {
    let a = charvar(&["verify", "--suite", "all", "--json"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["suite"], "all");
    assert!(report["elapsed"].is_null());
    let items = report["items"].as_array().unwrap();
    assert!(!items.is_empty());
    assert!(items.iter().all(|i| i["verdict"] == "ok"));
    let b = charvar(&["verify", "--suite", "all", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(charvar(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(charvar(&["reduce", "g1^"]).status.code(), Some(2));
    assert_eq!(charvar(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let o = charvar(&["reduce", "g1 x2"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
}

#[test]
fn budget_overflow_exits_one() {
    assert_eq!(charvar(&["--budget", "10", "davenport", "-m", "4", "-N", "2"]).status.code(), Some(1));
}

#[test]
fn out_file_receives_report() {
    let dir = std::env::temp_dir().join(format!("charvar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    let o = charvar(&["verify", "--suite", "independence", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"suite\": \"independence\""));
    std::fs::remove_dir_all(&dir).unwrap();
}
