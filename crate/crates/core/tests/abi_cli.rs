//! The `stern-lab` binary: output contract, exit status, guards.

use std::process::{Command, Output};

fn stern_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stern-lab"))
        .args(args)
        .env_remove("STERN_LAB_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn lpoly_json_object() {
    let o = stern_lab(&["lpoly", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"n\":4,\"coeffs\":[\"31\",\"46\",\"4\"]}\n");
    let def = stern_lab(&["lpoly", "4", "--method", "def", "--format", "json"]);
    assert_eq!(stdout(&def), stdout(&o));
}

#[test]
fn certify_range() {
    let o = stern_lab(&["certify", "--from", "1", "--to", "50", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 50);
    assert!(reports.iter().all(|r| r["real_rooted"] == true));
}

#[test]
fn certify_csv_header() {
    let o = stern_lab(&["certify", "--from", "4", "--to", "5", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,degree,distinct_real_roots,real_rooted\n4,2,2,true\n5,2,2,true\n");
}

#[test]
fn divide_one() {
    let o = stern_lab(&["divide", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["quotient"], serde_json::json!(["9", "18"]));
    assert_eq!(v["remainder"], serde_json::json!([]));
    assert_eq!(v["verdict"], true);
}

#[test]
fn fixed_key_order() {
    let o = stern_lab(&["moments", "2", "--format", "json"]);
    let s = stdout(&o);
    assert!(s.starts_with(r#"{"n":2,"L1":"9","dL1":"2","d2L1":"0","mu":{"num":"2","den":"9"},"sigma2":{"num":"14","den":"81"}"#), "{s}");
    let o = stern_lab(&["hankel", "--k", "0", "--m", "2", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"k\":0,\"m\":2,\"det\":[\"-4\",\"8\",\"-4\"],\"match\":true}\n");
}

#[test]
fn empty_list_is_empty_array() {
    let o = stern_lab(&["normality", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[]\n");
}

#[test]
fn false_verdict_exits_two() {
    assert_eq!(stern_lab(&["oracle", "5"]).status.code(), Some(2));
    assert_eq!(stern_lab(&["oracle", "6"]).status.code(), Some(0));
    assert_eq!(stern_lab(&["certify", "--poly", "[1, 0, 1]"]).status.code(), Some(2));
    assert_eq!(stern_lab(&["moments", "1"]).status.code(), Some(2));
}

#[test]
fn usage_and_guard_errors_exit_one() {
    assert_eq!(stern_lab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(stern_lab(&["lpoly"]).status.code(), Some(1));
    assert_eq!(stern_lab(&["lpoly", "--from", "5", "--to", "2"]).status.code(), Some(1));
    assert_eq!(stern_lab(&["normality", "1"]).status.code(), Some(1));
    let o = stern_lab(&["row", "31"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("MAX_TRIANGLE_ROW"));
    let o = stern_lab(&["lpoly", "23", "--method", "def"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("MAX_LPOLY_DEF_N"));
}

#[test]
fn env_var_moves_the_summation_guard() {
    let run = |max: &str| {
        Command::new(env!("CARGO_BIN_EXE_stern-lab"))
            .args(["lpoly", "6", "--method", "def"])
            .env("STERN_LAB_MAX_N", max)
            .output()
            .unwrap()
    };
    assert_eq!(run("5").status.code(), Some(1));
    assert_eq!(run("6").status.code(), Some(0));
    assert_eq!(run("27").status.code(), Some(1));
    assert_eq!(run("many").status.code(), Some(1));
}

#[test]
fn out_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("stern-lab-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hankel.csv");
    let args = ["hankel", "--k-max", "3", "--m-max", "4", "--format", "csv"];
    let direct = stern_lab(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = stern_lab(&with_out);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_verb_answers() {
    for args in [
        vec!["row", "3"],
        vec!["bpoly", "--from", "1", "--to", "9"],
        vec!["gf", "--from", "1", "--to", "6"],
        vec!["gf", "--phi", "15"],
        vec!["identity", "--from", "1", "--to", "100"],
        vec!["binet", "--from", "1", "--to", "30"],
        vec!["normality", "2", "4", "25"],
    ] {
        for format in ["human", "json", "csv"] {
            let mut a = args.clone();
            a.extend(["--format", format]);
            let o = stern_lab(&a);
            assert_eq!(o.status.code(), Some(0), "{a:?}");
            assert!(!o.stdout.is_empty(), "{a:?}");
        }
    }
    assert_eq!(stern_lab(&["eoj", "2"]).status.code(), Some(2));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["normality", "--from", "2", "--to", "40", "--format", "json"];
    assert_eq!(stern_lab(&args).stdout, stern_lab(&args).stdout);
}
