use std::process::{Command, Output};

fn srcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srcodes"))
        .args(args)
        .env_remove("SRCODES_LIMIT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const SPLIT: [&str; 9] = [
    "--cons",
    "2",
    "--k",
    "6",
    "--k1",
    "3",
    "--split-x",
    "1",
    "--places=0,2,3,4,5,6",
];

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", stderr(o));
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn construct_split_code() {
    let v = json(&srcodes(&[&["construct"][..], &SPLIT].concat()));
    assert_eq!(v["derived"]["length"], 24);
    assert_eq!(v["derived"]["dimension"], 6);
    assert_eq!(v["pole"]["q01"], serde_json::json!([1, 2]));
    assert_eq!(v["message_basis"].as_array().unwrap().len(), 6);
}

#[test]
fn construct_ramified_code_on_all_finite_places() {
    let v = json(&srcodes(&["construct", "--k", "6", "--k1", "3"]));
    assert_eq!(v["construction"], 1);
    assert_eq!(v["derived"]["length"], 28);
    assert_eq!(v["derived"]["theorem_bound"], 8);
}

#[test]
fn pole_point_selects_labels() {
    let base = ["construct", "--cons", "2", "--k", "6", "--k1", "3"];
    let a = json(&srcodes(&[&base[..], &["--pole", "pt=(1,5)"]].concat()));
    let b = json(&srcodes(
        &[&base[..], &["--split-x", "1", "--swap-labels"]].concat(),
    ));
    assert_eq!(a["pole"]["q01"], serde_json::json!([1, 5]));
    assert_eq!(a, b);
    assert!(!a["eval_places"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!(1)));
}

#[test]
fn round_trip_through_file() {
    let dir = std::env::temp_dir().join(format!("srcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("code.json");
    let p = path.to_str().unwrap();
    let o = srcodes(&[&["construct"][..], &SPLIT, &["--out", p]].concat());
    assert!(o.status.success());
    let again = srcodes(&["construct", "--code", p]);
    assert_eq!(
        stdout(&again).trim_end(),
        std::fs::read_to_string(&path).unwrap().trim_end()
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn parameter_violations_exit_2() {
    let o = srcodes(&["construct", "--k", "6", "--k1", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("k1 < k violated"));
    let o = srcodes(&["construct", "--curve", "x^3", "--k", "3", "--k1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("square-free"));
    let o = srcodes(&[
        "construct",
        "--cons",
        "2",
        "--k",
        "6",
        "--k1",
        "3",
        "--split-x",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = srcodes(&[
        "construct",
        "--cons",
        "2",
        "--k",
        "6",
        "--k1",
        "3",
        "--split-x",
        "1",
        "--places",
        "1,2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("collides"));
}

#[test]
fn analyze_reports_distribution_and_bounds() {
    let v = json(&srcodes(&[&["analyze"][..], &SPLIT].concat()));
    assert_eq!(v["mode"], "exhaustive");
    let a: Vec<u64> = serde_json::from_value(v["distribution"]["A"].clone()).unwrap();
    assert_eq!(a.iter().sum::<u64>(), 117_649);
    assert_eq!(v["d_min"], 7);
    assert_eq!(v["bounds"]["theorem_ok"], true);
    assert_eq!(v["bounds"]["msrd"], false);
}

#[test]
fn analyze_csv_and_sampling() {
    let o = srcodes(&[&["analyze", "--format", "csv"][..], &SPLIT].concat());
    let text = stdout(&o);
    assert!(text.starts_with("i,A_i\n0,1\n"));
    assert_eq!(text.lines().count(), 14);
    let v = json(&srcodes(
        &[&["analyze", "--sample", "500", "--seed", "9"][..], &SPLIT].concat(),
    ));
    assert_eq!(v["mode"], "sampled");
    assert_eq!(v["distribution"]["sampled"], 500);
    assert!(v.get("d_min").is_none());
}

#[test]
fn enumeration_limit_exits_3() {
    let o = srcodes(&[&["analyze", "--limit", "1000"][..], &SPLIT].concat());
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_srcodes"))
        .args([&["analyze"][..], &SPLIT].concat())
        .env("SRCODES_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_passes_and_detects_injected_fault() {
    let o = srcodes(&["verify", "--cases", "50", "--samples", "500"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = srcodes(&[
        "verify",
        "--cases",
        "10",
        "--samples",
        "100",
        "--inject-fault",
        "det",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("FAIL structural-identity"));
    assert!(stdout(&o).contains("f1 = "));
}

#[test]
fn verify_json_output() {
    let o = srcodes(&[
        "verify",
        "--q",
        "5",
        "--curve",
        "x^3+x+1",
        "--cases",
        "20",
        "--samples",
        "200",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert!(v.as_array().unwrap().iter().all(|r| r["failed"] == 0));
}

#[test]
fn examples_compare_against_golden_values() {
    for name in ["ex1a", "ex1b"] {
        let o = srcodes(&["example", name]);
        assert!(o.status.success(), "{name}: {}", stdout(&o));
        assert!(!stdout(&o).contains("MISMATCH"));
    }
    let o = srcodes(&["example", "ex2"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("[MISMATCH] minimum distance: got 7, published 6"));
}
