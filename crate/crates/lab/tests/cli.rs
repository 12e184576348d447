use std::path::Path;
use std::process::{Command, Output};

use plunnecke_lab::report::ReportDoc;

fn plunnecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plunnecke"))
        .args(args)
        .env_remove("PLUNNECKE_OUT_DIR")
        .output()
        .expect("spawn plunnecke")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn sumset_and_density() {
    let o = plunnecke(&["sumset", "--group", "8", "--A", "0,1", "--B", "0,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{0,1,4,5}"));

    let o = plunnecke(&["density", "--period", "2", "--pattern", "0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["upper"], "1/2");
    assert_eq!(v[0]["lower"], "1/2");
}

#[test]
fn magratio_flow_and_oracle_agree() {
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["magratio", "--group", "8", "--A", "0,1", "--B", "0,4", "--json"];
        args.extend_from_slice(extra);
        let o = plunnecke(&args);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["value"], "2/1");
        assert_eq!(v["witness"], serde_json::json!([0]));
    }
    let o = plunnecke(&["magratio", "--group", "8", "--A", "0,1", "--B", "0,4", "--delta", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("2/1"));
}

#[test]
fn instance_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", r#"{"system":{"kind":"quotient","orders":[12],"moduli":[4]},"A":[1],"B":[0,2]}"#);
    let o = plunnecke(&["magratio", "--input", &good]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("1/1"));

    let unknown = write(dir.path(), "unknown.json", r#"{"group":[8],"A":[0],"B":[0],"zz":1}"#);
    assert_eq!(plunnecke(&["magratio", "--input", &unknown]).status.code(), Some(2));
    let broken = write(dir.path(), "broken.json", r#"{"group":[8],"A":[0"#);
    assert_eq!(plunnecke(&["magratio", "--input", &broken]).status.code(), Some(2));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(plunnecke(&["sumset", "--group", "8", "--A", "9", "--B", "0"]).status.code(), Some(2));
    assert_eq!(plunnecke(&["magratio", "--group", "8", "--A", "0", "--B", ""]).status.code(), Some(2));
    assert_eq!(plunnecke(&["verify", "--checks", "nope"]).status.code(), Some(2));
    assert_eq!(plunnecke(&["verify", "--deltas", "3/2"]).status.code(), Some(2));
    assert_eq!(plunnecke(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(plunnecke(&["verify", "--help"]).status.code(), Some(0));
}

#[test]
fn verify_out_dir_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_plunnecke"))
        .args(["verify", "--seed", "3", "--instances", "5", "--max-order", "12", "--format", "json"])
        .env("PLUNNECKE_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(dir.path().join("report.json")).unwrap();
    let doc: ReportDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.seed, 3);
    assert!(doc.counterexamples.is_empty());
    assert!(doc.rows.iter().all(|r| r.holds));
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", text);

    let csv = dir.path().join("sub").join("r.csv");
    let o = plunnecke(&["verify", "--instances", "3", "--checks", "thm1,cor2", "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("instance_id,check,lhs,rhs,holds,vacuous,witness"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        let o = plunnecke(&["verify", "--seed", "11", "--instances", "4", "--threads", threads]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("4"));
    let other = plunnecke(&["verify", "--seed", "12", "--instances", "4"]).stdout;
    assert_ne!(one, other);
}

#[test]
fn correspond_and_equidist() {
    let o = plunnecke(&["correspond", "--period", "6", "--pattern", "0,1", "--A", "0,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("B_x = S on [-200, 200]: true"));

    let o = plunnecke(&["equidist", "--group", "8", "--A", "0,4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["defect"]["type"], "float64");
    assert!((v["defect"]["value"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}
