use std::process::{Command, Output};

use serde_json::Value;

fn zhuc2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zhuc2")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = zhuc2(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn zhu_examples() {
    let v = json(&["zhu", "--family", "C", "--rank", "2", "--level", "1"]);
    assert_eq!(v["total_dim"], "42");
    assert_eq!(v["summands"].as_array().unwrap().len(), 3);
    assert_eq!(json(&["zhu", "--family", "C", "--rank", "1", "--level", "0"])["total_dim"], "1");

    let out = zhuc2(&["zhu", "--family", "D", "--rank", "2", "--level", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("D requires rank ≥ 3"));
}

#[test]
fn c2_examples() {
    let v = json(&["c2", "--m", "1", "--k", "2"]);
    let dims: Vec<&str> = v["degrees"].as_array().unwrap().iter().map(|d| d["dim"].as_str().unwrap()).collect();
    assert_eq!(dims, ["1", "3", "6", "3", "1"]);

    let v = json(&["c2", "--m", "2", "--k", "1", "--degree", "2"]);
    assert_eq!(v["dim"], "20");
    let weights: Vec<Value> = v["summands"].as_array().unwrap().iter().map(|s| s["weight"].clone()).collect();
    assert_eq!(weights, vec![serde_json::json!([0, 0]), serde_json::json!([0, 1]), serde_json::json!([0, 2])]);

    let v = json(&["c2", "--m", "1", "--k", "0"]);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 1);
    assert_eq!(v["total_dim"], "1");

    assert_eq!(zhuc2(&["c2", "--m", "1", "--k", "1", "--degree", "3"]).status.code(), Some(2));
}

#[test]
fn c2_json_shape() {
    let out = zhuc2(&["c2", "--m", "2", "--k", "1", "--format", "json"]);
    let text = stdout(&out);
    assert!(text.starts_with(
        r#"{"object":"c2-graded","family":"C","m":2,"k":1,"degrees":[{"j":0,"summands":[{"weight":[0,0],"mult":1,"dim":"1"}],"dim":"1"},"#
    ));
    assert!(text.contains(r#""total_dim":"42""#));
}

#[test]
fn branch_examples() {
    let out = zhuc2(&["branch", "--case", "sp", "--m", "1", "--k", "1"]);
    let text = stdout(&out);
    assert!(text.contains("ℂ ⊕ V(ω₁)⊗V(ω₁)"), "{text}");
    assert!(text.contains("total dim 5"));

    let v = json(&["branch", "--case", "so-even", "--m", "3", "--k", "1"]);
    assert_eq!(v["summands"].as_array().unwrap().len(), 2);
    assert_eq!(v["total_dim"], "32");
    assert_eq!(v["target_dim"], "32");

    let v = json(&["branch", "--case", "b-quotient", "--m", "2", "--k", "1"]);
    assert_eq!(v["summands"].as_array().unwrap().len(), 1);
    assert_eq!(v["total_dim"], "16");

    let v = json(&["branch", "--case", "so-quotient", "--m", "3", "--k", "1"]);
    assert_eq!(v["total_dim"], "32");
    assert_eq!(v["zhu_dim"], "69");
}

#[test]
fn fold_lr_restrict_examples() {
    let v = json(&["fold", "--m", "1", "--partition", "1,1,1"]);
    assert_eq!(v["sign"], -1);
    assert_eq!(v["folded"], serde_json::json!([1]));
    assert_eq!(json(&["fold", "--m", "1", "--partition", "1,1"])["result"], "zero");

    assert_eq!(json(&["lr", "--lambda", "2,1", "--mu", "1", "--nu", "1,1"])["coefficient"], 1);

    let v = json(&["restrict", "--m", "2", "--partition", "2,2"]);
    assert_eq!(v["summands"].as_array().unwrap().len(), 3);
    assert_eq!(v["total_dim"], "20");
    let oracle = json(&["restrict", "--m", "2", "--partition", "2,2", "--oracle"]);
    assert_eq!(oracle["summands"], v["summands"]);

    assert_eq!(zhuc2(&["fold", "--m", "1", "--partition", "1,2"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = zhuc2(&["verify", "--suite", "conjecture-c", "--m-range", "1..2", "--k-range", "0..3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("PASS").count(), 8);

    let v = json(&["verify", "--suite", "kt-oracle", "--m-range", "1..2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);

    let out = zhuc2(&["verify", "--suite", "conjecture-c", "--m-range", "2..2", "--k-range", "1..1", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        r#"{"suite":"conjecture-c","reports":[{"check":"conjecture-c","m":2,"k":1,"quantities":{"zhu_dim":"42","c2_graded_total":"42","c2_weyl":"42"},"passed":true}],"passed":true}
"#
    );

    assert_eq!(zhuc2(&["verify", "--suite", "conjecture-c", "--k-range", "0..3"]).status.code(), Some(2));
    assert_eq!(zhuc2(&["verify", "--suite", "laws", "--m-range", "1..2"]).status.code(), Some(2));
    assert_eq!(zhuc2(&["verify", "--suite", "conjecture-c", "--m-range", "1..9", "--k-range", "0..1"]).status.code(), Some(2));
}

#[test]
fn json_is_stable_and_independent_of_workers() {
    let args = ["verify", "--suite", "laws", "--m-range", "1..3", "--k-range", "0..2", "--format", "json"];
    let a = zhuc2(&args);
    let b = zhuc2(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut one = args.to_vec();
    one.extend(["--parallel", "1"]);
    let mut four = args.to_vec();
    four.extend(["--parallel", "4"]);
    assert_eq!(zhuc2(&one).stdout, a.stdout);
    assert_eq!(zhuc2(&four).stdout, a.stdout);
}

#[test]
fn csv_output() {
    let out = zhuc2(&["restrict", "--m", "2", "--partition", "2,2", "--format", "csv"]);
    assert_eq!(stdout(&out), "weight,mult,dim\n\"0,0\",1,1\n\"0,1\",1,5\n\"0,2\",1,14\n");
}

#[test]
fn character_dump() {
    let v = json(&["character", "--family", "C", "--rank", "1", "--weight", "2"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["terms"][0], serde_json::json!({"exponents": [-2], "coeff": 1}));
}
