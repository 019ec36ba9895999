//! End-to-end runs of the binary: output shapes, JSON mode, exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigraft"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{:?}: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn pairing_and_eval() {
    assert_eq!(stdout(&["pair", "o o", "o o"]).trim(), "2");
    assert_eq!(stdout(&["eval", "o |> o"]).trim(), "o[l:o]");
    assert_eq!(
        stdout(&["eval", "o[r:o] @ (o o, o o)"]).trim(),
        "o o[r:o,r:o]"
    );
    assert_eq!(stdout(&["eval", "2 o - o"]).trim(), "o");
}

#[test]
fn counts_and_series() {
    assert_eq!(
        stdout(&["count", "--which", "dual", "--upto", "5"]).trim(),
        "1 3 6 10 15"
    );
    let bt = stdout(&["count", "--which", "bt", "--upto", "4"]);
    assert_eq!(bt.trim(), "1 3 12 55");
    let check = stdout(&["series-check", "--order", "10"]);
    assert!(check.contains("inverse identity up to order 10: ok"));
    assert!(check.contains("cubic equation up to order 10: ok"));
}

#[test]
fn confluence_reports_eleven_binomial_overlaps() {
    let text = stdout(&["confluence"]);
    assert!(text.contains("(11 from binomial overlaps), all joinable: ok"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--json", "confluence"])).unwrap();
    assert_eq!(json["all_joinable"], serde_json::Value::Bool(true));
    let monos = json["critical_monomials"].as_array().unwrap();
    let binomial = monos
        .iter()
        .filter(|p| p["binomial_overlap"] == serde_json::Value::Bool(true))
        .count();
    assert_eq!(binomial, 11);
}

#[test]
fn rewrite_and_normal_count() {
    assert_eq!(
        stdout(&["rewrite", "m(m(succ(1,2),3),4)"]).trim(),
        "succ(1,m(2,m(3,4)))"
    );
    assert_eq!(stdout(&["rewrite", "prec(1,prec(2,3))"]).trim(), "0");
    assert_eq!(
        stdout(&["normal-count", "--arity", "5", "--system", "bgdual"]).trim(),
        "15"
    );
    assert_eq!(
        stdout(&["normal-count", "--arity", "4", "--system", "bg"]).trim(),
        "55"
    );
}

#[test]
fn json_round_trips_through_the_documented_schemas() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "eval", "o |> o"])).unwrap();
    assert_eq!(
        json["result"],
        serde_json::json!([[[{ "c": [["l", { "c": [] }]] }], 1]])
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "gram", "--degree", "2"])).unwrap();
    assert_eq!(
        json["matrix"],
        serde_json::json!([[2, 1, 1], [1, 1, 0], [1, 0, -1]])
    );
    assert_eq!(
        json["basis"],
        serde_json::json!(["o o", "o[l:o]", "o[r:o]"])
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "homology", "--weight", "3"])).unwrap();
    for h in json["homology"].as_array().unwrap() {
        assert_eq!(h["dim"], serde_json::json!(0));
    }
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "coproduct", "o o"])).unwrap();
    let terms = json["coproduct"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
}

#[test]
fn enumerate_lists_the_basis() {
    let lines: Vec<String> = stdout(&["enumerate", "--degree", "2"])
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(lines, vec!["o o", "o[l:o]", "o[r:o]"]);
    let dual: Vec<String> = stdout(&["enumerate", "--degree", "4", "--dual"])
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(dual.len(), 10);
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["eval", "o |>"]), 1, "syntax error is usage");
    assert_eq!(exit_code(&["eval", "1 |> o"]), 2, "domain error");
    assert_eq!(exit_code(&["eval", "o[r:o,l:o]"]), 2, "validity error");
    assert_eq!(
        exit_code(&["enumerate", "--degree", "11"]),
        3,
        "bound exceeded"
    );
    assert_eq!(exit_code(&["no-such-command"]), 1, "usage error");
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["pair", "o", "o"]), 0);
}

#[test]
fn coproduct_ass_flag() {
    let text = stdout(&["coproduct", "--ass", "o o[l:o]"]);
    // deconcatenation has exactly the three splittings
    assert_eq!(text.trim().matches("(x)").count(), 3);
}
