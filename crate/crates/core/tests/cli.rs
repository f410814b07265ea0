use std::io::Write;
use std::process::{Command, Stdio};

use coxsort::cli::run;
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, Value) {
    let out = cli_raw(args, "");
    assert_eq!(out.0, 0, "coxsort {args:?} failed: {}", out.2);
    let doc = serde_json::from_str(&out.1).expect("json output");
    (out.0, doc)
}

fn cli_raw(args: &[&str], stdin: &str) -> (i32, String, String) {
    let argv = std::iter::once("coxsort").chain(args.iter().copied());
    let o = run(argv, &mut stdin.as_bytes());
    (o.code, o.stdout, o.stderr)
}

#[test]
fn stats_examples() {
    let (_, doc) = cli(&["stats", "--family", "B", "5 -4 -3 1 -2"]);
    assert_eq!(doc["outputs"]["sor_B"], 16);
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["n"], 5);

    let (_, doc) = cli(&["stats", "--family", "A", "1 2 3"]);
    assert_eq!(doc["outputs"]["inv"], 0);
    assert_eq!(doc["outputs"]["sor"], 0);
    assert_eq!(doc["outputs"]["cyc"], 3);
    assert_eq!(doc["outputs"]["Cyc"], serde_json::json!([1, 2, 3]));

    let (_, doc) = cli(&["stats", "--family", "D", "2,-4,5,1,-3"]);
    assert_eq!(doc["outputs"]["inv_D"], 11);
    assert_eq!(doc["outputs"]["nmin_D"], 4);
}

#[test]
fn code_examples() {
    let (_, doc) = cli(&["code", "encode", "bcode", "--family", "B", "3 -1 -6 -5 4 2"]);
    assert_eq!(doc["outputs"]["code"]["text"], "(1,-1,1,-4,-4,-3)");
    let (_, doc) = cli(&["code", "decode", "acode", "--family", "B", "1 1 -3 -2 3"]);
    assert_eq!(doc["outputs"]["permutation"], "2 -4 5 1 -3");
    let (_, doc) = cli(&["code", "encode", "lehmer", "--family", "A", "1 2 3"]);
    assert_eq!(doc["outputs"]["code"]["text"], "(1,2,3)");
    let (_, doc) = cli(&["code", "encode", "fcode", "--family", "D", "-2 -4 5 -1 -3"]);
    assert_eq!(
        doc["outputs"]["code"]["entries"],
        serde_json::json!([1, 1, -3, -2, 3])
    );
    let (_, doc) = cli(&["code", "decode", "ecode", "--family", "D", "(1,1,-3,-2,3)"]);
    assert_eq!(doc["outputs"]["permutation"], "2 -4 5 1 -3");
}

#[test]
fn code_errors() {
    // E- and F-codes exist only in type D.
    assert_eq!(
        cli_raw(&["code", "encode", "ecode", "--family", "B", "1 2"], "").0,
        2
    );
    // c_3 = 4 is outside [1, 3].
    let (code, _, err) = cli_raw(&["code", "decode", "bcode", "1 2 4"], "");
    assert_eq!(code, 2);
    assert!(err.contains('4'), "{err}");
    // An odd number of bars decodes outside D.
    assert_eq!(
        cli_raw(&["code", "decode", "acode", "--family", "D", "-1 2"], "").0,
        2
    );
}

#[test]
fn map_examples() {
    let (_, doc) = cli(&["map", "rho", "--family", "D", "2 -4 5 1 -3"]);
    assert_eq!(doc["outputs"]["image"], "-2 -4 5 -1 -3");
    assert_eq!(doc["outputs"]["source_statistics"]["inv_D"], 11);
    assert_eq!(doc["outputs"]["image_statistics"]["sor_D"], 11);

    let (_, doc) = cli(&["map", "psi", "2 -4 5 1 -3"]);
    assert_eq!(doc["outputs"]["image"], "2 -4 5 -1 -3");

    let (_, fwd) = cli(&["map", "phi", "4 1 3 5 2"]);
    let image = fwd["outputs"]["image"].as_str().unwrap().to_string();
    let (_, back) = cli(&["map", "phi", "--inverse", &image]);
    assert_eq!(back["outputs"]["image"], "4 1 3 5 2");

    assert_eq!(cli_raw(&["map", "rho", "--family", "B", "1 2"], "").0, 2);
    assert_eq!(cli_raw(&["map", "sigma", "1 2"], "").0, 2);
}

#[test]
fn verify_examples() {
    let (code, doc) = cli(&["verify", "type-a-gf", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "verified");

    let (_, doc) = cli(&["verify", "type-b-transport", "--n", "4", "--parallel", "3"]);
    assert_eq!(doc["outputs"]["elements_checked"], 384);

    let (_, doc) = cli(&["verify", "type-d-bivariate", "--n", "2"]);
    assert_eq!(doc["outputs"]["polynomial_text"], "1 + 2*q*t + q^2*t");

    assert_eq!(cli_raw(&["verify", "type-q-gf", "--n", "3"], "").0, 2);
    assert_eq!(cli_raw(&["verify", "type-a-gf", "--n", "12"], "").0, 2);
    assert_eq!(
        cli_raw(&["verify", "type-d-gf", "--n", "3", "--family", "B"], "").0,
        2
    );
}

#[test]
fn table_examples() {
    let d2 = cli_raw(
        &[
            "table", "inv_D", "nmin_D", "--family", "D", "--n", "2", "--format", "csv",
        ],
        "",
    );
    assert_eq!(d2.1, "q,t,count\n0,0,1\n1,1,2\n2,1,1\n");

    let a1 = cli_raw(
        &["table", "inv", "rl-min", "--n", "1", "--format", "csv"],
        "",
    );
    assert_eq!(a1.1, "q,t,count\n0,1,1\n");

    let sor = cli_raw(
        &[
            "table", "sor_B", "l'_B", "--family", "B", "--n", "2", "--format", "csv",
        ],
        "",
    );
    let inv = cli_raw(
        &[
            "table", "inv_B", "nmin_B", "--family", "B", "--n", "2", "--format", "csv",
        ],
        "",
    );
    assert_eq!(sor.1, inv.1);

    let (_, doc) = cli(&["table", "inv_D", "nmin_D", "--family", "D", "--n", "2"]);
    assert_eq!(
        doc["outputs"]["polynomial"]["terms"],
        serde_json::json!([
            {"q": 0, "t": 0, "count": 1},
            {"q": 1, "t": 1, "count": 2},
            {"q": 2, "t": 1, "count": 1}
        ])
    );

    assert_eq!(cli_raw(&["table", "inv_B", "cyc", "--n", "3"], "").0, 2);
}

#[test]
fn stdin_and_determinism() {
    let a = cli_raw(&["stats", "--family", "B"], "5 -4 -3 1 -2\n");
    let b = cli_raw(&["stats", "--family", "B", "5", "-4", "-3", "1", "-2"], "");
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let seq = cli_raw(&["table", "sor_D", "lt_D", "--family", "D", "--n", "5"], "");
    let par = cli_raw(
        &[
            "table",
            "sor_D",
            "lt_D",
            "--family",
            "D",
            "--n",
            "5",
            "--parallel",
            "4",
        ],
        "",
    );
    assert_eq!(seq.1, par.1);
}

#[test]
fn parse_errors_name_the_token() {
    for (input, token) in [
        ("1 2 x", "x"),
        ("1 2 2", "2"),
        ("1 0", "0"),
        ("3 1 -2", "-2"),
    ] {
        let (code, _, err) = cli_raw(&["stats", input], "");
        assert_eq!(code, 2, "{input}");
        assert!(err.contains(token), "{input}: {err}");
    }
    assert_eq!(cli_raw(&["stats"], "").0, 2);
    assert_eq!(cli_raw(&["stats", "--n", "4", "1 2 3"], "").0, 2);
}

#[test]
fn text_format() {
    let (code, out, _) = cli_raw(&["stats", "--format", "text", "2 1"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("stats A_2: ok\n"));
    assert!(out.contains("  inv: 1\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_coxsort");
    let ok = Command::new(bin)
        .args(["verify", "type-d-roundtrip", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["stats", "1 1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());

    let mut child = Command::new(bin)
        .args(["map", "rho", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"2 -4 5 1 -3")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("image,-2 -4 5 -1 -3"));
}
