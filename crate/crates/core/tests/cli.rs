use std::path::PathBuf;

use idemrel::cli::run_with;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("idemrel").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    use std::io::Write;
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn check_t() {
    let (code, out, _) = run(&["check", &data("t.json")]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["full"], true);
    assert_eq!(v["idempotent"], true);
    assert_eq!(v["surjective"], false);
    assert_eq!(v["trivial"], true);
    assert_eq!(v["gamma"], Value::Null);
}

#[test]
fn check_gamma() {
    let (code, out, _) = run(&["check", &data("gamma.json")]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["trivial"], false);
    assert_eq!(v["nontrivial"], true);
    assert_eq!(v["gamma"], serde_json::json!([0, 1]));
}

#[test]
fn check_expectations() {
    let t = data("t.json");
    let (code, _, _) = run(&[
        "check",
        &t,
        "--expect",
        "trivial=true",
        "--expect",
        "gamma=false",
    ]);
    assert_eq!(code, 0);
    let (code, _, err) = run(&["check", &t, "--expect", "surjective=true"]);
    assert_eq!(code, 1);
    assert!(err.contains("surjective=true"), "{err}");
    let (code, _, _) = run(&["check", &t, "--expect", "bogus=true"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["check", &t, "--expect", "trivial=maybe"]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_two() {
    let zero = temp_file(r#"{"n":0,"pairs":[]}"#);
    let (code, _, err) = run(&["check", zero.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("carrier must be nonempty"), "{err}");

    let dup = temp_file(r#"{"n":2,"pairs":[[0,0],[0,0]]}"#);
    let (code, _, err) = run(&["check", dup.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(
        err.contains("error[duplicate-pair]") && err.contains("pairs[1]"),
        "{err}"
    );

    let (code, _, _) = run(&["check", "/nonexistent/file.json"]);
    assert_eq!(code, 2);

    let (code, _, err) = run(&["check", &data("t.json"), "--frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"), "{err}");

    let (code, _, _) = run(&["survey", "--n", "6"]);
    assert_eq!(code, 2);
}

#[test]
fn survey_csv_row() {
    let (code, out, _) = run(&["survey", "--n", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("# idemrel survey csv v1"));
    assert_eq!(
        lines[1],
        "n,full,idempotent,nontrivial,trivial,gamma,counterexamples"
    );
    assert_eq!(lines[2], "2,9,6,3,3,3,0");
}

#[test]
fn survey_json_and_determinism() {
    let a = run(&["survey", "--n", "3", "--json", "--workers", "1"]);
    let b = run(&["survey", "--n", "3", "--json", "--workers", "4"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["counts"]["full"], 343);
    assert_eq!(v["counterexamples"], serde_json::json!([]));

    let iso = run(&["survey", "--n", "3", "--up-to-iso", "--csv"]);
    assert_eq!(iso.0, 0);
    assert!(iso.1.contains("mode=up_to_iso"));
}

#[test]
fn witness_traces() {
    let g = data("gamma.json");
    let (code, out, _) = run(&["witness", &g]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pair"], serde_json::json!([0, 1]));
    assert_eq!(v["lemma1"]["kind"], "lemma1");

    let (code, out, _) = run(&["witness", &g, "--lemma", "1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], serde_json::json!([1, 0]));

    let (code, out, _) = run(&["witness", &g, "--lemma", "2", "--seed", "0,1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], serde_json::json!([0, 1]));
    assert_eq!(v["seed"], serde_json::json!([0, 1]));

    let (code, _, err) = run(&["witness", &data("t.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("trivial"), "{err}");

    let (code, _, _) = run(&["witness", &g, "--lemma", "2", "--seed", "1,0"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["witness", &g, "--lemma", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn mahavier_outputs() {
    let g = data("gamma.json");
    let (code, out, _) = run(&["mahavier", &g, "--length", "10", "--count-only"]);
    assert_eq!((code, out.as_str()), (0, "11\n"));
    let (_, out, _) = run(&["mahavier", &g, "--length", "10", "--count-only", "--naive"]);
    assert_eq!(out, "11\n");

    let (code, out, _) = run(&["mahavier", &g, "--length", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "000\n100\n110\n111\n");

    let (_, out, _) = run(&["mahavier", &g, "--length", "3", "--transpose"]);
    assert_eq!(out, "000\n001\n011\n111\n");

    let (_, out, _) = run(&["mahavier", &g, "--length", "3", "--json", "--workers", "2"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 4);
    assert_eq!(v["is_coordinatewise_chain"], true);
    assert_eq!(v["threads"][1], serde_json::json!([1, 0, 0]));

    let swap = temp_file("01\n10\n");
    let p = swap.path().to_str().unwrap();
    let (_, out, _) = run(&["mahavier", p, "--length", "3", "--adjacent"]);
    assert_eq!(out, "010\n101\n");
    let (_, out, _) = run(&["mahavier", p, "--length", "3"]);
    assert_eq!(out, "");

    let (code, _, _) = run(&["mahavier", &g, "--length", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["mahavier", &g, "--length", "40", "--naive"]);
    assert_eq!(code, 2);
}

#[test]
fn ops() {
    let t = data("t.json");
    let g = data("gamma.json");
    let (code, out, _) = run(&["op", "inverse", &g, "--format", "matrix"]);
    assert_eq!((code, out.as_str()), (0, "10\n11\n"));
    let (_, out, _) = run(&["op", "compose", &t, &t]);
    assert_eq!(out, "{\"n\":3,\"pairs\":[[0,0],[1,1],[2,0],[2,1]]}\n");
    let (code, _, _) = run(&["op", "compose", &t, &g]);
    assert_eq!(code, 2);
    let (_, out, _) = run(&["op", "restrict", &t, "--set", "0,1", "--format", "matrix"]);
    assert_eq!(out, "100\n010\n000\n");
    let (code, _, _) = run(&["op", "restrict", &t, "--set", "0,7"]);
    assert_eq!(code, 2);
    let (_, out, _) = run(&["op", "canonical", &g, "--format", "matrix"]);
    assert_eq!(out, "10\n11\n");
}

#[test]
fn json_and_matrix_forms_check_the_same() {
    for name in ["t.json", "gamma.json"] {
        let (_, matrix, _) = run(&["op", "inverse", &data(name), "--format", "matrix"]);
        let m = temp_file(&matrix);
        let (_, back, _) = run(&["op", "inverse", m.path().to_str().unwrap()]);
        let j = temp_file(&back);
        let (_, from_json, _) = run(&["check", &data(name)]);
        let (_, round, _) = run(&["check", j.path().to_str().unwrap()]);
        assert_eq!(from_json, round);
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("row x, column y"));
}
