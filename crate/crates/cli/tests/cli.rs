use std::process::{Command, Output};

use nctrace::{Letter, NcPolynomial, Scalar, Word};
use proptest::prelude::*;
use serde_json::Value;

fn nctrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nctrace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_report(args: &[&str]) -> (Value, Vec<u8>) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    full.extend(["--json", p]);
    let out = nctrace(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let bytes = std::fs::read(&path).unwrap();
    (serde_json::from_slice(&bytes).unwrap(), bytes)
}

#[test]
fn classify_commutator() {
    let (r, _) = json_report(&["classify", "--d", "2", "x1*x2 - x2*x1"]);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["case"], "(iii)");
    assert_eq!(r["span"]["dimension"], 3);
    assert_eq!(r["sampled_dimension"], 3);
    assert_eq!(r["span"]["name"], "[A,A]");
}

#[test]
fn classify_first_kind_fixture() {
    let (r, _) = json_report(&["classify", "--d", "3", "--inv", "transpose", "x1*x1' - x1'*x1"]);
    assert_eq!(r["case"], "(v)");
    assert_eq!(r["sampled_dimension"], 5);
    assert_eq!(r["involution"], "transpose");
}

#[test]
fn leading_minus_is_a_polynomial() {
    let (r, _) = json_report(&["classify", "--d", "3", "--inv", "transpose", "-x1 + x1'"]);
    assert_eq!(r["case"], "(iii)");
}

#[test]
fn cyc_equiv_example() {
    let (r, _) = json_report(&["cyc-equiv", "x1*x2", "x2*x1"]);
    assert_eq!(r["equivalent"], true);
    let (r, _) = json_report(&["cyc-equiv", "x1*x1'*x2", "x1'*x1*x2"]);
    assert_eq!(r["equivalent"], false);
    assert_eq!(r["residue"].as_array().unwrap().len(), 2);
}

#[test]
fn trace_example() {
    let (r, _) = json_report(&["trace", "--d", "3", "--inv", "transpose", "x1*x1' - x1'*x1"]);
    assert_eq!(r["trace_zero"], true);
    let (r, _) = json_report(&["trace", "--d", "2", "x1^2"]);
    assert_eq!(r["trace_zero"], false);
    assert!(r["witness"].is_array());
}

#[test]
fn witness_example() {
    let (r, _) = json_report(&["witness", "x1*x2*x3 - x3*x1*x2"]);
    assert_eq!(r["witness"]["pairs"][0][0], "x1*x2");
    assert_eq!(r["witness"]["pairs"][0][1], "x3");
    let (r, _) = json_report(&["witness", "x1*x2"]);
    assert_eq!(r["equivalent_to_zero"], false);
}

#[test]
fn eval_numeric_and_generic() {
    let out = nctrace(&["eval", "x1*x2", "--at", "[[0,1],[0,0]]", "--at", "[[0,0],[1,0]]"]);
    assert_eq!(stdout(&out).trim(), "[[1,0],[0,0]]");
    let (r, _) = json_report(&["eval", "--inv", "transpose", "x1 + x1'"]);
    assert_eq!(r["value"][0][1], r["value"][1][0]);
}

#[test]
fn closure_and_subspace() {
    let (r, _) = json_report(&[
        "closure",
        "--kind",
        "congruence",
        "--inv",
        "transpose",
        "[[1,0],[0,0]]",
    ]);
    assert_eq!(r["name"], "S");
    let (r, _) = json_report(&[
        "closure",
        "--kind",
        "skew-ideal",
        "--inv",
        "transpose",
        "[[1,1],[-1,1]]",
    ]);
    assert_eq!(
        (r["name"].as_str(), r["span"]["dimension"].as_u64()),
        (Some("Other"), Some(1))
    );
    let (r, _) = json_report(&["subspace", "--d", "4", "--inv", "symplectic", "--name", "S"]);
    assert_eq!(r["subspaces"][0]["span"]["dimension"], 6);
}

#[test]
fn corpus_passes() {
    let out = nctrace(&["corpus"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 13);
    assert!(!text.contains("FAIL"));
}

#[test]
fn json_to_stdout() {
    let out = nctrace(&["classify", "x1", "--json", "-"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["case"], "(iv)");
}

#[test]
fn exit_codes() {
    assert_eq!(nctrace(&["--help"]).status.code(), Some(0));
    assert_eq!(nctrace(&["--version"]).status.code(), Some(0));
    assert_eq!(nctrace(&["bogus"]).status.code(), Some(1));
    assert_eq!(nctrace(&["classify"]).status.code(), Some(1));
    assert_eq!(nctrace(&["classify", "x1 +"]).status.code(), Some(1));
    assert_eq!(nctrace(&["classify", "x1'"]).status.code(), Some(1));
    assert_eq!(
        nctrace(&["classify", "--d", "3", "--inv", "symplectic", "x1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(nctrace(&["classify", "--d", "0", "x1"]).status.code(), Some(1));
    assert_eq!(
        nctrace(&["classify", "--inv", "nope", "x1"]).status.code(),
        Some(1)
    );
    assert_eq!(nctrace(&["eval", "x1", "--at", "[[1]]"]).status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let runs: [&[&str]; 6] = [
        &[
            "classify",
            "--seed",
            "7",
            "--d",
            "3",
            "--inv",
            "transpose",
            "x1*x2*x1'",
        ],
        &["classify", "--seed", "7", "--inv", "unitary", "x1 - x1'"],
        &["trace", "--seed", "7", "x1^2*x2"],
        &["witness", "x1*x2 - x2*x1"],
        &[
            "closure",
            "--kind",
            "lie-ideal",
            "--d",
            "3",
            "[[0,1,0],[0,0,0],[0,0,0]]",
        ],
        &["corpus", "--seed", "7"],
    ];
    for args in runs {
        let (_, a) = json_report(args);
        let (_, b) = json_report(args);
        assert_eq!(a, b, "{args:?}");
    }
}

fn arb_poly() -> impl Strategy<Value = NcPolynomial> {
    let word = prop::collection::vec((1u32..=4, any::<bool>()), 0..=5)
        .prop_map(|v| Word::new(v.into_iter().map(|(i, s)| Letter::new(i, s)).collect()));
    let coeff = (-20i64..=20, 1i64..=6, -2i64..=2)
        .prop_map(|(n, d, im)| &Scalar::from_ratio(n, d) + &Scalar::gaussian(0, im));
    prop::collection::vec((word, coeff), 0..=6).prop_map(NcPolynomial::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn grammar_round_trip(f in arb_poly()) {
        let text = f.to_string();
        let back: NcPolynomial = text.parse().unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
    }
}
