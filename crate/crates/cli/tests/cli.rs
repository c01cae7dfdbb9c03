use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_padic-dyn"));
    cmd.env_remove("PADIC_DYN_MAX_NODES");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = manifest_dir().join("schemas").join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(manifest_dir().join("tests/golden").join(name)).unwrap()
}

fn numbers(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn oracle_reproduces_the_mod_ten_example() {
    let doc = json(&["oracle", "--poly", "x^2-7x+2", "--modulus", "10"]);
    assert_eq!(numbers(&doc["solutions"]), [3, 4, 8, 9]);
    let table = stdout(&run(&["oracle", "--poly", "x^2-7x+2", "--modulus", "10"]));
    assert!(table.contains("{3, 4, 8, 9}"));
}

#[test]
fn lift_reproduces_sqrt_two_ladder() {
    let doc = json(&["lift", "--poly", "x^2-2", "--prime", "7", "--precision", "3", "--seed", "3"]);
    assert_eq!(numbers(&doc["ladder"]), [3, 10, 108]);
    assert_eq!(doc["root"], 108);
    assert_eq!(numbers(&doc["digits"]), [3, 1, 2]);
}

#[test]
fn tree_outputs_match_golden_files() {
    let args = ["tree", "--poly", "x^2", "--prime", "7", "--precision", "1", "--seed", "2", "--depth", "2"];
    let mut dot = args.to_vec();
    dot.extend(["--format", "dot"]);
    let out = stdout(&run(&dot));
    assert_eq!(out, golden("tree_x2_p7_k1_seed2_depth2.dot"));
    assert_eq!(out.lines().filter(|l| l.contains("[label=\"") && l.starts_with("  n")).count(), 5);

    let mut js = args.to_vec();
    js.extend(["--format", "json"]);
    assert_eq!(stdout(&run(&js)), golden("tree_x2_p7_k1_seed2_depth2.json"));

    let singular = stdout(&run(&[
        "tree", "--poly", "x^2+5x", "--prime", "5", "--precision", "2", "--seed", "0", "--depth", "2", "--format", "dot",
    ]));
    assert_eq!(singular, golden("tree_singular_p5_k2.dot"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let cases: [&[&str]; 3] = [
        &["tree", "--poly", "x^3 - x + 2", "--prime", "5", "--precision", "3", "--seed", "7", "--depth", "4", "--format", "json"],
        &["orbit", "--poly", "x^2 + 1", "--prime", "3", "--precision", "4", "--seed", "5", "--steps", "90"],
        &["roots", "--poly", "x^4 - 1", "--prime", "13", "--format", "json"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn every_json_document_matches_its_schema() {
    let cases: [(&str, &[&str]); 14] = [
        ("roots", &["roots", "--poly", "x^2", "--prime", "7", "--target", "2"]),
        ("roots", &["roots", "--poly", "5x^2 + 3", "--prime", "5", "--target", "3"]),
        ("oracle", &["oracle", "--poly", "x^2 + 1", "--modulus", "5"]),
        ("lift", &["lift", "--poly", "x^2 + 1", "--prime", "5", "--precision", "3", "--seed", "2"]),
        ("preimages", &["preimages", "--poly", "x^2", "--prime", "7", "--precision", "2", "--target", "2"]),
        ("preimages", &["preimages", "--poly", "x^2", "--prime", "5", "--precision", "2", "--target", "0"]),
        ("tree", &["tree", "--poly", "x^2+5x", "--prime", "5", "--precision", "2", "--seed", "0", "--depth", "2"]),
        ("tree", &["tree", "--poly", "x^3 + 2", "--prime", "7", "--precision", "2", "--seed", "3", "--depth", "3"]),
        ("orbit", &["orbit", "--poly", "x^2", "--prime", "7", "--precision", "1", "--seed", "3", "--steps", "3"]),
        ("orbit", &["orbit", "--poly", "x^2", "--prime", "7", "--precision", "2", "--seed", "10", "--steps", "1"]),
        ("dist", &["dist", "--left", "0,2,0", "--right", "0,0,1", "--prime", "5"]),
        ("valuation", &["valuation", "--numerator", "0", "--prime", "3"]),
        ("reduce", &["reduce", "--poly", "x^5 + x", "--prime", "5"]),
        ("certify", &["certify", "--poly", "x^2 + 1", "--prime", "7"]),
    ];
    for (name, args) in cases {
        let doc = json(args);
        let v = schema(name);
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    let dist = json(&["dist", "--left", "1,1,1,1", "--right", "1,1,1,0", "--metric", "first-difference"]);
    assert!(schema("dist").is_valid(&dist));
    assert_eq!(dist["distance"]["text"], "1/8");
}

#[test]
fn domain_errors_exit_one_with_json() {
    let cases: [(&[&str], &str); 5] = [
        (&["roots", "--poly", "x", "--prime", "6"], "not-prime"),
        (&["lift", "--poly", "x^2", "--prime", "5", "--precision", "2", "--seed", "0"], "singular-root"),
        (&["lift", "--poly", "x^2 - 2", "--prime", "7", "--precision", "2", "--seed", "1"], "not-a-root"),
        (&["tree", "--poly", "x^2 - x", "--prime", "7", "--precision", "1", "--seed", "0", "--depth", "10", "--max-nodes", "6"], "budget-exhausted"),
        (&["lift", "--poly", "x^2 - 2", "--prime", "7", "--precision", "200", "--seed", "3"], "modulus-too-large"),
    ];
    let v = schema("error");
    for (args, kind) in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(v.is_valid(&doc));
        assert_eq!(doc["error"]["kind"], kind, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["roots", "--poly", "x^2 +", "--prime", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 5"));

    let out = run(&["roots", "--poly", "x^2 +", "--prime", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "usage");

    assert_eq!(run(&["roots", "--prime", "5"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["orbit", "--poly", "x", "--prime", "5", "--precision", "1", "--seed", "1", "--steps", "1", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["dist", "--left", "1", "--right", "2"]).status.code(), Some(2));
}

#[test]
fn node_budget_comes_from_the_environment() {
    let args = ["tree", "--poly", "x^2 - x", "--prime", "7", "--precision", "1", "--seed", "0", "--depth", "10"];
    let out = bin().args(args).env("PADIC_DYN_MAX_NODES", "6").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().args(args).env("PADIC_DYN_MAX_NODES", "100").output().unwrap();
    assert!(out.status.success());
    // the flag wins over the environment
    let out = bin().args(args).args(["--max-nodes", "100"]).env("PADIC_DYN_MAX_NODES", "6").output().unwrap();
    assert!(out.status.success());
}

#[test]
fn larger_moduli_can_be_unlocked() {
    let doc = json(&[
        "lift", "--poly", "x^2 - 2", "--prime", "7", "--precision", "200", "--seed", "3", "--max-modulus-bits", "1024",
    ]);
    assert_eq!(doc["ladder"].as_array().unwrap().len(), 200);
    // bare JSON numbers beyond 64 bits survive intact
    let root = doc["root"].to_string();
    assert!(root.len() > 100 && root.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn table_output_for_each_subcommand() {
    let tree = stdout(&run(&["tree", "--poly", "x^2", "--prime", "7", "--precision", "1", "--seed", "2", "--depth", "2"]));
    assert_eq!(
        tree,
        "backward tree of x^2 over Z/7^1, seed 2, depth 2: 5 nodes\n\
         2 [expanded]\n  3 [no-preimage-leaf]\n  4 [expanded]\n    2 [frontier]\n    5 [frontier]\n"
    );
    let orbit = stdout(&run(&["orbit", "--poly", "x^2", "--prime", "7", "--precision", "1", "--seed", "3", "--depth", "3"]));
    assert!(orbit.contains("3, 2, 4, 2") && orbit.contains("tail 1, cycle length 2"));
    let val = stdout(&run(&["valuation", "--numerator", "6", "--denominator", "45", "--prime", "3"]));
    assert_eq!(val, "v_3(6/45) = -1\n|6/45|_3 = 3\n");
    let roots = stdout(&run(&["roots", "--poly", "x^2", "--prime", "5"]));
    assert!(roots.contains("singular"));
    let cert = stdout(&run(&["certify", "--poly", "x^2 - 1", "--prime", "5"]));
    assert!(cert.contains("x^3 + x") && cert.contains("exactly 2 roots"));
}
