//! End-to-end CLI tests driving `run_cli` with explicit argv and buffers.

use std::path::PathBuf;

use ifss::cli::run_cli;
use ifss::io::{parse_relation, parse_soft_set};
use ifss::NormPair;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let mut argv = vec!["ifss"];
    argv.extend_from_slice(args);
    let code = run_cli(argv, &mut stdout, &mut stderr);
    (
        code,
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn op_intersect_writes_the_expected_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json").display().to_string();
    let (code, stdout, stderr) = run(&[
        "op",
        "intersect",
        "--left",
        &fixture("medicine_f.json"),
        "--right",
        &fixture("medicine_g.json"),
        "--norms",
        "prodsum",
        "-o",
        &out,
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.is_empty());

    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("0.765"));
    assert!(text.contains("0.145"));
    let parsed = parse_soft_set(&text).unwrap();
    assert_eq!(parsed.parameters(), ["f", "c"]);
    let v = parsed.get("f").unwrap().value("m1").unwrap();
    assert!((v.mu() - 0.765).abs() <= 1e-9);
    assert!((v.nu() - 0.145).abs() <= 1e-9);
}

#[test]
fn op_and_product_print_exact_decimal_tables() {
    // Output documents carry the exact decimals of the reference tables,
    // digit for digit, with no float dust anywhere.
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json").display().to_string();
    let (code, _, _) = run(&[
        "op",
        "intersect",
        "--left",
        &fixture("medicine_f.json"),
        "--right",
        &fixture("medicine_g.json"),
        "--norms",
        "prodsum",
        "-o",
        &out,
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let got: serde_json::Value = serde_json::from_str(&text).unwrap();
    let expected: serde_json::Value = serde_json::from_str(
        r#"{
            "parameters": ["f", "c"],
            "universe": ["m1", "m2", "m3", "m4"],
            "values": {
                "c": {
                    "m1": [0.39, 0.44],
                    "m2": [0.09, 0.86],
                    "m3": [0.81, 0.145],
                    "m4": [0.595, 0.28]
                },
                "f": {
                    "m1": [0.765, 0.145],
                    "m2": [0.05, 0.88],
                    "m3": [0.325, 0.52],
                    "m4": [0.64, 0.19]
                }
            }
        }"#,
    )
    .unwrap();
    assert_eq!(got, expected);
    assert!(!text.contains("000000000"), "float dust in output: {text}");
    assert!(!text.contains("999999999"), "float dust in output: {text}");

    let product_out = dir.path().join("product.json").display().to_string();
    let (code, _, _) = run(&[
        "product",
        "--left",
        &fixture("medicine_f.json"),
        "--right",
        &fixture("medicine_g.json"),
        "--norms",
        "prodsum",
        "-o",
        &product_out,
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&product_out).unwrap();
    assert!(!text.contains("000000000"), "float dust in output: {text}");
    assert!(!text.contains("999999999"), "float dust in output: {text}");
    let got: serde_json::Value = serde_json::from_str(&text).unwrap();
    let m2_rows: Vec<(String, serde_json::Value)> = got["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            (
                format!("{},{}", p["first"].as_str().unwrap(), p["second"].as_str().unwrap()),
                p["values"]["m2"].clone(),
            )
        })
        .collect();
    let expect = |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap();
    assert_eq!(
        m2_rows,
        vec![
            ("f,f".to_string(), expect("[0.05, 0.88]")),
            ("f,c".to_string(), expect("[0.075, 0.86]")),
            ("p,f".to_string(), expect("[0.18, 0.73]")),
            ("p,c".to_string(), expect("[0.27, 0.685]")),
            ("c,f".to_string(), expect("[0.06, 0.88]")),
            ("c,c".to_string(), expect("[0.09, 0.86]")),
        ]
    );
}

#[test]
fn op_union_copies_exclusive_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("u.json").display().to_string();
    let (code, _, stderr) = run(&[
        "op",
        "union",
        "--left",
        &fixture("medicine_f.json"),
        "--right",
        &fixture("medicine_g.json"),
        "--norms",
        "prodsum",
        "-o",
        &out,
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");

    let parsed = parse_soft_set(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(parsed.parameters(), ["f", "p", "c"]);
    let original = parse_soft_set(&std::fs::read_to_string(fixture("medicine_f.json")).unwrap())
        .unwrap();
    assert!(parsed.get("p").unwrap().approx_eq(original.get("p").unwrap()));
    let v = parsed.get("f").unwrap().value("m1").unwrap();
    assert!((v.mu() - 0.985).abs() <= 1e-9);
    assert!((v.nu() - 0.005).abs() <= 1e-9);
}

#[test]
fn product_then_inverse_then_power_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let product_path = dir.path().join("product.json").display().to_string();
    let (code, _, stderr) = run(&[
        "product",
        "--left",
        &fixture("medicine_f.json"),
        "--right",
        &fixture("medicine_f.json"),
        "--norms",
        "minmax",
        "-o",
        &product_path,
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let product = parse_relation(&std::fs::read_to_string(&product_path).unwrap()).unwrap();
    assert_eq!(product.len(), 9);

    let inverse_path = dir.path().join("inverse.json").display().to_string();
    let (code, _, _) = run(&[
        "relate",
        "inverse",
        "--relation",
        &product_path,
        "-o",
        &inverse_path,
    ]);
    assert_eq!(code, 0);
    let inverse = parse_relation(&std::fs::read_to_string(&inverse_path).unwrap()).unwrap();
    assert!(inverse.inverse().approx_eq(&product));

    let power_path = dir.path().join("power.json").display().to_string();
    let (code, _, _) = run(&[
        "relate",
        "power",
        "--relation",
        &product_path,
        "-n",
        "2",
        "--norms",
        "minmax",
        "-o",
        &power_path,
    ]);
    assert_eq!(code, 0);
    let squared = parse_relation(&std::fs::read_to_string(&power_path).unwrap()).unwrap();
    assert!(squared.approx_eq(&product.compose(&product, NormPair::MIN_MAX).unwrap()));

    let compose_path = dir.path().join("compose.json").display().to_string();
    let (code, _, _) = run(&[
        "relate",
        "compose",
        "--left",
        &product_path,
        "--right",
        &product_path,
        "--norms",
        "minmax",
        "-o",
        &compose_path,
    ]);
    assert_eq!(code, 0);
    let composed = parse_relation(&std::fs::read_to_string(&compose_path).unwrap()).unwrap();
    assert!(composed.approx_eq(&squared));
}

#[test]
fn check_symmetric_on_the_empty_relation_prints_true() {
    let (code, stdout, stderr) = run(&[
        "check",
        "symmetric",
        "--relation",
        &fixture("empty_relation.json"),
        "--norms",
        "minmax",
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert_eq!(stdout, "true\n");
}

#[test]
fn check_prints_a_witness_on_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lone.json");
    std::fs::write(
        &path,
        r#"{
            "universe": ["x"],
            "left_params": ["a", "b"],
            "right_params": ["a", "b"],
            "pairs": [{"first": "a", "second": "b", "values": {"x": [0.5, 0.3]}}]
        }"#,
    )
    .unwrap();
    let (code, stdout, _) = run(&[
        "check",
        "symmetric",
        "--relation",
        &path.display().to_string(),
        "--norms",
        "minmax",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("false\n"));
    assert!(stdout.contains("witness:"));
}

#[test]
fn laws_prints_a_json_verdict() {
    let (code, stdout, stderr) = run(&[
        "laws",
        "--law",
        "union-commut",
        "--norms",
        "prodsum",
        "--trials",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let verdict: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(verdict["law"], "union-commut");
    assert_eq!(verdict["holds"], true);
    assert_eq!(verdict["trials"], 50);
}

#[test]
fn laws_records_restrictions_for_gated_laws() {
    let (code, stdout, _) = run(&[
        "laws",
        "--law",
        "compose-closure",
        "--norms",
        "prodsum",
    ]);
    assert_eq!(code, 0);
    let verdict: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(verdict["trials"], 0);
    assert!(verdict["restriction"].is_string());
}

#[test]
fn score_ranks_the_students() {
    let (code, stdout, stderr) = run(&["score", "--softset", &fixture("students.json")]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let ids: Vec<&str> = stdout
        .lines()
        .map(|line| line.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(ids, ["s1", "s2", "s4", "s3"]);
    assert!(stdout.contains("1.55"));
    assert!(stdout.contains("1.5\n") || stdout.contains("1.5 "));
}

#[test]
fn usage_errors_exit_with_two() {
    let (code, _, stderr) = run(&["op", "intersect", "--left", "x.json"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());

    let (code, _, _) = run(&["nonsense"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = run(&["laws", "--law", "no-such-law", "--norms", "minmax"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no-such-law"));
}

#[test]
fn domain_errors_exit_with_one_and_name_the_offence() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{
            "universe": ["m1"],
            "parameters": ["f"],
            "values": {"f": {"m1": [0.7, 0.4]}}
        }"#,
    )
    .unwrap();
    let out = dir.path().join("out.json").display().to_string();
    let (code, _, stderr) = run(&[
        "op",
        "intersect",
        "--left",
        &bad.display().to_string(),
        "--right",
        &fixture("medicine_g.json"),
        "--norms",
        "prodsum",
        "-o",
        &out,
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("values.f.m1"), "stderr: {stderr}");

    // Mismatched universes are also domain errors.
    let (code, _, stderr) = run(&[
        "op",
        "intersect",
        "--left",
        &fixture("students.json"),
        "--right",
        &fixture("medicine_g.json"),
        "--norms",
        "prodsum",
        "-o",
        &out,
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("universes differ"), "stderr: {stderr}");

    // Missing files are reported with their path.
    let (code, _, stderr) = run(&["score", "--softset", "missing.json"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("missing.json"));
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Usage"));
}
