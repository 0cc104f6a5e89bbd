//! End-to-end checks of the command-line surface: JSON contract, exit
//! codes, determinism, and that the bundled data files match the built-in
//! example algebras.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(file: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(file)
        .to_string_lossy()
        .into_owned()
}

fn superkac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superkac"))
        .args(args)
        .output()
        .expect("spawn superkac")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn classify_twisted_affine() {
    let out = superkac(&["classify", &data("osp_2_4_twisted.json")]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "superkac/1");
    assert_eq!(v["result"]["isotropy"], "NonIsotropic");
    assert_eq!(v["result"]["growth"], "AFF");
}

#[test]
fn base_of_the_worked_example() {
    let out = superkac(&[
        "base-of",
        &data("osp_9_2.json"),
        "--lambda",
        &data("osp_9_2_lambda.json"),
        "--height",
        "24",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let base = v["result"]["base"].as_array().unwrap();
    assert_eq!(base.len(), 4);
    assert!(base.iter().all(|e| e["certified"] == true));
    // determinism: byte-identical output across runs
    let again = superkac(&[
        "base-of",
        &data("osp_9_2.json"),
        "--lambda",
        &data("osp_9_2_lambda.json"),
        "--height",
        "24",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn validate_exit_codes() {
    let out = superkac(&["validate", "--A", "[[2,-1],[0,2]]", "--p", "[0,0]"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["result"]["valid"], false);
    assert_eq!(v["result"]["violations"][0]["axiom"], "A00");

    let out = superkac(&["validate", "--A", "[[2]]", "--p", "[0]"]);
    assert!(out.status.success());
}

#[test]
fn strict_mode_flags_truncation() {
    // a truncated base enumeration exits 2 under --strict
    let out = superkac(&["bases", &data("sl_2_1.json"), "--bound", "2", "--strict"]);
    assert_eq!(out.status.code(), Some(2));
    let out = superkac(&["bases", &data("sl_2_1.json"), "--bound", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["meta"]["truncated"], true);
}

#[test]
fn admissible_and_char_commands() {
    let out = superkac(&[
        "admissible",
        &data("a1_affine.json"),
        "--level",
        "-1/2",
        "--height",
        "24",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["admissible"], true);

    let out = superkac(&[
        "char",
        &data("osp_1_2.json"),
        "--kind",
        "verma",
        "--lambda",
        &data("osp_9_2_lambda.json"),
    ]);
    // rank mismatch between algebra and weight is a clean failure
    assert_eq!(out.status.code(), Some(1));

    let out = superkac(&[
        "char",
        &data("sl2.json"),
        "--kind",
        "denominator",
        "--height",
        "6",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn reproduce_properties_pass() {
    let out = superkac(&["reproduce", "--properties", "--filter", "involution"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["result"]["passed"], true);
}

#[test]
fn data_files_match_the_builtin_zoo() {
    use superkac::algebra::zoo;
    let pairs: Vec<(&str, superkac::algebra::Algebra)> = vec![
        ("sl2.json", zoo::sl2()),
        ("osp_1_2.json", zoo::osp12()),
        ("gl_1_1.json", zoo::gl11()),
        ("sl_2_1.json", zoo::sl21()),
        ("sp4.json", zoo::sp4()),
        ("osp_1_4.json", zoo::osp14()),
        ("osp_9_2.json", zoo::osp9_2()),
        ("osp_2_4_twisted.json", zoo::osp2_4_twisted()),
        ("a1_affine.json", zoo::sl2_affine()),
        ("osp_1_2_affine.json", zoo::osp12_affine()),
        ("osp_1_4_affine.json", zoo::osp14_affine()),
    ];
    for (file, expected) in pairs {
        let path = PathBuf::from(data(file));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("read {file}"));
        let alg = superkac::io::AlgebraInput::parse(&text)
            .and_then(|i| i.build())
            .unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(alg.supermatrix, expected.supermatrix, "{file}");
    }
}
