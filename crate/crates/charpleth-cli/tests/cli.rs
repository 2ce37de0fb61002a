//! End-to-end CLI tests: output format, exit codes, and the bundled
//! fixture files on disk.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../charpleth/fixtures").join(name)
}

fn charpleth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charpleth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn validate_bundled_tables() {
    for name in ["a5.json", "s5.json", "sl2_5.json", "sp4_3.json"] {
        let out = charpleth(&["validate", fixture(name).to_str().unwrap()]);
        assert!(out.status.success(), "{} failed: {}", name, stdout(&out));
        assert!(stdout(&out).contains("valid"));
    }
}

#[test]
fn validate_rejects_perturbed_table_with_exit_3() {
    // bump one character value by 1: row orthogonality must break
    let text = std::fs::read_to_string(fixture("s5.json")).unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&text).unwrap();
    json["irreducibles"][6][2] = serde_json::Value::String("-1".into());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();
    let out = charpleth(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("orthogonality"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("not_a_table.json");
    std::fs::write(&path, "{\"name\": 3}").unwrap();
    let out = charpleth(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // malformed cyclotomic literals are parse errors too
    let text = std::fs::read_to_string(fixture("s5.json")).unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&text).unwrap();
    json["irreducibles"][0][0] = serde_json::Value::String("1.5".into());
    let path = dir.path().join("bad_literal.json");
    std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();
    let out = charpleth(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sym_power_of_sl25_weil_character() {
    let out = charpleth(&["sym", fixture("sl2_5.json").to_str().unwrap(), "1", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree 5"), "{}", text);
    assert!(text.contains("norm 1"), "{}", text);
    // the 5-dimensional irreducible sits at index 7 in the fixture
    assert!(text.contains("decomposition [0, 0, 0, 0, 0, 0, 0, 1, 0]"), "{}", text);
    assert!(text.contains("1*chi_7(deg 5)"), "{}", text);
}

#[test]
fn ext_square_of_weil_character_is_trivial() {
    let out = charpleth(&["ext", fixture("sl2_5.json").to_str().unwrap(), "1", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree 1"), "{}", text);
    assert!(text.contains("1*chi_0(deg 1)"), "{}", text);
}

#[test]
fn schur_hook_on_weil_character() {
    let out = charpleth(&["schur", fixture("sl2_5.json").to_str().unwrap(), "1", "2,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("degree 2"), "{}", stdout(&out));
}

#[test]
fn frobenius_schur_of_weil_character() {
    let out = charpleth(&["fs", fixture("sl2_5.json").to_str().unwrap(), "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-1");
}

#[test]
fn domain_errors_exit_4() {
    let out = charpleth(&["fs", fixture("sl2_5.json").to_str().unwrap(), "99"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn restrict_and_induce_across_fusion() {
    let fusion = fixture("a5_s5_fusion.json");
    let a5 = fixture("a5.json");
    let s5 = fixture("s5.json");
    // restriction of the standard character stays irreducible
    let out = charpleth(&[
        "restrict",
        fusion.to_str().unwrap(),
        a5.to_str().unwrap(),
        s5.to_str().unwrap(),
        "3",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("norm 1"), "{}", stdout(&out));
    // induction of the trivial character of A5 is trivial + sign
    let out = charpleth(&[
        "induce",
        fusion.to_str().unwrap(),
        a5.to_str().unwrap(),
        s5.to_str().unwrap(),
        "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree 2"), "{}", text);
    assert!(text.contains("decomposition [1, 1, 0, 0, 0, 0, 0]"), "{}", text);
}

#[test]
fn generated_tables_round_trip_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    for args in [vec!["gen-cyclic", "6"], vec!["gen-extraspecial", "3", "1", "odd_exponent_p"]] {
        let out = charpleth(&args);
        assert!(out.status.success());
        let path = dir.path().join("gen.json");
        std::fs::write(&path, stdout(&out)).unwrap();
        let check = charpleth(&["validate", path.to_str().unwrap()]);
        assert!(check.status.success(), "{}", stdout(&check));
    }
}

#[test]
fn verify_paper_all_passes_and_is_deterministic() {
    let run = || {
        let out = charpleth(&["verify-paper", "--suite", "all"]);
        assert!(out.status.success(), "{}", stdout(&out));
        stdout(&out)
    };
    let first = run();
    assert!(first.contains("[PASS]"));
    assert!(first.contains("[SKIP]")); // optional 2J2 checks
    assert!(!first.contains("[FAIL]"));
    // byte-identical across runs and across thread counts
    let second = run();
    assert_eq!(first, second);
    let single = charpleth(&["verify-paper", "--suite", "all", "--jobs", "1"]);
    assert!(single.status.success());
    assert_eq!(first, stdout(&single));
}

#[test]
fn verify_paper_json_output() {
    let out = charpleth(&["verify-paper", "--suite", "traceless", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed[0]["suite"], "traceless");
    assert_eq!(parsed[0]["checks"][0]["status"], "Pass");
}

#[test]
fn unknown_suite_exits_2() {
    let out = charpleth(&["verify-paper", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn two_j2_suite_reports_skips_without_fixture() {
    let out = charpleth(&["verify-paper", "--suite", "2j2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("[SKIP]"));
}

#[test]
fn failing_suite_exits_5() {
    // SL2(5) has a symplectic 6-dimensional character, but Sym^4 of it
    // is reducible there, so the optional-table checks must fail
    let out = charpleth(&[
        "verify-paper",
        "--suite",
        "2j2",
        "--table",
        fixture("sl2_5.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stdout(&out).contains("[FAIL]"));
    // degrees depend only on the dimension: 126 and 252
    assert!(stdout(&out).contains("degree 126"));
    assert!(stdout(&out).contains("degree 252"));
}

#[test]
fn output_does_not_panic_on_closed_pipe() {
    use std::io::Read;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_charpleth"))
        .args(["sym", fixture("sp4_3.json").to_str().unwrap(), "3", "2"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // read a few bytes, then drop the pipe
    let mut buf = [0u8; 16];
    child.stdout.as_mut().unwrap().read_exact(&mut buf).unwrap();
    drop(child.stdout.take());
    let status = child.wait().unwrap();
    let mut err = String::new();
    child.stderr.as_mut().unwrap().read_to_string(&mut err).unwrap();
    assert!(!err.contains("panicked"), "{}", err);
    let _ = status;
}
