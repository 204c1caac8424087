use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const FIG1: &str = "001001010\n00100110100100010\n001001101001001\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trie-extent"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report_v1.schema.json");
    let schema: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn stats_fig1() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "fig1.txt", FIG1);
    let out = run(&["stats", "--encoded", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert!(schema().is_valid(&r), "{r}");
    assert_eq!(r["n"], 3);
    assert_eq!(r["E"], 41);
    assert_eq!(r["I"], 20);
    assert_eq!(r["T"], 21);
    assert_eq!(r["Y"]["2"], 20);
    assert_eq!(r["n_of"]["0"], 3);
    assert_eq!(r["identities"]["binary"], true);
    assert_eq!(r["identities"]["general"], true);
    assert_eq!(r["corollary"], true);
    assert_eq!(r["ell"]["numerator"], 41);
    assert_eq!(r["ell"]["denominator"], 3);
    assert_eq!(r["encoded"]["total_bits"], 41);
    let bound = r["space_bound_bits"].as_f64().unwrap();
    assert!((bound - 33.547).abs() < 1e-3);
}

#[test]
fn stats_singleton_from_stdin() {
    let mut child = bin()
        .arg("stats")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"0110\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert!(schema().is_valid(&r));
    assert_eq!(
        (
            r["n"].as_u64(),
            r["E"].as_u64(),
            r["I"].as_u64(),
            r["T"].as_u64()
        ),
        (Some(1), Some(4), Some(0), Some(4))
    );
    assert_eq!(r["corollary"], Value::Null);
    assert_eq!(r["source"], "-");
}

#[test]
fn stats_prefix_violation_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.txt", "01\n010\n");
    let out = run(&["stats", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1") && err.contains("line 2"), "{err}");

    let out = run(&["stats", "--sentinel", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["sigma"], 3);
    assert_eq!(r["identities"]["binary"], Value::Null);
    assert_eq!(r["identities"]["general"], true);
    assert!(schema().is_valid(&r));
}

#[test]
fn stats_text_format_reports_mapping() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "words.txt", "ab\nac\nb\n");
    let out = run(&["stats", "--format", "text", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert!(schema().is_valid(&r));
    assert_eq!(r["sigma"], 3);
    let bytes: Vec<u64> = r["symbols"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["byte"].as_u64().unwrap())
        .collect();
    assert_eq!(bytes, [b'a' as u64, b'b' as u64, b'c' as u64]);
    assert_eq!(r["Y"]["0"], 5);
    assert_eq!(r["Y"]["2"], 1);
    assert_eq!(r["T"], 4);
}

#[test]
fn encode_decode_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "fig1.txt", FIG1);
    let ctrie = dir.path().join("fig1.ctrie");
    let out = run(&[
        "encode",
        input.to_str().unwrap(),
        "--out",
        ctrie.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["structure_bits"], 5);
    assert_eq!(report["payload_bits"], 17);

    let bytes = fs::read(&ctrie).unwrap();
    assert_eq!(&bytes[..5], b"CTRI\x01");

    let out = run(&["decode", ctrie.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), FIG1);

    // Truncated file: the payload runs short.
    let short = dir.path().join("short.ctrie");
    fs::write(&short, &bytes[..bytes.len() - 1]).unwrap();
    let out = run(&["decode", short.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("payload"));
}

#[test]
fn decode_sorts_unsorted_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "u.txt", "11\n0\n10\n");
    let ctrie = dir.path().join("u.ctrie");
    assert!(run(&[
        "encode",
        input.to_str().unwrap(),
        "--out",
        ctrie.to_str().unwrap()
    ])
    .status
    .success());
    let lines = dir.path().join("u.out");
    let out = run(&[
        "decode",
        ctrie.to_str().unwrap(),
        "--out",
        lines.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(lines).unwrap(), "0\n10\n11\n");
}

#[test]
fn encode_rejects_wide_alphabet() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "fig1.txt", "01\n010\n");
    let ctrie = dir.path().join("x.ctrie");
    let out = run(&[
        "encode",
        "--sentinel",
        input.to_str().unwrap(),
        "--out",
        ctrie.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("binary-only"));
    assert!(!ctrie.exists());
}

#[test]
fn decode_bad_magic_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("junk.ctrie");
    fs::write(&p, b"NOPE\x01\x01\x00\x00").unwrap();
    assert_eq!(run(&["decode", p.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn gen_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let out = run_in(
            d.path(),
            &["gen", "--seed", "42", "--count", "2", "--out", "corpus"],
        );
        assert!(out.status.success());
    }
    let names = ["gen_42_0000.txt", "gen_42_0001.txt"];
    for name in names {
        let x = fs::read(a.path().join("corpus").join(name)).unwrap();
        let y = fs::read(b.path().join("corpus").join(name)).unwrap();
        assert_eq!(x, y);
        let out = run(&[
            "stats",
            a.path().join("corpus").join(name).to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
}

#[test]
fn gen_sigma_six_verifies_general_identity() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "gen", "--sigma", "6", "--seed", "5", "--count", "3", "--out", "c",
        ],
    );
    assert!(out.status.success());
    for line in String::from_utf8(out.stdout).unwrap().lines() {
        let out = run_in(dir.path(), &["stats", "--format", "text", line]);
        assert_eq!(out.status.code(), Some(0));
        let r = stdout_json(&out);
        assert_eq!(r["identities"]["general"], true);
        assert_eq!(r["identities"]["degree"], true);
    }
    let out = run_in(dir.path(), &["verify", "--format", "text", "c"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_rejects_bad_config() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["gen", "--sigma", "1"][..],
        &["gen", "--n-max", "0"][..],
        &["gen", "--len-max", "0"][..],
        &["gen", "--sigma", "63"][..],
        &["gen", "--linear", "1"][..],
    ] {
        assert_eq!(run_in(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn linear_family_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    for n in [2u64, 3, 4, 17, 50] {
        let out = run_in(
            dir.path(),
            &["gen", "--linear", &n.to_string(), "--out", "."],
        );
        assert!(out.status.success());
        let path = String::from_utf8(out.stdout).unwrap().trim().to_string();
        let r = stdout_json(&run_in(dir.path(), &["stats", &path]));
        assert_eq!(r["n"], n);
        assert_eq!(r["E"], n * (n + 1) / 2 - 1);
        assert_eq!(r["I"], (n - 2) * (n - 1) / 2);
        assert_eq!(r["corollary"], true);
    }
}

#[test]
fn verify_reports_unreadable_files() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", FIG1);
    write(dir.path(), "b.txt", "01\n010\n");
    let out = run(&["verify", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 ok"), "{text}");
    assert!(text.contains("1 unreadable"), "{text}");
}
