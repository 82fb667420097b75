use std::path::Path;
use std::process::{Command, Output};

use bivalent::bsq;
use tempfile::TempDir;

fn bivalent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bivalent")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = bivalent(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn generate(dir: &TempDir, len: usize) -> String {
    let p = path(dir, "in.bsq");
    ok(&["generate", "--output", &p, "--sequence-length", &len.to_string(), "--seed", "3"]);
    p
}

fn op(input: &str, output: &str, flag: &str, value: Option<&str>) {
    let mut args = vec!["op", "--input", input, "--output", output, flag];
    args.extend(value);
    ok(&args);
}

fn bytes(p: impl AsRef<Path>) -> Vec<u8> {
    std::fs::read(p).unwrap()
}

#[test]
fn i_squared_twice_restores_file() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, 4096);
    let (a, b) = (path(&dir, "a.bsq"), path(&dir, "b.bsq"));
    op(&input, &a, "--i-power", Some("2"));
    assert_ne!(bytes(&a), bytes(&input));
    op(&a, &b, "--i-power", Some("2"));
    assert_eq!(bytes(&b), bytes(&input));
}

#[test]
fn half_power_twice_is_i() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, 1024);
    let (h1, h2, one) = (path(&dir, "h1.bsq"), path(&dir, "h2.bsq"), path(&dir, "one.bsq"));
    op(&input, &h1, "--i-power", Some("1/2"));
    op(&h1, &h2, "--i-power", Some("1/2"));
    op(&input, &one, "--i-power", Some("1"));
    assert_eq!(bytes(&h2), bytes(&one));
}

#[test]
fn north_pole_gives_all_plus() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, 1000);
    let out = path(&dir, "north.bsq");
    op(&input, &out, "--j-theta", Some("1.5707963"));
    let s = bsq::read_file(&out).unwrap();
    assert_eq!(s.len(), 1000 - 64 + 1);
    assert_eq!(s.count_ones(), s.len() as u64);
}

#[test]
fn negate_and_reruns_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, 333);
    let (a, b) = (path(&dir, "a.bsq"), path(&dir, "b.bsq"));
    op(&input, &a, "--negate", None);
    op(&input, &b, "--negate", None);
    assert_eq!(bytes(&a), bytes(&b));
    let s = bsq::read_file(&a).unwrap();
    assert_eq!(s, bsq::read_file(&input).unwrap().negate());
}

#[test]
fn help_and_usage_errors() {
    assert!(bivalent(&["--help"]).status.success());
    assert!(bivalent(&["experiment", "born", "--help"]).status.success());

    let dir = TempDir::new().unwrap();
    let input = generate(&dir, 64);
    let out = path(&dir, "never.bsq");
    let r = bivalent(&["op", "--input", &input, "--output", &out, "--no-such-flag"]);
    assert_eq!(r.status.code(), Some(2));
    assert!(!Path::new(&out).exists());

    let r = bivalent(&["op", "--input", &input, "--output", &out, "--i-power", "1/3"]);
    assert_eq!(r.status.code(), Some(2));
    assert!(!Path::new(&out).exists());

    assert_eq!(bivalent(&["experiment", "chsh", "--angles", "0,1"]).status.code(), Some(2));
    assert_eq!(bivalent(&["experiment", "born", "--theta", "2.0"]).status.code(), Some(2));
}

#[test]
fn data_errors() {
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.bsq");
    std::fs::write(&bad, b"not a sequence").unwrap();
    let out = path(&dir, "out.bsq");
    let r = bivalent(&["op", "--input", &bad, "--output", &out, "--negate"]);
    assert_eq!(r.status.code(), Some(3));
    assert!(!r.stderr.is_empty());
    assert!(!Path::new(&out).exists());

    let input = generate(&dir, 12);
    let r = bivalent(&["op", "--input", &input, "--output", &out, "--i-power", "1/4"]);
    assert_eq!(r.status.code(), Some(3));
    assert!(!Path::new(&out).exists());
}

#[test]
fn epr_example_estimate() {
    let out = ok(&["experiment", "epr", "--delta-theta", "1.0471976", "--trials", "100000", "--seed", "7"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let est = v["estimate"].as_f64().unwrap();
    let se = v["std_error"].as_f64().unwrap();
    assert!((est + 0.5).abs() < 4.0 * se, "estimate {est}");
}

#[test]
fn cascade_example_final_row() {
    let out = ok(&["experiment", "cascade", "--slope", "-1.6666667", "--levels", "30", "--format", "csv"]);
    let last = out.lines().last().unwrap();
    let omega: f64 = last.rsplit(',').next().unwrap().parse().unwrap();
    assert!((omega - 2.7024).abs() < 1e-3);
}

#[test]
fn noncomputability_example() {
    let out = ok(&["experiment", "noncomputability", "--max-n", "10", "--trials", "10000"]);
    assert_eq!(out.lines().count(), 11);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!((v["estimate"].as_f64().unwrap() - 0.5).abs() < 0.02, "{line}");
    }
}

#[test]
fn reports_ignore_parallel_degree() {
    let cases: [&[&str]; 3] = [
        &["experiment", "born", "--trials", "5000"],
        &["experiment", "chsh", "--trials", "5000", "--seed", "4"],
        &["experiment", "uncertainty", "--colat", "0.9", "--lon", "2.0", "--trials", "5000", "--format", "csv"],
    ];
    for args in cases {
        let base = ok(args);
        for threads in ["1", "3", "8"] {
            let mut a = args.to_vec();
            a.extend(["--parallel", threads]);
            assert_eq!(ok(&a), base, "{args:?} --parallel {threads}");
        }
    }
}
