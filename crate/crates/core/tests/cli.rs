use std::path::PathBuf;
use std::process::Command;

use blackburn::catalog::resolve;
use blackburn::cli::serialize_cayley;

const BIN: &str = env!("CARGO_BIN_EXE_blackburn");

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str]) -> Run {
    run_with_workers(args, "2")
}

fn run_with_workers(args: &[&str], workers: &str) -> Run {
    let out = Command::new(BIN).args(args).env("BLACKBURN_WORKERS", workers).output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("blackburn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_builtin_quaternion() {
    let r = run(&["classify", "generalized_quaternion(16)"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("Blackburn: yes, form: QGroup, R order 2"));
}

#[test]
fn classify_cayley_file() {
    let path = temp_file("s3.cayley", &serialize_cayley(&resolve("S3").unwrap()));
    let r = run(&["classify", path.to_str().unwrap(), "--porcelain"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("order=6\n"));
    assert!(r.stdout.contains("r=trivial\n"));
}

#[test]
fn autc_permgen_file() {
    let path = temp_file("s4.permgen", "permgen 1\n# S4\ndegree 4\ngen 1 2 3 0\ngen 1 0 2 3\n");
    let r = run(&["autc", path.to_str().unwrap(), "--porcelain"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("order=24\n"));
    assert!(r.stdout.contains("autc_order=24\n"));
    assert!(r.stdout.contains("outc_trivial=yes\n"));
}

#[test]
fn syntax_errors_exit_two() {
    let path = temp_file("short.cayley", "cayley 1\norder 3\n0 1 2\n1 2 0\n");
    let r = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line"), "{}", r.stderr);
    let path = temp_file("bad.permgen", "permgen 1\ndegree 3\ngen 0 0 1\n");
    assert_eq!(run(&["classify", path.to_str().unwrap()]).code, 2);
    let path = temp_file("unknown.txt", "hello\n");
    assert_eq!(run(&["classify", path.to_str().unwrap()]).code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["classify", "nosuchgroup"]).code, 2);
    assert_eq!(run(&["example", "--p", "7"]).code, 2);
    assert_eq!(run(&["suite", "--level", "slow"]).code, 2);
    assert_eq!(run(&["transmogrify"]).code, 2);
    assert_eq!(run(&["classify", "S4", "--max-order", "12"]).code, 2);
    assert_eq!(run(&["autc", "witness_ga(3)", "--budget", "10"]).code, 2);
}

#[test]
fn example_three_succeeds() {
    let r = run(&["example", "--p", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.trim_end().ends_with("sigma: class-preserving, non-inner"));
}

#[test]
fn catalog_respects_max_order() {
    let r = run(&["catalog", "--porcelain", "--max-order", "4"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "catalog_version=1");
    assert!(lines[1..].iter().all(|l| l.contains(" order=1 ")
        || l.contains(" order=2 ")
        || l.contains(" order=3 ")
        || l.contains(" order=4 ")));
}

#[test]
fn output_independent_of_worker_count() {
    for args in
        [&["autc", "Q8xC4", "--porcelain"][..], &["classify", "C7:Q8"][..], &["example", "--p", "3", "--porcelain"][..]]
    {
        let one = run_with_workers(args, "1");
        let four = run_with_workers(args, "4");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(one.code, four.code);
        assert_eq!(run_with_workers(args, "4").stdout, four.stdout);
    }
}
