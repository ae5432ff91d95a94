use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use skewbrace::db::read_db;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewbrace"))
        .args(args)
        .env_remove("SKEWBRACE_DB")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn database(dir: &TempDir, orders: &str) -> String {
    let path = dir.path().join(format!("db-{orders}.txt"));
    let p = path.to_str().unwrap().to_string();
    ok(&["enumerate", "--order", orders, "--out", &p]);
    p
}

/// `(order, index)` of the single query hit.
fn locate(db: &str, extra: &[&str]) -> (String, String) {
    let mut args = vec!["db", "query", "--db", db, "--format", "tsv"];
    args.extend_from_slice(extra);
    let text = ok(&args);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 1, "{text}");
    let cells: Vec<&str> = rows[0].split('\t').collect();
    (cells[0].to_string(), cells[1].to_string())
}

fn value<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{report}"))
}

#[test]
fn census_lines() {
    assert!(ok(&["enumerate", "--order", "8"]).lines().any(|l| l == "8 47 27"));
    assert_eq!(ok(&["enumerate", "--order", "1"]).lines().next(), Some("1 1 1"));
    assert!(ok(&["enumerate", "--order", "9..10"]).contains("9 4 4\n10 6 2\n"));
}

#[test]
fn classical_order_twelve_writes_ten_records() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("c12.txt");
    let text = ok(&["enumerate", "--order", "12", "--classical", "--out", path.to_str().unwrap()]);
    assert!(text.lines().any(|l| l == "12 10 10"));
    let db = read_db(fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(db.entries.len(), 10);
    assert!(db.entries.iter().all(|e| e.record.is_classical()));
}

#[test]
fn order_sixteen_needs_deep() {
    let out = run(&["enumerate", "--order", "16"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--deep"));
}

#[test]
fn analyze_named_braces() {
    let dir = TempDir::new().unwrap();
    let db = database(&dir, "1..8");
    let (n, i) = locate(&db, &["--additive", "C8", "--multiplicative", "C4xC2"]);
    let report = ok(&["analyze", "--db", &db, "--order", &n, "--index", &i]);
    assert_eq!(value(&report, "ideals"), "4");

    let (n, i) = locate(&db, &["--additive", "S3", "--multiplicative", "S3", "--non-trivial"]);
    let report = ok(&["analyze", "--db", &db, "--order", &n, "--index", &i]);
    assert_eq!(value(&report, "wedderburn").split(',').count(), 3);
    assert_eq!(value(&report, "baer"), "{0,1,2,3,4,5}");
}

#[test]
fn analyze_trivial_brace_file() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("c3.txt");
    fs::write(&file, "brace 3\n0 1 2\n1 2 0\n2 0 1\n\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let report = ok(&["analyze", "--file", file.to_str().unwrap()]);
    assert_eq!(value(&report, "baer"), "{0,1,2}");
    assert_eq!(value(&report, "solvable"), "true");
    assert_eq!(value(&report, "yang_baxter"), "solution");
    let ybe = ok(&["ybe", "--file", file.to_str().unwrap()]);
    assert_eq!(value(&ybe, "involutive"), "true");
}

#[test]
fn experiments_and_checks() {
    let text = ok(&["experiments", "--order", "1..12", "--format", "tsv"]);
    let simple: Vec<&str> = text
        .split("# simple braces of composite order\n")
        .nth(1)
        .unwrap()
        .lines()
        .skip(1)
        .take_while(|l| !l.is_empty())
        .collect();
    assert_eq!(simple.len(), 2);
    assert!(simple.iter().all(|l| l.starts_with("12\t")));
    let sweep = text.split("# two-sided sweep\n").nth(1).unwrap();
    for row in sweep.lines().skip(1).take_while(|l| !l.is_empty()) {
        assert_eq!(row.split('\t').nth(3), Some("0"), "{row}");
    }
    let check = ok(&["check", "--order", "1..10", "--format", "tsv"]);
    assert!(check.lines().skip(1).all(|l| l.ends_with("\tok")));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    ok(&["--jobs", "1", "enumerate", "--order", "1..12", "--out", a.to_str().unwrap()]);
    ok(&["--jobs", "4", "enumerate", "--order", "1..12", "--out", b.to_str().unwrap()]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let e1 = ok(&["--jobs", "1", "experiments", "--db", a.to_str().unwrap()]);
    let e4 = ok(&["--jobs", "4", "experiments", "--db", a.to_str().unwrap()]);
    assert_eq!(e1, e4);
}

#[test]
fn database_commands() {
    let dir = TempDir::new().unwrap();
    let db = database(&dir, "1..8");
    let verify = ok(&["db", "verify", "--db", &db]);
    assert_eq!(value(&verify, "records"), "62");
    assert_eq!(value(&verify, "status"), "ok");

    let census = Command::new(env!("CARGO_BIN_EXE_skewbrace"))
        .args(["db", "census"])
        .env("SKEWBRACE_DB", &db)
        .output()
        .unwrap();
    assert!(census.status.success());
    assert!(stdout(&census).lines().any(|l| l == "8 47 27"));

    let tables = ok(&["db", "unpack", "--db", &db, "--order", "8", "--index", "30"]);
    let file = dir.path().join("b.txt");
    fs::write(&file, &tables).unwrap();
    let packed = dir.path().join("one.txt");
    ok(&["db", "pack", "--file", file.to_str().unwrap(), "--out", packed.to_str().unwrap()]);
    let again = ok(&["db", "unpack", "--db", packed.to_str().unwrap(), "--order", "8", "--index", "1"]);
    assert_eq!(again, tables);
}

#[test]
fn errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let db = database(&dir, "1..4");
    assert_eq!(run(&["analyze", "--db", &db, "--order", "4", "--index", "9"]).status.code(), Some(2));
    let broken = dir.path().join("broken.txt");
    let text = fs::read_to_string(&db).unwrap();
    fs::write(&broken, &text[..text.len() / 2]).unwrap();
    assert_eq!(run(&["db", "verify", "--db", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--file", Path::new("/nonexistent").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--order", "0"]).status.code(), Some(2));
}
