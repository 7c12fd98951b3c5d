use std::path::PathBuf;
use std::process::{Command, Output};

use hlab::report::Report;

fn hlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlab")).args(args).output().expect("run hlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn algebra_file(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras").join(name).display().to_string()
}

fn json(args: &[&str]) -> (Report, String) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = hlab(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    (serde_json::from_str(&text).unwrap(), text)
}

fn table_values(args: &[&str]) -> Vec<u64> {
    match json(args).0 {
        Report::Table(t) => t.table.values(),
        other => panic!("expected a table report, got {other:?}"),
    }
}

#[test]
fn hh_examples() {
    assert_eq!(table_values(&["hh", "--spec", "beilinson-sym:2", "--direction", "cohomology", "--max-i", "3"]), vec![1, 3, 0, 0]);
    assert_eq!(table_values(&["hh", "--spec", "beilinson-sym:3", "--direction", "homology", "--max-i", "3"]), vec![3, 0, 0, 0]);
    let dual = algebra_file("dual_numbers.alg");
    assert_eq!(table_values(&["hh", "--file", &dual, "--direction", "homology", "--max-i", "2"]), vec![2, 1, 1]);
}

#[test]
fn graded_hh_and_precision_errors() {
    let (report, _) = json(&["hh", "--spec", "rolled-up:2", "--direction", "homology", "--degree", "2", "--max-i", "3"]);
    let Report::Table(t) = report else { panic!("table report") };
    assert_eq!(t.table.values_at_degree(2), vec![3, 4, 1, 0]);

    let o = hlab(&["hh", "--spec", "rolled-up:2", "--direction", "homology", "--degree", "0..4", "--D", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error kind=insufficient-precision message=\""), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn bott_and_fixed_point_examples() {
    for (args, value) in [(["--n", "3", "--p", "1", "--q", "1", "--m", "0"], 1), (["--n", "2", "--p", "0", "--q", "1", "--m", "-2"], 1)] {
        let mut full = vec!["bott"];
        full.extend(args);
        match json(&full).0 {
            Report::Bott(b) => assert_eq!(b.value, value),
            other => panic!("expected a bott report, got {other:?}"),
        }
    }
    let (report, _) = json(&["fixed-point", "--vars", "2", "--order", "2", "--weights", "1,1", "--i", "0", "--D", "4"]);
    let Report::Table(t) = report else { panic!("table report") };
    let by_degree: Vec<u64> = (0..=4).map(|d| t.table.get(0, Some(d)).unwrap()).collect();
    assert_eq!(by_degree, vec![2, 0, 3, 0, 5]);
}

#[test]
fn build_writes_a_readable_description() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a0.alg");
    let out_s = out.display().to_string();
    let (report, _) = json(&["build", "beilinson-sym", "--n", "3", "--out", &out_s]);
    let Report::Hilbert(h) = report else { panic!("hilbert report") };
    assert_eq!(h.total, 15);
    assert!(h.exhausted);
    let (rebuilt, _) = json(&["hilbert", "--file", &out_s]);
    let Report::Hilbert(r) = rebuilt else { panic!("hilbert report") };
    assert_eq!(r.dims, h.dims);
    assert_eq!(r.total, 15);
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        vec!["check", "hkr-p1"],
        vec!["check", "twisted-hh-graded"],
        vec!["gldim", "--spec", "kronecker"],
        vec!["hilbert", "--spec", "rolled-up:2", "--D", "3"],
        vec!["bott", "--n", "4", "--p", "2", "--q", "3", "--m", "-5"],
    ] {
        let (report, text) = json(&args);
        let mut again = serde_json::to_string_pretty(&report).unwrap();
        again.push('\n');
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(hlab(&["check", "hkr-p1"]).status.code(), Some(0));
    let unknown = hlab(&["check", "unknown-id"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8(unknown.stderr).unwrap().starts_with("error kind=usage"));
    assert_eq!(hlab(&["--field", "fp:4", "hilbert", "--spec", "kronecker"]).status.code(), Some(2));
    assert_eq!(hlab(&["hh", "--spec", "rolled-up:2"]).status.code(), Some(2));
    assert_eq!(hlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hlab(&["build", "rolled-up"]).status.code(), Some(2));
}

#[test]
fn csv_and_report_file() {
    let o = hlab(&["ext", "--spec", "beilinson-sym:3", "--max-i", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "i,d,dim\n0,,3\n1,,6\n2,,3\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = hlab(&["check", "veronese", "--format", "json", "--out", &path.display().to_string()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let Report::Check(s) = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap() else {
        panic!("check report")
    };
    assert_eq!(s.passed, 3);
}
