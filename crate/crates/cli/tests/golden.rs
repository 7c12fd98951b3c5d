//! Fresh runs against the committed golden reports in `tests/golden/`.
//! Regenerate with `HLAB_BLESS=1 cargo test -p hlab --test golden`.

use std::path::PathBuf;

use clap::Parser;
use hlab::cli::Cli;
use hlab::commands::report;
use hlab::config::OutputFormat;
use hlab::report::Report;
use hlab::suites::{registry, run_checks, SuiteContext};
use hlab_core::limits::Limits;
use hlab_core::Field;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn blessing() -> bool {
    std::env::var("HLAB_BLESS").is_ok_and(|v| v == "1")
}

/// Compares, or writes when blessing, one golden file. Returns a mismatch description.
fn compare(name: &str, fresh: &str) -> Option<String> {
    let path = golden_dir().join(format!("{name}.json"));
    if blessing() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, fresh).unwrap();
        return None;
    }
    match std::fs::read_to_string(&path) {
        Ok(stored) if stored == fresh => None,
        Ok(_) => Some(format!("{name}: fresh run differs from {}", path.display())),
        Err(e) => Some(format!("{name}: cannot read {}: {e}", path.display())),
    }
}

#[test]
fn check_reports_match_goldens() {
    let ctx = SuiteContext { field: Field::Rational, limits: Limits::default() };
    let defs = registry();
    let mut failures = Vec::new();
    for mut r in run_checks(&defs, &ctx) {
        r.runtime_ms = 0;
        let mut text = serde_json::to_string_pretty(&r).unwrap();
        text.push('\n');
        failures.extend(compare(&r.check_id, &text));
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn build_reports_match_goldens() {
    let runs: [(&str, &[&str]); 3] = [
        ("build-beilinson-sym-3", &["hlab", "build", "beilinson-sym", "--n", "3"]),
        ("build-rolled-up-2", &["hlab", "build", "rolled-up", "--n", "2", "--D", "4"]),
        (
            "build-twisted-2",
            &["hlab", "build", "twisted", "--vars", "2", "--order", "2", "--weights", "1,1", "--p", "5", "--D", "2"],
        ),
    ];
    let mut failures = Vec::new();
    for (name, args) in runs {
        let cli = Cli::parse_from(args);
        let cfg = cli.config().unwrap();
        let r: Report = report(&cli, &cfg).unwrap();
        failures.extend(compare(name, &r.render(OutputFormat::Json).unwrap()));
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
