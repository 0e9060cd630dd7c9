//! End-to-end tests of the `rdi` binary: exit codes, output determinism,
//! and the catalog/verify report formats.

use std::path::Path;
use std::process::{Command, Output};

fn rdi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdi"))
        .args(args)
        .env_remove("RDI_THREADS")
        .output()
        .expect("binary runs")
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

/// Identical configs must produce byte-identical CSV regardless of the
/// worker count.
#[test]
fn csv_is_byte_identical_across_thread_counts() {
    let dir = tempfile::tempdir().expect("tempdir");
    let mut outputs = Vec::new();
    for threads in ["1", "4", "8"] {
        let out = dir.path().join(format!("t{threads}"));
        let run = rdi(&[
            "invert",
            "--preset",
            "fig1",
            "--out",
            out.to_str().expect("utf-8 path"),
            "--threads",
            threads,
        ]);
        assert!(run.status.success(), "threads={threads}: {run:?}");
        outputs.push(std::fs::read(out.join("fig1_fields.csv")).expect("csv written"));
    }
    assert_eq!(outputs[0], outputs[1], "1 vs 4 threads");
    assert_eq!(outputs[0], outputs[2], "1 vs 8 threads");
    assert!(!outputs[0].is_empty());
    println!(
        "[criterion 10] PASS: field-map CSV byte-identical at 1, 4, and 8 threads \
         ({} bytes)",
        outputs[0].len()
    );
}

/// RDI_THREADS is honored when --threads is absent.
#[test]
fn env_thread_count_matches_flag() {
    let dir = tempfile::tempdir().expect("tempdir");
    let flag_out = dir.path().join("flag");
    let env_out = dir.path().join("env");
    let run = rdi(&[
        "invert",
        "--preset",
        "boosted-landau",
        "--out",
        flag_out.to_str().expect("utf-8 path"),
        "--threads",
        "2",
    ]);
    assert!(run.status.success(), "{run:?}");
    let run = Command::new(env!("CARGO_BIN_EXE_rdi"))
        .args([
            "invert",
            "--preset",
            "boosted-landau",
            "--out",
            env_out.to_str().expect("utf-8 path"),
        ])
        .env("RDI_THREADS", "2")
        .output()
        .expect("binary runs");
    assert!(run.status.success(), "{run:?}");
    assert_eq!(
        std::fs::read(flag_out.join("boosted-landau_fields.csv")).expect("csv"),
        std::fs::read(env_out.join("boosted-landau_fields.csv")).expect("csv"),
    );
}

/// A state with the normalization factor removed is rejected by the
/// Hermiticity gate: distinct exit code, residual map still written, and
/// the residual exceeds 1e-3 at (well over) 95% of grid points.
#[test]
fn broken_normalization_yields_non_physical_exit() {
    let dir = tempfile::tempdir().expect("tempdir");
    let config = dir.path().join("broken.toml");
    std::fs::write(
        &config,
        r#"
[scenario]
kind = "translation"
b0 = 1.0
l = 3.4353e-12
t_period = 2.0e-20
broken = true

[grid]
x = { min = -1.0e-10, max = 1.0e-10, count = 11 }
y = { min = 0.3e-12, max = 1.2e-12, count = 11 }
t = [6.0e-21]

[output]
prefix = "broken"
"#,
    )
    .expect("write config");
    let out = dir.path().join("out");
    let run = rdi(&[
        "invert",
        "--config",
        config.to_str().expect("utf-8 path"),
        "--out",
        out.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(run.status.code(), Some(3), "{run:?}");

    let csv = read(&out.join("broken_fields.csv"));
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    let col = header
        .iter()
        .position(|c| *c == "hermiticity_residual")
        .expect("residual column");
    let residuals: Vec<f64> = lines
        .map(|l| l.split(',').nth(col).expect("column").parse().expect("numeric"))
        .collect();
    assert_eq!(residuals.len(), 121);
    let large = residuals.iter().filter(|r| **r > 1e-3).count();
    assert!(
        large * 100 >= 95 * residuals.len(),
        "only {large}/{} residuals exceed 1e-3",
        residuals.len()
    );
    println!(
        "[criterion 4] PASS: broken normalization rejected (exit code 3), residual \
         > 1e-3 at {large}/{} grid points, residual map written",
        residuals.len()
    );
}

#[test]
fn config_errors_use_their_own_exit_code() {
    // malformed scenario
    let dir = tempfile::tempdir().expect("tempdir");
    let config = dir.path().join("bad.toml");
    std::fs::write(&config, "[scenario]\nkind = \"rotation\"\nb0 = 0.35\n").expect("write");
    let run = rdi(&["invert", "--config", config.to_str().expect("utf-8 path")]);
    assert_eq!(run.status.code(), Some(2), "{run:?}");

    // unknown preset
    let run = rdi(&["invert", "--preset", "does-not-exist"]);
    assert_eq!(run.status.code(), Some(2), "{run:?}");

    // neither config nor preset
    let run = rdi(&["invert"]);
    assert_eq!(run.status.code(), Some(2), "{run:?}");

    // zero threads
    let run = rdi(&["invert", "--preset", "fig1", "--threads", "0"]);
    assert_eq!(run.status.code(), Some(2), "{run:?}");
}

#[test]
fn catalog_lists_scenarios_and_presets() {
    let run = rdi(&["catalog"]);
    assert!(run.status.success());
    let text = String::from_utf8(run.stdout).expect("utf-8");
    for kind in ["rotation", "translation", "confined", "custom"] {
        assert!(text.contains(kind), "missing {kind}");
    }
    assert!(text.contains("fig1") && text.contains("boosted-landau"));

    let run = rdi(&["catalog", "--json"]);
    assert!(run.status.success());
    let value: serde_json::Value =
        serde_json::from_slice(&run.stdout).expect("valid JSON");
    assert_eq!(value["scenarios"].as_array().expect("array").len(), 10);
    assert_eq!(value["presets"].as_array().expect("array").len(), 6);
}

#[test]
fn verify_passes_with_default_tolerances() {
    let dir = tempfile::tempdir().expect("tempdir");
    let run = rdi(&["verify", "--out", dir.path().to_str().expect("utf-8 path")]);
    assert!(run.status.success(), "{run:?}");
    let report: serde_json::Value =
        serde_json::from_str(&read(&dir.path().join("verify_report.json"))).expect("JSON");
    assert_eq!(report["failed"], 0, "{report}");
    assert_eq!(report["checks"].as_array().expect("array").len(), 8);
}

/// Check failures are report entries, not process failures: tightening a
/// tolerance beyond double precision flips that check to FAIL while the
/// exit code stays 0.
#[test]
fn verify_reports_failures_without_failing_the_process() {
    let dir = tempfile::tempdir().expect("tempdir");
    let config = dir.path().join("tight.toml");
    std::fs::write(
        &config,
        r#"
[scenario]
kind = "rest"

[tolerances]
fd = 1.0e-14

[verify]
checks = ["fd", "resonance"]
"#,
    )
    .expect("write config");
    let run = rdi(&[
        "verify",
        "--config",
        config.to_str().expect("utf-8 path"),
        "--out",
        dir.path().to_str().expect("utf-8 path"),
    ]);
    assert!(run.status.success(), "{run:?}");
    let report: serde_json::Value =
        serde_json::from_str(&read(&dir.path().join("verify_report.json"))).expect("JSON");
    let checks = report["checks"].as_array().expect("array");
    assert_eq!(checks.len(), 2);
    let fd = checks.iter().find(|c| c["name"] == "fd").expect("fd entry");
    assert_eq!(fd["pass"], false, "{report}");
    let res = checks.iter().find(|c| c["name"] == "resonance").expect("resonance entry");
    assert_eq!(res["pass"], true, "{report}");

    // unknown check names are config errors
    std::fs::write(&config, "[scenario]\nkind = \"rest\"\n[verify]\nchecks = [\"nope\"]\n")
        .expect("write config");
    let run = rdi(&["verify", "--config", config.to_str().expect("utf-8 path")]);
    assert_eq!(run.status.code(), Some(2), "{run:?}");
}

/// The scalar pipeline writes its own CSV schema.
#[test]
fn scalar_preset_writes_potential_column() {
    let dir = tempfile::tempdir().expect("tempdir");
    let run = rdi(&[
        "invert",
        "--preset",
        "scalar",
        "--out",
        dir.path().to_str().expect("utf-8 path"),
    ]);
    assert!(run.status.success(), "{run:?}");
    let csv = read(&dir.path().join("scalar_fields.csv"));
    assert!(csv.starts_with("t,x,y,z,v,residual\n"), "unexpected header");
    assert_eq!(csv.lines().count(), 102);
}
