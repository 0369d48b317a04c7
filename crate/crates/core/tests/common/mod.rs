//! Shared helpers for the integration tests: the CLI golden corpus.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// `(golden file stem, arguments)` for every command in the corpus.
pub const CLI_CORPUS: &[(&str, &[&str])] = &[
    ("01_eta", &["eta", "8"]),
    ("02_kummer", &["kummer", "3", "6", "3"]),
    ("03_gcd_check", &["gcd-check", "8", "--min-i", "4"]),
    ("04_gcd_scan_even", &["gcd-scan", "--max", "200", "--min-i", "4", "--parity", "even"]),
    ("05_gcd_scan_odd_json", &["gcd-scan", "--max", "40", "--min-i", "4", "--parity", "odd", "--json"]),
    ("06_chern_expr", &["chern", "2*CP(2) - CP(1)^2"]),
    ("07_chern_m_basis", &["chern", "--basis", "m", "H(2,2)"]),
    ("08_milnor_cp4", &["milnor", "CP(4)"]),
    ("09_milnor_h45", &["milnor", "H(4,5)"]),
    ("10_toric_chern", &["toric", "chern", "--fan", "cp2.json"]),
    ("11_toric_blowup", &["toric", "blowup", "--fan", "cp2.json", "--cone", "0"]),
    ("12_toric_validate_bad", &["toric", "validate", "--fan", "bad_fan.json"]),
    ("13_toric_hirzebruch", &["toric", "chern", "--fan", "hirzebruch2.json"]),
    ("14_decompose", &["decompose", "--class", "class_11_25.txt", "--max-dim", "2"]),
    ("15_decompose_nonintegral", &["decompose", "--class", "class_11_29.txt", "--max-dim", "2"]),
    ("16_compose", &["compose", "--coords", "coords.txt"]),
    ("17_realize_neg_cp2", &["realize", "0 - CP(2)"]),
    ("18_realize_strict_gap", &["realize", "CP(5)"]),
    ("19_verify", &["verify", "--realization", "neg_cp2.real", "--class", "neg_cp2.txt"]),
    ("20_verify_tampered", &["verify", "--realization", "neg_cp2_tampered.real", "--class", "neg_cp2.txt"]),
    ("21_obstruction", &["obstruction", "9"]),
    ("22_torus_rank", &["torus-rank", "H(4,5) * Sigma(2)"]),
    ("23_generators", &["generators", "--mode", "relaxed", "--max-dim", "8"]),
    ("24_dimension_mismatch", &["chern", "CP(2) + CP(1)"]),
];

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_path(stem: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{stem}.txt"))
}

/// Runs the binary from the fixtures directory and renders stdout, stderr
/// and the exit code as one transcript.
pub fn run_cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_cobordism"))
        .args(args)
        .current_dir(fixtures_dir())
        .output()
        .expect("binary runs");
    format!(
        "$ cobordism {}\n{}--- stderr\n{}--- exit {}\n",
        args.iter()
            .map(|a| if a.contains(' ') { format!("{a:?}") } else { a.to_string() })
            .collect::<Vec<_>>()
            .join(" "),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
        out.status.code().unwrap_or(-1)
    )
}
