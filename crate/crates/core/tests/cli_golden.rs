//! Byte-for-byte comparison of CLI transcripts against the golden corpus.
//! Set `UPDATE_GOLDEN=1` to rewrite the golden files.

mod common;

use common::{golden_path, run_cli, CLI_CORPUS};

#[test]
fn corpus_matches_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (stem, args) in CLI_CORPUS {
        let transcript = run_cli(args);
        let path = golden_path(stem);
        if update {
            std::fs::write(&path, &transcript).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(golden) if golden == transcript => {}
            Ok(golden) => failures.push(format!("{stem}: expected\n{golden}got\n{transcript}")),
            Err(e) => failures.push(format!("{stem}: {e}")),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run_cli(args).lines().last().unwrap().to_string();
    assert_eq!(code(&["eta", "4"]), "--- exit 0");
    assert_eq!(code(&["realize", "CP(5)"]), "--- exit 1");
    assert_eq!(code(&["decompose", "--class", "class_11_29.txt", "--max-dim", "2"]), "--- exit 1");
    assert_eq!(code(&["milnor", "CP(2"]), "--- exit 2");
    assert_eq!(code(&["frobnicate"]), "--- exit 2");
    assert_eq!(code(&["toric", "chern", "--fan", "missing.json"]), "--- exit 2");
}

#[test]
fn errors_have_a_class_prefix() {
    let t = run_cli(&["realize", "CP(5)"]);
    assert!(t.contains("--- stderr\nStrictModeGap: "), "{t}");
    let t = run_cli(&["decompose", "--class", "class_11_29.txt", "--max-dim", "2"]);
    assert!(t.contains("--- stderr\nNonIntegral: "), "{t}");
}
