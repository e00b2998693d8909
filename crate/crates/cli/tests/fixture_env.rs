//! Kept in its own binary: it sets the fixture environment variable.

use std::fs;
use std::path::Path;

use adoforge_cli::fixtures::{self, FIXTURES_ENV};
use adoforge_cli::{run, EXIT_MISMATCH, EXIT_OK};
use adoforge_core::json::PolyJson;

fn cli(args: &[&str]) -> adoforge_cli::Output {
    run(std::iter::once("adoforge").chain(args.iter().copied()))
}

fn copy_dir(from: &Path, to: &Path) {
    for entry in walk(from) {
        let rel = entry.strip_prefix(from).unwrap();
        let dst = to.join(rel);
        fs::create_dir_all(dst.parent().unwrap()).unwrap();
        fs::copy(&entry, dst).unwrap();
    }
}

fn walk(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for e in fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out
}

#[test]
fn corrupt_fixture_fails_verify() {
    let dir = tempfile::tempdir().unwrap();
    copy_dir(&fixtures::fixture_dir(), dir.path());
    let target = fixtures::path(dir.path(), "ado4", "T2_29");
    let mut doc: PolyJson = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    doc.terms.pop();
    fs::write(&target, doc.to_pretty()).unwrap();

    std::env::set_var(FIXTURES_ENV, dir.path());
    let out = cli(&["verify", "--suite", "golden"]);
    std::env::remove_var(FIXTURES_ENV);
    assert_eq!(out.code, EXIT_MISMATCH);
    assert!(out.stdout.contains("golden/T(2,29)"));
    assert!(out.stdout.contains("8 equal"));

    // untouched copy passes through the flag as well
    fs::write(&target, fs::read(fixtures::path(&fixtures::fixture_dir(), "ado4", "T2_29")).unwrap()).unwrap();
    let out = cli(&["verify", "--suite", "golden", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
}

