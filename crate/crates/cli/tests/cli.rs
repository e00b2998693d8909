use std::fs;

use adoforge_cli::fixtures;
use adoforge_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use adoforge_core::json::PolyJson;
use adoforge_core::{Cyclotomic, HalfLaurent};

fn cli(args: &[&str]) -> adoforge_cli::Output {
    run(std::iter::once("adoforge").chain(args.iter().copied()))
}

#[test]
fn fk_single_term() {
    let out = cli(&["fk", "--s", "2", "--t", "3", "--mmax", "1", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let doc: PolyJson = serde_json::from_str(&out.stdout).unwrap();
    // one summand of the series, stored with both halves
    assert_eq!(doc.terms.len(), 2);
    assert!(out.stdout.contains("1 terms"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["ado", "--p", "4", "--s", "3", "--method", "all", "--format", "json"][..],
        &["fk", "--s", "3", "--t", "5", "--mmax", "200", "--at-root", "4", "--format", "json"],
        &["refined", "--s", "3", "--what", "ado3", "--format", "json"],
        &["rmatrix", "--s", "2", "--r", "3", "--format", "json"],
    ] {
        assert_eq!(cli(args), cli(args), "{args:?}");
    }
}

#[test]
fn ado_all_methods_agree() {
    let out = cli(&["ado", "--p", "4", "--s", "7", "--method", "all", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let docs: Vec<PolyJson> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(docs.len(), 3);
    let polys: Vec<HalfLaurent<Cyclotomic>> = docs.iter().map(|d| d.decode().unwrap()).collect();
    assert!(polys.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn json_matches_fixture_encoding() {
    let out = cli(&["ado", "--p", "4", "--s", "11", "--method", "algorithm", "--format", "json"]);
    let docs: Vec<PolyJson> = serde_json::from_str(&out.stdout).unwrap();
    let got: HalfLaurent<Cyclotomic> = docs[0].decode().unwrap();
    let want: HalfLaurent<Cyclotomic> =
        fixtures::load(&fixtures::path(&fixtures::fixture_dir(), "ado4", "T2_23")).unwrap();
    assert_eq!(got, want);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&["ado", "--p", "5", "--s", "1"]).code, EXIT_USAGE);
    assert_eq!(cli(&["bogus"]).code, EXIT_USAGE);
    assert_eq!(cli(&["fk", "--s", "2", "--t", "4"]).code, EXIT_USAGE);
    assert_eq!(cli(&["refined", "--s", "2", "--what", "superpoly"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--suite", "nope"]).code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

#[test]
fn verify_golden_reports_nine_matches() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = cli(&["verify", "--suite", "appendix-a", "--report", report.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["summary"]["equal"], 9);
    assert_eq!(v["summary"]["mismatch"], 0);
    assert_eq!(v["cases"].as_array().unwrap().len(), 9);
}

#[test]
fn empty_fixture_dir_lists_everything_missing() {
    let dir = tempfile::tempdir().unwrap();
    let missing = fixtures::missing(dir.path());
    assert_eq!(missing.len(), fixtures::expected().len());
    let out = cli(&["verify", "--suite", "golden", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, EXIT_MISMATCH);
    for n in (23..=39).step_by(2) {
        assert!(out.stdout.contains(&format!("missing fixture {}", fixtures::path(dir.path(), "ado4", &format!("T2_{n}")).display())));
    }
}

#[test]
fn shipped_fixtures_are_complete() {
    assert!(fixtures::missing(&fixtures::fixture_dir()).is_empty());
}

#[test]
fn malformed_fixture_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, "{\"schema\": \"other/9\", \"vars\": [\"x\"], \"half_exponents\": true, \"terms\": []}").unwrap();
    assert!(fixtures::load::<i64, Cyclotomic>(&p).is_err());
}
