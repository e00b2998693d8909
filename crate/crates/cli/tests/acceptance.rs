//! Acceptance matrix: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::ExitCode;
use std::time::Instant;

use adoforge_cli::verify::{self, Outcome, Suite};

const CRITERIA: [(u32, &str, Suite); 7] = [
    (1, "ADO3 triple agreement, T(2,3)..T(2,17)", Suite::Ado3),
    (2, "ADO4 triple agreement and inductive T(2,15)..T(2,21)", Suite::Ado4),
    (3, "ADO4 golden polynomials T(2,23)..T(2,39)", Suite::Golden),
    (4, "R-matrix displays N-hat, N3 and N4", Suite::Rmatrix),
    (5, "refined Alexander and refined ADO3", Suite::Refined),
    (6, "property suites", Suite::Properties),
    (7, "truncation doubling", Suite::Robustness),
];

fn main() -> ExitCode {
    let dir = adoforge_cli::fixtures::fixture_dir();
    let mut failed = 0;
    for (n, title, suite) in CRITERIA {
        let start = Instant::now();
        let report = verify::run(&[suite], &dir);
        let s = &report.summary;
        let verdict = if report.success() && s.inconclusive == 0 { "PASS" } else { "FAIL" };
        println!(
            "criterion {n}: {verdict} {title} ({} equal, {} equal_after, {} mismatch, {} inconclusive, {:.1}s)",
            s.equal,
            s.equal_after,
            s.mismatch,
            s.inconclusive,
            start.elapsed().as_secs_f64()
        );
        for c in report.cases.iter().filter(|c| matches!(c.outcome, Outcome::Mismatch(_) | Outcome::Inconclusive(_))) {
            println!("    {}: {}", c.key, c.outcome);
        }
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", CRITERIA.len());
        ExitCode::FAILURE
    }
}
