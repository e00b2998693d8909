//! All-pairs verification: every case compares two independent computations.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use adoforge_core::ado::{
    ado3_closed, ado4, ado4_algorithm, ado_from_fk, ado_from_fk_with, compare_polys, compare_up_to_normalization,
    AdoPolynomial, Comparison,
};
use adoforge_core::exact_arith::Rational;
use adoforge_core::refined::{
    default_k1_max, refined_ado3, refined_ado3_reduces, refined_alexander, refined_alexander_weyl_holds,
    refined_weyl_check, specialize_t, XtPoly,
};
use adoforge_core::rmatrix::{normalized_nhat, num_extract, ado_compare, CompareTarget, PairMatrix, TorusTangle};
use adoforge_core::torus_fk::{default_mmr_m_max, epsilon, fk_series, mmr_order0_check};
use adoforge_core::alexander::alexander_torus;
use adoforge_core::{Cyclotomic, HalfLaurent, Result, TorusKnot};
use rayon::prelude::*;
use serde::Serialize;

use crate::fixtures;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Equal,
    EqualAfter(String),
    Mismatch(String),
    Inconclusive(String),
}

impl Outcome {
    #[must_use]
    pub fn is_mismatch(&self) -> bool {
        matches!(self, Outcome::Mismatch(_))
    }

    fn from_comparison(c: &Comparison) -> Self {
        match c {
            Comparison::Equal => Outcome::Equal,
            Comparison::EqualAfter { c_power, root_order, u, shift } => Outcome::EqualAfter(format!(
                "u = {u}, x-shift = {shift}/2, x -> zeta{root_order}^{c_power} x"
            )),
            Comparison::Different(w) => Outcome::Mismatch(w.clone()),
        }
    }

    fn exact<T: PartialEq + fmt::Debug>(a: &T, b: &T) -> Self {
        if a == b {
            Outcome::Equal
        } else {
            Outcome::Mismatch(format!("{a:?} != {b:?}"))
        }
    }

    fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Equal
        } else {
            Outcome::Mismatch(witness())
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Equal => f.write_str("equal"),
            Outcome::EqualAfter(d) => write!(f, "equal_after({d})"),
            Outcome::Mismatch(w) => write!(f, "mismatch({w})"),
            Outcome::Inconclusive(r) => write!(f, "inconclusive({r})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub key: String,
    pub description: String,
    pub method_a: String,
    pub method_b: String,
    pub outcome: Outcome,
    /// Truncation parameters actually used.
    pub truncation: Option<String>,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub equal: usize,
    pub equal_after: usize,
    pub mismatch: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suites: Vec<String>,
    /// Fixture files the selected suites need but could not find.
    pub missing_fixtures: Vec<String>,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl VerificationReport {
    /// True iff no case is a mismatch.
    #[must_use]
    pub fn success(&self) -> bool {
        self.summary.mismatch == 0
    }

    /// One line per case, then the summary.
    #[must_use]
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.missing_fixtures {
            out.push_str(&format!("missing fixture {m}\n"));
        }
        for c in &self.cases {
            let trunc = c.truncation.as_deref().map(|t| format!(" [{t}]")).unwrap_or_default();
            out.push_str(&format!(
                "{:<34} {} vs {}: {}{} ({:.2}s)\n",
                c.key, c.method_a, c.method_b, c.outcome, trunc, c.seconds
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "summary: {} equal, {} equal_after, {} mismatch, {} inconclusive\n",
            s.equal, s.equal_after, s.mismatch, s.inconclusive
        ));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Ado3,
    Ado4,
    Golden,
    Rmatrix,
    Refined,
    Properties,
    Robustness,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Ado3,
        Suite::Ado4,
        Suite::Golden,
        Suite::Rmatrix,
        Suite::Refined,
        Suite::Properties,
        Suite::Robustness,
    ];

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Suite::Ado3 => "ado3",
            Suite::Ado4 => "ado4",
            Suite::Golden => "golden",
            Suite::Rmatrix => "rmatrix",
            Suite::Refined => "refined",
            Suite::Properties => "properties",
            Suite::Robustness => "robustness",
        }
    }
}

impl Suite {
    fn fixture_group(self) -> Option<&'static str> {
        match self {
            Suite::Ado4 | Suite::Golden => Some("ado4"),
            Suite::Rmatrix => Some("rmatrix"),
            Suite::Refined => Some("refined"),
            Suite::Ado3 | Suite::Properties | Suite::Robustness => None,
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        // older spellings of the two fixture suites
        let s = match s {
            "appendix-a" => "golden",
            "appendix-b" => "rmatrix",
            other => other,
        };
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

type Check = Box<dyn Fn() -> Result<(Outcome, Option<String>)> + Send + Sync>;

struct Case {
    key: String,
    description: String,
    method_a: String,
    method_b: String,
    run: Check,
}

fn case(
    key: impl Into<String>,
    description: impl Into<String>,
    a: &str,
    b: &str,
    run: impl Fn() -> Result<(Outcome, Option<String>)> + Send + Sync + 'static,
) -> Case {
    Case { key: key.into(), description: description.into(), method_a: a.into(), method_b: b.into(), run: Box::new(run) }
}

fn knot(s: i64) -> TorusKnot {
    TorusKnot::two_strand(s).expect("s >= 1")
}

fn closed(p: u32, s: i64) -> Result<AdoPolynomial> {
    if p == 3 {
        ado3_closed(s)
    } else {
        ado4(s)
    }
}

fn ado_cases(p: u32, range: std::ops::RangeInclusive<i64>, out: &mut Vec<Case>) {
    let name = if p == 3 { "ado3_closed" } else { "ado4" };
    for s in range {
        let n = 2 * s + 1;
        out.push(case(
            format!("ado{p}/fk/T(2,{n:02})"),
            format!("ADO{p}[T(2,{n})] closed form vs F_K extraction"),
            name,
            "ado_from_fk",
            move || {
                let fk = ado_from_fk(p, &knot(s))?;
                let c = compare_up_to_normalization(&closed(p, s)?, &fk.ado, true);
                Ok((Outcome::from_comparison(&c), Some(format!("m_max = {}", fk.m_max))))
            },
        ));
        out.push(case(
            format!("ado{p}/rmatrix/T(2,{n:02})"),
            format!("ADO{p}[T(2,{n})] closed form vs R-matrix tangle"),
            name,
            "rmatrix",
            move || {
                let c = ado_compare(s as u32, p, CompareTarget::Closed)?;
                Ok((Outcome::from_comparison(&c), None))
            },
        ));
    }
}

fn fixture_case(dir: &Path, s: i64, suite: &str, out: &mut Vec<Case>) {
    let n = 2 * s + 1;
    let path = fixtures::path(dir, "ado4", &format!("T2_{n}"));
    out.push(case(
        format!("{suite}/T(2,{n:02})"),
        format!("ado4_algorithm({s}) vs recorded ADO4[T(2,{n})]"),
        "ado4_algorithm",
        "fixture",
        move || {
            let want: HalfLaurent<Cyclotomic> = fixtures::load(&path)?;
            let got = ado4_algorithm(s)?;
            Ok((Outcome::exact(&got.poly, &want), None))
        },
    ));
}

fn ado3_suite(_: &Path) -> Vec<Case> {
    let mut out = Vec::new();
    ado_cases(3, 1..=8, &mut out);
    out
}

fn ado4_suite(dir: &Path) -> Vec<Case> {
    let mut out = Vec::new();
    ado_cases(4, 1..=6, &mut out);
    for s in 7..=10 {
        fixture_case(dir, s, "ado4/worked", &mut out);
    }
    out
}

fn golden_suite(dir: &Path) -> Vec<Case> {
    let mut out = Vec::new();
    for s in 11..=19 {
        fixture_case(dir, s, "golden", &mut out);
    }
    out
}

fn rmatrix_suite(dir: &Path) -> Vec<Case> {
    let mut out = Vec::new();
    for r in [3u32, 4] {
        let path = fixtures::path(dir, "rmatrix", &format!("NHAT{r}_T2_3"));
        out.push(case(
            format!("rmatrix/nhat{r}/T(2,03)"),
            format!("normalized N-hat^{r} of T(2,3) vs recorded display"),
            "normalized_nhat",
            "fixture",
            move || {
                let want: HalfLaurent<Cyclotomic> = fixtures::load(&path)?;
                Ok((Outcome::exact(&normalized_nhat(1, r)?.poly, &want), None))
            },
        ));
    }
    for (r, range) in [(3u32, 2..=8u32), (4, 3..=6)] {
        for s in range {
            let n = 2 * s + 1;
            let path = fixtures::path(dir, "rmatrix", &format!("N{r}_T2_{n}"));
            out.push(case(
                format!("rmatrix/num{r}/T(2,{n:02})"),
                format!("num[N^{r}] of T(2,{n}) vs recorded display, up to monomial and constant"),
                "num_extract",
                "fixture",
                move || {
                    let want: HalfLaurent<Cyclotomic> = fixtures::load(&path)?;
                    let c = compare_polys(&want, &num_extract(s, r)?, r, false);
                    Ok((Outcome::from_comparison(&c), None))
                },
            ));
        }
    }
    out
}

fn refined_suite(dir: &Path) -> Vec<Case> {
    let mut out = Vec::new();
    for s in 2..=4usize {
        let n = 2 * s + 1;
        let path = fixtures::path(dir, "refined", &format!("ALEX_T2_{n}"));
        out.push(case(
            format!("refined/alexander/T(2,{n:02})"),
            format!("refined Alexander of T(2,{n}) vs recorded display"),
            "refined_alexander",
            "fixture",
            move || {
                let want: XtPoly<Rational> = fixtures::load(&path)?;
                Ok((Outcome::exact(&refined_alexander(s)?.poly, &want), Some("k1 <= 3".into())))
            },
        ));
        let path = fixtures::path(dir, "refined", &format!("ADO3_T2_{n}"));
        out.push(case(
            format!("refined/ado3/T(2,{n:02})"),
            format!("refined ADO3 of T(2,{n}) vs recorded display"),
            "refined_ado3",
            "fixture",
            move || {
                let want: XtPoly<Cyclotomic> = fixtures::load(&path)?;
                let got = refined_ado3(s, default_k1_max(s))?;
                Ok((Outcome::exact(&got.poly, &want), Some(format!("k1_max = {}", got.k1_max))))
            },
        ));
    }
    for s in 1..=6usize {
        let n = 2 * s + 1;
        out.push(case(
            format!("refined/t=-1/T(2,{n:02})"),
            format!("refined ADO3 of T(2,{n}) at t = -1, x -> zeta3^2 x vs ADO3 closed form"),
            "refined_ado3",
            "ado3_closed",
            move || {
                let got = refined_ado3(s, default_k1_max(s))?;
                let c = refined_ado3_reduces(&got)?;
                Ok((Outcome::from_comparison(&c), Some(format!("k1_max = {}", got.k1_max))))
            },
        ));
        out.push(case(
            format!("refined/weyl/T(2,{n:02})"),
            format!("refined Weyl symmetry of refined ADO3 of T(2,{n})"),
            "A(1/x,t)",
            "A(x/(zeta3^2 t^2),t)",
            move || {
                let got = refined_ado3(s, default_k1_max(s))?;
                Ok((
                    match refined_weyl_check(&got.poly) {
                        Ok(()) => Outcome::Equal,
                        Err(e) => Outcome::Mismatch(e.to_string()),
                    },
                    Some(format!("k1_max = {}", got.k1_max)),
                ))
            },
        ));
        out.push(case(
            format!("refined/alexander-weyl/T(2,{n:02})"),
            format!("refined Alexander of T(2,{n}): Weyl symmetry and t = -1"),
            "Delta(1/x,t), Delta(x,-1)",
            "Delta(x/t^2,t), Delta(x)",
            move || {
                let d = refined_alexander(s)?.poly;
                let m1 = Rational::from_integer((-1).into());
                let reduced = specialize_t(&d, &m1, &m1);
                let ok = refined_alexander_weyl_holds(&d) && reduced == alexander_torus(&knot(s as i64)).poly;
                Ok((Outcome::check(ok, || format!("refined Alexander {d:?}")), None))
            },
        ));
    }
    out
}

fn properties_suite(_: &Path) -> Vec<Case> {
    let mut out = Vec::new();
    out.push(case(
        "properties/weyl-ado",
        "every ADO polynomial from every method is x <-> 1/x symmetric",
        "A(x)",
        "A(1/x)",
        || {
            let mut polys: Vec<AdoPolynomial> = Vec::new();
            for s in 1..=8 {
                polys.push(ado3_closed(s)?);
                polys.push(ado_from_fk(3, &knot(s))?.ado);
            }
            for s in 1..=19 {
                polys.push(ado4(s)?);
            }
            for s in 1..=6 {
                polys.push(ado_from_fk(4, &knot(s))?.ado);
            }
            let bad: Vec<String> =
                polys.iter().filter(|a| !a.is_weyl_symmetric()).map(|a| format!("p={} {}", a.p, a.knot)).collect();
            Ok((Outcome::check(bad.is_empty(), || bad.join(", ")), None))
        },
    ));
    out.push(case(
        "properties/epsilon-residues",
        "epsilon is 2st-periodic, supported on four distinct odd residues, and sums to zero per period",
        "epsilon",
        "residue classes",
        || {
            let mut bad = Vec::new();
            for s in 2..=15 {
                for t in 2..=15 {
                    let Ok(k) = TorusKnot::new(s, t) else { continue };
                    let n = 2 * s * t;
                    let (minus, plus) = k.residues();
                    let mut all = [minus[0], minus[1], plus[0], plus[1]];
                    all.sort_unstable();
                    let distinct = all.windows(2).all(|w| w[0] != w[1]);
                    let odd = all.iter().all(|r| r % 2 == 1);
                    let periodic = (1..=n).all(|m| epsilon(&k, m) == epsilon(&k, m + n));
                    let balanced = (1..=n).map(|m| i64::from(epsilon(&k, m))).sum::<i64>() == 0;
                    if !(distinct && odd && periodic && balanced) {
                        bad.push(k.to_string());
                    }
                }
            }
            Ok((Outcome::check(bad.is_empty(), || bad.join(", ")), None))
        },
    ));
    out.push(case(
        "properties/q-exponents",
        "combined q-exponent of every generated F_K term is an integer",
        "fk_series",
        "integrality",
        || {
            let mut count = 0;
            for s in 2..=9 {
                for t in 2..=9 {
                    let Ok(k) = TorusKnot::new(s, t) else { continue };
                    let series = fk_series(&k, 12 * s * t);
                    for term in &series.terms {
                        series.combined_exponent(term)?;
                        count += 1;
                    }
                }
            }
            Ok((Outcome::Equal, Some(format!("{count} terms, m_max = 12st"))))
        },
    ));
    out.push(case(
        "properties/r-inverse",
        "R contracted with R^-1 is the identity on color pairs, r <= 5",
        "R R^-1",
        "identity",
        || {
            let bad: Vec<u32> = (2..=5u32)
                .filter(|&r| {
                    let x = PairMatrix::crossing(r, false);
                    let xi = PairMatrix::crossing(r, true);
                    x.then(&xi) != PairMatrix::identity(r) || xi.then(&x) != PairMatrix::identity(r)
                })
                .collect();
            Ok((Outcome::check(bad.is_empty(), || format!("fails for r in {bad:?}")), None))
        },
    ));
    out.push(case(
        "properties/z-degree",
        "every tangle evaluation carries a single Z-power, one per crossing",
        "closed tangle",
        "Z^(2s+1)",
        || {
            let mut bad = Vec::new();
            for (r, smax) in [(2u32, 6u32), (3, 8), (4, 6), (5, 2)] {
                for s in 1..=smax {
                    let t = TorusTangle::new(s, r)?;
                    let w = i64::from(t.crossings());
                    let power = PairMatrix::crossing(r, false).power(t.crossings());
                    let closed = t.closed();
                    let z0 = closed.iter().next().map(|(e, _)| e[1]);
                    if power.z_degrees() != vec![w] || closed.iter().any(|(e, _)| Some(e[1]) != z0) {
                        bad.push(format!("r={r} s={s}"));
                    }
                }
            }
            Ok((Outcome::check(bad.is_empty(), || bad.join(", ")), None))
        },
    ));
    for s in 1..=3 {
        let n = 2 * s + 1;
        out.push(case(
            format!("properties/mmr/T(2,{n})"),
            format!("q -> 1 limit of F_K/(x^1/2 - x^-1/2) vs 1/Delta for T(2,{n}), 11 coefficients"),
            "F_K",
            "1/Delta",
            move || {
                let k = knot(s);
                let m = default_mmr_m_max(&k, 10);
                let outcome = match mmr_order0_check(&k, 10, m)? {
                    adoforge_core::torus_fk::MmrOutcome::Agree { .. } => Outcome::Equal,
                    adoforge_core::torus_fk::MmrOutcome::Mismatch { offset, expected, found } => {
                        Outcome::Mismatch(format!("offset {offset}: expected {expected}, found {found}"))
                    }
                    adoforge_core::torus_fk::MmrOutcome::Inconclusive(r) => Outcome::Inconclusive(r),
                };
                Ok((outcome, Some(format!("m_max = {m} and {}", 2 * m))))
            },
        ));
    }
    out
}

fn robustness_suite(_: &Path) -> Vec<Case> {
    let mut out = Vec::new();
    for (p, smax) in [(3u32, 8i64), (4, 6)] {
        for s in 1..=smax {
            let n = 2 * s + 1;
            out.push(case(
                format!("robustness/fk{p}/T(2,{n:02})"),
                format!("ADO{p}[T(2,{n})] from F_K at m_max and 2 m_max"),
                "ado_from_fk(m_max)",
                "ado_from_fk(2 m_max)",
                move || {
                    let k = knot(s);
                    let a = ado_from_fk(p, &k)?;
                    let b = ado_from_fk_with(p, &k, 2 * a.m_max)?;
                    Ok((Outcome::exact(&a.ado.poly, &b.poly), Some(format!("m_max = {} and {}", a.m_max, 2 * a.m_max))))
                },
            ));
        }
    }
    for s in 1..=6usize {
        let n = 2 * s + 1;
        out.push(case(
            format!("robustness/refined/T(2,{n:02})"),
            format!("refined ADO3 of T(2,{n}) at k1_max and 2 k1_max"),
            "refined_ado3(k1_max)",
            "refined_ado3(2 k1_max)",
            move || {
                let k = default_k1_max(s);
                let a = refined_ado3(s, k)?;
                let b = refined_ado3(s, 2 * k)?;
                Ok((Outcome::exact(&a.poly, &b.poly), Some(format!("k1_max = {} and {}", a.k1_max, b.k1_max))))
            },
        ));
    }
    out
}

fn suite_cases(suite: Suite, dir: &Path) -> Vec<Case> {
    match suite {
        Suite::Ado3 => ado3_suite(dir),
        Suite::Ado4 => ado4_suite(dir),
        Suite::Golden => golden_suite(dir),
        Suite::Rmatrix => rmatrix_suite(dir),
        Suite::Refined => refined_suite(dir),
        Suite::Properties => properties_suite(dir),
        Suite::Robustness => robustness_suite(dir),
    }
}

/// Runs the suites in parallel against the fixtures in `dir`; cases are
/// reported sorted by key. An error inside a case counts as a mismatch.
#[must_use]
pub fn run(suites: &[Suite], dir: &Path) -> VerificationReport {
    let cases: Vec<Case> = suites.iter().flat_map(|&s| suite_cases(s, dir)).collect();
    let mut results: Vec<CaseResult> = cases
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let (outcome, truncation) = match (c.run)() {
                Ok(v) => v,
                Err(e) => (Outcome::Mismatch(format!("error: {e}")), None),
            };
            CaseResult {
                key: c.key,
                description: c.description,
                method_a: c.method_a,
                method_b: c.method_b,
                outcome,
                truncation,
                seconds: start.elapsed().as_secs_f64(),
            }
        })
        .collect();
    results.sort_by(|a, b| a.key.cmp(&b.key));
    let mut summary = Summary::default();
    for r in &results {
        match r.outcome {
            Outcome::Equal => summary.equal += 1,
            Outcome::EqualAfter(_) => summary.equal_after += 1,
            Outcome::Mismatch(_) => summary.mismatch += 1,
            Outcome::Inconclusive(_) => summary.inconclusive += 1,
        }
    }
    let groups: Vec<&str> = suites.iter().filter_map(|s| s.fixture_group()).collect();
    let missing_fixtures = fixtures::expected()
        .into_iter()
        .filter(|(g, _)| groups.contains(g))
        .map(|(g, n)| fixtures::path(dir, g, &n))
        .filter(|p| !p.is_file())
        .map(|p| p.display().to_string())
        .collect();
    VerificationReport {
        suites: suites.iter().map(|s| s.name().to_string()).collect(),
        missing_fixtures,
        cases: results,
        summary,
    }
}

/// [`run`] with the default fixture directory.
#[must_use]
pub fn run_default(suites: &[Suite]) -> VerificationReport {
    run(suites, &fixtures::fixture_dir())
}
