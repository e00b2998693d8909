//! Command-line front end for `adoforge-core`.
//!
//! [`run`] takes the argument vector and returns the text to print together
//! with the exit status, so the binary and the tests share one code path.

pub mod fixtures;
pub mod verify;

use std::path::PathBuf;

use adoforge_core::ado::{ado3_closed, ado4, ado4_algorithm, ado_from_fk, ado_from_fk_with, compare_up_to_normalization, AdoPolynomial};
use adoforge_core::alexander::{alexander_composed, alexander_torus};
use adoforge_core::json::{JsonCoeff, PolyJson};
use adoforge_core::laurent::{pretty, Exponent};
use adoforge_core::refined::{default_k1_max, refined_ado3, refined_alexander, superpoly};
use adoforge_core::rmatrix::{ado_compare, normalized_nhat, CompareTarget};
use adoforge_core::torus_fk::{default_m_max, fk_at_root, fk_series};
use adoforge_core::{Error, Rational, Sparse, TorusKnot};
use clap::{Parser, Subcommand, ValueEnum};

use crate::verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

/// What [`run`] produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Output { stdout, stderr: String::new(), code }
    }

    fn error(msg: String, code: i32) -> Self {
        Output { stdout: String::new(), stderr: msg, code }
    }
}

#[derive(Parser, Debug)]
#[command(name = "adoforge", version, about = "Exact F_K series, ADO polynomials and their refinements for torus knots")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Algorithm,
    FromFk,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Refined {
    Alexander,
    Ado3,
    Superpoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Closed,
    FromFk,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// F_K of T(s,t), truncated at m <= mmax.
    Fk {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        mmax: Option<i64>,
        /// Specialize q to a primitive p-th root of unity.
        #[arg(long, value_name = "P")]
        at_root: Option<u32>,
    },
    /// Alexander polynomial of T(s,t), optionally at x^p.
    Alexander {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, value_name = "P")]
        compose: Option<i64>,
    },
    /// ADO_p of T(2,2s+1).
    Ado {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=4))]
        p: u32,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        s: i64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long)]
        mmax: Option<i64>,
    },
    /// t-deformed invariants of T(2,2s+1).
    Refined {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        s: u64,
        #[arg(long, value_enum)]
        what: Refined,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        k1max: Option<usize>,
    },
    /// Normalized R-matrix invariant of T(2,2s+1) at q = exp(i pi / r).
    Rmatrix {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        r: u32,
        #[arg(long, value_enum)]
        compare: Option<Target>,
    },
    /// Runs the verification suites; exits 1 on any mismatch.
    Verify {
        /// Repeatable; all suites when omitted.
        #[arg(long, value_parser = parse_suite)]
        suite: Vec<Suite>,
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Output::ok(text),
                _ => Output::error(text, EXIT_USAGE),
            };
        }
    };
    match dispatch(cli.command, cli.format) {
        Ok(out) => out,
        Err(Error::InvalidArgument(m)) => Output::error(format!("error: {m}\n"), EXIT_USAGE),
        Err(e) => Output::error(format!("error: {e}\n"), EXIT_ERROR),
    }
}

fn emit<E: Exponent, C: JsonCoeff + std::fmt::Display>(
    format: Format,
    label: &str,
    p: &Sparse<E, C>,
    vars: &[&str],
    half: bool,
) -> String {
    match format {
        Format::Json => PolyJson::encode(p, vars, half).with_label(label).to_pretty(),
        Format::Text => format!("{label} = {}\n", pretty(p, vars, half)),
    }
}

/// Several labelled polynomials; JSON output is an array.
fn emit_many<E: Exponent, C: JsonCoeff + std::fmt::Display>(
    format: Format,
    items: &[(String, &Sparse<E, C>)],
    vars: &[&str],
    half: bool,
) -> String {
    match format {
        Format::Json => {
            let docs: Vec<PolyJson> =
                items.iter().map(|(l, p)| PolyJson::encode(*p, vars, half).with_label(l.clone())).collect();
            let mut s = serde_json::to_string_pretty(&docs).expect("json encodes");
            s.push('\n');
            s
        }
        Format::Text => items.iter().map(|(l, p)| emit(format, l, *p, vars, half)).collect(),
    }
}

fn dispatch(command: Command, format: Format) -> adoforge_core::Result<Output> {
    match command {
        Command::Fk { s, t, mmax, at_root } => {
            let k = TorusKnot::new(s, t)?;
            let m_max = mmax.unwrap_or_else(|| default_m_max(&k, at_root.unwrap_or(1)));
            if m_max < 1 {
                return Err(Error::InvalidArgument("--mmax must be positive".into()));
            }
            if let Some(p) = at_root {
                let f = fk_at_root(&k, p, m_max)?;
                let label = format!("F_K[{k}](x, zeta{p}), m <= {m_max}");
                return Ok(Output::ok(emit(format, &label, &f.full(), &["x"], true)));
            }
            // Exponents of x and q both in halves so one flag covers them.
            let series = fk_series(&k, m_max);
            let mut poly: Sparse<[i64; 2], Rational> = Sparse::zero();
            for term in &series.terms {
                let e = 2 * series.combined_exponent(term)?;
                let c = Rational::new(i64::from(term.sign).into(), 2.into());
                poly.add_term([term.m, e], &c);
                poly.add_term([-term.m, e], &-c);
            }
            let label = format!("F_K[{k}](x, q), m <= {m_max}, {} terms", series.terms.len());
            Ok(Output::ok(emit(format, &label, &poly, &["x", "q"], true)))
        }
        Command::Alexander { s, t, compose } => {
            let k = TorusKnot::new(s, t)?;
            let (label, p) = match compose {
                Some(p) => (format!("Delta[{k}](x^{p})"), alexander_composed(&k, p)?),
                None => (format!("Delta[{k}](x)"), alexander_torus(&k).poly),
            };
            Ok(Output::ok(emit(format, &label, &p, &["x"], true)))
        }
        Command::Ado { p, s, method, mmax } => ado_command(format, p, s, method, mmax),
        Command::Refined { s, what, r, k1max } => {
            let s = usize::try_from(s).map_err(|_| Error::InvalidArgument("--s too large".into()))?;
            let n = 2 * s + 1;
            match what {
                Refined::Alexander => {
                    let a = refined_alexander(s)?;
                    Ok(Output::ok(emit(format, &format!("Delta[T(2,{n})](x,t)"), &a.poly, &["x", "t"], false)))
                }
                Refined::Ado3 => {
                    let a = refined_ado3(s, k1max.unwrap_or_else(|| default_k1_max(s)))?;
                    let label = format!("ADO3[T(2,{n})](x,t), k1 <= {}", a.k1_max);
                    Ok(Output::ok(emit(format, &label, &a.poly, &["x", "t"], false)))
                }
                Refined::Superpoly => {
                    let r = r.ok_or_else(|| Error::InvalidArgument("--what superpoly needs --r".into()))?;
                    if r < 0 {
                        return Err(Error::InvalidArgument("--r must be non-negative".into()));
                    }
                    let p = superpoly(s, r);
                    let qat: Sparse<[i64; 3], Rational> = p.map_exponents(|e| [e[1], e[2], e[3]]);
                    Ok(Output::ok(emit(format, &format!("P[T(2,{n})]_{r}(q,a,t)"), &qat, &["q", "a", "t"], false)))
                }
            }
        }
        Command::Rmatrix { s, r, compare } => {
            let n = 2 * s + 1;
            let nh = normalized_nhat(s, r)?;
            let mut out = emit(format, &format!("Nhat{r}[T(2,{n})](y)"), &nh.poly, &["y"], false);
            let Some(target) = compare else { return Ok(Output::ok(out)) };
            let target = match target {
                Target::Closed => CompareTarget::Closed,
                Target::FromFk => CompareTarget::FromFk,
            };
            let c = ado_compare(s, r, target)?;
            let code = if c.is_match() { EXIT_OK } else { EXIT_MISMATCH };
            if format == Format::Text {
                out.push_str(&format!("comparison with ADO{r}: {c}\n"));
            }
            Ok(Output::with_code(out, code))
        }
        Command::Verify { suite, fixtures: dir, report } => {
            let suites = if suite.is_empty() { Suite::ALL.to_vec() } else { dedup(suite) };
            let dir = dir.unwrap_or_else(fixtures::fixture_dir);
            let rep = verify::run(&suites, &dir);
            let json = serde_json::to_string_pretty(&rep).expect("report encodes") + "\n";
            if let Some(path) = report {
                std::fs::write(&path, &json).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            }
            let out = match format {
                Format::Json => json,
                Format::Text => rep.to_text(),
            };
            Ok(Output::with_code(out, if rep.success() { EXIT_OK } else { EXIT_MISMATCH }))
        }
    }
}

fn dedup(mut v: Vec<Suite>) -> Vec<Suite> {
    v.sort_unstable();
    v.dedup();
    v
}

fn ado_command(format: Format, p: u32, s: i64, method: Method, mmax: Option<i64>) -> adoforge_core::Result<Output> {
    let mut results: Vec<(String, AdoPolynomial)> = Vec::new();
    let wants = |m: Method| method == m || method == Method::All;
    if wants(Method::Closed) {
        let a = if p == 3 { ado3_closed(s)? } else { ado4(s)? };
        results.push(("closed".into(), a));
    }
    if wants(Method::Algorithm) {
        if p == 4 && s >= 7 {
            results.push(("algorithm".into(), ado4_algorithm(s)?));
        } else if method == Method::Algorithm {
            return Err(Error::InvalidArgument("--method algorithm needs --p 4 and --s >= 7".into()));
        }
    }
    if wants(Method::FromFk) {
        let k = TorusKnot::two_strand(s)?;
        let (a, m) = match mmax {
            Some(m) => (ado_from_fk_with(p, &k, m)?, m),
            None => {
                let e = ado_from_fk(p, &k)?;
                (e.ado, e.m_max)
            }
        };
        results.push((format!("from-fk (m <= {m})"), a));
    }
    let n = 2 * s + 1;
    let items: Vec<(String, &Sparse<i64, _>)> =
        results.iter().map(|(m, a)| (format!("ADO{p}[T(2,{n})] {m}"), &a.poly)).collect();
    let mut out = emit_many(format, &items, &["x"], true);
    let mut code = EXIT_OK;
    for pair in results.windows(2) {
        let c = compare_up_to_normalization(&pair[0].1, &pair[1].1, true);
        if !c.is_match() {
            code = EXIT_MISMATCH;
        }
        if format == Format::Text {
            out.push_str(&format!("{} vs {}: {c}\n", pair[0].0, pair[1].0));
        }
    }
    Ok(Output::with_code(out, code))
}
