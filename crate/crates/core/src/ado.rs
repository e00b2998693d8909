//! ADO_p polynomials of the two-strand torus knots T(2,2s+1).
//!
//! Three sources are provided: closed forms ([`ado3_closed`], [`ado4_seed`],
//! [`ado4_algorithm`]), extraction from F_K at q = ζ_p ([`ado_from_fk`]) and,
//! in [`crate::rmatrix`], the tangle evaluation. [`compare_up_to_normalization`]
//! relates them.
//!
//! Polynomials are symmetric in x ↔ 1/x. Displayed forms list the
//! non-negative half; the constant term appears once.

use std::fmt;

use rayon::prelude::*;

use crate::alexander::alexander_torus;
use crate::error::{Error, Result};
use crate::exact_arith::{int, root_of_unity, Coeff, Cyclotomic};
use crate::laurent::{pretty, HalfLaurent};
use crate::torus_fk::{default_m_max, fk_at_root, TorusKnot};

/// ADO_p of a torus knot, as a symmetric Laurent polynomial in x over Q(ζ_p).
#[derive(Clone, Debug, PartialEq)]
pub struct AdoPolynomial {
    pub p: u32,
    pub knot: TorusKnot,
    pub poly: HalfLaurent<Cyclotomic>,
}

impl AdoPolynomial {
    /// Builds the symmetric polynomial from its non-negative half
    /// `(x-exponent, coefficient)`; the constant term is used once.
    ///
    /// # Panics
    /// Panics on a negative exponent.
    #[must_use]
    pub fn from_half(p: u32, knot: TorusKnot, half: &[(i64, Cyclotomic)]) -> Self {
        let mut poly = HalfLaurent::zero();
        for (e, c) in half {
            assert!(*e >= 0, "half lists non-negative exponents");
            poly.add_term(2 * e, c);
            if *e > 0 {
                poly.add_term(-2 * e, c);
            }
        }
        AdoPolynomial { p, knot, poly }
    }

    /// Non-negative half, highest exponent first, as x-exponents.
    #[must_use]
    pub fn half(&self) -> Vec<(i64, Cyclotomic)> {
        self.poly.iter().rev().filter(|(e, _)| **e >= 0).map(|(e, c)| (e / 2, c.clone())).collect()
    }

    /// Top x-exponent.
    #[must_use]
    pub fn degree(&self) -> i64 {
        self.poly.max_exponent().unwrap_or(0) / 2
    }

    #[must_use]
    pub fn is_weyl_symmetric(&self) -> bool {
        self.poly.invert_x() == self.poly && self.poly.has_integer_exponents()
    }
}

impl fmt::Display for AdoPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = HalfLaurent::from_terms(self.half().into_iter().map(|(e, c)| (2 * e, c)));
        write!(f, "{} + (x -> 1/x)", pretty(&half, &["x"], true))
    }
}

/// `a + b·i` in Q(ζ₄).
#[must_use]
pub fn gaussian(a: i64, b: i64) -> Cyclotomic {
    &Cyclotomic::from_int(a) + &root_of_unity(4, 1).scale(&int(b))
}

fn zeta3(k: i64) -> Cyclotomic {
    root_of_unity(3, k)
}

fn two_strand(s: i64) -> Result<TorusKnot> {
    TorusKnot::two_strand(s)
}

/// ADO₃[T(2,2s+1)] from the three-family closed form.
///
/// With `(A, B, C)` fixed by `s mod 3`, the coefficient of `x^e` for
/// `0 ≤ e ≤ 2s` is the entry `(2s − e) mod 6` of the cycle `A, A, B, C, C, 0`.
///
/// # Errors
/// [`Error::InvalidArgument`] for `s < 1`.
pub fn ado3_closed(s: i64) -> Result<AdoPolynomial> {
    let knot = two_strand(s)?;
    let one = Cyclotomic::from_int(1);
    let (a, b, c) = match s.rem_euclid(3) {
        1 => (zeta3(1), &zeta3(1) - &zeta3(-1), -zeta3(-1)),
        2 => (zeta3(-1), &zeta3(-1) - &one, -one.clone()),
        _ => (one.clone(), &one - &zeta3(1), -zeta3(1)),
    };
    let cycle = [a.clone(), a, b, c.clone(), c, Cyclotomic::from_int(0)];
    let half: Vec<(i64, Cyclotomic)> =
        (0..=2 * s).rev().map(|e| (e, cycle[(2 * s - e).rem_euclid(6) as usize].clone())).collect();
    Ok(AdoPolynomial::from_half(3, knot, &half))
}

type GaussHalf = &'static [(i64, i64, i64)];

/// Non-negative halves `(exponent, re, im)` of the tabulated ADO₄ polynomials.
const ADO4_SEEDS: [(i64, GaussHalf); 6] = [
    (3, &[(3, 0, 1), (2, 0, 1), (1, 1, 1), (0, 1, 2)]),
    (5, &[(6, -1, 0), (5, -1, 0), (4, -1, 1), (3, -1, 1), (2, 0, 1), (1, 1, 1), (0, 1, 0)]),
    (
        7,
        &[(9, 0, -1), (8, 0, -1), (7, -1, -1), (6, -1, -1), (5, -1, 0), (4, -1, 0), (2, 0, -1), (1, 0, -2), (0, 1, -2)],
    ),
    (
        9,
        &[(12, 1, 0), (11, 1, 0), (10, 1, -1), (9, 1, -1), (8, 0, -1), (7, 0, -1), (4, 1, 0), (2, 0, -1), (1, 0, -2), (0, -1, -2)],
    ),
    (
        11,
        &[
            (15, 0, 1),
            (14, 0, 1),
            (13, 1, 1),
            (12, 1, 1),
            (11, 1, 0),
            (10, 1, 0),
            (7, 0, 1),
            (6, 0, 1),
            (5, 1, 1),
            (4, 1, 2),
            (3, 1, 1),
            (2, 0, 1),
            (1, -1, 1),
            (0, -1, 0),
        ],
    ),
    (
        13,
        &[
            (18, -1, 0),
            (17, -1, 0),
            (16, -1, 1),
            (15, -1, 1),
            (14, 0, 1),
            (13, 0, 1),
            (10, -1, 0),
            (9, -1, 0),
            (8, -1, 1),
            (7, -1, 1),
            (6, 0, 1),
            (5, 1, 1),
            (4, 1, 0),
            (3, 1, 1),
            (2, 0, 1),
            (1, -1, 1),
            (0, -1, 2),
        ],
    ),
];

/// Tabulated ADO₄[T(2,n)] for `n ∈ {3, 5, 7, 9, 11, 13}`.
///
/// # Errors
/// [`Error::InvalidArgument`] for any other `n`.
pub fn ado4_seed(n: i64) -> Result<AdoPolynomial> {
    let (_, half) = ADO4_SEEDS
        .iter()
        .find(|(m, _)| *m == n)
        .ok_or_else(|| Error::InvalidArgument(format!("no tabulated ADO4 for T(2,{n})")))?;
    let half: Vec<(i64, Cyclotomic)> = half.iter().map(|&(e, a, b)| (e, gaussian(a, b))).collect();
    Ok(AdoPolynomial::from_half(4, two_strand((n - 1) / 2)?, &half))
}

/// Leading coefficient sextuple of ADO₄[T(2,2s+1)], selected by `s mod 4`.
#[must_use]
pub fn ado4_leading_block(s: i64) -> [Cyclotomic; 6] {
    let (x, y, z) = match s.rem_euclid(4) {
        3 => ((0, -1), (-1, -1), (-1, 0)),
        0 => ((1, 0), (1, -1), (0, -1)),
        1 => ((0, 1), (1, 1), (1, 0)),
        _ => ((-1, 0), (-1, 1), (0, 1)),
    };
    let g = |(a, b): (i64, i64)| gaussian(a, b);
    [g(x), g(x), g(y), g(y), g(z), g(z)]
}

/// Intermediate results of the inductive ADO₄ construction, as non-negative
/// halves indexed by x-exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct Ado4Steps {
    pub step1: HalfLaurent<Cyclotomic>,
    pub step2: HalfLaurent<Cyclotomic>,
    pub step3: HalfLaurent<Cyclotomic>,
    pub result: AdoPolynomial,
}

/// ADO₄ for any `s ≥ 1`: tabulated below 7, inductive from 7 on.
///
/// # Errors
/// [`Error::InvalidArgument`] for `s < 1`.
pub fn ado4(s: i64) -> Result<AdoPolynomial> {
    if s >= 7 {
        ado4_algorithm(s)
    } else {
        ado4_seed(2 * s + 1)
    }
}

/// Runs the four steps of the inductive construction for `s ≥ 7`.
///
/// 1. The block of [`ado4_leading_block`] on `x^{3s}, …, x^{3s−5}`.
/// 2. The non-negative half of ADO₄[T(2,2s−7)] shifted up by `x⁴`.
/// 3. Coefficients of `x³, …, x⁰` copied from `x⁵, …, x⁸`.
/// 4. Mirror under x → 1/x.
///
/// # Errors
/// [`Error::InvalidArgument`] for `s < 7`.
pub fn ado4_steps(s: i64) -> Result<Ado4Steps> {
    if s < 7 {
        return Err(Error::InvalidArgument(format!("inductive ADO4 needs s >= 7, got {s}")));
    }
    let x = |e: i64| 2 * e;
    let mut step1 = HalfLaurent::zero();
    for (j, c) in ado4_leading_block(s).iter().enumerate() {
        step1.add_term(x(3 * s - j as i64), c);
    }
    let inner = ado4(s - 4)?;
    let mut step2 = step1.clone();
    for (e, c) in inner.half() {
        step2.add_term(x(e + 4), &c);
    }
    let mut step3 = step2.clone();
    for k in 1..=4 {
        step3.add_term(x(4 - k), &step2.coeff(&x(4 + k)));
    }
    let half: Vec<(i64, Cyclotomic)> = step3.iter().rev().map(|(e, c)| (e / 2, c.clone())).collect();
    let result = AdoPolynomial::from_half(4, two_strand(s)?, &half);
    Ok(Ado4Steps { step1, step2, step3, result })
}

/// ADO₄[T(2,2s+1)] for `s ≥ 7` by the inductive construction.
///
/// # Errors
/// [`Error::InvalidArgument`] for `s < 7`.
pub fn ado4_algorithm(s: i64) -> Result<AdoPolynomial> {
    Ok(ado4_steps(s)?.result)
}

/// ADO_p extracted from F_K together with the truncation that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Extraction {
    pub ado: AdoPolynomial,
    pub m_max: i64,
}

/// `ADO_p = Δ_K(x^p)·F_K(x, ζ_p) / (x^{1/2} − x^{−1/2})` at a fixed truncation.
///
/// The positive half `f₊` of F_K is multiplied by `Δ_K(x^p)`; the product
/// must vanish outside the half-exponent band `|e| ≤ 2(p−1)·deg Δ + 1` wherever
/// truncation cannot reach. The band part `G` gives `G(x) − G(1/x)`, which
/// must be divisible by `x^{1/2} − x^{−1/2}`.
///
/// # Errors
/// [`Error::Unstable`] when `m_max` is too small or a coefficient outside
/// the band survives; [`Error::Mismatch`] when the division is inexact or the
/// quotient is not symmetric; [`Error::InvalidArgument`] for `p < 2`.
pub fn ado_from_fk_with(p: u32, knot: &TorusKnot, m_max: i64) -> Result<AdoPolynomial> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("ADO_p needs p >= 2, got {p}")));
    }
    let f = fk_at_root(knot, p, m_max)?;
    let d = alexander_torus(knot).degree();
    let pl = i64::from(p);
    let delta = alexander_torus(knot).poly.compose_power(pl)?.map_coeffs(|c| Cyclotomic::from_rational(c.clone()));
    let g = delta.mul(&f.positive_half);
    let band = 2 * (pl - 1) * d + 1;
    let exact_top = m_max - 2 * pl * d;
    if exact_top <= band {
        return Err(Error::Unstable(format!("m_max = {m_max} leaves no room above the band |e| <= {band}")));
    }
    if let Some((e, c)) = g.iter().find(|(e, _)| (**e > band && **e <= exact_top) || **e < -band) {
        return Err(Error::Unstable(format!("coefficient {c} at x^({e}/2) outside the band |e| <= {band}")));
    }
    let gb = g.filter(|e| e.abs() <= band);
    let sym = gb.sub(&gb.invert_x());
    let poly = sym
        .exact_div(&HalfLaurent::antisym(1))
        .map_err(|e| Error::Mismatch(format!("{knot}, p = {p}: {e}")))?;
    let ado = AdoPolynomial { p, knot: *knot, poly };
    if !ado.is_weyl_symmetric() {
        return Err(Error::Mismatch(format!("{knot}, p = {p}: extracted polynomial is not x <-> 1/x symmetric")));
    }
    Ok(ado)
}

/// [`ado_from_fk_with`] at the default truncation, retried once at twice the
/// truncation if the first run has not stabilized.
///
/// # Errors
/// As [`ado_from_fk_with`]; [`Error::Unstable`] only if the retry fails too.
pub fn ado_from_fk(p: u32, knot: &TorusKnot) -> Result<Extraction> {
    let m = default_m_max(knot, p);
    match ado_from_fk_with(p, knot, m) {
        Ok(ado) => Ok(Extraction { ado, m_max: m }),
        Err(Error::Unstable(_)) => ado_from_fk_with(p, knot, 2 * m).map(|ado| Extraction { ado, m_max: 2 * m }),
        Err(e) => Err(e),
    }
}

/// How two polynomials relate under `A(x) = u·x^{k/2}·B(c·x)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Comparison {
    Equal,
    /// `c = ζ_{root_order}^{c_power}`; `shift` is a half-exponent.
    EqualAfter { c_power: i64, root_order: u32, u: Cyclotomic, shift: i64 },
    Different(String),
}

impl Comparison {
    #[must_use]
    pub fn is_match(&self) -> bool {
        !matches!(self, Comparison::Different(_))
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Equal => write!(f, "equal"),
            Comparison::EqualAfter { c_power, root_order, u, shift } => {
                write!(f, "equal after x -> ζ{root_order}^{c_power} x, factor ({u})")?;
                if *shift != 0 {
                    write!(f, " x^({shift}/2)")?;
                }
                Ok(())
            }
            Comparison::Different(w) => write!(f, "different: {w}"),
        }
    }
}

fn matches_with(
    a: &HalfLaurent<Cyclotomic>,
    b: &HalfLaurent<Cyclotomic>,
    c: &Cyclotomic,
) -> Option<(Cyclotomic, i64)> {
    let bc = b.scale_x(c).ok()?;
    let (atop, btop) = (a.max_exponent()?, bc.max_exponent()?);
    let shift = atop - btop;
    let u = a.coeff(&atop).times(&bc.coeff(&btop).inv().ok()?);
    (bc.mul_monomial(shift, &u) == *a).then_some((u, shift))
}

/// Decides whether `A(x) = u·x^k·B(c·x)` for some constant `u`, monomial
/// shift `k` and `c` a power of ζ_{2p} (only `c = 1` unless `allow_rescale`).
#[must_use]
pub fn compare_polys(
    a: &HalfLaurent<Cyclotomic>,
    b: &HalfLaurent<Cyclotomic>,
    p: u32,
    allow_rescale: bool,
) -> Comparison {
    if a == b {
        return Comparison::Equal;
    }
    if a.is_zero() || b.is_zero() {
        return Comparison::Different("exactly one side is zero".into());
    }
    let order = 2 * p;
    let powers = if allow_rescale { i64::from(order) } else { 1 };
    for j in 0..powers {
        if let Some((u, shift)) = matches_with(a, b, &root_of_unity(order, j)) {
            if j == 0 && shift == 0 && u == Cyclotomic::from_int(1) {
                return Comparison::Equal;
            }
            return Comparison::EqualAfter { c_power: j, root_order: order, u, shift };
        }
    }
    Comparison::Different(first_difference(a, b))
}

fn first_difference(a: &HalfLaurent<Cyclotomic>, b: &HalfLaurent<Cyclotomic>) -> String {
    let mut exps: Vec<i64> = a.iter().chain(b.iter()).map(|(e, _)| *e).collect();
    exps.sort_unstable();
    exps.dedup();
    for e in exps.into_iter().rev() {
        let (ca, cb) = (a.coeff(&e), b.coeff(&e));
        if ca != cb {
            return format!("x^({e}/2): {ca} vs {cb}");
        }
    }
    "no coefficientwise difference".into()
}

/// [`compare_polys`] on two ADO polynomials of the same `p`.
#[must_use]
pub fn compare_up_to_normalization(a: &AdoPolynomial, b: &AdoPolynomial, allow_rescale: bool) -> Comparison {
    if a.p != b.p {
        return Comparison::Different(format!("p = {} vs p = {}", a.p, b.p));
    }
    compare_polys(&a.poly, &b.poly, a.p, allow_rescale)
}

/// Extracts `ado_from_fk(p, T(2,2s+1))` for every `s` in `range` in parallel.
///
/// # Errors
/// The first extraction error in `s` order.
pub fn ado_from_fk_sweep(p: u32, range: std::ops::RangeInclusive<i64>) -> Result<Vec<Extraction>> {
    let ss: Vec<i64> = range.collect();
    ss.par_iter().map(|&s| ado_from_fk(p, &two_strand(s)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Cyclotomic {
        gaussian(a, b)
    }

    #[test]
    fn ado3_closed_examples() {
        let z = |k| zeta3(k);
        let one = Cyclotomic::from_int(1);
        let a = ado3_closed(2).unwrap();
        assert_eq!(
            a.half(),
            vec![(4, z(-1)), (3, z(-1)), (2, &z(-1) - &one), (1, -one.clone()), (0, -one.clone())]
        );
        let a = ado3_closed(3).unwrap();
        assert_eq!(
            a.half(),
            vec![(6, one.clone()), (5, one.clone()), (4, &one - &z(1)), (3, -z(1)), (2, -z(1)), (0, one.clone())]
        );
        let a = ado3_closed(4).unwrap();
        let d = &z(1) - &z(-1);
        assert_eq!(
            a.half(),
            vec![(8, z(1)), (7, z(1)), (6, d.clone()), (5, -z(-1)), (4, -z(-1)), (2, z(1)), (1, z(1)), (0, d)]
        );
        assert!(a.is_weyl_symmetric());
    }

    #[test]
    fn seeds_are_symmetric_with_expected_degree() {
        for n in [3, 5, 7, 9, 11, 13] {
            let a = ado4_seed(n).unwrap();
            assert!(a.is_weyl_symmetric());
            assert_eq!(a.degree(), 3 * (n - 1) / 2);
        }
        assert!(ado4_seed(15).is_err());
        assert_eq!(ado4_seed(3).unwrap().half()[3], (0, g(1, 2)));
    }

    #[test]
    fn inductive_step_for_t2_15() {
        let st = ado4_steps(7).unwrap();
        let want: Vec<(i64, Cyclotomic)> = vec![
            (21, g(0, -1)),
            (20, g(0, -1)),
            (19, g(-1, -1)),
            (18, g(-1, -1)),
            (17, g(-1, 0)),
            (16, g(-1, 0)),
            (13, g(0, -1)),
            (12, g(0, -1)),
            (11, g(-1, -1)),
            (10, g(-1, -1)),
            (9, g(-1, 0)),
            (8, g(-1, 0)),
            (6, g(0, -1)),
            (5, g(0, -2)),
            (4, g(1, -2)),
            (3, g(0, -2)),
            (2, g(0, -1)),
            (0, g(-1, 0)),
        ];
        assert_eq!(st.result.half(), want);
        assert_eq!(st.step1.len(), 6);
        assert!(ado4_steps(6).is_err());
    }

    #[test]
    fn from_fk_small_cases() {
        let k = TorusKnot::two_strand(1).unwrap();
        let a = ado_from_fk(3, &k).unwrap().ado;
        assert_eq!(compare_up_to_normalization(&ado3_closed(1).unwrap(), &a, false), Comparison::Equal);
        let k = TorusKnot::two_strand(2).unwrap();
        let a = ado_from_fk(4, &k).unwrap().ado;
        assert_eq!(a, ado4_seed(5).unwrap());
        assert!(ado_from_fk_with(1, &k, 50).is_err());
        assert!(matches!(ado_from_fk_with(3, &k, 9), Err(Error::Unstable(_))));
    }

    #[test]
    fn comparison_finds_rescaling() {
        let a = ado3_closed(2).unwrap();
        assert_eq!(compare_up_to_normalization(&a, &a, true), Comparison::Equal);
        let b = AdoPolynomial { poly: a.poly.scale_x(&zeta3(1)).unwrap(), ..a.clone() };
        match compare_up_to_normalization(&a, &b, true) {
            Comparison::EqualAfter { c_power, root_order, u, shift } => {
                assert_eq!(root_of_unity(root_order, c_power), zeta3(-1));
                assert_eq!(u, Cyclotomic::from_int(1));
                assert_eq!(shift, 0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(!compare_up_to_normalization(&a, &b, false).is_match());
        let c = ado3_closed(3).unwrap();
        assert!(!compare_up_to_normalization(&a, &c, true).is_match());
    }
}
