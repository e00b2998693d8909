//! The series F_K(x, q) of a right-handed torus knot T(s,t).
//!
//! ```text
//! F_{T(s,t)}(x,q) = ½ q^{(s−1)(t−1)/2} Σ_{m odd ≥ 1} ε_m q^{(m² − (st−s−t)²)/(4st)} (x^{m/2} − x^{−m/2})
//! ```
//!
//! with ε_m ∈ {−1, 0, +1} read off from m mod 2st.

use std::fmt;

use num::integer::Integer;
use num::traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::alexander::alexander_torus;
use crate::error::{Error, Result};
use crate::exact_arith::{rat, root_of_unity, Coeff, Cyclotomic, Rational};
use crate::laurent::HalfLaurent;

/// Torus knot T(s,t) with s, t > 1 coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusKnot {
    s: i64,
    t: i64,
}

impl TorusKnot {
    /// # Errors
    /// [`Error::InvalidArgument`] unless `s, t > 1` and `gcd(s,t) = 1`.
    pub fn new(s: i64, t: i64) -> Result<Self> {
        if s <= 1 || t <= 1 {
            return Err(Error::InvalidArgument(format!("T({s},{t}) needs s, t > 1")));
        }
        if s.gcd(&t) != 1 {
            return Err(Error::InvalidArgument(format!("T({s},{t}) needs gcd(s,t) = 1")));
        }
        Ok(TorusKnot { s, t })
    }

    /// T(2, 2n+1).
    ///
    /// # Errors
    /// [`Error::InvalidArgument`] for `n < 1`.
    pub fn two_strand(n: i64) -> Result<Self> {
        Self::new(2, 2 * n + 1)
    }

    #[must_use]
    pub fn s(&self) -> i64 {
        self.s
    }

    #[must_use]
    pub fn t(&self) -> i64 {
        self.t
    }

    /// `st − s − t`, the smallest m with ε_m ≠ 0.
    #[must_use]
    pub fn base_residue(&self) -> i64 {
        self.s * self.t - self.s - self.t
    }

    /// The four residues mod 2st: `[st+s+t, st−s−t]` carry ε = −1, `[st+s−t, st−s+t]` carry ε = +1.
    #[must_use]
    pub fn residues(&self) -> ([i64; 2], [i64; 2]) {
        let (s, t) = (self.s, self.t);
        let n = 2 * s * t;
        (
            [(s * t + s + t).rem_euclid(n), (s * t - s - t).rem_euclid(n)],
            [(s * t + s - t).rem_euclid(n), (s * t - s + t).rem_euclid(n)],
        )
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.s, self.t)
    }
}

/// ε_m for odd `m ≥ 1`; 0 for every m outside the four residue classes.
#[must_use]
pub fn epsilon(k: &TorusKnot, m: i64) -> i8 {
    let r = m.rem_euclid(2 * k.s * k.t);
    let (minus, plus) = k.residues();
    if minus.contains(&r) {
        -1
    } else if plus.contains(&r) {
        1
    } else {
        0
    }
}

/// One nonzero summand `ε_m q^{q_exponent}` of F_K.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSeriesTerm {
    pub m: i64,
    pub sign: i8,
    #[serde(serialize_with = "ser_rational")]
    pub q_exponent: Rational,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::exact_arith::rational_to_json(q).serialize(s)
}

/// Truncated `½ q^Δ Σ_m ε_m q^{e_m} (x^{m/2} − x^{−m/2})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSeries {
    #[serde(serialize_with = "ser_rational")]
    pub prefactor_exponent: Rational,
    pub terms: Vec<QSeriesTerm>,
    pub truncation_m: i64,
}

impl QSeries {
    /// `Δ + e_m` as an integer.
    ///
    /// # Errors
    /// [`Error::Mismatch`] when the combined exponent is not integral.
    pub fn combined_exponent(&self, term: &QSeriesTerm) -> Result<i64> {
        let e = &self.prefactor_exponent + &term.q_exponent;
        if !e.is_integer() {
            return Err(Error::Mismatch(format!("q-exponent {e} of m = {} is not integral", term.m)));
        }
        e.to_integer().to_i64().ok_or_else(|| Error::InvalidArgument("q-exponent overflow".into()))
    }
}

/// F_K truncated at `m ≤ m_max`.
///
/// # Panics
/// Panics if some combined q-exponent fails to be an integer.
#[must_use]
pub fn fk_series(k: &TorusKnot, m_max: i64) -> QSeries {
    let (s, t) = (k.s, k.t);
    let b = k.base_residue();
    let series = QSeries {
        prefactor_exponent: rat((s - 1) * (t - 1), 2),
        terms: (1..=m_max)
            .step_by(2)
            .filter_map(|m| {
                let sign = epsilon(k, m);
                (sign != 0).then(|| QSeriesTerm { m, sign, q_exponent: rat(m * m - b * b, 4 * s * t) })
            })
            .collect(),
        truncation_m: m_max.max(0),
    };
    for term in &series.terms {
        series.combined_exponent(term).expect("torus-knot exponents are integral");
    }
    series
}

/// F_K at q = ζ_p: the positive half `Σ c_m x^{m/2}` of the odd object
/// `Σ c_m (x^{m/2} − x^{−m/2})`.
#[derive(Clone, Debug, PartialEq)]
pub struct FkAtRoot {
    pub p: u32,
    pub positive_half: HalfLaurent<Cyclotomic>,
    /// The represented object is `positive_half(x) − positive_half(1/x)`.
    pub odd_mirror: bool,
    pub truncation_m: i64,
}

impl FkAtRoot {
    /// Both halves as one Laurent polynomial.
    #[must_use]
    pub fn full(&self) -> HalfLaurent<Cyclotomic> {
        self.positive_half.sub(&self.positive_half.invert_x())
    }
}

/// Specializes F_K at q = ζ_p.
///
/// # Errors
/// [`Error::InvalidArgument`] for `p < 1`; [`Error::Mismatch`] on a
/// non-integral combined exponent.
pub fn fk_at_root(k: &TorusKnot, p: u32, m_max: i64) -> Result<FkAtRoot> {
    if p < 1 {
        return Err(Error::InvalidArgument("root order must be positive".into()));
    }
    let series = fk_series(k, m_max);
    let half = Cyclotomic::from_rational(rat(1, 2));
    let mut positive_half = HalfLaurent::zero();
    for term in &series.terms {
        let e = series.combined_exponent(term)?;
        let c = root_of_unity(p, e).scale(&rat(i64::from(term.sign), 1)).times(&half);
        positive_half.add_term(term.m, &c);
    }
    Ok(FkAtRoot { p, positive_half, odd_mirror: true, truncation_m: series.truncation_m })
}

/// Default truncation for root-of-unity work, `4·s·t·p + (st − s − t)`.
#[must_use]
pub fn default_m_max(k: &TorusKnot, p: u32) -> i64 {
    4 * k.s * k.t * i64::from(p) + k.base_residue()
}

/// Default truncation for [`mmr_order0_check`] at window `x_order`.
#[must_use]
pub fn default_mmr_m_max(k: &TorusKnot, x_order: i64) -> i64 {
    2 * x_order + 2 * k.s * k.t + k.base_residue()
}

/// Result of the order-ħ⁰ comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum MmrOutcome {
    Agree { m_max: i64 },
    Mismatch { offset: i64, expected: Rational, found: Rational },
    Inconclusive(String),
}

impl MmrOutcome {
    #[must_use]
    pub fn is_agree(&self) -> bool {
        matches!(self, MmrOutcome::Agree { .. })
    }
}

fn mmr_window(k: &TorusKnot, x_order: i64, m_max: i64) -> Result<Vec<Rational>> {
    // q → 1 in the positive half; each x^{m/2}/(x^{1/2} − x^{−1/2}) becomes
    // −x^{(m+1)/2}/(1 − x), and the two halves contribute equally.
    let mut h: HalfLaurent<Rational> = HalfLaurent::zero();
    for m in (1..=m_max).step_by(2) {
        let e = epsilon(k, m);
        if e != 0 {
            h.add_term(m + 1, &rat(-i64::from(e), 1));
        }
    }
    let lo = h.min_exponent().ok_or_else(|| Error::Unstable("no nonzero terms below m_max".into()))?;
    let reach = lo + 2 * x_order;
    if m_max + 1 < reach {
        return Err(Error::Unstable(format!("m_max = {m_max} does not reach the window")));
    }
    let mut out = Vec::with_capacity(x_order as usize + 1);
    let mut running = <Rational as Zero>::zero();
    for j in 0..=x_order {
        running += h.coeff(&(lo + 2 * j));
        out.push(running.clone());
    }
    Ok(out)
}

/// Compares the q → 1 limit of `F_K/(x^{1/2} − x^{−1/2})` with the ascending
/// expansion of `1/Δ_K(x)` over the first `x_order + 1` coefficients, both
/// taken relative to their lowest monomial. The window is recomputed with
/// `2·m_max` and must not move.
///
/// # Errors
/// [`Error::InvalidArgument`] for a negative window.
pub fn mmr_order0_check(k: &TorusKnot, x_order: i64, m_max: i64) -> Result<MmrOutcome> {
    if x_order < 0 {
        return Err(Error::InvalidArgument("x_order must be non-negative".into()));
    }
    let (a, b) = match (mmr_window(k, x_order, m_max), mmr_window(k, x_order, 2 * m_max)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Ok(MmrOutcome::Inconclusive(e.to_string())),
    };
    if a != b {
        return Ok(MmrOutcome::Inconclusive(format!("window changes between m_max = {m_max} and {}", 2 * m_max)));
    }
    let delta = alexander_torus(k).poly;
    let inv = delta.series_invert(2 * x_order)?;
    for (j, found) in a.into_iter().enumerate() {
        let expected = inv.coeff(&(2 * j as i64));
        if expected != found {
            return Ok(MmrOutcome::Mismatch { offset: j as i64, expected, found });
        }
    }
    Ok(MmrOutcome::Agree { m_max })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t23() -> TorusKnot {
        TorusKnot::new(2, 3).unwrap()
    }

    #[test]
    fn knot_validation() {
        assert!(TorusKnot::new(2, 4).is_err());
        assert!(TorusKnot::new(1, 3).is_err());
        assert_eq!(TorusKnot::two_strand(1).unwrap(), t23());
    }

    #[test]
    fn epsilon_classes() {
        assert_eq!(epsilon(&t23(), 1), -1);
        assert_eq!(epsilon(&t23(), 5), 1);
        assert_eq!(epsilon(&t23(), 3), 0);
    }

    #[test]
    fn trefoil_series() {
        let f = fk_series(&t23(), 13);
        assert_eq!(f.prefactor_exponent, rat(1, 1));
        let got: Vec<(i64, i8, Rational)> = f.terms.iter().map(|t| (t.m, t.sign, t.q_exponent.clone())).collect();
        let want: Vec<(i64, i8, Rational)> =
            [(1, -1, 0), (5, 1, 1), (7, 1, 2), (11, -1, 5), (13, -1, 7)].iter().map(|&(m, s, e)| (m, s, rat(e, 1))).collect();
        assert_eq!(got, want);
        let f = fk_series(&TorusKnot::new(2, 5).unwrap(), 3);
        assert_eq!(f.prefactor_exponent, rat(2, 1));
        assert_eq!(f.terms, vec![QSeriesTerm { m: 3, sign: -1, q_exponent: rat(0, 1) }]);
        assert!(fk_series(&t23(), 0).terms.is_empty());
    }

    #[test]
    fn trefoil_at_cube_root() {
        let f = fk_at_root(&t23(), 3, 7).unwrap();
        let h = |k| Cyclotomic::from_rational(rat(1, 2)).times(&root_of_unity(3, k));
        let want = HalfLaurent::from_terms([(1, h(1).negated()), (5, h(2)), (7, h(3))]);
        assert_eq!(f.positive_half, want);
        let f1 = fk_at_root(&t23(), 1, 7).unwrap();
        assert!(f1.positive_half.iter().all(|(_, c)| c.order() == 1));
        assert_eq!(f.full().invert_x(), f.full().neg());
    }

    #[test]
    fn mmr_small_windows() {
        for (s, t) in [(2, 3), (2, 5)] {
            let k = TorusKnot::new(s, t).unwrap();
            assert!(mmr_order0_check(&k, 6, default_mmr_m_max(&k, 6)).unwrap().is_agree());
        }
        assert!(mmr_order0_check(&t23(), 0, 5).unwrap().is_agree());
        assert!(matches!(mmr_order0_check(&t23(), 20, 3).unwrap(), MmrOutcome::Inconclusive(_)));
    }
}
