//! Sparse Laurent polynomials over an exact coefficient ring.
//!
//! [`Sparse`] is keyed by an exponent type: `i64` for univariate objects
//! (a [`HalfLaurent`] stores the exponent of `x^{1/2}`, i.e. twice the
//! x-exponent) and fixed-size arrays for multivariate ones such as [`MPoly`]
//! in `(x, q, a, t)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::{Coeff, FieldCoeff, Rational};

/// Exponent monoid of a sparse polynomial.
pub trait Exponent: Copy + Ord + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    /// Sum of exponents.
    ///
    /// # Panics
    /// Panics on 64-bit overflow.
    fn plus(self, other: Self) -> Self;
    fn negate(self) -> Self;
    fn to_vec(self) -> Vec<i64>;
    fn from_slice(v: &[i64]) -> Option<Self>;
}

impl Exponent for i64 {
    fn zero() -> Self {
        0
    }
    fn plus(self, other: Self) -> Self {
        self.checked_add(other).expect("exponent overflow")
    }
    fn negate(self) -> Self {
        self.checked_neg().expect("exponent overflow")
    }
    fn to_vec(self) -> Vec<i64> {
        vec![self]
    }
    fn from_slice(v: &[i64]) -> Option<Self> {
        match v {
            [e] => Some(*e),
            _ => None,
        }
    }
}

impl<const N: usize> Exponent for [i64; N] {
    fn zero() -> Self {
        [0; N]
    }
    fn plus(self, other: Self) -> Self {
        let mut out = self;
        for (o, b) in out.iter_mut().zip(other) {
            *o = o.checked_add(b).expect("exponent overflow");
        }
        out
    }
    fn negate(self) -> Self {
        self.map(|e| e.checked_neg().expect("exponent overflow"))
    }
    fn to_vec(self) -> Vec<i64> {
        self.as_slice().to_vec()
    }
    fn from_slice(v: &[i64]) -> Option<Self> {
        v.try_into().ok()
    }
}

/// Sparse polynomial: exponent → nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Sparse<E, C> {
    terms: BTreeMap<E, C>,
}

/// Laurent polynomial in `x^{1/2}`; key `e` means `x^{e/2}`.
pub type HalfLaurent<C> = Sparse<i64, C>;

/// Laurent polynomial in `(x, q, a, t)` with rational coefficients.
pub type MPoly = Sparse<[i64; 4], Rational>;

impl<E: Exponent, C: Coeff> Default for Sparse<E, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Exponent, C: Coeff> Sparse<E, C> {
    #[must_use]
    pub fn zero() -> Self {
        Sparse { terms: BTreeMap::new() }
    }

    #[must_use]
    pub fn one() -> Self {
        Self::constant(C::one())
    }

    #[must_use]
    pub fn constant(c: C) -> Self {
        Self::monomial(E::zero(), c)
    }

    #[must_use]
    pub fn monomial(e: E, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Sparse { terms }
    }

    /// Collects terms, summing coefficients of repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (E, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    /// Adds `c·m^e` in place.
    pub fn add_term(&mut self, e: E, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.plus(c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&E, &C)> + '_ {
        self.terms.iter()
    }

    #[must_use]
    pub fn coeff(&self, e: &E) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    #[must_use]
    pub fn min_exponent(&self) -> Option<E> {
        self.terms.keys().next().copied()
    }

    #[must_use]
    pub fn max_exponent(&self) -> Option<E> {
        self.terms.keys().next_back().copied()
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &c.negated());
        }
        out
    }

    #[must_use]
    pub fn neg(&self) -> Self {
        self.map_coeffs(C::negated)
    }

    #[must_use]
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|v| v.times(c))
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.plus(*e2), &c1.times(c2));
            }
        }
        out
    }

    /// Multiplies by the monomial `c·m^e`.
    #[must_use]
    pub fn mul_monomial(&self, e: E, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Sparse { terms: self.terms.iter().map(|(k, v)| (k.plus(e), v.times(c))).collect() }
    }

    #[must_use]
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    #[must_use]
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Sparse<E, D> {
        Sparse {
            terms: self
                .terms
                .iter()
                .filter_map(|(e, c)| {
                    let d = f(c);
                    (!d.is_zero()).then_some((*e, d))
                })
                .collect(),
        }
    }

    /// Re-keys every term, combining collisions.
    #[must_use]
    pub fn map_exponents<F: Exponent>(&self, f: impl Fn(E) -> F) -> Sparse<F, C> {
        Sparse::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    #[must_use]
    pub fn filter(&self, keep: impl Fn(&E) -> bool) -> Self {
        Sparse { terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Negates every exponent.
    #[must_use]
    pub fn mirror(&self) -> Self {
        Sparse { terms: self.terms.iter().map(|(e, c)| (e.negate(), c.clone())).collect() }
    }
}

impl<C: Coeff> Sparse<i64, C> {
    /// `x^{1/2}`-power monomial `c·x^{e/2}`.
    #[must_use]
    pub fn half_monomial(e: i64, c: C) -> Self {
        Self::monomial(e, c)
    }

    /// `x^{k/2} − x^{−k/2}`.
    #[must_use]
    pub fn antisym(k: i64) -> Self {
        Self::from_terms([(k, C::one()), (-k, C::one().negated())])
    }

    /// Substitutes `x → 1/x`.
    #[must_use]
    pub fn invert_x(&self) -> Self {
        self.mirror()
    }

    /// Substitutes `x → x^k`.
    ///
    /// # Errors
    /// [`Error::Substitution`] when `k == 0`.
    pub fn compose_power(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Substitution("a nonzero power".into()));
        }
        Ok(self.map_exponents(|e| e.checked_mul(k).expect("exponent overflow")))
    }

    /// True when every exponent is even, i.e. the polynomial lies in `x^{±1}`.
    #[must_use]
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }
}

impl<C: FieldCoeff> Sparse<i64, C> {
    /// Substitutes `x → c·x`; `c` must be a unit and exponents integral.
    ///
    /// # Errors
    /// [`Error::Substitution`] for a zero `c` or a half-integral exponent.
    pub fn scale_x(&self, c: &C) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Substitution("a unit scale factor".into()));
        }
        if !self.has_integer_exponents() {
            return Err(Error::Substitution("integral exponents for x -> c x".into()));
        }
        let cinv = c.inverse()?;
        let power = |k: i64| -> C {
            let base = if k < 0 { &cinv } else { c };
            (0..k.unsigned_abs()).fold(C::one(), |acc, _| acc.times(base))
        };
        Ok(Sparse { terms: self.terms.iter().map(|(e, v)| (*e, v.times(&power(e / 2)))).collect() })
    }

    /// Laurent long division `p = q·d + r`.
    ///
    /// Both operands are shifted to start at exponent 0, divided as ordinary
    /// polynomials from the top, and shifted back. The remainder is zero
    /// exactly when `d` divides `p` in the Laurent ring.
    ///
    /// # Errors
    /// [`Error::ZeroDivisor`] when `d` is zero.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let (dlo, dhi) = match (d.min_exponent(), d.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::ZeroDivisor),
        };
        let Some(plo) = self.min_exponent() else {
            return Ok((Self::zero(), Self::zero()));
        };
        let lead_inv = d.terms[&dhi].inverse()?;
        let ddeg = dhi - dlo;
        let dd: Vec<(i64, C)> = d.terms.iter().map(|(e, c)| (e - dlo, c.clone())).collect();
        let mut rem: BTreeMap<i64, C> = self.terms.iter().map(|(e, c)| (e - plo, c.clone())).collect();
        let mut quot = Self::zero();
        while let Some((&top, _)) = rem.iter().next_back() {
            if top < ddeg {
                break;
            }
            let c = rem[&top].times(&lead_inv);
            let shift = top - ddeg;
            for (e, dc) in &dd {
                let k = e + shift;
                let nv = rem.get(&k).cloned().unwrap_or_else(C::zero).minus(&c.times(dc));
                if nv.is_zero() {
                    rem.remove(&k);
                } else {
                    rem.insert(k, nv);
                }
            }
            quot.add_term(shift + plo - dlo, &c);
        }
        let r = Sparse { terms: rem.into_iter().map(|(e, c)| (e + plo, c)).collect() };
        Ok((quot, r))
    }

    /// Exact quotient, failing with the remainder as witness.
    ///
    /// # Errors
    /// [`Error::Inexact`] when `d ∤ self`, [`Error::ZeroDivisor`] when `d = 0`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            let (e, c) = r.terms.iter().next_back().expect("nonzero remainder");
            Err(Error::Inexact(format!("remainder term {c:?} at exponent {e}")))
        }
    }

    /// Ascending inverse of `p / (c₀·m^{e₀})` truncated at exponent `order`.
    ///
    /// With `c₀·m^{e₀}` the lowest term of `p`, the result `s` starts at
    /// exponent 0 and satisfies `p·s = m^{e₀} + O(m^{e₀+order+1})`.
    ///
    /// # Errors
    /// [`Error::ZeroDivisor`] for the zero polynomial.
    pub fn series_invert(&self, order: i64) -> Result<Self> {
        let Some(lo) = self.min_exponent() else {
            return Err(Error::ZeroDivisor);
        };
        let c0inv = self.terms[&lo].inverse()?;
        let u: Vec<(i64, C)> =
            self.terms.iter().skip(1).map(|(e, c)| (e - lo, c.times(&c0inv))).collect();
        let mut s: Vec<C> = Vec::with_capacity(order.max(0) as usize + 1);
        for k in 0..=order.max(-1) {
            if k == 0 {
                s.push(C::one());
                continue;
            }
            let mut acc = C::zero();
            for (j, uj) in &u {
                if *j > k {
                    break;
                }
                let prev = &s[(k - j) as usize];
                if !prev.is_zero() {
                    acc = acc.minus(&uj.times(prev));
                }
            }
            s.push(acc);
        }
        Ok(Sparse::from_terms(s.into_iter().enumerate().map(|(k, c)| (k as i64, c.times(&c0inv)))))
    }
}

impl Sparse<[i64; 4], Rational> {
    /// Monomial `c·x^ex q^eq a^ea t^et`.
    #[must_use]
    pub fn mono(ex: i64, eq: i64, ea: i64, et: i64, c: Rational) -> Self {
        Self::monomial([ex, eq, ea, et], c)
    }

    /// True when no term depends on `q`.
    #[must_use]
    pub fn is_q_free(&self) -> bool {
        self.terms.keys().all(|e| e[1] == 0)
    }

    /// Exact division by a polynomial in `q` alone.
    ///
    /// # Errors
    /// [`Error::InvalidArgument`] if `d` involves other variables,
    /// [`Error::Inexact`] when some `(x, a, t)` slice is not divisible.
    pub fn exact_div_q(&self, d: &Self) -> Result<Self> {
        if d.terms.keys().any(|e| e[0] != 0 || e[2] != 0 || e[3] != 0) {
            return Err(Error::InvalidArgument("divisor must be a polynomial in q".into()));
        }
        let dq: HalfLaurent<Rational> = d.map_exponents(|e| e[1]);
        let mut groups: BTreeMap<[i64; 3], HalfLaurent<Rational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            groups.entry([e[0], e[2], e[3]]).or_default().add_term(e[1], c);
        }
        let mut out = Self::zero();
        for (k, g) in groups {
            let q = g.exact_div(&dq)?;
            for (eq, c) in q.iter() {
                out.add_term([k[0], *eq, k[1], k[2]], c);
            }
        }
        Ok(out)
    }
}

/// Human-readable form, highest term first, e.g. `i x^3 + (1 + i) x - 2`.
///
/// With `half` set, a univariate exponent `e` prints as `e/2`.
#[must_use]
pub fn pretty<E: Exponent, C: Coeff + fmt::Display>(p: &Sparse<E, C>, vars: &[&str], half: bool) -> String {
    let mut out = String::new();
    for (e, c) in p.iter().rev() {
        let mut mono = Vec::new();
        for (k, v) in e.to_vec().into_iter().enumerate() {
            let name = vars.get(k).copied().unwrap_or("?");
            let exp = if half && v % 2 == 0 {
                Some(v / 2)
            } else if half {
                mono.push(format!("{name}^({v}/2)"));
                None
            } else {
                Some(v)
            };
            match exp {
                Some(0) | None => {}
                Some(1) => mono.push(name.to_string()),
                Some(x) => mono.push(format!("{name}^{x}")),
            }
        }
        let mono = mono.join(" ");
        let cs = c.to_string();
        let compound = cs.trim_start_matches('-').contains([' ', '+']);
        let (neg, body) = if compound {
            (false, format!("({cs})"))
        } else if let Some(rest) = cs.strip_prefix('-') {
            (true, rest.to_string())
        } else {
            (false, cs)
        };
        let term = match (body.as_str(), mono.is_empty()) {
            (b, true) => b.to_string(),
            ("1", false) => mono,
            (b, false) => format!("{b} {mono}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, root_of_unity, Cyclotomic};

    type P = HalfLaurent<Rational>;

    fn p(terms: &[(i64, i64)]) -> P {
        P::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn basic_products() {
        // (x - 1)(x + 1) = x^2 - 1
        assert_eq!(p(&[(2, 1), (0, -1)]).mul(&p(&[(2, 1), (0, 1)])), p(&[(4, 1), (0, -1)]));
        // (x^{1/2} - x^{-1/2})^2 = x - 2 + 1/x
        let a = P::antisym(1);
        assert_eq!(a.mul(&a), p(&[(2, 1), (0, -2), (-2, 1)]));
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn substitutions() {
        let s = p(&[(4, 1), (-4, 1)]);
        assert_eq!(s.invert_x(), s);
        let x: HalfLaurent<Cyclotomic> = HalfLaurent::monomial(2, Cyclotomic::from_int(1));
        assert_eq!(x.scale_x(&root_of_unity(3, 2)).unwrap(), HalfLaurent::monomial(2, root_of_unity(3, 2)));
        let d = p(&[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)]);
        assert_eq!(d.compose_power(3).unwrap(), p(&[(12, 1), (6, -1), (0, 1), (-6, -1), (-12, 1)]));
        assert!(p(&[(1, 1)]).scale_x(&int(2)).is_err());
    }

    #[test]
    fn divisions() {
        let (q, r) = P::antisym(2).div_rem(&P::antisym(1)).unwrap();
        assert_eq!(q, p(&[(1, 1), (-1, 1)]));
        assert!(r.is_zero());
        let q = P::antisym(6).exact_div(&P::antisym(2)).unwrap();
        assert_eq!(q, p(&[(4, 1), (0, 1), (-4, 1)]));
        let (q, r) = p(&[(2, 1), (0, 1)]).div_rem(&p(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(q, p(&[(0, 1)]));
        assert_eq!(r, p(&[(0, 2)]));
        assert!(P::antisym(1).div_rem(&P::zero()).is_err());
    }

    #[test]
    fn geometric_series() {
        let s = p(&[(0, 1), (2, -1)]).series_invert(7).unwrap();
        assert_eq!(s, p(&[(0, 1), (2, 1), (4, 1), (6, 1)]));
        assert_eq!(P::one().series_invert(5).unwrap(), P::one());
    }

    #[test]
    fn q_division() {
        // (1 - q^2) x / (1 - q) = (1 + q) x
        let n = MPoly::mono(1, 0, 0, 0, int(1)).add(&MPoly::mono(1, 2, 0, 0, int(-1)));
        let d = MPoly::mono(0, 0, 0, 0, int(1)).add(&MPoly::mono(0, 1, 0, 0, int(-1)));
        let q = n.exact_div_q(&d).unwrap();
        assert_eq!(q, MPoly::mono(1, 0, 0, 0, int(1)).add(&MPoly::mono(1, 1, 0, 0, int(1))));
        assert!(MPoly::mono(1, 0, 0, 0, int(1)).exact_div_q(&d).is_err());
    }
}
