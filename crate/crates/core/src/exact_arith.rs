//! Exact rationals and elements of cyclotomic fields Q(ζ_n).
//!
//! A [`Cyclotomic`] stores its coefficients against the power basis
//! `1, ζ, …, ζ^{φ(n)−1}` modulo the cyclotomic polynomial Φ_n, so equality
//! of elements of the same order is equality of coefficient lists. Binary
//! operations on elements of different orders first embed both operands into
//! Q(ζ_lcm).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
#[must_use]
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
#[must_use]
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Coefficient ring used by the sparse polynomial types.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

/// A [`Coeff`] ring in which every nonzero element is invertible.
pub trait FieldCoeff: Coeff {
    /// Multiplicative inverse.
    ///
    /// # Errors
    /// [`Error::ZeroInverse`] for the zero element.
    fn inverse(&self) -> Result<Self>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        int(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl FieldCoeff for Rational {
    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.recip())
        }
    }
}

/// Euler's totient.
#[must_use]
pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out as usize
}

const PHI_CACHE: usize = 257;
static CYCLOTOMIC_POLYS: [OnceLock<Vec<i64>>; PHI_CACHE] = [const { OnceLock::new() }; PHI_CACHE];

fn compute_cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let den = cyclotomic_poly(d);
        let dd = den.len() - 1;
        let mut quot = vec![0i64; num.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = num[k + dd];
            quot[k] = c;
            if c != 0 {
                for (j, dj) in den.iter().enumerate() {
                    num[k + j] -= c * dj;
                }
            }
        }
        assert!(num.iter().all(|&c| c == 0), "Φ_{d} does not divide");
        num = quot;
    }
    num
}

/// Integer coefficients of Φ_n, lowest degree first (monic, degree φ(n)).
#[must_use]
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if (n as usize) < PHI_CACHE {
        CYCLOTOMIC_POLYS[n as usize]
            .get_or_init(|| compute_cyclotomic_poly(n))
            .clone()
    } else {
        compute_cyclotomic_poly(n)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Element of Q(ζ_n), ζ_n = e^{2πi/n}.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Reduces a dense list of ζ_n-power coefficients into canonical form.
    fn reduce(order: u32, raw: Vec<Rational>) -> Self {
        let n = order as usize;
        let deg = euler_phi(order);
        let mut v: Vec<Rational> = vec![Zero::zero(); n.max(deg)];
        for (k, c) in raw.into_iter().enumerate() {
            if !Zero::is_zero(&c) {
                v[k % n] += c;
            }
        }
        let phi = cyclotomic_poly(order);
        for k in (deg..v.len()).rev() {
            if Zero::is_zero(&v[k]) {
                continue;
            }
            let c = std::mem::replace(&mut v[k], Zero::zero());
            for (j, pj) in phi.iter().enumerate().take(deg) {
                if *pj != 0 {
                    v[k - deg + j] -= &c * BigInt::from(*pj);
                }
            }
        }
        v.truncate(deg);
        Cyclotomic { order, coeffs: v }
    }

    /// Builds `Σ coeffs[k] ζ_n^k`, reducing modulo Φ_n.
    ///
    /// # Panics
    /// Panics if `order == 0`.
    #[must_use]
    pub fn from_power_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Self::reduce(order, coeffs)
    }

    /// The rational `q` viewed in Q(ζ_1) = Q.
    #[must_use]
    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![q] }
    }

    #[must_use]
    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    #[must_use]
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical power-basis coefficients (length φ(order)).
    #[must_use]
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Returns the rational value when the element lies in Q.
    #[must_use]
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Zero::zero))
        } else {
            None
        }
    }

    /// Embeds into Q(ζ_m) for a multiple `m` of the current order.
    ///
    /// # Errors
    /// [`Error::OrderMismatch`] when `order ∤ m`.
    pub fn lift(&self, m: u32) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch { from: self.order, to: m });
        }
        if m == self.order {
            return Ok(self.clone());
        }
        let step = (m / self.order) as usize;
        let mut raw = vec![Zero::zero(); step * self.coeffs.len().max(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Ok(Self::reduce(m, raw))
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.order, other.order);
        (
            self.lift(m).expect("lcm is a multiple"),
            other.lift(m).expect("lcm is a multiple"),
        )
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.order != other.order {
            let (a, b) = self.lifted_pair(other);
            return a.add_impl(&b);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.order != other.order {
            let (a, b) = self.lifted_pair(other);
            return a.mul_impl(&b);
        }
        if self.order == 1 {
            return Cyclotomic { order: 1, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        let n = self.coeffs.len();
        let mut raw: Vec<Rational> = vec![Zero::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !Zero::is_zero(b) {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.order, raw)
    }

    #[must_use]
    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse, by solving `x·y = 1` in the power basis.
    ///
    /// # Errors
    /// [`Error::ZeroInverse`] if `self` is zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n = self.coeffs.len();
        if n == 1 {
            return Ok(Cyclotomic { order: self.order, coeffs: vec![self.coeffs[0].recip()] });
        }
        // Column j of the multiplication matrix is self·ζ^j.
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            cols.push(self.mul_impl(&Self::root_of_unity(self.order, j as i64)).coeffs);
        }
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { One::one() } else { Zero::zero() });
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !Zero::is_zero(&m[r][col])).ok_or(Error::ZeroInverse)?;
            m.swap(col, piv);
            let p = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &p;
            }
            for r in 0..n {
                if r != col && !Zero::is_zero(&m[r][col]) {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        Ok(Cyclotomic { order: self.order, coeffs: m.into_iter().map(|row| row[n].clone()).collect() })
    }

    /// Integer power; negative exponents invert first.
    ///
    /// # Errors
    /// [`Error::ZeroInverse`] for a negative power of zero.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyclotomic { order: self.order, coeffs: Self::one_coeffs(self.order) };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        Ok(acc)
    }

    fn one_coeffs(order: u32) -> Vec<Rational> {
        let mut v = vec![Zero::zero(); euler_phi(order)];
        v[0] = One::one();
        v
    }

    /// ζ_n^k in canonical form.
    ///
    /// # Panics
    /// Panics if `n == 0`.
    #[must_use]
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity needs n >= 1");
        let e = k.rem_euclid(i64::from(n)) as usize;
        let mut raw = vec![Zero::zero(); e + 1];
        raw[e] = One::one();
        Self::reduce(n, raw)
    }

    /// Image under the Galois automorphism ζ ↦ ζ^{-1} (complex conjugation).
    #[must_use]
    pub fn conj(&self) -> Self {
        let n = i64::from(self.order);
        let mut raw = vec![Zero::zero(); self.order as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(-(k as i64)).rem_euclid(n) as usize] += c;
        }
        Self::reduce(self.order, raw)
    }

    /// Floating approximation, for display and sanity checks.
    ///
    /// Each rational coefficient is rounded once to `f64`, so the error is a
    /// small multiple of the coefficient magnitudes times 2^-52.
    #[must_use]
    pub fn to_complex(&self) -> Complex<f64> {
        let n = f64::from(self.order);
        self.coeffs.iter().enumerate().fold(Complex::new(0.0, 0.0), |acc, (k, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            acc + Complex::from_polar(v, 2.0 * std::f64::consts::PI * k as f64 / n)
        })
    }
}

/// ζ_n^k.
#[must_use]
pub fn root_of_unity(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.lifted_pair(other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclotomic {}

impl Coeff for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_int(0)
    }
    fn one() -> Self {
        Cyclotomic::from_int(1)
    }
    fn from_i64(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_impl(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.add_impl(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn negated(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl FieldCoeff for Cyclotomic {
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.minus(rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.negated()
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_impl(&rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self.minus(&rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.mul_impl(&rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.negated()
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_signed_terms(terms: &[(Rational, String)]) -> String {
    let mut out = String::new();
    for (q, sym) in terms {
        if Zero::is_zero(q) {
            continue;
        }
        let neg = q.is_negative();
        let mag = q.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if sym.is_empty() {
            out.push_str(&fmt_rational(&mag));
        } else if One::is_one(&mag) {
            out.push_str(sym);
        } else {
            out.push_str(&fmt_rational(&mag));
            out.push_str(sym);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Cyclotomic {
    /// Q(ζ₄) prints as `a + bi`, Q(ζ₃) as `a + bζ₃`, other orders as power sums.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = |k: usize| -> String {
            match (self.order, k) {
                (_, 0) => String::new(),
                (4, 1) => "i".to_string(),
                (n, 1) => format!("ζ{n}"),
                (n, k) => format!("ζ{n}^{k}"),
            }
        };
        let terms: Vec<(Rational, String)> =
            self.coeffs.iter().enumerate().map(|(k, c)| (c.clone(), sym(k))).collect();
        f.write_str(&fmt_signed_terms(&terms))
    }
}

/// JSON encoding of a rational as `["num","den"]`.
#[must_use]
pub fn rational_to_json(q: &Rational) -> [String; 2] {
    [q.numer().to_string(), q.denom().to_string()]
}

/// Parses `["num","den"]`.
///
/// # Errors
/// [`Error::Parse`] on malformed integers or a zero denominator.
pub fn rational_from_json(pair: &[String; 2]) -> Result<Rational> {
    let n: BigInt = pair[0].parse().map_err(|_| Error::Parse(format!("bad numerator {:?}", pair[0])))?;
    let d: BigInt = pair[1].parse().map_err(|_| Error::Parse(format!("bad denominator {:?}", pair[1])))?;
    if Zero::is_zero(&d) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    order: u32,
    coeffs: Vec<[String; 2]>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicJson { order: self.order, coeffs: self.coeffs.iter().map(rational_to_json).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CyclotomicJson::deserialize(d)?;
        if raw.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        if raw.coeffs.len() > raw.order as usize {
            return Err(D::Error::custom("more coefficients than the order"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(rational_from_json)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(Cyclotomic::from_power_coeffs(raw.order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        root_of_unity(n, k)
    }

    #[test]
    fn small_roots() {
        assert_eq!(z(1, 0), Cyclotomic::from_int(1));
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(&z(3, 1) * &z(3, 2), Cyclotomic::from_int(1));
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(-1));
        assert_eq!(z(4, 1).inv().unwrap(), z(4, 3));
        assert_eq!(z(4, 3), -z(4, 1));
    }

    #[test]
    fn lift_embeds() {
        let m = z(2, 1).lift(6).unwrap();
        assert_eq!(m.order(), 6);
        assert_eq!(m, z(6, 3));
        assert!(z(4, 1).lift(6).is_err());
    }

    #[test]
    fn mixed_orders_meet_at_lcm() {
        let s = &z(4, 1) * &z(3, 1);
        assert_eq!(s.order(), 12);
        assert_eq!(s, z(12, 7));
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).iter().filter(|&&c| c == -2).count(), 2);
    }

    #[test]
    fn inverse_of_zero_is_error() {
        assert!(matches!(Cyclotomic::from_int(0).inv(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn complex_values() {
        let c = z(4, 1).to_complex();
        assert!((c.re).abs() < 1e-12 && (c.im - 1.0).abs() < 1e-12);
        let c = z(3, 1).to_complex();
        assert!((c.re + 0.5).abs() < 1e-12 && (c.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
        let c = (&Cyclotomic::from_int(1) + &z(2, 1)).to_complex();
        assert!(c.norm() < 1e-12);
    }

    #[test]
    fn display_forms() {
        let a = &Cyclotomic::from_int(1) - &(&z(4, 1) * &Cyclotomic::from_int(2));
        assert_eq!(a.to_string(), "1 - 2i");
        assert_eq!(z(3, 2).to_string(), "-1 - ζ3");
    }

    #[test]
    fn json_round_trip() {
        let a = &z(12, 5).scale(&rat(-3, 7)) + &Cyclotomic::from_int(2);
        let s = serde_json::to_string(&a).unwrap();
        let b: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&b).unwrap(), s);
    }
}
