//! R-matrix evaluation of the (1,1)-tangle of T(2,2s+1) at q = ζ_{2r}.
//!
//! With `y = q^α` and `z = q^{α²}`, every quantity is a finite sum of
//! `c·q^{e0}·Y^{e1}·Z^{e2}`; the q-power is folded into the cyclotomic
//! coefficient, so a [`TangleElement`] is a Laurent polynomial in `(Y, Z)`.

use std::fmt;

use rayon::prelude::*;

use crate::ado::{ado3_closed, ado4, ado_from_fk, compare_polys, Comparison};
use crate::error::{Error, Result};
use crate::exact_arith::{root_of_unity, Coeff, Cyclotomic, FieldCoeff};
use crate::laurent::{HalfLaurent, Sparse};
use crate::torus_fk::TorusKnot;

/// Laurent polynomial in `(Y, Z)` over a cyclotomic field.
pub type TangleElement = Sparse<[i64; 2], Cyclotomic>;

/// `q^{e0 + e1·α + e2·α²}`, i.e. `q^{e0}·Y^{e1}·Z^{e2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlphaMonomial {
    pub e0: i64,
    pub e1: i64,
    pub e2: i64,
}

impl AlphaMonomial {
    #[must_use]
    pub fn new(e0: i64, e1: i64, e2: i64) -> Self {
        AlphaMonomial { e0, e1, e2 }
    }

    /// The monomial times `c`, with `q = ζ_{2r}`.
    #[must_use]
    pub fn element(self, r: u32, c: &Cyclotomic) -> TangleElement {
        TangleElement::monomial([self.e1, self.e2], c.times(&qpow(r, self.e0)))
    }
}

/// `q^e` at `q = ζ_{2r}`.
#[must_use]
pub fn qpow(r: u32, e: i64) -> Cyclotomic {
    root_of_unity(2 * r, e)
}

fn one() -> Cyclotomic {
    Cyclotomic::from_int(1)
}

/// `Π_{i=1}^k (1 − q^{w + step·(i−1)})` as a number.
fn poch_scalar(r: u32, w: i64, step: i64, k: i64) -> Cyclotomic {
    (0..k).fold(one(), |acc, i| acc.times(&one().minus(&qpow(r, w + step * i))))
}

/// Entry `R^{a,b}_{c,d}` (or of `R⁻¹`) at `q = ζ_{2r}`.
///
/// The inverse carries `z⁻¹` and an extra `q^{2(a−c)}`; with those, and its
/// labels read as `(b, a) → (c, d)` in [`PairMatrix::crossing`], it is the
/// exact inverse of `R`.
///
/// # Panics
/// Panics if a color is outside `0..r`.
#[must_use]
pub fn r_entry(a: i64, b: i64, c: i64, d: i64, r: u32, inverse: bool) -> TangleElement {
    let ri = i64::from(r);
    assert!([a, b, c, d].iter().all(|&v| (0..ri).contains(&v)), "colors must lie in 0..r");
    if a - c != d - b || a < c || d < b {
        return TangleElement::zero();
    }
    let k = a - c;
    let (e0, ey, z, den) = if inverse {
        ((c - a) * (a + b + 1) - 2 * a * b + 2 * (a - c), b + a, -1, poch_scalar(r, 2, 2, k))
    } else {
        ((c - a) * (a + b + 1) + 2 * c * d, -d - c, 1, poch_scalar(r, -2, -2, k))
    };
    assert!(!den.is_zero(), "Pochhammer denominator vanishes for a - c = {k}");
    let sign = if k % 2 == 0 { one() } else { Cyclotomic::from_int(-1) };
    let mut out = AlphaMonomial::new(e0, ey + k, z).element(r, &sign);
    for i in 0..k {
        let f = TangleElement::one().sub(&AlphaMonomial::new(2 * (a - 1) - 2 * i, -2, 0).element(r, &one()));
        out = out.mul(&f);
    }
    let scalar = poch_scalar(r, 2 * (b + 1), 2, k).times(&den.inverse().expect("nonzero"));
    out.scale(&scalar)
}

/// Cup and cap weights `(ε_a, ε*_a, η_a, η*_a)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryWeights {
    pub eps: TangleElement,
    pub eps_star: TangleElement,
    pub eta: TangleElement,
    pub eta_star: TangleElement,
}

/// # Panics
/// Panics if `a` is outside `0..r`.
#[must_use]
pub fn boundary_weights(a: i64, r: u32) -> BoundaryWeights {
    let ri = i64::from(r);
    assert!((0..ri).contains(&a), "color must lie in 0..r");
    BoundaryWeights {
        eps: TangleElement::one(),
        eps_star: AlphaMonomial::new(2 * a * (ri - 1), 1 - ri, 0).element(r, &one()),
        eta: TangleElement::one(),
        eta_star: AlphaMonomial::new(2 * a * (1 - ri), ri - 1, 0).element(r, &one()),
    }
}

/// `Π_{j=2}^r (q^{j−1+shift}·Y − q^{1−j−shift}·Y⁻¹)` up to the shift of `α`:
/// with `shift = 1` this is `1/d[y]`, with `shift = 0` it is `1/d[y]` at `α − 1`.
fn dim_product(r: u32, shift: i64) -> TangleElement {
    let mut out = TangleElement::one();
    for j in 2..=i64::from(r) {
        let f = AlphaMonomial::new(j - 1 + shift, 1, 0)
            .element(r, &one())
            .sub(&AlphaMonomial::new(1 - j - shift, -1, 0).element(r, &one()));
        out = out.mul(&f);
    }
    out
}

/// `d[y]` in the closed form `(−Y)^{r−1} q^{r(r+1)/2 − 1} / (q⁴Y²;q²)_{r−1}`,
/// checked against the product form by cross-multiplication.
///
/// # Panics
/// Panics if `r < 2` or the two forms disagree.
#[must_use]
pub fn modified_dim(r: u32) -> (TangleElement, TangleElement) {
    assert!(r >= 2, "modified dimension needs r >= 2");
    let ri = i64::from(r);
    let sign = if (ri - 1) % 2 == 0 { one() } else { Cyclotomic::from_int(-1) };
    let num = AlphaMonomial::new(ri * (ri + 1) / 2 - 1, ri - 1, 0).element(r, &sign);
    let mut den = TangleElement::one();
    for i in 0..ri - 1 {
        den = den.mul(&TangleElement::one().sub(&AlphaMonomial::new(4 + 2 * i, 2, 0).element(r, &one())));
    }
    assert_eq!(num.mul(&dim_product(r, 1)), den, "closed and product forms of d[y] disagree");
    (num, den)
}

/// Square array of tangle elements indexed by color pairs `(a, b) ↦ a·r + b`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairMatrix {
    r: u32,
    entries: Vec<TangleElement>,
}

impl PairMatrix {
    fn dim(&self) -> usize {
        (self.r * self.r) as usize
    }

    #[must_use]
    pub fn identity(r: u32) -> Self {
        let n = (r * r) as usize;
        let mut entries = vec![TangleElement::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = TangleElement::one();
        }
        PairMatrix { r, entries }
    }

    /// The single crossing: `(a, b)` on top maps to `(d, c)` below with weight
    /// `R^{a,b}_{c,d}`; for the inverse `(b, a)` maps to `(c, d)`.
    #[must_use]
    pub fn crossing(r: u32, inverse: bool) -> Self {
        let n = (r * r) as usize;
        let ri = i64::from(r);
        let mut entries = vec![TangleElement::zero(); n * n];
        for a in 0..ri {
            for b in 0..ri {
                for c in 0..ri {
                    for d in 0..ri {
                        let e = r_entry(a, b, c, d, r, inverse);
                        if !e.is_zero() {
                            let (top, bottom) = if inverse { (b * ri + a, c * ri + d) } else { (a * ri + b, d * ri + c) };
                            entries[(top * ri * ri + bottom) as usize] = e;
                        }
                    }
                }
            }
        }
        PairMatrix { r, entries }
    }

    /// Entry from pair `top` to pair `bottom`.
    #[must_use]
    pub fn get(&self, top: (i64, i64), bottom: (i64, i64)) -> &TangleElement {
        let ri = i64::from(self.r);
        let n = self.dim() as i64;
        &self.entries[((top.0 * ri + top.1) * n + bottom.0 * ri + bottom.1) as usize]
    }

    /// Contraction over the middle pair: `self` on top, `other` below.
    #[must_use]
    pub fn then(&self, other: &Self) -> Self {
        let n = self.dim();
        let entries = (0..n * n)
            .into_par_iter()
            .map(|ik| {
                let (i, k) = (ik / n, ik % n);
                let mut acc = TangleElement::zero();
                for j in 0..n {
                    let (a, b) = (&self.entries[i * n + j], &other.entries[j * n + k]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect();
        PairMatrix { r: self.r, entries }
    }

    /// `k`-fold contraction by square-and-multiply.
    #[must_use]
    pub fn power(&self, mut k: u32) -> Self {
        let mut out = PairMatrix::identity(self.r);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                out = out.then(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.then(&base);
            }
        }
        out
    }

    /// Z-exponents occurring in any nonzero entry.
    #[must_use]
    pub fn z_degrees(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.entries.iter().flat_map(|e| e.iter().map(|(x, _)| x[1])).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// The 2-strand (1,1)-tangle of T(2,2s+1) at `q = ζ_{2r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusTangle {
    pub s: u32,
    pub r: u32,
}

impl TorusTangle {
    /// # Errors
    /// [`Error::InvalidArgument`] if `s == 0` or `r < 2`.
    pub fn new(s: u32, r: u32) -> Result<Self> {
        if s == 0 || r < 2 {
            return Err(Error::InvalidArgument(format!("tangle needs s >= 1 and r >= 2, got s={s}, r={r}")));
        }
        Ok(TorusTangle { s, r })
    }

    #[must_use]
    pub fn crossings(&self) -> u32 {
        2 * self.s + 1
    }

    /// Product of the crossings with the left boundary colors pinned to 0 and
    /// the right strand closed by `η·ε*`, without `d[y]`.
    #[must_use]
    pub fn closed(&self) -> TangleElement {
        let m = PairMatrix::crossing(self.r, false).power(self.crossings());
        let mut out = TangleElement::zero();
        for a in 0..i64::from(self.r) {
            let w = boundary_weights(a, self.r);
            let v = m.get((0, a), (0, a));
            if !v.is_zero() {
                out = out.add(&v.mul(&w.eta).mul(&w.eps_star));
            }
        }
        out
    }
}

/// `N^r_K(α)` as `numerator / denominator`, with `d[y]` in its closed form.
///
/// # Errors
/// As [`TorusTangle::new`].
pub fn evaluate_torus_tangle(s: u32, r: u32) -> Result<(TangleElement, TangleElement)> {
    let t = TorusTangle::new(s, r)?;
    let (num, den) = modified_dim(r);
    Ok((t.closed().mul(&num), den))
}

/// `α → α + delta`: `(e0, e1, e2) ↦ (e0 + e1·δ + e2·δ², e1 + 2e2·δ, e2)`.
#[must_use]
pub fn shift_alpha(p: &TangleElement, r: u32, delta: i64) -> TangleElement {
    let mut out = TangleElement::zero();
    for (e, c) in p.iter() {
        let f = qpow(r, e[0] * delta + e[1] * delta * delta);
        out.add_term([e[0] + 2 * e[1] * delta, e[1]], &c.times(&f));
    }
    out
}

/// Normalized invariant as a Laurent polynomial in Y; key `k` stands for `Y^k`
/// (equivalently `x^{k/2}` after `Y → x^{1/2}`).
#[derive(Clone, Debug, PartialEq)]
pub struct NHat {
    pub s: u32,
    pub r: u32,
    /// Z-power stripped from the raw tangle (one per crossing).
    pub z_power: i64,
    pub poly: HalfLaurent<Cyclotomic>,
}

impl fmt::Display for NHat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::laurent::pretty(&self.poly, &["y"], false))
    }
}

/// `i^{r−1}·(Y^r − Y^{−r})·N^r_K(α − 1)` for the zero-framed knot.
///
/// The framing factor `(Y^{1−r}Z)^{2s+1}` is removed before the shift; the
/// shifted `d[y]` denominator must divide `(Y^r − Y^{−r})` times the tangle.
///
/// # Errors
/// [`Error::Mismatch`] if the Z-degree is not uniform; [`Error::Inexact`]
/// carrying the remainder if the division fails.
pub fn normalized_nhat(s: u32, r: u32) -> Result<NHat> {
    let t = TorusTangle::new(s, r)?;
    let raw = t.closed();
    let zs: Vec<i64> = {
        let mut v: Vec<i64> = raw.iter().map(|(e, _)| e[1]).collect();
        v.dedup();
        v
    };
    let [z_power] = zs[..] else {
        return Err(Error::Mismatch(format!("Z-degrees {zs:?} are not uniform")));
    };
    let w = i64::from(t.crossings());
    let ri = i64::from(r);
    let framed = raw.mul_monomial([-(1 - ri) * w, -w], &one());
    let shifted = shift_alpha(&framed, r, -1);
    if let Some((e, _)) = shifted.iter().find(|(e, _)| e[1] != 0) {
        return Err(Error::Mismatch(format!("Z^{} survives the framing correction", e[1])));
    }
    let y: HalfLaurent<Cyclotomic> = shifted.map_exponents(|e| e[0]);
    let antisym = HalfLaurent::from_terms([(ri, one()), (-ri, Cyclotomic::from_int(-1))]);
    let d: HalfLaurent<Cyclotomic> = dim_product(r, 0).map_exponents(|e| e[0]);
    let poly = y.mul(&antisym).exact_div(&d)?.scale(&root_of_unity(4, ri - 1));
    Ok(NHat { s, r, z_power, poly })
}

/// `num[N^r_K(α − 1)] = N̂ / (Y − Y⁻¹)`.
///
/// # Errors
/// As [`normalized_nhat`]; [`Error::Inexact`] if `Y − Y⁻¹` does not divide.
pub fn num_extract(s: u32, r: u32) -> Result<HalfLaurent<Cyclotomic>> {
    let n = normalized_nhat(s, r)?;
    n.poly.exact_div(&HalfLaurent::from_terms([(1, one()), (-1, Cyclotomic::from_int(-1))]))
}

/// What [`ado_compare`] checks against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareTarget {
    /// `ado3_closed` for r = 3, `ado4` for r = 4.
    Closed,
    /// Extraction from the F_K series.
    FromFk,
}

/// Compares `num[N^r]` with `Y → x^{1/2}` against the ADO_r polynomial of
/// T(2,2s+1), up to monomial, constant and `x → c·x`.
///
/// # Errors
/// [`Error::InvalidArgument`] for a closed-form comparison with `r ∉ {3, 4}`;
/// propagates evaluation and extraction errors.
pub fn ado_compare(s: u32, r: u32, target: CompareTarget) -> Result<Comparison> {
    let num = num_extract(s, r)?;
    let knot = TorusKnot::two_strand(i64::from(s))?;
    let ado = match (target, r) {
        (CompareTarget::Closed, 3) => ado3_closed(i64::from(s))?,
        (CompareTarget::Closed, 4) => ado4(i64::from(s))?,
        (CompareTarget::Closed, _) => {
            return Err(Error::InvalidArgument(format!("no closed form for r = {r}")));
        }
        (CompareTarget::FromFk, _) => ado_from_fk(r, &knot)?.ado,
    };
    Ok(compare_polys(&ado.poly, &num, r, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_entries() {
        let r = 3;
        assert!(r_entry(0, 1, 1, 0, r, false).is_zero());
        assert!(r_entry(2, 0, 1, 0, r, false).is_zero());
        // diagonal: q^{2cd} Z Y^{−d−c}
        assert_eq!(r_entry(1, 2, 1, 2, r, false), AlphaMonomial::new(4, -3, 1).element(r, &one()));
    }

    #[test]
    fn weights() {
        let w = boundary_weights(0, 3);
        assert_eq!(w.eps_star, TangleElement::monomial([-2, 0], one()));
        assert_eq!(w.eta_star, TangleElement::monomial([2, 0], one()));
        let w = boundary_weights(1, 3);
        assert_eq!(w.eps_star, TangleElement::monomial([-2, 0], qpow(3, 4)));
        assert_eq!(w.eps_star.mul(&w.eta_star), TangleElement::one());
    }

    #[test]
    fn modified_dim_forms_agree() {
        for r in 2..=6 {
            let _ = modified_dim(r);
        }
    }

    #[test]
    fn shift_examples() {
        let r = 3;
        let y = TangleElement::monomial([1, 0], one());
        assert_eq!(shift_alpha(&y, r, -1), TangleElement::monomial([1, 0], qpow(r, -1)));
        let z = TangleElement::monomial([0, 1], one());
        assert_eq!(shift_alpha(&z, r, -1), TangleElement::monomial([-2, 1], qpow(r, 1)));
        let p = r_entry(2, 0, 1, 1, r, false);
        assert_eq!(shift_alpha(&shift_alpha(&p, r, -1), r, 1), p);
    }

    #[test]
    fn crossing_inverse() {
        for r in 2..=5 {
            let x = PairMatrix::crossing(r, false);
            let xi = PairMatrix::crossing(r, true);
            assert_eq!(x.then(&xi), PairMatrix::identity(r), "r = {r}");
            assert_eq!(xi.then(&x), PairMatrix::identity(r), "r = {r}");
        }
    }

    #[test]
    fn trefoil_nhat() {
        let q = |e| qpow(3, e);
        let want = HalfLaurent::from_terms([(5, q(2)), (-5, -q(2)), (1, q(1)), (-1, -q(1))]);
        assert_eq!(normalized_nhat(1, 3).unwrap().poly, want);
    }
}
