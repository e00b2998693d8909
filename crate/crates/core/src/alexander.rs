//! Symmetric Alexander polynomials of torus knots.

use num::traits::{One, Zero};

use crate::error::Result;
use crate::exact_arith::{Coeff, Rational};
use crate::laurent::HalfLaurent;
use crate::torus_fk::TorusKnot;

/// Alexander polynomial in balanced form, `Δ(1/x) = Δ(x)` and `Δ(1) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlexanderPoly {
    pub poly: HalfLaurent<Rational>,
}

impl AlexanderPoly {
    /// Degree in x (half the top half-exponent).
    #[must_use]
    pub fn degree(&self) -> i64 {
        self.poly.max_exponent().unwrap_or(0) / 2
    }

    #[must_use]
    pub fn at_one(&self) -> Rational {
        self.poly.iter().fold(<Rational as Zero>::zero(), |acc, (_, c)| acc + c)
    }
}

/// `(x^{st/2} − x^{−st/2})(x^{1/2} − x^{−1/2}) / ((x^{s/2} − x^{−s/2})(x^{t/2} − x^{−t/2}))`.
///
/// # Panics
/// Panics if the division leaves a remainder, which cannot happen for coprime s, t.
#[must_use]
pub fn alexander_torus(k: &TorusKnot) -> AlexanderPoly {
    let (s, t) = (k.s(), k.t());
    let num = HalfLaurent::<Rational>::antisym(s * t).mul(&HalfLaurent::antisym(1));
    let den = HalfLaurent::<Rational>::antisym(s).mul(&HalfLaurent::antisym(t));
    let poly = num.exact_div(&den).expect("torus Alexander division is exact");
    debug_assert!(poly.invert_x() == poly);
    debug_assert!(One::is_one(&poly.iter().fold(<Rational as Zero>::zero(), |acc, (_, c)| acc.plus(c))));
    AlexanderPoly { poly }
}

/// `Δ_K(x^p)`.
///
/// # Errors
/// [`crate::Error::Substitution`] for `p == 0`.
pub fn alexander_composed(k: &TorusKnot, p: i64) -> Result<HalfLaurent<Rational>> {
    alexander_torus(k).poly.compose_power(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;

    fn x(coeffs: &[(i64, i64)]) -> HalfLaurent<Rational> {
        HalfLaurent::from_terms(coeffs.iter().map(|&(e, c)| (2 * e, int(c))))
    }

    #[test]
    fn two_strand_examples() {
        let t = |n| alexander_torus(&TorusKnot::two_strand(n).unwrap()).poly;
        assert_eq!(t(1), x(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(t(2), x(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]));
        assert_eq!(t(3), x(&[(3, 1), (2, -1), (1, 1), (0, -1), (-1, 1), (-2, -1), (-3, 1)]));
    }

    #[test]
    fn composed() {
        let k = TorusKnot::two_strand(1).unwrap();
        assert_eq!(alexander_composed(&k, 1).unwrap(), x(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(alexander_composed(&k, 3).unwrap(), x(&[(3, 1), (0, -1), (-3, 1)]));
        let k = TorusKnot::two_strand(2).unwrap();
        assert_eq!(alexander_composed(&k, 2).unwrap(), x(&[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)]));
    }

    #[test]
    fn symmetric_and_normalized() {
        for s in 2..=15 {
            for t in 2..=15 {
                let Ok(k) = TorusKnot::new(s, t) else { continue };
                let a = alexander_torus(&k);
                assert_eq!(a.poly.invert_x(), a.poly);
                assert!(One::is_one(&a.at_one()));
                assert_eq!(a.degree(), (s - 1) * (t - 1) / 2);
            }
        }
    }
}
