//! Exact computations around ADO polynomials of torus knots.
//!
//! * [`exact_arith`]: rationals and cyclotomic fields Q(ζ_n).
//! * [`laurent`]: sparse Laurent polynomials, half-integer exponents, exact division.
//! * [`torus_fk`]: the series F_K(x, q) of T(s,t), its root-of-unity specializations
//!   and the order-ħ⁰ Melvin–Morton–Rozansky check.
//! * [`alexander`]: symmetric torus-knot Alexander polynomials.
//! * [`ado`]: ADO₃/ADO₄ closed forms, the inductive ADO₄ algorithm, extraction
//!   from F_K and comparison up to normalization.
//! * [`refined`]: superpolynomial, refined F_K, refined Alexander and refined ADO₃.
//! * [`rmatrix`]: (1,1)-tangle evaluation of T(2,2s+1) with the unrolled R-matrix.

pub mod ado;
pub mod alexander;
pub mod error;
pub mod exact_arith;
pub mod json;
pub mod laurent;
pub mod refined;
pub mod rmatrix;
pub mod torus_fk;

pub use error::{Error, Result};
pub use exact_arith::{root_of_unity, Coeff, Cyclotomic, FieldCoeff, Rational};
pub use laurent::{HalfLaurent, MPoly, Sparse};
pub use torus_fk::TorusKnot;
