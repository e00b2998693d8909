//! Shared JSON polynomial schema.
//!
//! ```json
//! {"schema": "adoforge/1", "vars": ["x"], "half_exponents": true,
//!  "terms": [{"e": [k], "c": {"order": n, "coeffs": [["num","den"], ...]}}]}
//! ```
//!
//! Terms are emitted in ascending lexicographic exponent order, so equal
//! polynomials serialize to identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact_arith::{rational_from_json, rational_to_json, Coeff, Cyclotomic, Rational};
use crate::laurent::{Exponent, Sparse};

pub const SCHEMA: &str = "adoforge/1";

/// Coefficient types with a JSON encoding.
pub trait JsonCoeff: Coeff {
    fn to_json(&self) -> Value;
    /// # Errors
    /// [`Error::Parse`] on malformed input.
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        serde_json::to_value(rational_to_json(self)).expect("string pair serializes")
    }
    fn from_json(v: &Value) -> Result<Self> {
        let pair: [String; 2] = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        rational_from_json(&pair)
    }
}

impl JsonCoeff for Cyclotomic {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("cyclotomic serializes")
    }
    fn from_json(v: &Value) -> Result<Self> {
        if v.is_array() {
            return Ok(Cyclotomic::from_rational(Rational::from_json(v)?));
        }
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub c: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub vars: Vec<String>,
    pub half_exponents: bool,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    /// Encodes `p` with the given variable names.
    #[must_use]
    pub fn encode<E: Exponent, C: JsonCoeff>(p: &Sparse<E, C>, vars: &[&str], half_exponents: bool) -> Self {
        PolyJson {
            schema: SCHEMA.to_string(),
            label: None,
            vars: vars.iter().map(|s| (*s).to_string()).collect(),
            half_exponents,
            terms: p.iter().map(|(e, c)| TermJson { e: e.to_vec(), c: c.to_json() }).collect(),
        }
    }

    #[must_use]
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Decodes into a sparse polynomial, validating schema and arity.
    ///
    /// # Errors
    /// [`Error::Parse`] on a schema, arity or coefficient violation.
    pub fn decode<E: Exponent, C: JsonCoeff>(&self) -> Result<Sparse<E, C>> {
        if self.schema != SCHEMA {
            return Err(Error::Parse(format!("unknown schema {:?}", self.schema)));
        }
        let mut out = Sparse::zero();
        for t in &self.terms {
            if t.e.len() != self.vars.len() {
                return Err(Error::Parse(format!("exponent {:?} does not match vars {:?}", t.e, self.vars)));
            }
            let e = E::from_slice(&t.e).ok_or_else(|| Error::Parse(format!("exponent arity {:?}", t.e)))?;
            out.add_term(e, &C::from_json(&t.c)?);
        }
        Ok(out)
    }

    /// Pretty JSON text with a trailing newline.
    #[must_use]
    pub fn to_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("json encodes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat, root_of_unity};
    use crate::laurent::HalfLaurent;

    #[test]
    fn round_trip_is_byte_identical() {
        let p: HalfLaurent<Cyclotomic> = HalfLaurent::from_terms([
            (6, root_of_unity(4, 1)),
            (0, Cyclotomic::from_rational(rat(-3, 2))),
            (-6, root_of_unity(4, 1)),
        ]);
        let j = PolyJson::encode(&p, &["x"], true);
        let text = j.to_pretty();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        let q: HalfLaurent<Cyclotomic> = back.decode().unwrap();
        assert_eq!(p, q);
        assert_eq!(PolyJson::encode(&q, &["x"], true).to_pretty(), text);
    }

    #[test]
    fn rejects_bad_arity() {
        let mut j = PolyJson::encode(&HalfLaurent::<Rational>::one(), &["x"], true);
        j.terms[0].e.push(1);
        assert!(j.decode::<i64, Rational>().is_err());
        j.schema = "other".into();
        assert!(j.decode::<i64, Rational>().is_err());
    }
}
