//! JSON encoding of ℚ(q) elements.
//!
//! A polynomial is a list of `[exponent, "p/q"]` pairs in descending exponent
//! order with zero terms omitted; a rational function is
//! `{"den": terms, "num": terms}`. Decoding re-canonicalizes, so any
//! well-formed fraction is accepted and re-encodes to the canonical form.

use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{FieldError, Poly, RatFunc, Rational};

pub fn encode_terms(p: &Poly) -> Vec<(usize, String)> {
    p.terms_desc().map(|(e, c)| (e, c.to_string())).collect()
}

pub fn decode_terms(terms: &[(usize, String)]) -> Result<Poly, FieldError> {
    let mut parsed = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        let v = Rational::from_str(c.trim()).map_err(|err| FieldError::Parse {
            input: c.clone(),
            reason: err.to_string(),
        })?;
        parsed.push((*e, v));
    }
    Ok(Poly::from_terms(parsed))
}

#[derive(Serialize, Deserialize)]
struct Wire {
    den: Vec<(usize, String)>,
    num: Vec<(usize, String)>,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Wire {
            den: encode_terms(self.den()),
            num: encode_terms(self.num()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let num = decode_terms(&wire.num).map_err(D::Error::custom)?;
        let den = decode_terms(&wire.den).map_err(D::Error::custom)?;
        RatFunc::canonicalize(num, den).map_err(D::Error::custom)
    }
}
