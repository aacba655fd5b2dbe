use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::RatFunc;

/// A polynomial in `z` over ℚ(q), constant term first, trailing zeros
/// trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<RatFunc>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `z`.
    pub fn z() -> Self {
        Self::from_coeffs(vec![RatFunc::zero(), RatFunc::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `z^d·f(z⁻¹)`; requires `deg f ≤ d`.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(self.coeffs.len() <= d + 1, "degree exceeds the reversal length");
        Self::from_coeffs((0..=d).map(|i| self.coeff(d - i)).collect())
    }

    pub fn eval(&self, z: &RatFunc) -> RatFunc {
        self.coeffs.iter().rev().fold(RatFunc::zero(), |acc, c| &(&acc * z) + c)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self + &(-rhs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        ZPoly::from_coeffs(out)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("z")?,
                1 => write!(f, "({c})*z")?,
                _ if c.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct ZPolyWire {
    coeffs: Vec<RatFunc>,
}

impl Serialize for ZPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ZPolyWire {
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(ZPoly::from_coeffs(ZPolyWire::deserialize(deserializer)?.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(root_recip: RatFunc) -> ZPoly {
        ZPoly::from_coeffs(vec![RatFunc::one(), -root_recip])
    }

    #[test]
    fn product_of_linear_factors() {
        let (a, b) = (RatFunc::q_pow(3), RatFunc::q_pow(-3));
        let p = &lin(a.clone()) * &lin(b.clone());
        assert_eq!(p.coeffs(), &[RatFunc::one(), -(&a + &b), &a * &b]);
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn reverse_pads_and_trims() {
        let p = lin(RatFunc::q());
        assert_eq!(p.reverse(1).coeffs(), &[-RatFunc::q(), RatFunc::one()]);
        assert_eq!(p.reverse(2).coeffs(), &[RatFunc::zero(), -RatFunc::q(), RatFunc::one()]);
        assert_eq!(p.reverse(1).reverse(1), p);
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&ZPoly::one()).unwrap();
        assert_eq!(s, r#"{"coeffs":[{"den":[[0,"1"]],"num":[[0,"1"]]}]}"#);
        assert_eq!(serde_json::from_str::<ZPoly>(&s).unwrap(), ZPoly::one());
    }

    #[test]
    fn display() {
        let p = &lin(RatFunc::q()) * &ZPoly::z();
        assert_eq!(p.to_string(), "z + (-q)*z^2");
    }
}
