//! Exact arithmetic in ℚ(q).
//!
//! [`RatFunc`] is the scalar type of the whole crate. Rational coefficients
//! are `num_rational::BigRational`; polynomials and rational functions are
//! implemented here.

mod encoding;
mod parse;
mod poly;
mod ratfunc;

pub use encoding::{decode_terms, encode_terms};
pub use parse::parse_ratfunc;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use num_traits::One;
use thiserror::Error;

/// Coefficient field of [`Poly`].
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at q = {at}")]
    Pole { at: Rational },
    #[error("exponent out of range")]
    ExponentOverflow,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// The quantum integer `[n]_q = (q^n − q^{−n})/(q − q^{−1})`.
///
/// Expanded as `q^{1−n}(1 + q² + … + q^{2(n−1)})` for `n > 0`.
pub fn q_int(n: i64) -> RatFunc {
    if n == 0 {
        return RatFunc::from_int(0);
    }
    let m = n.unsigned_abs() as usize;
    let sum = Poly::from_terms((0..m).map(|k| (2 * k, Rational::one())));
    let v = RatFunc::canonicalize(sum, Poly::monomial(Rational::one(), m - 1)).expect("monomial denominator");
    if n > 0 {
        v
    } else {
        -v
    }
}

/// `[n]_q^! = [1]_q [2]_q ⋯ [n]_q`, with `[0]_q^! = 1`.
pub fn q_factorial(n: u32) -> RatFunc {
    (1..=i64::from(n)).map(q_int).product()
}

/// `[n]_t` for an arbitrary nonzero `t ∈ ℚ(q)` with `t² ≠ 1`.
pub fn t_int(t: &RatFunc, n: i64) -> Result<RatFunc, FieldError> {
    let num = t.pow(n)? - t.pow(-n)?;
    let den = t - &t.inv()?;
    num.checked_div(&den)
}

/// `[n]_t^!` for an arbitrary `t`.
pub fn t_factorial(t: &RatFunc, n: u32) -> Result<RatFunc, FieldError> {
    let mut acc = RatFunc::one();
    for k in 1..=i64::from(n) {
        acc = acc * t_int(t, k)?;
    }
    Ok(acc)
}

/// Exact substitution `q = q0`.
pub fn eval_at(f: &RatFunc, q0: &Rational) -> Result<Rational, FieldError> {
    f.eval_at(q0)
}

/// `q − q^{−1}`, which appears in nearly every relation.
pub fn q_minus_qinv() -> RatFunc {
    RatFunc::q() - RatFunc::q_pow(-1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn poly(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| r(x, 1)).collect())
    }

    #[test]
    fn canonicalize_cancels_common_factor() {
        // (q²−1)/(q−1) = q+1
        let f = RatFunc::canonicalize(poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &poly(&[1, 1]));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn canonicalize_zero_numerator() {
        let f = RatFunc::canonicalize(Poly::zero(), poly(&[0, 7])).unwrap();
        assert_eq!(f.num(), &Poly::zero());
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn canonicalize_pushes_scalars_into_numerator() {
        // 2q/4 = (1/2)q
        let f = RatFunc::canonicalize(poly(&[0, 2]), poly(&[4])).unwrap();
        assert_eq!(f.num(), &Poly::monomial(r(1, 2), 1));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn canonicalize_rejects_zero_denominator() {
        assert_eq!(
            RatFunc::canonicalize(Poly::one(), Poly::zero()),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn q_int_three() {
        let f = q_int(3);
        assert_eq!(f.num(), &poly(&[1, 0, 1, 0, 1]));
        assert_eq!(f.den(), &poly(&[0, 0, 1]));
    }

    #[test]
    fn q_int_zero_and_negative() {
        assert!(q_int(0).is_zero());
        let expected = RatFunc::canonicalize(poly(&[-1, 0, -1]), poly(&[0, 1])).unwrap();
        assert_eq!(q_int(-2), expected);
    }

    #[test]
    fn q_int_matches_defining_quotient() {
        for n in -6..=6 {
            let defining = (RatFunc::q_pow(n) - RatFunc::q_pow(-n)) / q_minus_qinv();
            assert_eq!(q_int(n), defining, "n = {n}");
        }
    }

    #[test]
    fn q_factorial_small() {
        assert!(q_factorial(0).is_one());
        assert!(q_factorial(1).is_one());
        // [2][3] = ((q²+1)/q)((q⁴+q²+1)/q²) = (q⁶+2q⁴+2q²+1)/q³
        let expected = RatFunc::canonicalize(poly(&[1, 0, 2, 0, 2, 0, 1]), poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(q_factorial(3), expected);
    }

    #[test]
    fn t_int_at_q_agrees_with_q_int() {
        for n in 0..5 {
            assert_eq!(t_int(&RatFunc::q(), n).unwrap(), q_int(n));
        }
        assert_eq!(t_factorial(&RatFunc::q(), 4).unwrap(), q_factorial(4));
    }

    #[test]
    fn eval_q_int_three_at_two() {
        assert_eq!(eval_at(&q_int(3), &r(2, 1)).unwrap(), r(21, 4));
    }

    #[test]
    fn eval_at_pole_fails() {
        let f = RatFunc::one() / (RatFunc::q() - RatFunc::one());
        assert!(matches!(eval_at(&f, &r(1, 1)), Err(FieldError::Pole { .. })));
        assert_eq!(eval_at(&RatFunc::one(), &r(-5, 3)).unwrap(), r(1, 1));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(RatFunc::zero().inv(), Err(FieldError::DivisionByZero));
    }
}
