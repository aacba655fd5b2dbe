use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::field::{RatFunc, Rational};

/// The field operations the elimination routines need. Implemented for
/// ℚ(q) and for ℚ, the latter used for specializations at a sample `q`.
pub trait Scalar: Clone + PartialEq + Debug + Zero + One {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    /// `rhs` is nonzero.
    fn over(&self, rhs: &Self) -> Self;
    /// Rough size, used to prefer simple pivots.
    fn weight(&self) -> usize;
}

impl Scalar for RatFunc {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn over(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn weight(&self) -> usize {
        let terms = |p: &crate::field::Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let bits = |p: &crate::field::Poly| {
            p.coeffs()
                .iter()
                .map(|c| (c.numer().bits() + c.denom().bits()) as usize)
                .sum::<usize>()
        };
        4 * (terms(self.num()) + terms(self.den())) + bits(self.num()) + bits(self.den())
    }
}

impl Scalar for Rational {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn over(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Residues modulo the Mersenne prime `2^61 − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Fp(u64);

impl Fp {
    pub(crate) const P: u64 = (1 << 61) - 1;

    fn mul_mod(a: u64, b: u64) -> u64 {
        ((u128::from(a) * u128::from(b)) % u128::from(Self::P)) as u64
    }

    fn pow(self, mut e: u64) -> Fp {
        let (mut base, mut acc) = (self.0, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mul_mod(acc, base);
            }
            base = Self::mul_mod(base, base);
            e >>= 1;
        }
        Fp(acc)
    }

    /// Reduction of a rational whose denominator is prime to `P`.
    pub(crate) fn from_rational(r: &Rational) -> Option<Fp> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let p = BigInt::from(Self::P);
        let residue = |x: &BigInt| -> u64 {
            let m = x.mod_floor(&p);
            u64::try_from(m).expect("residue below P")
        };
        let den = residue(r.denom());
        if den == 0 {
            return None;
        }
        Some(Fp(residue(r.numer())).times(&Fp(den).pow(Self::P - 2)))
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.plus(&rhs)
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.times(&rhs)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Scalar for Fp {
    fn plus(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= Self::P { s - Self::P } else { s })
    }
    fn minus(&self, rhs: &Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + Self::P - rhs.0
        })
    }
    fn times(&self, rhs: &Self) -> Self {
        Fp(Self::mul_mod(self.0, rhs.0))
    }
    fn over(&self, rhs: &Self) -> Self {
        self.times(&rhs.pow(Self::P - 2))
    }
    fn weight(&self) -> usize {
        0
    }
}
