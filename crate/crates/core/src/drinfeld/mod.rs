//! Drinfel'd polynomials of U_q(L(sl₂))-modules and the partner theorem.

mod zpoly;

pub use zpoly::ZPoly;

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::field::{q_factorial, RatFunc};
use crate::modules::{reconstruct_uq_in_weight_basis, weight_decomposition, ModuleError, WeightData};
use crate::presentations::{
    equitable_to_chevalley, pullback_eta, rho_twist, AlgebraId, PresentationError, Representation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrinfeldError {
    #[error("module has type {0}, only type 1 is supported")]
    NotTypeOne(RatFunc),
    #[error("U_0 has dimension {0}, expected 1")]
    HighestWeightNotSimple(usize),
    #[error("U_0 is not an eigenspace of the order-{0} operator word")]
    NotAnEigenvector(usize),
    #[error("constant coefficient is {0}, expected 1")]
    ConstantNotOne(RatFunc),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// A polynomial in `z` with constant term 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DrinfeldPoly(ZPoly);

impl DrinfeldPoly {
    pub fn new(p: ZPoly) -> Result<Self, DrinfeldError> {
        let c = p.coeff(0);
        if !c.is_one() {
            return Err(DrinfeldError::ConstantNotOne(c));
        }
        Ok(DrinfeldPoly(p))
    }

    pub fn one() -> Self {
        DrinfeldPoly(ZPoly::one())
    }

    /// `Π (1 − r_k z)`.
    pub fn from_reciprocal_roots(rs: &[RatFunc]) -> Self {
        let p = rs.iter().fold(ZPoly::one(), |acc, r| {
            &acc * &ZPoly::from_coeffs(vec![RatFunc::one(), -r])
        });
        DrinfeldPoly(p)
    }

    pub fn poly(&self) -> &ZPoly {
        &self.0
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("constant term is 1")
    }
}

impl fmt::Display for DrinfeldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DrinfeldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DrinfeldPoly({})", self.0)
    }
}

impl Serialize for DrinfeldPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DrinfeldPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        DrinfeldPoly::new(ZPoly::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

/// `f^∨(z) = z^d f(z⁻¹) / a_d`.
pub fn partner(f: &DrinfeldPoly) -> DrinfeldPoly {
    let d = f.degree();
    let lead = f.0.coeff(d).inv().expect("leading coefficient is nonzero");
    DrinfeldPoly(f.0.reverse(d).scale(&lead))
}

fn spanning_vector(wd: &WeightData) -> Result<&[RatFunc], DrinfeldError> {
    match wd.spaces.first() {
        Some(u0) if u0.dim() == 1 => Ok(&u0.basis()[0]),
        Some(u0) => Err(DrinfeldError::HighestWeightNotSimple(u0.dim())),
        None => Err(DrinfeldError::HighestWeightNotSimple(0)),
    }
}

/// Scalar `λ` with `w = λ v`.
fn proportion(w: &[RatFunc], v: &[RatFunc]) -> Option<RatFunc> {
    let p = v.iter().position(|x| !x.is_zero())?;
    let lambda = &w[p] / &v[p];
    w.iter().zip(v).all(|(wi, vi)| *wi == &lambda * vi).then_some(lambda)
}

/// Eigenvalue of `first^j · second^j` on `U₀`.
fn word_eigenvalue(
    rep: &Representation,
    wd: &WeightData,
    first: &str,
    second: &str,
    j: usize,
) -> Result<RatFunc, DrinfeldError> {
    let v = spanning_vector(wd)?;
    let mut w = v.to_vec();
    for _ in 0..j {
        w = rep.gen(second).mul_vec(&w);
    }
    for _ in 0..j {
        w = rep.gen(first).mul_vec(&w);
    }
    proportion(&w, v).ok_or(DrinfeldError::NotAnEigenvector(j))
}

/// `σ_j`: eigenvalue of `(e1p)^j (e0p)^j` on `U₀`.
pub fn sigma_value(rep: &Representation, wd: &WeightData, j: usize) -> Result<RatFunc, DrinfeldError> {
    word_eigenvalue(rep, wd, "e1p", "e0p", j)
}

/// `μ_j`: eigenvalue of `(e0m)^j (e1m)^j` on `U₀`.
pub fn mu_value(rep: &Representation, wd: &WeightData, j: usize) -> Result<RatFunc, DrinfeldError> {
    word_eigenvalue(rep, wd, "e0m", "e1m", j)
}

/// `σ₀, …, σ_d`.
pub fn sigma_seq(rep: &Representation, wd: &WeightData) -> Result<Vec<RatFunc>, DrinfeldError> {
    (0..=wd.diameter).map(|j| sigma_value(rep, wd, j)).collect()
}

/// `μ₀, …, μ_d`.
pub fn mu_seq(rep: &Representation, wd: &WeightData) -> Result<Vec<RatFunc>, DrinfeldError> {
    (0..=wd.diameter).map(|j| mu_value(rep, wd, j)).collect()
}

/// `Σ (−1)^i s_i z^i / ([i]_q!)²`.
fn from_sequence(s: &[RatFunc]) -> Result<DrinfeldPoly, DrinfeldError> {
    let coeffs = s
        .iter()
        .enumerate()
        .map(|(i, si)| {
            let f = q_factorial(i as u32);
            let c = si / &(&f * &f);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    DrinfeldPoly::new(ZPoly::from_coeffs(coeffs))
}

fn type_one_weights(rep: &Representation) -> Result<WeightData, DrinfeldError> {
    let wd = weight_decomposition(rep)?;
    if !wd.type_scalar.is_one() {
        return Err(DrinfeldError::NotTypeOne(wd.type_scalar));
    }
    Ok(wd)
}

/// `P_V` of a type-1 module in Chevalley coordinates.
#[allow(non_snake_case)]
pub fn drinfeld_P(rep: &Representation) -> Result<DrinfeldPoly, DrinfeldError> {
    let wd = type_one_weights(rep)?;
    from_sequence(&sigma_seq(rep, &wd)?)
}

/// `Q_V` of a type-1 module in Chevalley coordinates.
#[allow(non_snake_case)]
pub fn drinfeld_Q(rep: &Representation) -> Result<DrinfeldPoly, DrinfeldError> {
    let wd = type_one_weights(rep)?;
    from_sequence(&mu_seq(rep, &wd)?)
}

/// Chevalley-coordinate module carried by an irreducible type-1 □_q-module,
/// written in a basis of weight vectors.
pub fn chevalley_of_box(rep: &Representation) -> Result<Representation, DrinfeldError> {
    Ok(equitable_to_chevalley(&reconstruct_uq_in_weight_basis(rep)?.0)?)
}

/// `P_V` of an irreducible type-1 □_q-module.
pub fn drinfeld_of_box(rep: &Representation) -> Result<DrinfeldPoly, DrinfeldError> {
    drinfeld_P(&chevalley_of_box(rep)?)
}

/// `Q_V` of an irreducible type-1 □_q-module.
#[allow(non_snake_case)]
pub fn drinfeld_Q_of_box(rep: &Representation) -> Result<DrinfeldPoly, DrinfeldError> {
    drinfeld_Q(&chevalley_of_box(rep)?)
}

/// Both sides of the partner theorem for a module and its ρ-twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartnerCheck {
    pub p: DrinfeldPoly,
    pub p_twist: DrinfeldPoly,
    pub partner_of_p: DrinfeldPoly,
    pub holds: bool,
}

fn drinfeld_any(rep: &Representation) -> Result<DrinfeldPoly, DrinfeldError> {
    match rep.algebra() {
        AlgebraId::BoxQ => drinfeld_of_box(rep),
        AlgebraId::TetQ => drinfeld_P(&equitable_to_chevalley(&pullback_eta(rep)?)?),
        other => Err(PresentationError::AlgebraMismatch {
            expected: "box_q or tet_q".into(),
            found: other,
        }
        .into()),
    }
}

/// Computes `P_V` and `P_{ρV}` and compares `partner(P_V)` with `P_{ρV}`.
/// ⊠_q-modules go through the η-pullback.
pub fn check_partner_theorem(rep: &Representation) -> Result<PartnerCheck, DrinfeldError> {
    let p = drinfeld_any(rep)?;
    let p_twist = drinfeld_any(&rho_twist(rep)?)?;
    let partner_of_p = partner(&p);
    Ok(PartnerCheck {
        holds: partner_of_p == p_twist,
        p,
        p_twist,
        partner_of_p,
    })
}

/// `(tr(X01·X23), tr(X12·X30))`.
pub fn trace_invariants(rep: &Representation) -> Result<(RatFunc, RatFunc), DrinfeldError> {
    if rep.algebra() != AlgebraId::UqLoopEquitable {
        return Err(PresentationError::AlgebraMismatch {
            expected: AlgebraId::UqLoopEquitable.name().into(),
            found: rep.algebra(),
        }
        .into());
    }
    Ok((
        (rep.gen("X01") * rep.gen("X23")).trace(),
        (rep.gen("X12") * rep.gen("X30")).trace(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{parse_ratfunc, q_minus_qinv};
    use crate::modules::{box_module, evaluation_module, tensor, Coords};
    use num_traits::Zero;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn evaluation_module_polynomials() {
        for a in ["q", "q^3", "1/q^2", "2", "1/2"] {
            let a = rf(a);
            let v = evaluation_module(&a, Coords::Chevalley).unwrap();
            let wd = weight_decomposition(&v).unwrap();
            assert_eq!(sigma_seq(&v, &wd).unwrap(), vec![RatFunc::one(), a.clone()]);
            assert_eq!(mu_value(&v, &wd, 2).unwrap(), RatFunc::zero());
            assert_eq!(
                drinfeld_P(&v).unwrap(),
                DrinfeldPoly::from_reciprocal_roots(std::slice::from_ref(&a))
            );
            assert_eq!(
                drinfeld_Q(&v).unwrap(),
                DrinfeldPoly::from_reciprocal_roots(&[a.inv().unwrap()])
            );
        }
    }

    #[test]
    fn partner_basics() {
        let f = DrinfeldPoly::from_reciprocal_roots(&[rf("q^2"), rf("3")]);
        let g = DrinfeldPoly::from_reciprocal_roots(&[rf("1/q^2"), rf("1/3")]);
        assert_eq!(partner(&f), g);
        assert_eq!(partner(&partner(&f)), f);
        assert_eq!(partner(&DrinfeldPoly::one()), DrinfeldPoly::one());
        assert!(DrinfeldPoly::new(ZPoly::constant(rf("2"))).is_err());
    }

    #[test]
    fn tensor_module_polynomial() {
        let (a, b) = (rf("q^3"), rf("1/q^3"));
        let t = tensor(
            &evaluation_module(&a, Coords::Chevalley).unwrap(),
            &evaluation_module(&b, Coords::Chevalley).unwrap(),
        )
        .unwrap();
        assert_eq!(drinfeld_P(&t).unwrap(), DrinfeldPoly::from_reciprocal_roots(&[a, b]));
    }

    #[test]
    fn partner_theorem_on_evaluation_box_module() {
        let rep = box_module(&rf("q^3")).unwrap();
        assert_eq!(
            drinfeld_of_box(&rep).unwrap(),
            DrinfeldPoly::from_reciprocal_roots(&[rf("q^3")])
        );
        let check = check_partner_theorem(&rep).unwrap();
        assert!(check.holds);
        assert_eq!(check.p_twist, DrinfeldPoly::from_reciprocal_roots(&[rf("1/q^3")]));
    }

    #[test]
    fn traces_of_evaluation_module() {
        let a = rf("q^3");
        let eq = evaluation_module(&a, Coords::Equitable).unwrap();
        let c2 = &q_minus_qinv() * &q_minus_qinv();
        let (t1, t2) = trace_invariants(&eq).unwrap();
        assert_eq!(t1, &rf("2") + &(&c2 / &a));
        assert_eq!(t2, &rf("2") + &(&c2 * &a));
    }
}

#[cfg(test)]
mod tensor_tests {
    use super::*;
    use crate::field::parse_ratfunc;
    use crate::modules::{box_of_chevalley, evaluation_module, tensor, Coords};

    fn ev(s: &str) -> Representation {
        evaluation_module(&parse_ratfunc(s).unwrap(), Coords::Chevalley).unwrap()
    }

    #[test]
    fn partner_theorem_on_tensor_products() {
        for (a, b) in [("q^3", "1/q^3"), ("q^5", "1/q"), ("q^4", "1/q^4")] {
            let rep = box_of_chevalley(&tensor(&ev(a), &ev(b)).unwrap()).unwrap();
            assert!(check_partner_theorem(&rep).unwrap().holds, "{a} {b}");
        }
        let t = tensor(&tensor(&ev("q^3"), &ev("1/q^3")).unwrap(), &ev("q^7")).unwrap();
        let check = check_partner_theorem(&box_of_chevalley(&t).unwrap()).unwrap();
        assert!(check.holds);
        assert_eq!(check.p.degree(), 3);
    }
}
