use std::collections::BTreeMap;

use super::{AlgebraId, PresentationError, Representation};
use crate::field::{q_minus_qinv, RatFunc};
use crate::linalg::FieldMatrix;

fn build(algebra: AlgebraId, pairs: Vec<(&str, FieldMatrix)>) -> Representation {
    let gens: BTreeMap<String, FieldMatrix> = pairs.into_iter().map(|(n, m)| (n.to_string(), m)).collect();
    Representation::new(algebra, gens).expect("maps bind every generator at a common size")
}

fn mismatch(expected: &str, found: AlgebraId) -> PresentationError {
    PresentationError::AlgebraMismatch {
        expected: expected.to_string(),
        found,
    }
}

/// The twist by ρ: generator `g` now acts as `ρ(g)` did. On □_q that is
/// `x_i ↦ x_{i+1}`; on ⊠_q it is `x_ij ↦ x_{i+1,j+1}`.
pub fn rho_twist(rep: &Representation) -> Result<Representation, PresentationError> {
    match rep.algebra() {
        AlgebraId::BoxQ => {
            let names = ["x0", "x1", "x2", "x3"];
            Ok(build(
                AlgebraId::BoxQ,
                (0..4)
                    .map(|i| (names[i], rep.gen(names[(i + 1) % 4]).clone()))
                    .collect(),
            ))
        }
        AlgebraId::TetQ => {
            let pairs = AlgebraId::TetQ
                .generators()
                .iter()
                .map(|name| {
                    let b = name.as_bytes();
                    let shift = |c: u8| (((c - b'0') + 1) % 4 + b'0') as char;
                    let src = format!("x{}{}", shift(b[1]), shift(b[2]));
                    (*name, rep.gen(&src).clone())
                })
                .collect();
            Ok(build(AlgebraId::TetQ, pairs))
        }
        other => Err(mismatch("box_q or tet_q", other)),
    }
}

/// The twist by `x₀ ↦ α⁻¹x₀, x₁ ↦ αx₁, x₂ ↦ α⁻¹x₂, x₃ ↦ αx₃`.
pub fn scale_twist(rep: &Representation, alpha: &RatFunc) -> Result<Representation, PresentationError> {
    rep.expect(AlgebraId::BoxQ)?;
    if alpha.is_zero() {
        return Err(PresentationError::ZeroScale);
    }
    let inv = alpha.inv().map_err(|_| PresentationError::ZeroScale)?;
    Ok(build(
        AlgebraId::BoxQ,
        vec![
            ("x0", rep.gen("x0").scale(&inv)),
            ("x1", rep.gen("x1").scale(alpha)),
            ("x2", rep.gen("x2").scale(&inv)),
            ("x3", rep.gen("x3").scale(alpha)),
        ],
    ))
}

/// Pullback along `x_i ↦ X_{i,i+1}`.
pub fn pullback_psi(rep: &Representation) -> Result<Representation, PresentationError> {
    rep.expect(AlgebraId::UqLoopEquitable)?;
    Ok(build(
        AlgebraId::BoxQ,
        vec![
            ("x0", rep.gen("X01").clone()),
            ("x1", rep.gen("X12").clone()),
            ("x2", rep.gen("X23").clone()),
            ("x3", rep.gen("X30").clone()),
        ],
    ))
}

/// Pullback along `x ↦ x₀, y ↦ x₂`.
pub fn pullback_kappa(rep: &Representation) -> Result<Representation, PresentationError> {
    rep.expect(AlgebraId::BoxQ)?;
    Ok(build(
        AlgebraId::UqPlus,
        vec![("x", rep.gen("x0").clone()), ("y", rep.gen("x2").clone())],
    ))
}

/// Pullback along `X13 ↦ x13, X31 ↦ x31, X_{i,i+1} ↦ x_{i,i+1}`.
pub fn pullback_eta(rep: &Representation) -> Result<Representation, PresentationError> {
    rep.expect(AlgebraId::TetQ)?;
    Ok(build(
        AlgebraId::UqLoopEquitable,
        ["01", "12", "23", "30", "13", "31"]
            .iter()
            .zip(AlgebraId::UqLoopEquitable.generators())
            .map(|(ij, name)| (*name, rep.gen(&format!("x{ij}")).clone()))
            .collect(),
    ))
}

/// Equitable generators expressed through the Chevalley ones.
pub fn chevalley_to_equitable(rep: &Representation) -> Result<Representation, PresentationError> {
    rep.expect(AlgebraId::UqLoop)?;
    let c = q_minus_qinv();
    let qc = &RatFunc::q() * &c;
    let (k0, k1) = (rep.gen("K0"), rep.gen("K1"));
    Ok(build(
        AlgebraId::UqLoopEquitable,
        vec![
            ("X01", k0 + &(k0 * rep.gen("e0m")).scale(&qc)),
            ("X23", k1 + &(k1 * rep.gen("e1m")).scale(&qc)),
            ("X12", k1 - &rep.gen("e1p").scale(&c)),
            ("X30", k0 - &rep.gen("e0p").scale(&c)),
            ("X13", k1.clone()),
            ("X31", k0.clone()),
        ],
    ))
}

/// Chevalley generators expressed through the equitable ones.
pub fn equitable_to_chevalley(rep: &Representation) -> Result<Representation, PresentationError> {
    rep.expect(AlgebraId::UqLoopEquitable)?;
    let cinv = q_minus_qinv().inv().expect("q - 1/q is nonzero");
    let lower = &RatFunc::q_pow(-1) * &cinv;
    let id = FieldMatrix::identity(rep.dim());
    let (x13, x31) = (rep.gen("X13"), rep.gen("X31"));
    Ok(build(
        AlgebraId::UqLoop,
        vec![
            ("e0m", (&(x13 * rep.gen("X01")) - &id).scale(&lower)),
            ("e1m", (&(x31 * rep.gen("X23")) - &id).scale(&lower)),
            ("e1p", (x13 - rep.gen("X12")).scale(&cinv)),
            ("e0p", (x31 - rep.gen("X30")).scale(&cinv)),
            ("K1", x13.clone()),
            ("K0", x31.clone()),
            ("K0inv", x13.clone()),
            ("K1inv", x31.clone()),
        ],
    ))
}
