use std::str::FromStr;

use num_traits::{One, Zero};

use super::ModuleError;
use crate::field::{q_minus_qinv, RatFunc};
use crate::linalg::FieldMatrix;
use crate::presentations::{chevalley_to_equitable, pullback_psi, AlgebraId, PresentationError, Representation};

/// Which generating set of U_q(L(sl₂)) a representation binds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coords {
    Chevalley,
    Equitable,
}

impl FromStr for Coords {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chevalley" => Ok(Coords::Chevalley),
            "equitable" => Ok(Coords::Equitable),
            other => Err(format!(
                "unknown coordinates `{other}` (expected chevalley or equitable)"
            )),
        }
    }
}

fn m2(a: RatFunc, b: RatFunc, c: RatFunc, d: RatFunc) -> FieldMatrix {
    FieldMatrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// The evaluation module V(1,a) on the basis v₀, v₁.
pub fn evaluation_module(a: &RatFunc, coords: Coords) -> Result<Representation, ModuleError> {
    if a.is_zero() {
        return Err(ModuleError::ZeroParameter);
    }
    let ainv = a.inv()?;
    let (o, z) = (RatFunc::one(), RatFunc::zero());
    let (q, qi) = (RatFunc::q(), RatFunc::q_pow(-1));
    match coords {
        Coords::Chevalley => {
            let k0 = FieldMatrix::diagonal(&[qi.clone(), q.clone()]);
            let k1 = FieldMatrix::diagonal(&[q.clone(), qi.clone()]);
            Ok(Representation::from_ordered(
                AlgebraId::UqLoop,
                vec![
                    m2(z.clone(), z.clone(), a.clone(), z.clone()),
                    m2(z.clone(), ainv, z.clone(), z.clone()),
                    k0.clone(),
                    k1.clone(),
                    m2(z.clone(), o.clone(), z.clone(), z.clone()),
                    m2(z.clone(), z.clone(), o, z),
                    k1,
                    k0,
                ],
            )?)
        }
        Coords::Equitable => {
            let c = q_minus_qinv();
            Ok(Representation::from_ordered(
                AlgebraId::UqLoopEquitable,
                vec![
                    m2(qi.clone(), &c * &ainv, z.clone(), q.clone()),
                    m2(q.clone(), -c.clone(), z.clone(), qi.clone()),
                    m2(q.clone(), z.clone(), c.clone(), qi.clone()),
                    m2(qi.clone(), z.clone(), -(&c * a), q.clone()),
                    FieldMatrix::diagonal(&[q.clone(), qi.clone()]),
                    FieldMatrix::diagonal(&[qi, q]),
                ],
            )?)
        }
    }
}

/// The □_q-module obtained from the equitable V(1,a) along ψ.
pub fn box_module(a: &RatFunc) -> Result<Representation, ModuleError> {
    Ok(pullback_psi(&evaluation_module(a, Coords::Equitable)?)?)
}

/// Tensor product through the coproduct `K ↦ K⊗K`, `e⁺ ↦ e⁺⊗1 + K⊗e⁺`,
/// `e⁻ ↦ e⁻⊗K⁻¹ + 1⊗e⁻`.
pub fn tensor(a: &Representation, b: &Representation) -> Result<Representation, ModuleError> {
    for r in [a, b] {
        if r.algebra() != AlgebraId::UqLoop {
            return Err(PresentationError::AlgebraMismatch {
                expected: AlgebraId::UqLoop.name().to_string(),
                found: r.algebra(),
            }
            .into());
        }
    }
    let (ia, ib) = (FieldMatrix::identity(a.dim()), FieldMatrix::identity(b.dim()));
    let mut mats = Vec::new();
    for i in 0..2 {
        let k = format!("K{i}");
        let kinv = format!("K{i}inv");
        let ep = format!("e{i}p");
        let em = format!("e{i}m");
        let kk = a.gen(&k).kron(b.gen(&k));
        let kkinv = a.gen(&kinv).kron(b.gen(&kinv));
        let plus = &a.gen(&ep).kron(&ib) + &a.gen(&k).kron(b.gen(&ep));
        let minus = &a.gen(&em).kron(b.gen(&kinv)) + &ia.kron(b.gen(&em));
        mats.push((ep, plus));
        mats.push((em, minus));
        mats.push((k, kk));
        mats.push((kinv, kkinv));
    }
    Ok(Representation::new(AlgebraId::UqLoop, mats.into_iter().collect())?)
}

/// The □_q-module of a Chevalley-coordinate module, through the equitable
/// generators and ψ.
pub fn box_of_chevalley(rep: &Representation) -> Result<Representation, ModuleError> {
    Ok(pullback_psi(&chevalley_to_equitable(rep)?)?)
}
