use serde::Serialize;

use super::ModuleError;
use crate::field::RatFunc;
use crate::linalg::{eigenspace, FieldMatrix, Subspace};
use crate::presentations::{AlgebraId, PresentationError, Representation};

/// Simultaneous K-eigenspace decomposition `U₀, …, U_d` of a
/// U_q(L(sl₂))-module: `K0 = γq^{2i−d}` and `K1 = γq^{d−2i}` on `U_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightData {
    pub diameter: usize,
    pub type_scalar: RatFunc,
    pub spaces: Vec<Subspace>,
}

impl WeightData {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }
}

/// Finds the weight decomposition of a Chevalley-coordinate module: the
/// smallest `d` and `γ ∈ {1, −1}` whose K1-eigenspaces for `γq^{d−2i}` are
/// all nonzero and exhaust the space. Checks K0 and the raising/lowering
/// containments before returning.
pub fn weight_decomposition(rep: &Representation) -> Result<WeightData, ModuleError> {
    if rep.algebra() != AlgebraId::UqLoop {
        return Err(PresentationError::AlgebraMismatch {
            expected: AlgebraId::UqLoop.name().to_string(),
            found: rep.algebra(),
        }
        .into());
    }
    let n = rep.dim();
    let (k0, k1) = (rep.gen("K0"), rep.gen("K1"));
    for gamma in [RatFunc::from_int(1), RatFunc::from_int(-1)] {
        for d in 0..n {
            let spaces = (0..=d)
                .map(|i| eigenspace(k1, &(&gamma * &RatFunc::q_pow(d as i64 - 2 * i as i64))))
                .collect::<Result<Vec<_>, _>>()?;
            if spaces.iter().any(Subspace::is_zero) || spaces.iter().map(Subspace::dim).sum::<usize>() != n {
                continue;
            }
            let wd = WeightData {
                diameter: d,
                type_scalar: gamma.clone(),
                spaces,
            };
            check_weight_data(rep, k0, &wd)?;
            return Ok(wd);
        }
    }
    Err(ModuleError::NotWeightDiagonalizable(format!(
        "K1 on a {n}-dimensional module has no eigenvalue pattern ±q^(d-2i)"
    )))
}

fn check_weight_data(rep: &Representation, k0: &FieldMatrix, wd: &WeightData) -> Result<(), ModuleError> {
    let d = wd.diameter;
    let n = rep.dim();
    for (i, u) in wd.spaces.iter().enumerate() {
        let theta = &wd.type_scalar * &RatFunc::q_pow(2 * i as i64 - d as i64);
        if !u.is_subspace_of(&eigenspace(k0, &theta)?) {
            return Err(ModuleError::NotWeightDiagonalizable(format!(
                "K0 does not act as γq^(2i-d) on U_{i}"
            )));
        }
    }
    let zero = Subspace::zero(n);
    let at = |i: isize| -> &Subspace {
        if i < 0 || i as usize > d {
            &zero
        } else {
            &wd.spaces[i as usize]
        }
    };
    for (name, shift) in [("e0p", 1), ("e1m", 1), ("e0m", -1), ("e1p", -1)] {
        let g = rep.gen(name);
        for i in 0..=d as isize {
            if !at(i).image_under(g).is_subspace_of(at(i + shift)) {
                return Err(ModuleError::NotWeightDiagonalizable(format!(
                    "{name} does not map U_{i} into U_{}",
                    i + shift
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;
    use crate::modules::{evaluation_module, tensor, Coords};
    use num_traits::{One, Zero};

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn evaluation_module_has_diameter_one() {
        let v = evaluation_module(&rf("q^3"), Coords::Chevalley).unwrap();
        let wd = weight_decomposition(&v).unwrap();
        assert_eq!(wd.diameter, 1);
        assert_eq!(wd.type_scalar, RatFunc::one());
        let e0 = vec![RatFunc::one(), RatFunc::zero()];
        assert_eq!(wd.spaces[0], Subspace::span(2, &[e0]));
    }

    #[test]
    fn tensor_square_has_shape_121() {
        let a = evaluation_module(&rf("q^3"), Coords::Chevalley).unwrap();
        let b = evaluation_module(&rf("1/q^3"), Coords::Chevalley).unwrap();
        let wd = weight_decomposition(&tensor(&a, &b).unwrap()).unwrap();
        assert_eq!(wd.diameter, 2);
        assert_eq!(wd.dims(), vec![1, 2, 1]);
    }

    #[test]
    fn trivial_module() {
        let z = FieldMatrix::zeros(1, 1);
        let i = FieldMatrix::identity(1);
        let rep = Representation::from_ordered(
            AlgebraId::UqLoop,
            vec![z.clone(), z.clone(), i.clone(), i.clone(), z.clone(), z, i.clone(), i],
        )
        .unwrap();
        let wd = weight_decomposition(&rep).unwrap();
        assert_eq!(wd.diameter, 0);
        assert_eq!(wd.type_scalar, RatFunc::one());
    }

    #[test]
    fn non_weight_module_is_rejected() {
        let i = FieldMatrix::identity(1);
        let two = FieldMatrix::scalar(1, &rf("2"));
        let rep = Representation::from_ordered(
            AlgebraId::UqLoop,
            vec![
                i.clone(),
                i.clone(),
                two.clone(),
                two.clone(),
                i.clone(),
                i.clone(),
                two.clone(),
                two,
            ],
        )
        .unwrap();
        assert!(matches!(
            weight_decomposition(&rep),
            Err(ModuleError::NotWeightDiagonalizable(_))
        ));
    }
}
