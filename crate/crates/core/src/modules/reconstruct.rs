use std::collections::BTreeMap;

use super::boxes::analyze_box;
use super::ModuleError;
use crate::field::{q_minus_qinv, RatFunc};
use crate::linalg::{
    solve_intertwiner, solve_matrix_equations, FieldMatrix, Intertwiner, LinalgError, MatrixEquation, Subspace,
};
use crate::presentations::{
    pullback_eta, pullback_psi, scale_twist, verify_relations, AlgebraId, PresentationError, Representation,
};

/// Recovers the U_q(L(sl₂))-structure (equitable generators) on an
/// irreducible type-1 □_q-module. The weight spaces are
/// `U_i = (W*₀+…+W*_i) ∩ (W_i+…+W_d)` with `W*_j` the `x₀`-eigenspace for
/// `q^{2j−d}` and `W_j` the `x₂`-eigenspace for `q^{d−2j}`; `X31` and `X13`
/// act on `U_i` as `q^{2i−d}` and `q^{d−2i}`. The result is certified.
pub fn reconstruct_uq(rep: &Representation) -> Result<Representation, ModuleError> {
    let (adapted, b) = reconstruct_uq_in_weight_basis(rep)?;
    let binv = b.inverse()?;
    let back = |k: &str| &(&b * adapted.gen(k)) * &binv;
    let gens: BTreeMap<String, FieldMatrix> = [
        ("X01", rep.gen("x0").clone()),
        ("X12", rep.gen("x1").clone()),
        ("X23", rep.gen("x2").clone()),
        ("X30", rep.gen("x3").clone()),
        ("X13", back("X13")),
        ("X31", back("X31")),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let out = Representation::new(AlgebraId::UqLoopEquitable, gens)?;
    if &pullback_psi(&out)? != rep {
        return Err(ModuleError::CertificationFailed(
            "pullback along ψ differs from the input".into(),
        ));
    }
    Ok(out)
}

/// [`reconstruct_uq`] expressed in a basis of weight vectors: returns the
/// module `M` together with `B` (columns spanning `U₀, U₁, …` in order)
/// such that `B·M·B⁻¹` is the module on the original basis. `X13` and
/// `X31` are diagonal in `M`.
pub fn reconstruct_uq_in_weight_basis(rep: &Representation) -> Result<(Representation, FieldMatrix), ModuleError> {
    let an = analyze_box(rep, None)?;
    let (n, d) = (rep.dim(), an.diameter);
    // [1,0] lists x₀-eigenspaces for q^{2j−d}; [2,3] lists x₂-eigenspaces for q^{d−2j}.
    let w_star = an.decomposition(1, 0);
    let w = an.decomposition(2, 3);
    let mut columns = Vec::with_capacity(n);
    let mut k0_diag = Vec::with_capacity(n);
    let mut k1_diag = Vec::with_capacity(n);
    for i in 0..=d {
        let lower = Subspace::sum_all(n, &w_star[..=i]);
        let upper = Subspace::sum_all(n, &w[i..]);
        let u = lower.intersect(&upper)?;
        for v in u.basis() {
            columns.push(v.clone());
            k0_diag.push(RatFunc::q_pow(2 * i as i64 - d as i64));
            k1_diag.push(RatFunc::q_pow(d as i64 - 2 * i as i64));
        }
    }
    if columns.len() != n {
        return Err(ModuleError::CertificationFailed(format!(
            "weight spaces span {} of {} dimensions",
            columns.len(),
            n
        )));
    }
    let b = FieldMatrix::from_columns(&columns)?;
    let binv = b.inverse()?;
    let conj = |m: &FieldMatrix| &(&binv * m) * &b;
    let gens: BTreeMap<String, FieldMatrix> = [
        ("X01", conj(rep.gen("x0"))),
        ("X12", conj(rep.gen("x1"))),
        ("X23", conj(rep.gen("x2"))),
        ("X30", conj(rep.gen("x3"))),
        ("X13", FieldMatrix::diagonal(&k1_diag)),
        ("X31", FieldMatrix::diagonal(&k0_diag)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let out = Representation::new(AlgebraId::UqLoopEquitable, gens)?;
    let report = verify_relations(&out);
    if !report.passed() {
        return Err(ModuleError::CertificationFailed(report.failed_labels().join(", ")));
    }
    Ok((out, b))
}

/// `scale_twist(rep, γ)`: a type-γ module becomes type 1.
pub fn normalize_type(rep: &Representation, gamma: &RatFunc) -> Result<Representation, ModuleError> {
    if gamma.is_zero() {
        return Err(ModuleError::ZeroType);
    }
    Ok(scale_twist(rep, gamma)?)
}

/// An invertible `S` with `S·g_A = g_B·S` for every generator, normalized
/// so its first nonzero entry is 1.
pub fn is_isomorphic(a: &Representation, b: &Representation) -> Result<Option<FieldMatrix>, ModuleError> {
    if a.algebra() != b.algebra() {
        return Err(PresentationError::AlgebraMismatch {
            expected: a.algebra().name().to_string(),
            found: b.algebra(),
        }
        .into());
    }
    if a.dim() != b.dim() {
        return Err(LinalgError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        }
        .into());
    }
    Ok(match solve_intertwiner(&a.ordered(), &b.ordered())? {
        Intertwiner::Found(s) => Some(s),
        Intertwiner::NoSolution | Intertwiner::NoInvertibleFound { .. } => None,
    })
}

/// Extends an equitable module to ⊠_q: `x_{i,i+1}, x13, x31` are bound
/// directly and `x02, x20` are solved from the q-Weyl relations they enter
/// linearly. The completion is accepted only if `x02·x20 = 1` and every
/// ⊠_q relation holds.
pub fn tet_from_equitable(rep: &Representation) -> Result<Representation, ModuleError> {
    if rep.algebra() != AlgebraId::UqLoopEquitable {
        return Err(PresentationError::AlgebraMismatch {
            expected: AlgebraId::UqLoopEquitable.name().to_string(),
            found: rep.algebra(),
        }
        .into());
    }
    let n = rep.dim();
    let q = RatFunc::q();
    let qi = RatFunc::q_pow(-1);
    let id = FieldMatrix::identity(n);
    let rhs = FieldMatrix::scalar(n, &q_minus_qinv());
    // q·L·M − q⁻¹·M·L = (q − q⁻¹)  and  q·M·R − q⁻¹·R·M = (q − q⁻¹).
    let weyl_pair = |left: &FieldMatrix, right: &FieldMatrix| {
        vec![
            MatrixEquation {
                terms: vec![(left.scale(&q), id.clone()), (id.clone(), left.scale(&-qi.clone()))],
                rhs: rhs.clone(),
            },
            MatrixEquation {
                terms: vec![(id.clone(), right.scale(&q)), (right.scale(&-qi.clone()), id.clone())],
                rhs: rhs.clone(),
            },
        ]
    };
    let solve = |left: &str, right: &str| -> Result<Vec<FieldMatrix>, ModuleError> {
        let sol = solve_matrix_equations(n, n, &weyl_pair(rep.gen(left), rep.gen(right)))?
            .ok_or_else(|| ModuleError::NoTetCompletion(format!("no solution between {left} and {right}")))?;
        let mut candidates = vec![sol.particular.clone()];
        candidates.extend(sol.homogeneous.iter().map(|h| &sol.particular + h));
        Ok(candidates)
    };
    // x02 sits between x30 and x23; x20 sits between x12 and x01.
    let x02s = solve("X30", "X23")?;
    let x20s = solve("X12", "X01")?;
    for x02 in &x02s {
        for x20 in &x20s {
            if (x02 * x20) != id {
                continue;
            }
            let gens: BTreeMap<String, FieldMatrix> = [
                ("x01", rep.gen("X01").clone()),
                ("x12", rep.gen("X12").clone()),
                ("x23", rep.gen("X23").clone()),
                ("x30", rep.gen("X30").clone()),
                ("x13", rep.gen("X13").clone()),
                ("x31", rep.gen("X31").clone()),
                ("x02", x02.clone()),
                ("x20", x20.clone()),
            ]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
            let tet = Representation::new(AlgebraId::TetQ, gens)?;
            let report = verify_relations(&tet);
            if report.passed() && &pullback_eta(&tet)? == rep {
                return Ok(tet);
            }
        }
    }
    Err(ModuleError::NoTetCompletion(
        "no candidate pair satisfies x02·x20 = 1 and all relations".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;
    use crate::modules::{box_module, evaluation_module, Coords};
    use crate::presentations::rho_twist;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn weight_basis_form_is_conjugate() {
        let rep = rho_twist(&box_module(&rf("2")).unwrap()).unwrap();
        let (m, b) = reconstruct_uq_in_weight_basis(&rep).unwrap();
        assert_eq!(m.gen("X13"), &FieldMatrix::diagonal(&[rf("q"), rf("1/q")]));
        let x1 = &(&b * m.gen("X12")) * &b.inverse().unwrap();
        assert_eq!(&x1, rep.gen("x1"));
    }

    #[test]
    fn reconstruct_evaluation_module() {
        for a in ["q^3", "2", "1/q^2"] {
            let a = rf(a);
            let eq = evaluation_module(&a, Coords::Equitable).unwrap();
            let rec = reconstruct_uq(&box_module(&a).unwrap()).unwrap();
            assert_eq!(rec, eq);
        }
    }

    #[test]
    fn rho_twist_reconstructs_to_inverse_parameter() {
        let a = rf("q^3");
        let twisted = rho_twist(&box_module(&a).unwrap()).unwrap();
        let rec = reconstruct_uq(&twisted).unwrap();
        let target = evaluation_module(&a.inv().unwrap(), Coords::Equitable).unwrap();
        assert!(is_isomorphic(&rec, &target).unwrap().is_some());
    }

    #[test]
    fn distinct_parameters_are_not_isomorphic() {
        let a = box_module(&rf("q^3")).unwrap();
        let b = box_module(&rf("2")).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap().is_none());
        assert_eq!(is_isomorphic(&a, &a).unwrap(), Some(FieldMatrix::identity(2)));
    }

    #[test]
    fn normalize_type_undoes_scaling() {
        let rep = box_module(&rf("q^3")).unwrap();
        let scaled = scale_twist(&rep, &rf("1/q")).unwrap();
        assert_eq!(normalize_type(&scaled, &rf("q")).unwrap(), rep);
        assert_eq!(normalize_type(&rep, &rf("1")).unwrap(), rep);
    }

    #[test]
    fn evaluation_module_extends_to_tet() {
        let eq = evaluation_module(&rf("q^3"), Coords::Equitable).unwrap();
        let tet = tet_from_equitable(&eq).unwrap();
        assert!(verify_relations(&tet).passed());
        assert_eq!(pullback_eta(&tet).unwrap(), eq);
    }
}
