//! Tridiagonal pairs: axioms, shape, base, eigenvalue parameters, split
//! sequence and the polynomial `P_{A,A*}`.

mod table;

pub use table::{
    box_pair, six_polynomial_table, star_check, zeta_bridges, Order, SixTable, StarCheck, TableGroup, ZetaBridges,
};

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::drinfeld::{DrinfeldError, ZPoly};
use crate::field::{t_factorial, FieldError, RatFunc};
use crate::linalg::{burnside_irreducible, check_semisimple, FieldMatrix, LinalgError, Subspace};
use crate::modules::ModuleError;
use crate::presentations::PresentationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TdError {
    #[error("inconsistent base: {0}")]
    InconsistentBase(String),
    #[error("eigenvalues admit no exact fit θ_i = a + b·t^(2i-d) + c·t^(d-2i): {0}")]
    NoExactFit(String),
    #[error("t = {0} is not admissible (need t ≠ 0 and t^4 ≠ 1)")]
    BadT(RatFunc),
    #[error("t = {t} does not satisfy t^2 + t^-2 = {base}")]
    WrongBaseWitness { t: RatFunc, base: RatFunc },
    #[error("V*_0 has dimension {0}, the pair is not sharp")]
    NotSharp(usize),
    #[error("split word of length {0} does not act on V*_0 as a scalar")]
    NotProportional(usize),
    #[error("P_(A,A*) needs diameter at least 2, got {0}")]
    UnsupportedDiameter(usize),
    #[error("pair is not tridiagonal: {0}")]
    Axiom(AxiomViolation),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Drinfeld(#[from] DrinfeldError),
}

/// The four defining conditions of a tridiagonal pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Semisimple,
    Tridiagonal,
    Diameter,
    Irreducible,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Semisimple => "semisimple",
            Axiom::Tridiagonal => "tridiagonal",
            Axiom::Diameter => "diameter",
            Axiom::Irreducible => "irreducible",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub detail: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom `{}` fails: {}", self.axiom.name(), self.detail)
    }
}

fn violation(axiom: Axiom, detail: impl Into<String>) -> AxiomViolation {
    AxiomViolation {
        axiom,
        detail: detail.into(),
    }
}

/// A verified tridiagonal pair together with the standard orderings used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDPair {
    a: FieldMatrix,
    a_star: FieldMatrix,
    theta: Vec<RatFunc>,
    theta_star: Vec<RatFunc>,
    spaces: Vec<Subspace>,
    spaces_star: Vec<Subspace>,
}

impl TDPair {
    pub fn a(&self) -> &FieldMatrix {
        &self.a
    }

    pub fn a_star(&self) -> &FieldMatrix {
        &self.a_star
    }

    pub fn theta(&self) -> &[RatFunc] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[RatFunc] {
        &self.theta_star
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn spaces_star(&self) -> &[Subspace] {
        &self.spaces_star
    }

    pub fn diameter(&self) -> usize {
        self.theta.len() - 1
    }

    /// `ρ_i = dim V_i`.
    pub fn shape(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// The pair `A*, A` with the same orderings.
    pub fn swapped(&self) -> TDPair {
        TDPair {
            a: self.a_star.clone(),
            a_star: self.a.clone(),
            theta: self.theta_star.clone(),
            theta_star: self.theta.clone(),
            spaces: self.spaces_star.clone(),
            spaces_star: self.spaces.clone(),
        }
    }
}

fn eigen_decomposition(
    m: &FieldMatrix,
    eigs: &[RatFunc],
    which: &str,
) -> Result<Result<Vec<Subspace>, AxiomViolation>, TdError> {
    if eigs.is_empty() {
        return Ok(Err(violation(
            Axiom::Semisimple,
            format!("{which} has an empty eigenvalue list"),
        )));
    }
    for (i, x) in eigs.iter().enumerate() {
        if eigs[..i].contains(x) {
            return Ok(Err(violation(
                Axiom::Semisimple,
                format!("{which} eigenvalue {x} is listed twice"),
            )));
        }
    }
    let spaces = match check_semisimple(m, eigs)? {
        Ok(s) => s,
        Err(e) => {
            return Ok(Err(violation(
                Axiom::Semisimple,
                format!("{which}: eigenspaces span {} of {}", e.achieved, e.ambient),
            )))
        }
    };
    if let Some(i) = spaces.iter().position(Subspace::is_zero) {
        return Ok(Err(violation(
            Axiom::Semisimple,
            format!("{which}: {} is not an eigenvalue", eigs[i]),
        )));
    }
    Ok(Ok(spaces))
}

/// Index of the first `i` with `m·V_i ⊄ V_{i−1} + V_i + V_{i+1}`.
fn tridiagonal_failure(m: &FieldMatrix, spaces: &[Subspace]) -> Result<Option<usize>, TdError> {
    let n = m.rows();
    for i in 0..spaces.len() {
        let lo = i.saturating_sub(1);
        let hi = (i + 1).min(spaces.len() - 1);
        let band = Subspace::sum_all(n, &spaces[lo..=hi]);
        if !spaces[i].image_under(m).is_subspace_of(&band) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Checks the tridiagonal-pair axioms for `A, A*` with the given
/// eigenvalue orderings. An axiom failure is returned as a value.
pub fn verify_tdpair(
    a: &FieldMatrix,
    a_star: &FieldMatrix,
    eigs: &[RatFunc],
    eigs_star: &[RatFunc],
) -> Result<Result<TDPair, AxiomViolation>, TdError> {
    if !a.is_square() || !a_star.is_square() {
        return Err(LinalgError::NotSquare.into());
    }
    if a.rows() != a_star.rows() {
        return Err(LinalgError::DimensionMismatch {
            left: a.rows(),
            right: a_star.rows(),
        }
        .into());
    }
    let spaces = match eigen_decomposition(a, eigs, "A")? {
        Ok(s) => s,
        Err(v) => return Ok(Err(v)),
    };
    let spaces_star = match eigen_decomposition(a_star, eigs_star, "A*")? {
        Ok(s) => s,
        Err(v) => return Ok(Err(v)),
    };
    if let Some(i) = tridiagonal_failure(a_star, &spaces)? {
        return Ok(Err(violation(
            Axiom::Tridiagonal,
            format!("A* V_{i} is not inside V_{}..V_{}", i.saturating_sub(1), i + 1),
        )));
    }
    if let Some(i) = tridiagonal_failure(a, &spaces_star)? {
        return Ok(Err(violation(
            Axiom::Tridiagonal,
            format!("A V*_{i} is not inside V*_{}..V*_{}", i.saturating_sub(1), i + 1),
        )));
    }
    if spaces.len() != spaces_star.len() {
        return Ok(Err(violation(
            Axiom::Diameter,
            format!("A has {} eigenspaces, A* has {}", spaces.len(), spaces_star.len()),
        )));
    }
    if !burnside_irreducible(&[a.clone(), a_star.clone()])? {
        return Ok(Err(violation(
            Axiom::Irreducible,
            "A and A* have a common proper invariant subspace",
        )));
    }
    Ok(Ok(TDPair {
        a: a.clone(),
        a_star: a_star.clone(),
        theta: eigs.to_vec(),
        theta_star: eigs_star.to_vec(),
        spaces,
        spaces_star,
    }))
}

/// `q² + q⁻²`.
pub fn q_base() -> RatFunc {
    &RatFunc::q_pow(2) + &RatFunc::q_pow(-2)
}

fn base_ratios(theta: &[RatFunc]) -> Vec<RatFunc> {
    let d = theta.len() - 1;
    (2..d)
        .map(|i| {
            let num = &theta[i - 2] - &theta[i + 1];
            let den = &theta[i - 1] - &theta[i];
            &(&num / &den) - &RatFunc::one()
        })
        .collect()
}

/// The base `β`. For `d ≥ 3` every ratio from both eigenvalue sequences
/// must agree; for `d ≤ 2` it is `q² + q⁻²` by convention.
pub fn base_of(pair: &TDPair) -> Result<RatFunc, TdError> {
    if pair.diameter() <= 2 {
        return Ok(q_base());
    }
    let all: Vec<RatFunc> = base_ratios(&pair.theta)
        .into_iter()
        .chain(base_ratios(&pair.theta_star))
        .collect();
    let first = &all[0];
    if let Some(other) = all.iter().find(|b| *b != first) {
        return Err(TdError::InconsistentBase(format!("{first} vs {other}")));
    }
    Ok(first.clone())
}

/// `(a, b, c)` and `(a*, b*, c*)` with `θ_i = a + b·t^{2i−d} + c·t^{d−2i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaParams {
    pub a: RatFunc,
    pub a_star: RatFunc,
    pub b: RatFunc,
    pub b_star: RatFunc,
    pub c: RatFunc,
    pub c_star: RatFunc,
}

fn check_t(t: &RatFunc) -> Result<(), TdError> {
    if t.is_zero() || t.pow(4)?.is_one() {
        return Err(TdError::BadT(t.clone()));
    }
    Ok(())
}

fn fit_one(theta: &[RatFunc], t: &RatFunc) -> Result<[RatFunc; 3], TdError> {
    if let Some(i) = (1..theta.len()).find(|&i| theta[..i].contains(&theta[i])) {
        return Err(TdError::NoExactFit(format!(
            "θ_{i} = {} repeats an earlier eigenvalue",
            theta[i]
        )));
    }
    let d = theta.len() as i64 - 1;
    let row =
        |i: i64| -> Result<Vec<RatFunc>, FieldError> { Ok(vec![RatFunc::one(), t.pow(2 * i - d)?, t.pow(d - 2 * i)?]) };
    let sol = match d {
        // d < 2 leaves the system underdetermined; take a = 0.
        0 => [RatFunc::zero(), RatFunc::zero(), theta[0].clone()],
        1 => {
            let m = FieldMatrix::from_rows(vec![row(0)?[1..].to_vec(), row(1)?[1..].to_vec()])?;
            let bc = m.inverse().map_err(|_| TdError::BadT(t.clone()))?.mul_vec(theta);
            [RatFunc::zero(), bc[0].clone(), bc[1].clone()]
        }
        _ => {
            let m = FieldMatrix::from_rows(vec![row(0)?, row(1)?, row(2)?])?;
            let abc = m.inverse().map_err(|_| TdError::BadT(t.clone()))?.mul_vec(&theta[..3]);
            [abc[0].clone(), abc[1].clone(), abc[2].clone()]
        }
    };
    for (i, th) in theta.iter().enumerate() {
        let r = row(i as i64)?;
        let fitted = &(&sol[0] + &(&sol[1] * &r[1])) + &(&sol[2] * &r[2]);
        if &fitted != th {
            return Err(TdError::NoExactFit(format!("θ_{i} = {th}, fitted {fitted}")));
        }
    }
    Ok(sol)
}

/// Fits the eigenvalue parameters for a given `t`.
pub fn fit_theta_params(pair: &TDPair, t: &RatFunc) -> Result<ThetaParams, TdError> {
    check_t(t)?;
    let [a, b, c] = fit_one(&pair.theta, t)?;
    let [a_star, b_star, c_star] = fit_one(&pair.theta_star, t)?;
    Ok(ThetaParams {
        a,
        a_star,
        b,
        b_star,
        c,
        c_star,
    })
}

/// Scalar `λ` with `w = λ v`.
fn proportion(w: &[RatFunc], v: &[RatFunc]) -> Option<RatFunc> {
    let p = v.iter().position(|x| !x.is_zero())?;
    let lambda = &w[p] / &v[p];
    w.iter().zip(v).all(|(wi, vi)| *wi == &lambda * vi).then_some(lambda)
}

/// `ζ₀, …, ζ_d`: `ζ_i` is the eigenvalue of
/// `(A*−θ*₁)…(A*−θ*_i)(A−θ_{i−1})…(A−θ₀)` on `V*₀`.
pub fn split_sequence(pair: &TDPair) -> Result<Vec<RatFunc>, TdError> {
    let v0 = &pair.spaces_star[0];
    if v0.dim() != 1 {
        return Err(TdError::NotSharp(v0.dim()));
    }
    let v = &v0.basis()[0];
    let step = |m: &FieldMatrix, th: &RatFunc, x: &[RatFunc]| -> Vec<RatFunc> {
        m.mul_vec(x).iter().zip(x).map(|(mx, xi)| mx - &(th * xi)).collect()
    };
    let mut out = Vec::with_capacity(pair.theta.len());
    // `low` holds (A−θ_{i−1})…(A−θ₀)v; the A*-factors are reapplied each time.
    let mut low = v.clone();
    for i in 0..pair.theta.len() {
        if i > 0 {
            low = step(&pair.a, &pair.theta[i - 1], &low);
        }
        let mut w = low.clone();
        for th in &pair.theta_star[1..=i] {
            w = step(&pair.a_star, th, &w);
        }
        out.push(proportion(&w, v).ok_or(TdError::NotProportional(i))?);
    }
    Ok(out)
}

/// `P_{A,A*}(z) = e·Σ ζ_i p_{i+1}…p_d` with
/// `p_i = (t^i−t^{−i})²(bb*t^{2i−2d} + cc*t^{2d−2i} − z)` and
/// `e = (−1)^d([d]_t!)^{−2}(t−t⁻¹)^{−2d}`.
pub fn td_drinfeld(pair: &TDPair, t: &RatFunc) -> Result<ZPoly, TdError> {
    let d = pair.diameter();
    if d < 2 {
        return Err(TdError::UnsupportedDiameter(d));
    }
    check_t(t)?;
    let base = base_of(pair)?;
    if &(t * t) + &t.pow(-2)? != base {
        return Err(TdError::WrongBaseWitness { t: t.clone(), base });
    }
    let prm = fit_theta_params(pair, t)?;
    let zeta = split_sequence(pair)?;
    let di = d as i64;
    let bb = &prm.b * &prm.b_star;
    let cc = &prm.c * &prm.c_star;
    let p = |i: i64| -> Result<ZPoly, FieldError> {
        let s = &t.pow(i)? - &t.pow(-i)?;
        let k = &(&bb * &t.pow(2 * i - 2 * di)?) + &(&cc * &t.pow(2 * di - 2 * i)?);
        Ok(ZPoly::from_coeffs(vec![k, -RatFunc::one()]).scale(&(&s * &s)))
    };
    // tail[i] = p_{i+1}…p_d
    let mut tail = vec![ZPoly::one(); d + 1];
    for i in (0..d).rev() {
        tail[i] = &tail[i + 1] * &p(i as i64 + 1)?;
    }
    let sum = zeta
        .iter()
        .zip(&tail)
        .fold(ZPoly::zero(), |acc, (z, pr)| &acc + &pr.scale(z));
    let fact = t_factorial(t, d as u32)?;
    let tt = t - &t.inv()?;
    let mut e = (&(&fact * &fact) * &tt.pow(2 * di)?).inv()?;
    if d % 2 == 1 {
        e = -e;
    }
    Ok(sum.scale(&e))
}

/// True iff both eigenvalue sequences are `t^{d−2i}` in one of the two
/// directions.
pub fn q_geometric_check(pair: &TDPair, t: &RatFunc) -> bool {
    if check_t(t).is_err() {
        return false;
    }
    let d = pair.diameter() as i64;
    let Ok(geo) = (0..=d).map(|i| t.pow(d - 2 * i)).collect::<Result<Vec<_>, _>>() else {
        return false;
    };
    let matches = |theta: &[RatFunc]| theta == geo.as_slice() || theta.iter().rev().eq(geo.iter());
    matches(&pair.theta) && matches(&pair.theta_star)
}

/// Summary of a verified pair for a given `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TDAnalysis {
    pub base: RatFunc,
    pub diameter: usize,
    pub params: ThetaParams,
    pub q_geometric: bool,
    pub shape: Vec<usize>,
    pub split_seq: Vec<RatFunc>,
    pub t: RatFunc,
}

pub fn analyze_tdpair(pair: &TDPair, t: &RatFunc) -> Result<TDAnalysis, TdError> {
    let base = base_of(pair)?;
    if &(t * t) + &t.pow(-2)? != base {
        return Err(TdError::WrongBaseWitness { t: t.clone(), base });
    }
    Ok(TDAnalysis {
        diameter: pair.diameter(),
        shape: pair.shape(),
        params: fit_theta_params(pair, t)?,
        split_seq: split_sequence(pair)?,
        q_geometric: q_geometric_check(pair, t),
        base,
        t: t.clone(),
    })
}

/// `ρ_i = ρ_{d−i}` and `ρ₀ ≤ ρ₁ ≤ …` up to the middle.
pub fn shape_is_symmetric_unimodal(shape: &[usize]) -> bool {
    let d = shape.len();
    let symmetric = (0..d).all(|i| shape[i] == shape[d - 1 - i]);
    let rising = (1..d.div_ceil(2)).all(|i| shape[i - 1] <= shape[i]);
    symmetric && rising
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    fn geo(d: i64, sign: i64) -> Vec<RatFunc> {
        (0..=d).map(|i| RatFunc::q_pow(sign * (d - 2 * i))).collect()
    }

    #[test]
    fn commuting_diagonals_are_reducible() {
        let a = FieldMatrix::diagonal(&[rf("1"), rf("2")]);
        let b = FieldMatrix::diagonal(&[rf("3"), rf("4")]);
        let v = verify_tdpair(&a, &b, &[rf("1"), rf("2")], &[rf("3"), rf("4")])
            .unwrap()
            .unwrap_err();
        assert_eq!(v.axiom, Axiom::Irreducible);
    }

    #[test]
    fn wrong_eigenvalues_fail_semisimplicity() {
        let a = FieldMatrix::diagonal(&[rf("1"), rf("2")]);
        let v = verify_tdpair(&a, &a, &[rf("1"), rf("3")], &[rf("1"), rf("2")])
            .unwrap()
            .unwrap_err();
        assert_eq!(v.axiom, Axiom::Semisimple);
        let v = verify_tdpair(&a, &a, &[rf("1"), rf("1")], &[rf("1"), rf("2")])
            .unwrap()
            .unwrap_err();
        assert_eq!(v.axiom, Axiom::Semisimple);
    }

    #[test]
    fn non_tridiagonal_pair() {
        // A = diag(1,2,3); A* swaps the first and last basis vectors.
        let a = FieldMatrix::diagonal(&[rf("1"), rf("2"), rf("3")]);
        let mut s = FieldMatrix::zeros(3, 3);
        s.set(0, 2, rf("1"));
        s.set(1, 1, rf("1"));
        s.set(2, 0, rf("1"));
        let v = verify_tdpair(&a, &s, &[rf("1"), rf("2"), rf("3")], &[rf("1"), rf("-1")])
            .unwrap()
            .unwrap_err();
        assert_eq!(v.axiom, Axiom::Tridiagonal);
    }

    #[test]
    fn fit_geometric_orderings() {
        let t = RatFunc::q();
        for d in 1..5 {
            let [a, b, c] = fit_one(&geo(d, -1), &t).unwrap();
            assert_eq!((a, b, c), (RatFunc::zero(), RatFunc::one(), RatFunc::zero()), "d = {d}");
        }
        for d in 0..5 {
            let [a, b, c] = fit_one(&geo(d, 1), &t).unwrap();
            assert_eq!((a, b, c), (RatFunc::zero(), RatFunc::zero(), RatFunc::one()), "d = {d}");
        }
    }

    #[test]
    fn constant_theta_has_no_fit() {
        let theta = vec![rf("1"); 3];
        assert!(matches!(fit_one(&theta, &RatFunc::q()), Err(TdError::NoExactFit(_))));
        let theta = vec![rf("1"), rf("2"), rf("5"), rf("7")];
        assert!(matches!(fit_one(&theta, &RatFunc::q()), Err(TdError::NoExactFit(_))));
    }

    #[test]
    fn base_ratio_of_geometric_sequence() {
        for d in 3..6 {
            for r in base_ratios(&geo(d, 1)) {
                assert_eq!(r, q_base());
            }
        }
        let mut bad = geo(4, 1);
        bad[0] = rf("5");
        let rs = base_ratios(&bad);
        assert_ne!(rs[0], rs[1]);
    }

    #[test]
    fn shape_predicate() {
        assert!(shape_is_symmetric_unimodal(&[1, 2, 2, 1]));
        assert!(shape_is_symmetric_unimodal(&[1, 3, 1]));
        assert!(shape_is_symmetric_unimodal(&[2]));
        assert!(!shape_is_symmetric_unimodal(&[2, 1, 2]));
        assert!(!shape_is_symmetric_unimodal(&[1, 2]));
    }

    #[test]
    fn bad_t_is_rejected() {
        assert!(check_t(&rf("1")).is_err());
        assert!(check_t(&rf("-1")).is_err());
        assert!(check_t(&RatFunc::zero()).is_err());
        assert!(check_t(&RatFunc::q()).is_ok());
    }
}
