//! Dense exact linear algebra over ℚ(q).
//!
//! Every routine fully reduces to canonical echelon form, so subspaces
//! coming out of different computations compare with `==`.

mod burnside;
pub(crate) mod echelon;
mod equations;
mod intertwiner;
mod matrix;
mod scalar;
mod subspace;

pub use burnside::burnside_irreducible;
pub use equations::{solve_matrix_equations, AffineSolution, MatrixEquation};
pub use intertwiner::{solve_intertwiner, Intertwiner};
pub use matrix::FieldMatrix;
pub use scalar::Scalar;
pub use subspace::Subspace;

use thiserror::Error;

use crate::field::{RatFunc, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix must be square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has no entries")]
    EmptyMatrix,
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("operator lists have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
}

/// Null space of `A`.
pub fn kernel(a: &FieldMatrix) -> Subspace {
    subspace::kernel_of_rows(a.row_vecs(), a.cols())
}

/// `V_A(θ) = ker(A − θI)`.
pub fn eigenspace(a: &FieldMatrix, theta: &RatFunc) -> Result<Subspace, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare);
    }
    Ok(kernel(&a.minus_scalar(theta)))
}

/// `A` is not spanned by eigenspaces for the supplied eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSemisimple {
    /// Sum of the eigenspace dimensions that were found.
    pub achieved: usize,
    pub ambient: usize,
}

/// Eigenspaces of `A` for `eigs` (in order) when they exhaust the space.
pub fn check_semisimple(
    a: &FieldMatrix,
    eigs: &[RatFunc],
) -> Result<Result<Vec<Subspace>, NotSemisimple>, LinalgError> {
    let spaces = eigs
        .iter()
        .map(|theta| eigenspace(a, theta))
        .collect::<Result<Vec<_>, _>>()?;
    let achieved: usize = spaces.iter().map(Subspace::dim).sum();
    if achieved == a.rows() {
        Ok(Ok(spaces))
    } else {
        Ok(Err(NotSemisimple {
            achieved,
            ambient: a.rows(),
        }))
    }
}

/// `U ∩ W`.
pub fn intersect(u: &Subspace, w: &Subspace) -> Result<Subspace, LinalgError> {
    u.intersect(w)
}

/// Sample points for specialization shortcuts. A certificate obtained at a
/// specialization (full rank, trivial kernel) lifts to ℚ(q) because a
/// nonvanishing minor at `q0` is a nonzero rational function.
pub(crate) fn sample_points() -> Vec<Rational> {
    [(7, 3), (-11, 5), (13, 4), (17, 6)]
        .iter()
        .map(|&(n, d)| Rational::new(n.into(), d.into()))
        .collect()
}

/// Specializes every matrix at the first sample point where all are defined.
pub(crate) fn specialize_all(mats: &[&FieldMatrix]) -> Option<(Rational, Vec<Vec<Vec<Rational>>>)> {
    'points: for q0 in sample_points() {
        let mut out = Vec::with_capacity(mats.len());
        for m in mats {
            match m.specialize(&q0) {
                Some(s) => out.push(s),
                None => continue 'points,
            }
        }
        return Some((q0, out));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;
    use num_traits::{One, Zero};

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    fn m(rows: &[&[&str]]) -> FieldMatrix {
        FieldMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| rf(s)).collect()).collect()).unwrap()
    }

    fn e(n: usize, i: usize) -> Vec<RatFunc> {
        (0..n)
            .map(|k| if k == i { RatFunc::one() } else { RatFunc::zero() })
            .collect()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert!(kernel(&FieldMatrix::identity(3)).is_zero());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        assert_eq!(kernel(&FieldMatrix::zeros(2, 2)), Subspace::full(2));
    }

    #[test]
    fn kernel_rank_one() {
        let k = kernel(&m(&[&["1", "q"], &["1/q", "1"]]));
        assert_eq!(k, Subspace::span(2, &[vec![rf("-q"), rf("1")]]));
    }

    #[test]
    fn eigenspaces_of_diagonal() {
        let a = FieldMatrix::diagonal(&[rf("q"), rf("1/q")]);
        assert_eq!(eigenspace(&a, &rf("q")).unwrap(), Subspace::span(2, &[e(2, 0)]));
    }

    #[test]
    fn eigenspaces_of_upper_triangular() {
        let a = m(&[&["1/q", "(q - 1/q)/q^3"], &["0", "q"]]);
        assert_eq!(eigenspace(&a, &rf("1/q")).unwrap(), Subspace::span(2, &[e(2, 0)]));
        assert!(eigenspace(&a, &rf("1")).unwrap().is_zero());
    }

    #[test]
    fn semisimple_diagonal_and_jordan() {
        let a = FieldMatrix::diagonal(&[rf("q"), rf("1/q")]);
        let spaces = check_semisimple(&a, &[rf("q"), rf("1/q")]).unwrap().unwrap();
        assert_eq!(spaces.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![1, 1]);
        let j = m(&[&["1", "1"], &["0", "1"]]);
        let fail = check_semisimple(&j, &[rf("1")]).unwrap().unwrap_err();
        assert_eq!(fail.achieved, 1);
    }

    #[test]
    fn intersections() {
        let u = Subspace::span(3, &[e(3, 0), e(3, 1)]);
        let w = Subspace::span(3, &[e(3, 1), e(3, 2)]);
        assert_eq!(intersect(&u, &w).unwrap(), Subspace::span(3, &[e(3, 1)]));
        assert_eq!(intersect(&u, &u).unwrap(), u);
        let l1 = Subspace::span(2, &[vec![rf("1"), rf("q")]]);
        let l2 = Subspace::span(2, &[vec![rf("1"), rf("q^2")]]);
        assert!(intersect(&l1, &l2).unwrap().is_zero());
        assert!(matches!(
            intersect(&u, &l1),
            Err(LinalgError::DimensionMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn rank_nullity_on_a_fixed_matrix() {
        let a = m(&[&["1", "q", "q^2"], &["q", "q^2", "q^3"], &["0", "1", "1/q"]]);
        assert_eq!(a.rank() + kernel(&a).dim(), 3);
    }
}
