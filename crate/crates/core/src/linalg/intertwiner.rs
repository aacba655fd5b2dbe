use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::equations::{solve_matrix_equations, MatrixEquation};
use super::{FieldMatrix, LinalgError};
use crate::field::RatFunc;

/// Outcome of searching for an invertible `S` with `S·A_k = B_k·S`.
#[derive(Debug, Clone)]
pub enum Intertwiner {
    /// Invertible intertwiner, scaled so its first nonzero entry
    /// (row-major) is 1.
    Found(FieldMatrix),
    /// Only `S = 0` intertwines.
    NoSolution,
    /// Nonzero intertwiners exist but none of the tried candidates was
    /// invertible.
    NoInvertibleFound { solution_dim: usize },
}

const RANDOM_TRIES: usize = 32;
const SEED: u64 = 0x005e_ed0f_b0c5;

/// Searches for an invertible intertwiner between two families of `n × n`
/// operators. Candidates, in order: each basis vector of the solution
/// space, each pairwise sum, then seeded random small-integer combinations.
pub fn solve_intertwiner(a: &[FieldMatrix], b: &[FieldMatrix]) -> Result<Intertwiner, LinalgError> {
    if a.len() != b.len() {
        return Err(LinalgError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = match a.first().or(b.first()) {
        Some(m) => m.rows(),
        None => return Err(LinalgError::EmptyMatrix),
    };
    for m in a.iter().chain(b) {
        if !m.is_square() {
            return Err(LinalgError::NotSquare);
        }
        if m.rows() != n {
            return Err(LinalgError::DimensionMismatch {
                left: n,
                right: m.rows(),
            });
        }
    }
    let eqs: Vec<MatrixEquation> = a
        .iter()
        .zip(b)
        .map(|(x, y)| MatrixEquation::intertwining(x, y))
        .collect();
    let eqs = if eqs.is_empty() {
        // No constraints: every matrix intertwines.
        vec![MatrixEquation {
            terms: Vec::new(),
            rhs: FieldMatrix::zeros(n, n),
        }]
    } else {
        eqs
    };
    let basis = solve_matrix_equations(n, n, &eqs)?
        .map(|s| s.homogeneous)
        .unwrap_or_default();
    if basis.is_empty() {
        return Ok(Intertwiner::NoSolution);
    }
    Ok(match pick_invertible(&basis) {
        Some(s) => Intertwiner::Found(normalize(s)),
        None => Intertwiner::NoInvertibleFound {
            solution_dim: basis.len(),
        },
    })
}

fn pick_invertible(basis: &[FieldMatrix]) -> Option<FieldMatrix> {
    for s in basis {
        if s.is_invertible() {
            return Some(s.clone());
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = &basis[i] + &basis[j];
            if s.is_invertible() {
                return Some(s);
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIES {
        let mut s = FieldMatrix::zeros(basis[0].rows(), basis[0].cols());
        for b in basis {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                s = &s + &b.scale(&RatFunc::from_int(c));
            }
        }
        if s.is_invertible() {
            return Some(s);
        }
    }
    None
}

fn normalize(s: FieldMatrix) -> FieldMatrix {
    match s.entries().iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inv().expect("nonzero entry");
            s.scale(&inv)
        }
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;
    use num_traits::Zero;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn swapped_diagonal_is_conjugated_by_the_swap() {
        let a = FieldMatrix::diagonal(&[rf("q"), rf("1/q")]);
        let b = FieldMatrix::diagonal(&[rf("1/q"), rf("q")]);
        let Intertwiner::Found(s) = solve_intertwiner(std::slice::from_ref(&a), std::slice::from_ref(&b)).unwrap()
        else {
            panic!("expected an intertwiner");
        };
        assert_eq!(&s * &a, &b * &s);
        let swap = FieldMatrix::from_rows(vec![
            vec![RatFunc::zero(), RatFunc::from_int(1)],
            vec![RatFunc::from_int(1), RatFunc::zero()],
        ])
        .unwrap();
        assert_eq!(s, swap);
    }

    #[test]
    fn different_spectra_have_no_intertwiner() {
        let a = FieldMatrix::diagonal(&[rf("q"), rf("1/q")]);
        let b = FieldMatrix::diagonal(&[rf("q^2"), rf("1/q")]);
        let r = solve_intertwiner(&[a], &[b]).unwrap();
        assert!(!matches!(r, Intertwiner::Found(_)));
    }

    #[test]
    fn jordan_versus_diagonal_only_singular() {
        let j = FieldMatrix::from_rows(vec![
            vec![RatFunc::from_int(1), RatFunc::from_int(1)],
            vec![RatFunc::zero(), RatFunc::from_int(1)],
        ])
        .unwrap();
        let i2 = FieldMatrix::identity(2);
        let r = solve_intertwiner(&[j], &[i2]).unwrap();
        assert!(matches!(r, Intertwiner::NoInvertibleFound { solution_dim: 2 }));
    }

    #[test]
    fn mismatched_lengths() {
        let a = FieldMatrix::identity(2);
        assert!(solve_intertwiner(std::slice::from_ref(&a), &[]).is_err());
    }
}
