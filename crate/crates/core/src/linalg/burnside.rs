use std::collections::VecDeque;

use super::echelon::Echelon;
use super::scalar::{Fp, Scalar};
use super::{specialize_all, FieldMatrix, LinalgError};
use crate::field::RatFunc;

/// Whether the generated algebra is all of `Mat_n(ℚ(q))`, by closing the
/// span of words under left multiplication by the generators.
///
/// The closure is first run at a sample specialization reduced modulo a
/// large prime. Reaching `n²` there already proves it over ℚ(q), since
/// both specialization and reduction can only lower rank.
pub fn burnside_irreducible(gens: &[FieldMatrix]) -> Result<bool, LinalgError> {
    let Some(n) = gens.first().map(FieldMatrix::rows) else {
        return Err(LinalgError::EmptyMatrix);
    };
    for g in gens {
        if !g.is_square() {
            return Err(LinalgError::NotSquare);
        }
        if g.rows() != n {
            return Err(LinalgError::DimensionMismatch {
                left: n,
                right: g.rows(),
            });
        }
    }
    let refs: Vec<&FieldMatrix> = gens.iter().collect();
    if let Some((_, spec)) = specialize_all(&refs) {
        let reduced: Option<Vec<Vec<Vec<Fp>>>> = spec
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(Fp::from_rational).collect())
                    .collect()
            })
            .collect();
        if let Some(reduced) = reduced {
            if closure_dim::<Fp>(&reduced, n) == n * n {
                return Ok(true);
            }
        }
    }
    let exact: Vec<Vec<Vec<RatFunc>>> = gens.iter().map(FieldMatrix::row_vecs).collect();
    Ok(closure_dim::<RatFunc>(&exact, n) == n * n)
}

/// Dimension of the algebra generated by `gens` (including the identity).
fn closure_dim<T: Scalar>(gens: &[Vec<Vec<T>>], n: usize) -> usize {
    let target = n * n;
    let max_len = 2 * target;
    let identity: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let mut span: Echelon<T> = Echelon::new(target);
    span.insert(flatten(&identity));
    let mut queue = VecDeque::from([(identity, 0usize)]);
    while let Some((word, len)) = queue.pop_front() {
        if span.rank() == target || len >= max_len {
            break;
        }
        for g in gens {
            let next = mul(g, &word);
            if span.insert(flatten(&next)) {
                queue.push_back((next, len + 1));
            }
        }
    }
    span.rank()
}

fn flatten<T: Scalar>(m: &[Vec<T>]) -> Vec<T> {
    m.iter().flat_map(|r| r.iter().cloned()).collect()
}

fn mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![T::zero(); m]; n];
    for i in 0..n {
        for k in 0..b.len() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].plus(&a[i][k].times(&b[k][j]));
                }
            }
        }
    }
    out
}
