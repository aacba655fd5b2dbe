//! Linear equations whose unknown is a matrix: `Σ_t L_t · M · R_t = C`.

use num_traits::Zero;

use super::echelon::{null_space_of_rref, reduce_sparse, Echelon};
use super::{sample_points, FieldMatrix, LinalgError};
use crate::field::{RatFunc, Rational};

/// One equation `Σ_t L_t · M · R_t = rhs`.
#[derive(Debug, Clone)]
pub struct MatrixEquation {
    pub terms: Vec<(FieldMatrix, FieldMatrix)>,
    pub rhs: FieldMatrix,
}

impl MatrixEquation {
    /// `M·A − B·M = 0`.
    pub fn intertwining(a: &FieldMatrix, b: &FieldMatrix) -> Self {
        let n = a.rows();
        MatrixEquation {
            terms: vec![(FieldMatrix::identity(n), a.clone()), (-b, FieldMatrix::identity(n))],
            rhs: FieldMatrix::zeros(n, n),
        }
    }

    fn lhs(&self, m: &FieldMatrix) -> FieldMatrix {
        let mut acc = FieldMatrix::zeros(self.rhs.rows(), self.rhs.cols());
        for (l, r) in &self.terms {
            acc = &acc + &(&(l * m) * r);
        }
        acc
    }

    fn holds_for(&self, m: &FieldMatrix) -> bool {
        self.lhs(m) == self.rhs
    }

    fn holds_homogeneous(&self, m: &FieldMatrix) -> bool {
        self.lhs(m).is_zero()
    }
}

/// All solutions: `particular + span(homogeneous)`.
#[derive(Debug, Clone)]
pub struct AffineSolution {
    pub particular: FieldMatrix,
    pub homogeneous: Vec<FieldMatrix>,
}

/// Solves a system of matrix equations for an unknown of shape
/// `rows × cols`. `Ok(None)` means the system is inconsistent.
///
/// A specialization at a sample `q` picks a maximal set of independent
/// equations. The reduced system is solved exactly and its solutions are
/// checked against every equation; only if that check fails is the full
/// system eliminated.
pub fn solve_matrix_equations(
    rows: usize,
    cols: usize,
    eqs: &[MatrixEquation],
) -> Result<Option<AffineSolution>, LinalgError> {
    for eq in eqs {
        if eq.rhs.rows() != rows || eq.rhs.cols() != cols {
            return Err(LinalgError::DimensionMismatch {
                left: rows * cols,
                right: eq.rhs.rows() * eq.rhs.cols(),
            });
        }
        for (l, r) in &eq.terms {
            if l.cols() != rows || r.rows() != cols || l.rows() != rows || r.cols() != cols {
                return Err(LinalgError::DimensionMismatch {
                    left: rows * cols,
                    right: l.cols() * r.rows(),
                });
            }
        }
    }
    let width = rows * cols;
    let system = build_rows(rows, cols, eqs);

    if let Some(selected) = independent_rows_at_sample(&system, width) {
        let sub: Vec<Vec<RatFunc>> = selected.iter().map(|&i| system[i].clone()).collect();
        match solve_augmented(sub, rows, cols) {
            None => return Ok(None),
            Some(sol) => {
                let ok = eqs
                    .iter()
                    .all(|eq| eq.holds_for(&sol.particular) && sol.homogeneous.iter().all(|h| eq.holds_homogeneous(h)));
                if ok {
                    return Ok(Some(sol));
                }
            }
        }
    }
    Ok(solve_augmented(system, rows, cols))
}

/// Augmented rows `[coefficients | rhs]`, one per entry of each equation.
fn build_rows(rows: usize, cols: usize, eqs: &[MatrixEquation]) -> Vec<Vec<RatFunc>> {
    let width = rows * cols;
    let mut out = Vec::with_capacity(eqs.len() * width);
    for eq in eqs {
        for i in 0..rows {
            for j in 0..cols {
                let mut row = vec![RatFunc::zero(); width + 1];
                // (L M R)_{ij} = Σ_{a,b} L_{ia} M_{ab} R_{bj}
                for (l, r) in &eq.terms {
                    for a in 0..rows {
                        let lia = l.get(i, a);
                        if lia.is_zero() {
                            continue;
                        }
                        for b in 0..cols {
                            let rbj = r.get(b, j);
                            if rbj.is_zero() {
                                continue;
                            }
                            row[a * cols + b] += &(lia * rbj);
                        }
                    }
                }
                row[width] = eq.rhs.get(i, j).clone();
                out.push(row);
            }
        }
    }
    out
}

/// Indices of rows whose coefficient parts are independent at a sample
/// point, or `None` if every sample point hits a pole.
fn independent_rows_at_sample(system: &[Vec<RatFunc>], width: usize) -> Option<Vec<usize>> {
    'points: for q0 in sample_points() {
        let mut e: Echelon<Rational> = Echelon::new(width);
        let mut selected = Vec::new();
        for (idx, row) in system.iter().enumerate() {
            let mut spec = Vec::with_capacity(width);
            for x in &row[..width] {
                match x.eval_at(&q0) {
                    Ok(v) => spec.push(v),
                    Err(_) => continue 'points,
                }
            }
            if e.insert(spec) {
                selected.push(idx);
                if e.rank() == width {
                    break;
                }
            }
        }
        return Some(selected);
    }
    None
}

fn solve_augmented(mut system: Vec<Vec<RatFunc>>, rows: usize, cols: usize) -> Option<AffineSolution> {
    let width = rows * cols;
    let red = reduce_sparse(&mut system, width);
    if red.inconsistent {
        return None;
    }
    let pivots = red.pivots;
    let mut particular = vec![RatFunc::zero(); width];
    for (row, &p) in system.iter().zip(&pivots) {
        particular[p] = row[width].clone();
    }
    let coeff_rows: Vec<Vec<RatFunc>> = system.iter().map(|r| r[..width].to_vec()).collect();
    let to_matrix = |v: &[RatFunc]| FieldMatrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone());
    Some(AffineSolution {
        particular: to_matrix(&particular),
        homogeneous: null_space_of_rref(&coeff_rows, &pivots, width)
            .iter()
            .map(|v| to_matrix(v))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn commutant_of_diagonal() {
        let a = FieldMatrix::diagonal(&[rf("q"), rf("1/q")]);
        let sol = solve_matrix_equations(2, 2, &[MatrixEquation::intertwining(&a, &a)])
            .unwrap()
            .unwrap();
        assert!(sol.particular.is_zero());
        assert_eq!(sol.homogeneous.len(), 2);
    }

    #[test]
    fn inhomogeneous_q_commutator() {
        // q·X·M − q⁻¹·M·X = (q − q⁻¹)·I with X = diag(q, q⁻¹) forces
        // M = diag(1, 1) on the diagonal and kills the off-diagonal.
        let x = FieldMatrix::diagonal(&[rf("q"), rf("1/q")]);
        let i2 = FieldMatrix::identity(2);
        let eq = MatrixEquation {
            terms: vec![(x.scale(&rf("q")), i2.clone()), (i2.clone(), x.scale(&rf("-1/q")))],
            rhs: FieldMatrix::scalar(2, &rf("q - 1/q")),
        };
        let sol = solve_matrix_equations(2, 2, std::slice::from_ref(&eq))
            .unwrap()
            .unwrap();
        assert!(eq.holds_for(&sol.particular));
        for h in &sol.homogeneous {
            assert!(eq.holds_homogeneous(h));
        }
    }

    #[test]
    fn inconsistent_system() {
        let i2 = FieldMatrix::identity(2);
        let eqs = [
            MatrixEquation {
                terms: vec![(i2.clone(), i2.clone())],
                rhs: FieldMatrix::zeros(2, 2),
            },
            MatrixEquation {
                terms: vec![(i2.clone(), i2.clone())],
                rhs: i2.clone(),
            },
        ];
        assert!(solve_matrix_equations(2, 2, &eqs).unwrap().is_none());
    }
}
