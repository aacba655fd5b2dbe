//! Row-echelon machinery shared by every exact linear-algebra routine.

use super::scalar::Scalar;

/// An incrementally built basis of a row space.
///
/// Each stored row has a 1 at its pivot and zeros at the pivots of all rows
/// inserted before it, which is enough to reduce new vectors in insertion
/// order. [`Echelon::into_rref`] finishes the reduction.
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    width: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Subtracts stored rows until `v` vanishes on every pivot.
    pub fn reduce(&self, v: &mut [T]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.minus(&f.times(r));
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<T>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        // Prefer the lightest nonzero entry as pivot to limit growth.
        let pivot = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .min_by_key(|(_, x)| x.weight())
            .map(|(i, _)| i);
        let Some(p) = pivot else {
            return false;
        };
        let inv = T::one().over(&v[p]);
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Reduced row-echelon form: rows sorted by leading column, each leading
    /// entry 1 and the only nonzero in its column.
    pub fn into_rref(self) -> Vec<Vec<T>> {
        let width = self.width;
        let mut rows = self.rows;
        rref_in_place(&mut rows, width);
        rows
    }
}

/// Gauss–Jordan elimination in place; zero rows are dropped.
/// Returns the pivot column of each remaining row.
pub fn rref_in_place<T: Scalar>(rows: &mut Vec<Vec<T>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].weight());
        let Some(best) = best else { continue };
        rows.swap(r, best);
        let inv = T::one().over(&rows[r][col]);
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.minus(&f.times(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Result of [`reduce_sparse`].
pub struct SparseReduction {
    /// Pivot column of each kept row; each pivot column is a unit vector.
    pub pivots: Vec<usize>,
    /// Some row reduced to zero coefficients with a nonzero trailing part.
    pub inconsistent: bool,
}

/// Gauss–Jordan elimination on the first `width` columns with Markowitz
/// pivoting: each step takes the entry minimizing `(r−1)(c−1)` (row and
/// column nonzero counts), then weight. Columns past `width` are carried
/// along. Rows keep no particular order, so the result is not the
/// canonical RREF.
pub fn reduce_sparse<T: Scalar>(rows: &mut Vec<Vec<T>>, width: usize) -> SparseReduction {
    let mut active: Vec<usize> = (0..rows.len()).collect();
    let mut done: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut col_count = vec![0usize; width];
        for &i in &active {
            for (c, x) in rows[i][..width].iter().enumerate() {
                if !x.is_zero() {
                    col_count[c] += 1;
                }
            }
        }
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for &i in &active {
            let row_count = rows[i][..width].iter().filter(|x| !x.is_zero()).count();
            for (c, x) in rows[i][..width].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let cost = (row_count - 1) * (col_count[c] - 1);
                let w = x.weight();
                if best.is_none_or(|(bc, bw, _, _)| (cost, w) < (bc, bw)) {
                    best = Some((cost, w, i, c));
                }
            }
        }
        let Some((_, _, r, col)) = best else { break };
        let inv = T::one().over(&rows[r][col]);
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.minus(&f.times(p));
                }
            }
        }
        active.retain(|&i| i != r);
        done.push((r, col));
    }
    let inconsistent = active.iter().any(|&i| rows[i][width..].iter().any(|x| !x.is_zero()));
    let mut taken: Vec<Option<Vec<T>>> = std::mem::take(rows).into_iter().map(Some).collect();
    let mut pivots = Vec::with_capacity(done.len());
    for (r, col) in done {
        rows.push(taken[r].take().expect("each row pivots once"));
        pivots.push(col);
    }
    SparseReduction { pivots, inconsistent }
}

/// Null space of the matrix with the given rows, as a list of vectors.
#[cfg(test)]
pub fn null_space<T: Scalar>(rows: Vec<Vec<T>>, width: usize) -> Vec<Vec<T>> {
    let mut rows = rows;
    let pivots = rref_in_place(&mut rows, width);
    null_space_of_rref(&rows, &pivots, width)
}

/// Null space read off an RREF matrix: one vector per free column.
pub fn null_space_of_rref<T: Scalar>(rows: &[Vec<T>], pivots: &[usize], width: usize) -> Vec<Vec<T>> {
    let mut is_pivot = vec![false; width];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..width)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![T::zero(); width];
            v[f] = T::one();
            for (row, &p) in rows.iter().zip(pivots) {
                if !row[f].is_zero() {
                    v[p] = T::zero().minus(&row[f]);
                }
            }
            v
        })
        .collect()
}
