//! Cross-checks at a numeric value of q, computed over ℚ independently of
//! the exact ℚ(q) routines.

use anyhow::{bail, Result};
use boxq_core::drinfeld::ZPoly;
use boxq_core::field::{RatFunc, Rational};
use boxq_core::linalg::FieldMatrix;
use boxq_core::presentations::{relations, Representation};
use num_traits::{One, Zero};

use crate::usage;

pub type Mat = Vec<Vec<Rational>>;

pub fn scalar_at(f: &RatFunc, q0: &Rational) -> Result<Rational> {
    f.eval_at(q0).map_err(|_| usage(format!("q0 = {q0} is a pole of {f}")))
}

pub fn matrix_at(m: &FieldMatrix, q0: &Rational) -> Result<Mat> {
    m.specialize(q0)
        .ok_or_else(|| usage(format!("q0 = {q0} is a pole of some matrix entry")))
}

pub fn poly_at(p: &ZPoly, q0: &Rational) -> Result<Vec<Rational>> {
    p.coeffs().iter().map(|c| scalar_at(c, q0)).collect()
}

/// `z^d f(1/z) / f_d` on a coefficient list, constant first.
pub fn partner_at(coeffs: &[Rational]) -> Vec<Rational> {
    match coeffs.last() {
        Some(lead) if !lead.is_zero() => coeffs.iter().rev().map(|c| c / lead).collect(),
        _ => coeffs.to_vec(),
    }
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// Evaluates every defining relation on the specialized generators.
/// Returns the number of relations checked, or the label of the first
/// one that does not vanish.
pub fn relations_at(rep: &Representation, q0: &Rational) -> Result<std::result::Result<usize, String>> {
    let gens: Vec<Mat> = rep.ordered().iter().map(|m| matrix_at(m, q0)).collect::<Result<_>>()?;
    let n = rep.dim();
    let table = relations(rep.algebra());
    for rel in table {
        let mut acc = vec![vec![Rational::zero(); n]; n];
        for t in &rel.terms {
            let c = scalar_at(&t.coeff, q0)?;
            let word = t.word.iter().fold(identity(n), |m, &g| mul(&m, &gens[g]));
            for (arow, wrow) in acc.iter_mut().zip(&word) {
                for (x, w) in arow.iter_mut().zip(wrow) {
                    *x += &c * w;
                }
            }
        }
        if acc.iter().flatten().any(|x| !x.is_zero()) {
            return Ok(Err(rel.label.clone()));
        }
    }
    Ok(Ok(table.len()))
}

/// Runs [`relations_at`] and turns a nonvanishing relation into an error.
pub fn certify_at(rep: &Representation, q0: &Rational) -> Result<()> {
    match relations_at(rep, q0)? {
        Ok(n) => {
            eprintln!("q0 = {q0}: all {n} relations vanish");
            Ok(())
        }
        Err(label) => bail!("relation {label} does not vanish at q0 = {q0}"),
    }
}

pub fn show(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use boxq_core::field::parse_ratfunc;
    use boxq_core::modules::{evaluation_module, Coords};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn partner_reverses_and_normalizes() {
        assert_eq!(partner_at(&[r(1, 1), r(-8, 1)]), vec![r(1, 1), r(-1, 8)]);
    }

    #[test]
    fn evaluation_module_relations_vanish_at_two() {
        let a = parse_ratfunc("q^3").unwrap();
        for coords in [Coords::Chevalley, Coords::Equitable] {
            let rep = evaluation_module(&a, coords).unwrap();
            assert!(relations_at(&rep, &r(2, 1)).unwrap().is_ok());
        }
    }

    #[test]
    fn pole_is_a_usage_error() {
        let rep = evaluation_module(&parse_ratfunc("q^3").unwrap(), Coords::Chevalley).unwrap();
        assert!(relations_at(&rep, &r(0, 1)).is_err());
    }
}
