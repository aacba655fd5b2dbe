use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::echelon::{null_space_of_rref, rref_in_place, Echelon};
use super::{FieldMatrix, LinalgError};
use crate::field::RatFunc;

/// A subspace of ℚ(q)^n stored by the reduced row-echelon form of a basis.
///
/// The echelon form is unique, so derived equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<RatFunc>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, &FieldMatrix::identity(ambient_dim).row_vecs())
    }

    /// The span of arbitrary vectors (dependent ones are fine).
    pub fn span(ambient_dim: usize, vectors: &[Vec<RatFunc>]) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length differs from ambient dimension");
            e.insert(v.clone());
        }
        Subspace {
            ambient_dim,
            basis: e.into_rref(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<RatFunc>] {
        &self.basis
    }

    fn echelon(&self) -> Echelon<RatFunc> {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            e.insert(v.clone());
        }
        e
    }

    pub fn contains(&self, v: &[RatFunc]) -> bool {
        self.echelon().contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        let e = other.echelon();
        self.basis.iter().all(|v| e.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient_dim, &all))
    }

    /// Sum of a family; the empty family gives the zero subspace.
    pub fn sum_all<'a>(ambient_dim: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let mut all = Vec::new();
        for p in parts {
            assert_eq!(p.ambient_dim, ambient_dim, "ambient dimension mismatch");
            all.extend(p.basis.iter().cloned());
        }
        Subspace::span(ambient_dim, &all)
    }

    /// Vectors annihilated by the bilinear pairing with every basis vector.
    fn annihilator_rows(&self) -> Vec<Vec<RatFunc>> {
        let mut rows = self.basis.clone();
        let pivots = rref_in_place(&mut rows, self.ambient_dim);
        null_space_of_rref(&rows, &pivots, self.ambient_dim)
    }

    /// `U ∩ W`, computed as the common kernel of both annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let mut rows = self.annihilator_rows();
        rows.extend(other.annihilator_rows());
        if rows.is_empty() {
            return Ok(Subspace::full(self.ambient_dim));
        }
        Ok(kernel_of_rows(rows, self.ambient_dim))
    }

    /// Whether `A·U ⊆ U`.
    pub fn is_invariant_under(&self, a: &FieldMatrix) -> bool {
        let e = self.echelon();
        self.basis.iter().all(|v| e.contains(&a.mul_vec(v)))
    }

    /// Image `A·U` as a subspace.
    pub fn image_under(&self, a: &FieldMatrix) -> Subspace {
        let imgs: Vec<Vec<RatFunc>> = self.basis.iter().map(|v| a.mul_vec(v)).collect();
        Subspace::span(a.rows(), &imgs)
    }
}

/// Canonical kernel of the matrix with the given rows.
pub(crate) fn kernel_of_rows(mut rows: Vec<Vec<RatFunc>>, width: usize) -> Subspace {
    let pivots = rref_in_place(&mut rows, width);
    let ns = null_space_of_rref(&rows, &pivots, width);
    Subspace::span(width, &ns)
}

#[derive(Serialize, Deserialize)]
struct SubspaceWire {
    ambient_dim: usize,
    basis: Vec<Vec<RatFunc>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SubspaceWire {
            ambient_dim: self.ambient_dim,
            basis: self.basis.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = SubspaceWire::deserialize(deserializer)?;
        if wire.basis.iter().any(|v| v.len() != wire.ambient_dim) {
            return Err(D::Error::custom("basis vector length differs from ambient_dim"));
        }
        Ok(Subspace::span(wire.ambient_dim, &wire.basis))
    }
}
