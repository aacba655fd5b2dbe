use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AlgebraId, PresentationError};
use crate::linalg::FieldMatrix;

/// A binding of every generator of an algebra to a `dim × dim` matrix.
/// Whether the relations hold is a separate question, see
/// [`verify_relations`](super::verify_relations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: AlgebraId,
    dim: usize,
    gens: BTreeMap<String, FieldMatrix>,
}

impl Representation {
    pub fn new(algebra: AlgebraId, gens: BTreeMap<String, FieldMatrix>) -> Result<Self, PresentationError> {
        for name in gens.keys() {
            if algebra.generator_index(name).is_none() {
                return Err(PresentationError::UnknownGenerator {
                    algebra,
                    name: name.clone(),
                });
            }
        }
        let mut dim = None;
        for &name in algebra.generators() {
            let m = gens
                .get(name)
                .ok_or_else(|| PresentationError::MissingGenerator(name.to_string()))?;
            let d = *dim.get_or_insert(m.rows());
            if m.rows() != d || m.cols() != d {
                return Err(PresentationError::BadShape {
                    name: name.to_string(),
                    rows: m.rows(),
                    cols: m.cols(),
                    dim: d,
                });
            }
        }
        let dim = dim.unwrap_or(0);
        if dim == 0 {
            return Err(PresentationError::ZeroDimension);
        }
        Ok(Representation { algebra, dim, gens })
    }

    /// Binds generators in the algebra's fixed order.
    pub fn from_ordered(algebra: AlgebraId, mats: Vec<FieldMatrix>) -> Result<Self, PresentationError> {
        let names = algebra.generators();
        if mats.len() != names.len() {
            let missing = names.get(mats.len()).copied().unwrap_or("?");
            return Err(PresentationError::MissingGenerator(missing.to_string()));
        }
        let gens = names.iter().map(|n| n.to_string()).zip(mats).collect();
        Self::new(algebra, gens)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The matrix bound to `name`. Panics on a name the algebra lacks.
    pub fn gen(&self, name: &str) -> &FieldMatrix {
        self.gens
            .get(name)
            .unwrap_or_else(|| panic!("{} has no generator `{name}`", self.algebra))
    }

    pub fn gens(&self) -> &BTreeMap<String, FieldMatrix> {
        &self.gens
    }

    /// Matrices in the algebra's generator order.
    pub fn ordered(&self) -> Vec<FieldMatrix> {
        self.algebra.generators().iter().map(|n| self.gen(n).clone()).collect()
    }

    pub(crate) fn expect(&self, algebra: AlgebraId) -> Result<(), PresentationError> {
        if self.algebra != algebra {
            return Err(PresentationError::AlgebraMismatch {
                expected: algebra.name().to_string(),
                found: self.algebra,
            });
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RepresentationWire {
    algebra: AlgebraId,
    dim: usize,
    gens: BTreeMap<String, FieldMatrix>,
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RepresentationWire {
            algebra: self.algebra,
            dim: self.dim,
            gens: self.gens.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = RepresentationWire::deserialize(deserializer)?;
        let rep = Representation::new(wire.algebra, wire.gens).map_err(D::Error::custom)?;
        if rep.dim != wire.dim {
            return Err(D::Error::custom(format!(
                "declared dim {} but matrices are {}x{}",
                wire.dim, rep.dim, rep.dim
            )));
        }
        Ok(rep)
    }
}
