//! The algebras □_q, U_q(L(sl₂)) (Chevalley and equitable), U_q⁺ and ⊠_q
//! as relation tables over named generators, plus the maps between them
//! acting on representations.

mod maps;
mod relations;
mod representation;

pub use maps::{
    chevalley_to_equitable, equitable_to_chevalley, pullback_eta, pullback_kappa, pullback_psi, rho_twist, scale_twist,
};
pub use relations::{relations, verify_relations, Relation, RelationReport, Term};
pub use representation::Representation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraId {
    BoxQ,
    UqLoop,
    UqLoopEquitable,
    UqPlus,
    TetQ,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 5] = [
        AlgebraId::BoxQ,
        AlgebraId::UqLoop,
        AlgebraId::UqLoopEquitable,
        AlgebraId::UqPlus,
        AlgebraId::TetQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::BoxQ => "box_q",
            AlgebraId::UqLoop => "uq_loop",
            AlgebraId::UqLoopEquitable => "uq_loop_equitable",
            AlgebraId::UqPlus => "uq_plus",
            AlgebraId::TetQ => "tet_q",
        }
    }

    /// Generator names in their fixed order.
    pub fn generators(self) -> &'static [&'static str] {
        match self {
            AlgebraId::BoxQ => &["x0", "x1", "x2", "x3"],
            AlgebraId::UqLoop => &["e0p", "e0m", "K0", "K0inv", "e1p", "e1m", "K1", "K1inv"],
            AlgebraId::UqLoopEquitable => &["X01", "X12", "X23", "X30", "X13", "X31"],
            AlgebraId::UqPlus => &["x", "y"],
            AlgebraId::TetQ => &["x01", "x12", "x23", "x30", "x02", "x20", "x13", "x31"],
        }
    }

    pub fn generator_index(self, name: &str) -> Option<usize> {
        self.generators().iter().position(|g| *g == name)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| PresentationError::UnknownAlgebra(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("{algebra} has no generator `{name}`")]
    UnknownGenerator { algebra: AlgebraId, name: String },
    #[error("generator `{0}` is not bound")]
    MissingGenerator(String),
    #[error("generator `{name}` is {rows}x{cols}, expected {dim}x{dim}")]
    BadShape {
        name: String,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("expected a {expected} representation, got {found}")]
    AlgebraMismatch { expected: String, found: AlgebraId },
    #[error("the scaling parameter must be nonzero")]
    ZeroScale,
}
