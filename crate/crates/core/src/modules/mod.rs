//! Construction and structural analysis of modules.

mod boxes;
mod evaluation;
mod reconstruct;
mod weight;

pub use boxes::{analyze_box, BoxAnalysis};
pub use evaluation::{box_module, box_of_chevalley, evaluation_module, tensor, Coords};
pub use reconstruct::{
    is_isomorphic, normalize_type, reconstruct_uq, reconstruct_uq_in_weight_basis, tet_from_equitable,
};
pub use weight::{weight_decomposition, WeightData};

use thiserror::Error;

use crate::field::FieldError;
use crate::linalg::LinalgError;
use crate::presentations::PresentationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("the evaluation parameter must be nonzero")]
    ZeroParameter,
    #[error("the type scalar must be nonzero")]
    ZeroType,
    #[error("no diameter d and sign γ make the K-eigenspaces exhaust the module ({0})")]
    NotWeightDiagonalizable(String),
    #[error("could not detect diameter and type; for type γ ≠ 1 supply the type hint")]
    TypeDetectionFailed,
    #[error("reconstructed structure failed certification: {0}")]
    CertificationFailed(String),
    #[error("no inverse-pair completion to a tet_q module was found: {0}")]
    NoTetCompletion(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
