use std::collections::BTreeMap;

use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ModuleError;
use crate::field::RatFunc;
use crate::linalg::{check_semisimple, Subspace};
use crate::presentations::{AlgebraId, PresentationError, Representation};

/// Eigenspace structure of a □_q-module of type γ and diameter d.
///
/// Decomposition `[i,i+1]` lists the `x_i`-eigenspaces for
/// `γ^{±1}q^{d−2n}` (γ for even `i`, γ⁻¹ for odd `i`) at index `n`; `[i+1,i]`
/// is its inversion. Flag `[h]` is the chain of partial sums of `[h,h−1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxAnalysis {
    pub diameter: usize,
    pub type_scalar: RatFunc,
    pub decomps: BTreeMap<String, Vec<Subspace>>,
    pub flags: BTreeMap<String, Vec<Subspace>>,
    pub shape: Vec<usize>,
}

pub(crate) fn decomp_label(i: usize, j: usize) -> String {
    format!("[{},{}]", i % 4, j % 4)
}

impl BoxAnalysis {
    /// Decomposition `[i,j]` with `j = i ± 1` (mod 4).
    pub fn decomposition(&self, i: usize, j: usize) -> &[Subspace] {
        &self.decomps[&decomp_label(i, j)]
    }

    pub fn flag(&self, h: usize) -> &[Subspace] {
        &self.flags[&format!("[{}]", h % 4)]
    }

    /// Eigenvalue of `x_i` on component `n` of `[i,i+1]`.
    pub fn eigenvalue(&self, i: usize, n: usize) -> RatFunc {
        eigenvalue(&self.type_scalar, self.diameter, i, n)
    }
}

fn eigenvalue(gamma: &RatFunc, d: usize, i: usize, n: usize) -> RatFunc {
    let g = if i.is_multiple_of(2) {
        gamma.clone()
    } else {
        gamma.inv().expect("type scalar is nonzero")
    };
    &g * &RatFunc::q_pow(d as i64 - 2 * n as i64)
}

/// Partial sums `U₀ ⊆ U₀+U₁ ⊆ …` of a decomposition.
pub(crate) fn induced_flag(ambient: usize, parts: &[Subspace]) -> Vec<Subspace> {
    let mut acc = Subspace::zero(ambient);
    parts
        .iter()
        .map(|p| {
            acc = acc.sum(p).expect("same ambient space");
            acc.clone()
        })
        .collect()
}

/// Computes diameter, type, the eight decompositions, the four flags and
/// the shape. Without a hint only type 1 is attempted.
pub fn analyze_box(rep: &Representation, gamma_hint: Option<&RatFunc>) -> Result<BoxAnalysis, ModuleError> {
    if rep.algebra() != AlgebraId::BoxQ {
        return Err(PresentationError::AlgebraMismatch {
            expected: AlgebraId::BoxQ.name().to_string(),
            found: rep.algebra(),
        }
        .into());
    }
    let gamma = gamma_hint.cloned().unwrap_or_else(RatFunc::one);
    if gamma.is_zero() {
        return Err(ModuleError::ZeroType);
    }
    let n = rep.dim();
    let x0 = rep.gen("x0");
    let d = (0..n)
        .find(|&d| {
            let eigs: Vec<RatFunc> = (0..=d).map(|k| eigenvalue(&gamma, d, 0, k)).collect();
            matches!(check_semisimple(x0, &eigs), Ok(Ok(spaces)) if spaces.iter().all(|s| !s.is_zero()))
        })
        .ok_or(ModuleError::TypeDetectionFailed)?;

    let mut decomps = BTreeMap::new();
    let mut shape: Option<Vec<usize>> = None;
    for i in 0..4 {
        let x = rep.gen(AlgebraId::BoxQ.generators()[i]);
        let eigs: Vec<RatFunc> = (0..=d).map(|k| eigenvalue(&gamma, d, i, k)).collect();
        let spaces = check_semisimple(x, &eigs)?.map_err(|_| ModuleError::TypeDetectionFailed)?;
        let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
        if dims.contains(&0) {
            return Err(ModuleError::TypeDetectionFailed);
        }
        match &shape {
            None => shape = Some(dims),
            Some(s) if *s != dims => {
                return Err(ModuleError::CertificationFailed(format!(
                    "decomposition shapes differ: {s:?} vs {dims:?} at x{i}"
                )))
            }
            _ => {}
        }
        let mut inverted = spaces.clone();
        inverted.reverse();
        decomps.insert(decomp_label(i, i + 1), spaces);
        decomps.insert(decomp_label(i + 1, i), inverted);
    }
    let flags = (0..4)
        .map(|h| {
            let parts = &decomps[&decomp_label(h, h + 3)];
            (format!("[{h}]"), induced_flag(n, parts))
        })
        .collect();
    Ok(BoxAnalysis {
        diameter: d,
        type_scalar: gamma,
        decomps,
        flags,
        shape: shape.expect("four generators"),
    })
}

impl Serialize for BoxAnalysis {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BoxAnalysis", 5)?;
        st.serialize_field("decompositions", &self.decomps)?;
        st.serialize_field("diameter", &self.diameter)?;
        st.serialize_field("flags", &self.flags)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("type", &self.type_scalar)?;
        st.end()
    }
}
