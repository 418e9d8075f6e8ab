//! The parabolic 𝔮, the base cycle `C = K/(K∩Q)` and the neutral fiber of
//! its normal bundle.
//!
//! Convention: 𝔮 contains the negative Borel subalgebra and its Levi factor
//! is generated by the `levi_nodes`. The tangent weights of `Z = G/Q` at the
//! base point are then the positive roots outside `span(levi_nodes)`, split
//! into compact ones (tangent to `C`) and noncompact ones (normal to `C`).
//!
//! In the equal-rank case θ fixes the Cartan subalgebra and preserves every
//! root space, so θ𝔮 = 𝔮 and the neutral fiber `𝔰/((𝔮+θ𝔮)∩𝔰)` reduces to
//! `𝔰/(𝔮∩𝔰)`, whose weights are the noncompact roots not in 𝔮. The normal
//! bundle of `C` is assumed spanned throughout, as it is for base cycles.

use crate::error::{Error, Result};
use crate::realform::CompactnessGrading;
use crate::rootsys::{RootId, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    levi_nodes: Vec<usize>,
    /// Roots of 𝔮: all negative roots plus positive Levi roots.
    pub q_roots: Vec<RootId>,
    /// Positive roots outside the Levi span: the tangent weights of Z.
    pub complement: Vec<RootId>,
    pub dim_z: usize,
    pub dim_c: usize,
    /// `dim P − dim B` for `P = K∩Q` and `B` a Borel subgroup of `K`.
    pub levi_correction: usize,
}

impl ParabolicData {
    pub fn levi_nodes(&self) -> &[usize] {
        &self.levi_nodes
    }

    /// Positive compact roots inside the Levi, Δ⁺(𝔨) ∩ span(levi).
    pub fn compact_levi_positives(
        &self,
        rs: &RootSystem,
        grading: &CompactnessGrading,
    ) -> Vec<RootId> {
        (0..rs.num_positive())
            .filter(|&r| grading.is_compact(r) && rs.in_span(r, &self.levi_nodes))
            .collect()
    }
}

pub fn parabolic_data(
    rs: &RootSystem,
    grading: &CompactnessGrading,
    levi_nodes: &[usize],
) -> Result<ParabolicData> {
    let n = rs.rank();
    if let Some(&node) = levi_nodes.iter().find(|&&m| m >= n) {
        return Err(Error::BadNode { node, rank: n });
    }
    let mut levi = levi_nodes.to_vec();
    levi.sort_unstable();
    levi.dedup();
    if levi.len() == n {
        return Err(Error::NotProper);
    }
    let np = rs.num_positive();
    let in_levi = |r: RootId| rs.in_span(r, &levi);
    let q_roots: Vec<RootId> = (0..rs.roots().len())
        .filter(|&r| !rs.is_positive(r) || in_levi(r))
        .collect();
    let complement: Vec<RootId> = (0..np).filter(|&r| !in_levi(r)).collect();
    let dim_c = complement
        .iter()
        .filter(|&&r| grading.is_compact(r))
        .count();
    let levi_correction = (0..np)
        .filter(|&r| grading.is_compact(r) && in_levi(r))
        .count();
    Ok(ParabolicData {
        levi_nodes: levi,
        q_roots,
        dim_z: complement.len(),
        complement,
        dim_c,
        levi_correction,
    })
}

/// Weights of the neutral fiber `E₀ = 𝔰/(𝔮∩𝔰)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutralFiber {
    pub weights: Vec<RootId>,
}

impl NeutralFiber {
    /// Rank of the normal bundle.
    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn contains(&self, r: RootId) -> bool {
        self.weights.binary_search(&r).is_ok()
    }
}

pub fn neutral_fiber(pd: &ParabolicData, grading: &CompactnessGrading) -> Result<NeutralFiber> {
    let weights: Vec<RootId> = pd
        .complement
        .iter()
        .copied()
        .filter(|&r| grading.is_noncompact(r))
        .collect();
    if weights.is_empty() {
        return Err(Error::EmptyFiber);
    }
    Ok(NeutralFiber { weights })
}
