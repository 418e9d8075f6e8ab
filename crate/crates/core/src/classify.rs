//! Product-over-a-Hermitian-symmetric-space versus pseudoconcave.
//!
//! `a(E) = dim C` exactly when `E` is trivial and `D` fibers over a
//! Hermitian symmetric domain; otherwise `C` has pseudoconcave neighborhoods
//! whose exhaustions have at least `dim C − a(E)` negative Levi eigenvalues.
//! The verdict is taken from `a(E)` and cross-checked against the direct
//! criterion: 𝔤₀ Hermitian and `𝔮∩𝔰` inside one of `𝔰₊`, `𝔰₋`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cycle::ParabolicData;
use crate::realform::{CompactnessGrading, HermitianData};
use crate::snow::AmplenessResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    ProductOverHSS,
    Pseudoconcave,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::ProductOverHSS => "ProductOverHSS",
            Kind::Pseudoconcave => "Pseudoconcave",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossCheck {
    Passed,
    Failed,
    NotApplicable,
}

impl fmt::Display for CrossCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossCheck::Passed => "passed",
            CrossCheck::Failed => "failed",
            CrossCheck::NotApplicable => "not-applicable",
        })
    }
}

/// Which half of 𝔰 contains `𝔮∩𝔰`, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Containment {
    SMinus,
    SPlus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub concavity_degree: usize,
    pub cross_check: CrossCheck,
    /// In the product case, the half of 𝔰 that contains `𝔮∩𝔰`.
    pub containment: Option<Containment>,
}

/// The direct criterion: Hermitian with `𝔮∩𝔰 ⊆ 𝔰₋` or `𝔮∩𝔰 ⊆ 𝔰₊`.
pub fn direct_containment(
    pd: &ParabolicData,
    grading: &CompactnessGrading,
    hermitian: &HermitianData,
) -> Option<Containment> {
    if !hermitian.is_hermitian() {
        return None;
    }
    let q_cap_s: Vec<_> = pd
        .q_roots
        .iter()
        .copied()
        .filter(|&r| grading.is_noncompact(r))
        .collect();
    if q_cap_s.iter().all(|r| hermitian.s_minus.contains(r)) {
        Some(Containment::SMinus)
    } else if q_cap_s.iter().all(|r| hermitian.s_plus.contains(r)) {
        Some(Containment::SPlus)
    } else {
        None
    }
}

pub fn classify(
    amp: &AmplenessResult,
    pd: &ParabolicData,
    grading: &CompactnessGrading,
    hermitian: &HermitianData,
) -> Classification {
    let kind = if amp.ampleness == pd.dim_c {
        Kind::ProductOverHSS
    } else {
        Kind::Pseudoconcave
    };
    let containment = direct_containment(pd, grading, hermitian);
    let agrees = containment.is_some() == (kind == Kind::ProductOverHSS);
    Classification {
        kind,
        concavity_degree: pd.dim_c.saturating_sub(amp.ampleness),
        cross_check: if agrees {
            CrossCheck::Passed
        } else {
            CrossCheck::Failed
        },
        containment: if kind == Kind::ProductOverHSS {
            containment
        } else {
            None
        },
    }
}
