//! Brute-force checks of the shadow bounds, the Kruskal-Macaulay
//! inequality, and the supporting lemmas, plus sweep engines that run them
//! over whole parameter ranges.
//!
//! Every check returns a [`CheckReport`]. Sweeps partition their range into
//! chunks evaluated on a rayon pool and merge results in parameter order,
//! so reports do not depend on the number of workers.

mod check;
mod lemmas;
mod shadows;
mod sweep;
mod theorem;

pub use check::{CheckReport, Relation, SweepStats, Witness};
pub use lemmas::{
    check_bjorner_vrecica, check_eckhoff_wegner, check_lemma_comparisons, check_lemma_extended,
    check_lemma_short, random_bv_parts, sweep_bjorner_vrecica, sweep_eckhoff_wegner,
    sweep_lemma_comparisons, BvVariant, EwCatalog,
};
pub use shadows::{
    check_corollary_sets, check_decomposition_identity, check_shadow_identity,
    check_shadow_theorem, sweep_corollary_sets, sweep_decomposition_identity,
    sweep_shadow_identity,
};
pub use sweep::{Budget, SweepOptions};
pub use theorem::{
    check_theorem1, sharpness_instance, sharpness_witness, sweep_theorem1, CatalogStats,
    EqualityCatalog, EqualityPair,
};

use thiserror::Error;

use crate::binrep::BinRepError;
use crate::families::FamilyError;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    /// A statement that must hold failed; carries the least failing instance.
    #[error("{} failed: lhs {} vs rhs {}", .0.check_id, .0.lhs, .0.rhs)]
    Failed(Box<CheckReport>),
    #[error(transparent)]
    Family(FamilyError),
    #[error(transparent)]
    BinRep(#[from] BinRepError),
}

impl From<FamilyError> for VerifyError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::BudgetExceeded { .. } => VerifyError::Budget(e.to_string()),
            other => VerifyError::Family(other),
        }
    }
}
