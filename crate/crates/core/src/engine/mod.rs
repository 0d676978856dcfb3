//! Representation descriptors, the checks applied to them, and certificates
//! replaying the comparison of two congruent representations.

pub mod certificate;
pub mod descriptor;
pub mod gap;
pub mod theorem;
pub mod validators;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::bounds::BoundError;
use crate::tame::TameError;
use crate::weil::WeilError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("descriptors are not comparable: {0}")]
    DescriptorMismatch(String),
    #[error("dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("objects live over different fields")]
    FieldMismatch,
    #[error("element is zero")]
    ZeroElement,
    #[error("element is not an algebraic integer")]
    NotIntegral,
    #[error("element is not divisible by the prime")]
    DivisibilityHypothesisFails,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Weil(#[from] WeilError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Tame(#[from] TameError),
}

pub use certificate::{Certificate, CertificateInput, Step, StepStatus, Verdict, VerifyError};
pub use descriptor::{
    ht_over_ql, LocalDescriptorU, LocalDescriptorV, RepDescriptor, SemistableFlag,
};
pub use gap::{
    charpolys_congruent, gap_principle, gap_principle_with, norm_bound_lemma,
    reduce_charpoly_mod_ell, reduce_charpoly_mod_lambda, CongruenceMode, NormBoundReport,
};
pub use theorem::{run_theorem, run_theorem_with, Which};
pub use validators::{
    caruso_validate, global_weight_identity, is_e_integral, is_type_g, is_type_g_at, sigma,
    CarusoOutcome, TypeGReport,
};
