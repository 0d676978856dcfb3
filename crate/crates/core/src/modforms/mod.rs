//! Modular forms of level one computed from the Miller basis, eigenforms of
//! higher level ingested from tables, and congruences with Eisenstein-type
//! characters.

pub mod basis;
pub mod bernoulli;
pub mod congruence;
pub mod eigen;
pub mod qexp;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::bounds::BoundError;
use crate::engine::EngineError;
use crate::tame::TameError;
use crate::weil::WeilError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModFormError {
    #[error("weight {0} is not supported here")]
    BadWeight(u64),
    #[error("precision {have} is too small, need at least {need}")]
    InsufficientPrecision { need: usize, have: usize },
    #[error("no Hecke operator T_p with p <= 13 separates the eigenforms of weight {0}")]
    NonSeparating(u64),
    #[error("bad prime: {0}")]
    BadPrime(String),
    #[error("insufficient coefficients: {0}")]
    InsufficientCoefficients(String),
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Weil(#[from] WeilError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Tame(#[from] TameError),
}

pub use basis::{
    cusp_dimension, delta, divisor_sigma, eisenstein, hecke_apply, hecke_matrix, miller_basis,
};
pub use bernoulli::{bernoulli, bernoulli_table};
pub use congruence::{
    audit_eisenstein_exclusion, default_p_max, detect_congruences, frobenius_descriptor,
    gamma0_index, sturm_bound, AuditCheck, AuditOutcome, AuditReport, CongruenceWitness,
    DetectMode,
};
pub use eigen::{
    default_precision, eigenforms, eigenforms_with, Eigenform, Nebentypus, SEPARATING_PRIMES,
};
pub use qexp::QExpansion;
