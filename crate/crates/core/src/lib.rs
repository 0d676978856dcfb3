//! Exact arithmetic for comparing `λ`-adic Galois representations through
//! their numerical shadows: Frobenius polynomials and their Weil weights,
//! explicit prime bounds, tame inertia weights, replayable certificates, and
//! Eisenstein-type congruences of modular forms.
//!
//! The commonly used types are re-exported at the crate root.

pub mod algebra;
pub mod bounds;
pub mod engine;
pub mod io;
pub mod modforms;
pub mod tame;
pub mod weil;

pub use algebra::numfield::{FieldElement, NumberField};
pub use algebra::poly::{IntPoly, RatPoly};
pub use algebra::prime::{primes_above, PrimeIdeal, ResidueElem};
pub use algebra::{AlgebraError, FactorOptions};
pub use bounds::{exceeds, make_bound, BoundExpr, BoundKind, BoundParams, Threshold};
pub use engine::{
    run_theorem, Certificate, CongruenceMode, EngineError, LocalDescriptorU, LocalDescriptorV,
    RepDescriptor, SemistableFlag, Step, StepStatus, Verdict, Which,
};
pub use io::{
    parse_descriptor, parse_eigenform, serialize_descriptor, serialize_eigenform, ParseError,
};
pub use modforms::{
    AuditOutcome, AuditReport, CongruenceWitness, DetectMode, Eigenform, ModFormError, QExpansion,
};
pub use tame::{TameCharacter, TiMultiset};
pub use weil::{CharPolyOverE, WeilWeightMultiset};
