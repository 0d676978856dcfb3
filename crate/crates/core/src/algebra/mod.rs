//! Exact arithmetic substrate: integers, polynomials over `Z`, `Q` and `F_p`,
//! number fields `Q[x]/(g)`, prime splitting, Sturm counting and embedding
//! bounds.

pub mod arith;
pub mod embed;
pub mod fp;
pub mod matrix;
pub mod numfield;
pub mod poly;
pub mod prime;
pub mod sturm;
pub mod zfactor;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor is not monic")]
    NotMonic,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("polynomial vanishes modulo {0}")]
    ZeroModP(u128),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("{ell} may divide the index of Z[alpha]; splitting via factorization mod {ell} is not justified")]
    IndexDivisor { ell: u128 },
    #[error("element has a denominator divisible by {ell}")]
    DenominatorAtEll { ell: u128 },
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("defining polynomial must be monic, irreducible and of degree at least 1: {0}")]
    InvalidField(String),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("zero has no inverse")]
    NotInvertible,
    #[error("modulus {0} does not fit in 128 bits")]
    ModulusTooLarge(String),
}

/// Knobs for the randomized and size-capped parts of factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorOptions {
    /// Mixed into the equal-degree splitting seed.
    pub seed: u64,
    /// Largest degree accepted by factorization over `Z`.
    pub degree_cap: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            degree_cap: 24,
        }
    }
}

pub use arith::{binomial, factor_integer, is_prime, next_prime, prime_power, primes_up_to};
pub use embed::{max_abs_embedding, EmbeddingBound};
pub use fp::{factor_mod_p, factor_mod_p_with, FpPoly};
pub use numfield::{FieldElement, NumberField};
pub use poly::{discriminant, interpolate, resultant, Degree, IntPoly, RatPoly};
pub use prime::{primes_above, primes_above_attested, reduce_mod_lambda, PrimeIdeal, ResidueElem};
pub use sturm::{sturm_real_roots, Bound};
pub use zfactor::{factor_over_z, factor_over_z_with};
