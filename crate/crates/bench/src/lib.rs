//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use galcong_core::modforms::{default_precision, eigenforms, frobenius_descriptor, Eigenform};
use galcong_core::{primes_above, IntPoly, NumberField, PrimeIdeal, RepDescriptor};

/// `Q(ζ_5)`, with a prime above 11 that splits completely.
pub fn cyclotomic5() -> (Arc<NumberField>, PrimeIdeal) {
    let f = NumberField::new(IntPoly::from_i64s(&[1, 1, 1, 1, 1])).expect("irreducible");
    let lambda = primes_above(&f, 11).expect("unramified").remove(0);
    (f, lambda)
}

/// The unique normalized eigenform of the given level-one weight `k`.
pub fn first_eigenform(k: u64) -> Eigenform {
    eigenforms(k, default_precision(k))
        .expect("level one")
        .remove(0)
}

/// Frobenius data of Δ at `q = 2`, seen at the first prime above
/// `4·2^22` so that every gate can pass.
pub fn delta_descriptor() -> (RepDescriptor, PrimeIdeal) {
    let delta = first_eigenform(12);
    let lambda = primes_above(&delta.field, 16777259)
        .expect("prime")
        .remove(0);
    let d = frobenius_descriptor(&delta, 2, &lambda).expect("2 does not divide 16777259");
    (d, lambda)
}
