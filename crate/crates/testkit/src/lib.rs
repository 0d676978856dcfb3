//! Independent oracles for the galcong test suites.
//!
//! Nothing here depends on `galcong-core`: each oracle recomputes its answer
//! by a different and deliberately naive route (brute force, numerics at
//! high precision, product expansions) so that agreement means something.

pub mod arith;
pub mod bernoulli;
pub mod finite;
pub mod numeric;
pub mod series;
pub mod weil_enum;

/// `dim S_k(SL_2(Z))` from the classical formula.
pub fn cusp_dim(k: i64) -> usize {
    if k < 12 || k % 2 != 0 {
        return 0;
    }
    let base = (k / 12) as usize;
    if k % 12 == 2 {
        base - 1
    } else {
        base
    }
}
