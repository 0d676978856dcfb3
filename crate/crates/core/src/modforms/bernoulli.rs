//! Bernoulli numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::arith::binomial;

use super::ModFormError;

/// All `B_0, …, B_n` from `Σ_{j=0}^{m} binom(m+1, j) B_j = 0` (so `B_1 = -1/2`).
pub fn bernoulli_table(n: usize) -> Vec<BigRational> {
    let mut b = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        let mut s = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                s += BigRational::from_integer(BigInt::from(binomial(m as u64 + 1, j as u64))) * bj;
            }
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `B_k` for even `k ≥ 2`.
pub fn bernoulli(k: u64) -> Result<BigRational, ModFormError> {
    if k < 2 || k % 2 == 1 {
        return Err(ModFormError::BadWeight(k));
    }
    Ok(bernoulli_table(k as usize).pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(2).unwrap(), r(1, 6));
        assert_eq!(bernoulli(4).unwrap(), r(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), r(-691, 2730));
        assert_eq!(bernoulli(16).unwrap(), r(-3617, 510));
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(0).is_err());
    }
}
