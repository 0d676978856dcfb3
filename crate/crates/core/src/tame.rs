//! Characters of tame inertia with values in `F_{ℓ^h}^×`, written as powers of
//! a fixed fundamental character of level `h`, and their tame inertia weights.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::arith::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TameError {
    #[error("{0} is not prime")]
    NotPrime(u128),
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("ramification index must be at least 1")]
    ZeroRamification,
    #[error("characters at different primes: {0} and {1}")]
    MixedPrimes(u128, u128),
}

/// `θ_h^d` for the fundamental character `θ_h` of level `h`, with
/// `d ∈ [0, ℓ^h - 2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameCharacter {
    ell: u128,
    h: u32,
    d: BigUint,
}

impl TameCharacter {
    /// The exponent is reduced modulo `ℓ^h - 1`.
    pub fn new(ell: u128, h: u32, d: BigUint) -> Result<Self, TameError> {
        if !is_prime(ell) {
            return Err(TameError::NotPrime(ell));
        }
        if h == 0 {
            return Err(TameError::ZeroLevel);
        }
        let order = Self::group_order(ell, h);
        Ok(Self {
            ell,
            h,
            d: d.mod_floor(&order),
        })
    }

    pub fn from_u64(ell: u128, h: u32, d: u64) -> Result<Self, TameError> {
        Self::new(ell, h, BigUint::from(d))
    }

    /// `ℓ^h - 1`.
    fn group_order(ell: u128, h: u32) -> BigUint {
        num_traits::pow(BigUint::from(ell), h as usize) - 1u32
    }

    pub fn ell(&self) -> u128 {
        self.ell
    }

    pub fn level(&self) -> u32 {
        self.h
    }

    pub fn exponent(&self) -> &BigUint {
        &self.d
    }

    pub fn is_trivial(&self) -> bool {
        self.d.is_zero()
    }

    /// Base-`ℓ` digits `t_1, …, t_h` with `d = Σ t_i ℓ^{i-1}`.
    pub fn digits(&self) -> Vec<u128> {
        let l = BigUint::from(self.ell);
        let mut rest = self.d.clone();
        (0..self.h)
            .map(|_| {
                let (q, r) = rest.div_rem(&l);
                rest = q;
                r.to_u128().expect("digit below ell")
            })
            .collect()
    }

    /// Restriction to the inertia of a totally ramified extension of degree
    /// `e′`: the exponent is multiplied by `e′`.
    pub fn restrict_ramified(&self, e_prime: u64) -> Self {
        let order = Self::group_order(self.ell, self.h);
        Self {
            ell: self.ell,
            h: self.h,
            d: (&self.d * e_prime).mod_floor(&order),
        }
    }

    /// `{t_1/e, …, t_h/e}`.
    pub fn ti_multiset(&self, e: u64) -> Result<TiMultiset, TameError> {
        if e == 0 {
            return Err(TameError::ZeroRamification);
        }
        let den = BigRational::from_integer(e.into());
        Ok(TiMultiset::new(
            self.digits()
                .into_iter()
                .map(|t| BigRational::from_integer(t.into()) / &den)
                .collect(),
            e,
        ))
    }
}

impl fmt::Display for TameCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.h, self.d)
    }
}

/// `digits` as a free function.
pub fn digits(chi: &TameCharacter) -> Vec<u128> {
    chi.digits()
}

pub fn ti_multiset(chi: &TameCharacter, e: u64) -> Result<TiMultiset, TameError> {
    chi.ti_multiset(e)
}

pub fn restrict_ramified(chi: &TameCharacter, e_prime: u64) -> TameCharacter {
    chi.restrict_ramified(e_prime)
}

/// Union of the TI multisets of a list of characters at one prime.
pub fn ti_rep_multiset(chars: &[TameCharacter], e: u64) -> Result<TiMultiset, TameError> {
    if e == 0 {
        return Err(TameError::ZeroRamification);
    }
    let mut entries = Vec::new();
    if let Some(first) = chars.first() {
        for c in chars {
            if c.ell != first.ell {
                return Err(TameError::MixedPrimes(first.ell, c.ell));
            }
            entries.extend(c.ti_multiset(e)?.entries);
        }
    }
    Ok(TiMultiset::new(entries, e))
}

/// Sorted multiset of tame inertia weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TiMultiset {
    entries: Vec<BigRational>,
    e: u64,
}

impl TiMultiset {
    pub fn new(mut entries: Vec<BigRational>, e: u64) -> Self {
        entries.sort();
        Self { entries, e }
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn ramification(&self) -> u64 {
        self.e
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sigma(&self) -> BigRational {
        self.entries
            .iter()
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// All entries lie in `[lo, hi]`.
    pub fn within(&self, lo: &BigRational, hi: &BigRational) -> bool {
        self.entries.iter().all(|x| x >= lo && x <= hi)
    }

    pub fn union(&self, o: &Self) -> Self {
        let mut v = self.entries.clone();
        v.extend_from_slice(&o.entries);
        Self::new(v, self.e)
    }
}

impl fmt::Display for TiMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(ell: u128, h: u32, d: u64) -> TameCharacter {
        TameCharacter::from_u64(ell, h, d).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn digit_expansion() {
        assert_eq!(chi(7, 2, 23).digits(), vec![2, 3]);
        assert_eq!(chi(11, 3, 0).digits(), vec![0, 0, 0]);
        assert_eq!(chi(5, 1, 3).digits(), vec![3]);
        // ℓ^h - 1 is the trivial character
        assert!(chi(7, 2, 48).is_trivial());
    }

    #[test]
    fn ti_weights() {
        let t = chi(7, 2, 23).ti_multiset(2).unwrap();
        assert_eq!(t.entries(), &[r(1, 1), r(3, 2)]);
        assert_eq!(t.to_string(), "{1, 3/2}");
        assert_eq!(chi(5, 1, 3).ti_multiset(1).unwrap().entries(), &[r(3, 1)]);
        assert_eq!(
            chi(5, 1, 3).ti_multiset(0),
            Err(TameError::ZeroRamification)
        );
    }

    #[test]
    fn restriction() {
        assert_eq!(chi(7, 1, 2).restrict_ramified(2), chi(7, 1, 4));
        assert_eq!(chi(7, 1, 5).restrict_ramified(2), chi(7, 1, 4));
        assert_eq!(chi(7, 1, 0).restrict_ramified(5), chi(7, 1, 0));
    }

    #[test]
    fn unions() {
        let cs = [chi(7, 2, 23), chi(7, 1, 2), chi(7, 1, 5)];
        let t = ti_rep_multiset(&cs, 1).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.sigma(), r(12, 1));
        assert!(ti_rep_multiset(&[], 1).unwrap().is_empty());
        assert_eq!(
            ti_rep_multiset(&[chi(7, 1, 2), chi(5, 1, 2)], 1),
            Err(TameError::MixedPrimes(7, 5))
        );
    }
}
