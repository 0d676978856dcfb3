//! Primes of a number field above a rational prime, via factorization of the
//! defining polynomial modulo `ℓ`, and reduction into residue fields.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::arith::{bigint_mod, inv_mod, is_prime, mul_mod};
use super::fp::{factor_mod_p_with, FpPoly};
use super::numfield::{FieldElement, NumberField};
use super::poly::IntPoly;
use super::{AlgebraError, FactorOptions};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    field: Arc<NumberField>,
    ell: u128,
    f: usize,
    e: u32,
    local_factor: IntPoly,
    index: usize,
}

impl PrimeIdeal {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn ell(&self) -> u128 {
        self.ell
    }

    /// Residue degree `f_λ`.
    pub fn f(&self) -> usize {
        self.f
    }

    /// Ramification index `e_λ`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// `[E_λ : Q_ℓ] = e_λ·f_λ`.
    pub fn local_degree(&self) -> usize {
        self.e as usize * self.f
    }

    /// Monic irreducible factor of the defining polynomial modulo `ℓ`,
    /// coefficients in `[0, ℓ)`.
    pub fn local_factor(&self) -> &IntPoly {
        &self.local_factor
    }

    /// Position in the sorted list returned by [`primes_above`].
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn residue_modulus(&self) -> FpPoly {
        FpPoly::from_int(&self.local_factor, self.ell)
    }

    /// Reduction map `Z[α] → F_ℓ[x]/(local_factor)`.
    pub fn reduce(&self, a: &FieldElement) -> Result<ResidueElem, AlgebraError> {
        reduce_mod_lambda(a, self)
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) e={} f={}",
            self.ell,
            self.local_factor.to_string().replace('T', "a"),
            self.e,
            self.f
        )
    }
}

/// Primes above `ell`, sorted by residue degree then local factor.
///
/// The splitting read off from `g mod ℓ` is only valid when `ℓ` does not
/// divide the index of `Z[α]`; this is accepted when `ℓ² ∤ disc(g)` or when
/// Dedekind's criterion certifies `Z[α]` is maximal at `ℓ`, and rejected with
/// [`AlgebraError::IndexDivisor`] otherwise.
pub fn primes_above(field: &Arc<NumberField>, ell: u128) -> Result<Vec<PrimeIdeal>, AlgebraError> {
    let ideals = primes_above_attested(field, ell)?;
    let l = BigInt::from(ell);
    let l2 = &l * &l;
    if !field.disc().is_multiple_of(&l2) {
        return Ok(ideals);
    }
    if dedekind_maximal(field.gen_poly(), ell, &ideals) {
        return Ok(ideals);
    }
    Err(AlgebraError::IndexDivisor { ell })
}

/// Same as [`primes_above`] with the index condition taken on trust.
pub fn primes_above_attested(
    field: &Arc<NumberField>,
    ell: u128,
) -> Result<Vec<PrimeIdeal>, AlgebraError> {
    if !is_prime(ell) {
        return Err(AlgebraError::NotPrime(ell.to_string()));
    }
    let factors = factor_mod_p_with(field.gen_poly(), ell, &FactorOptions::default())?;
    Ok(factors
        .into_iter()
        .enumerate()
        .map(|(index, (g, e))| PrimeIdeal {
            field: field.clone(),
            ell,
            f: g.deg(),
            e,
            local_factor: g.to_int(),
            index,
        })
        .collect())
}

/// Dedekind's criterion: with `g ≡ ∏ g_i^{e_i}` and `F = (g - ∏ g_i^{e_i})/ℓ`
/// (lifts taken with nonnegative coefficients), `Z[α]` is `ℓ`-maximal iff no
/// `g_i` with `e_i ≥ 2` divides `F` modulo `ℓ`.
fn dedekind_maximal(g: &IntPoly, ell: u128, ideals: &[PrimeIdeal]) -> bool {
    let lifted = ideals
        .iter()
        .fold(IntPoly::one(), |acc, p| &acc * &p.local_factor.pow(p.e));
    let diff = g - &lifted;
    let l = BigInt::from(ell);
    let f = IntPoly::new(diff.coeffs().iter().map(|c| c / &l).collect());
    let fbar = FpPoly::from_int(&f, ell);
    ideals.iter().filter(|p| p.e >= 2).all(|p| {
        let gi = p.residue_modulus();
        !fbar.rem(&gi).is_zero()
    })
}

/// Element of a residue field `F_ℓ[x]/(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElem {
    modulus: FpPoly,
    value: FpPoly,
}

impl ResidueElem {
    pub fn new(modulus: &FpPoly, value: FpPoly) -> Self {
        Self {
            modulus: modulus.clone(),
            value: value.rem(modulus),
        }
    }

    pub fn from_u128(modulus: &FpPoly, c: u128) -> Self {
        Self::new(modulus, FpPoly::new(modulus.modulus(), vec![c]))
    }

    pub fn zero(modulus: &FpPoly) -> Self {
        Self::from_u128(modulus, 0)
    }

    pub fn one(modulus: &FpPoly) -> Self {
        Self::from_u128(modulus, 1)
    }

    pub fn ell(&self) -> u128 {
        self.modulus.modulus()
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// Coordinates over `F_ℓ` in the basis `1, x, …, x^{f-1}`.
    pub fn coords(&self) -> Vec<u128> {
        (0..self.modulus.deg())
            .map(|i| self.value.coeff(i))
            .collect()
    }

    pub fn value(&self) -> &FpPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.modulus, self.value.add(&o.value))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.modulus, self.value.sub(&o.value))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.modulus, self.value.mul(&o.value))
    }

    pub fn neg(&self) -> Self {
        Self::zero(&self.modulus).sub(self)
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        Self::new(&self.modulus, self.value.pow_mod(e, &self.modulus))
    }

    /// `x ↦ x^ℓ`.
    pub fn frobenius(&self) -> Self {
        self.pow(&BigUint::from(self.ell()))
    }
}

impl fmt::Display for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.deg() == 1 {
            return write!(f, "{}", self.value.coeff(0));
        }
        let c: Vec<String> = self.coords().iter().map(u128::to_string).collect();
        write!(f, "[{}]", c.join(","))
    }
}

/// Reduce `a` modulo `λ`; coordinates must have denominators prime to `ℓ`.
pub fn reduce_mod_lambda(
    a: &FieldElement,
    lambda: &PrimeIdeal,
) -> Result<ResidueElem, AlgebraError> {
    if a.field().gen_poly() != lambda.field.gen_poly() {
        return Err(AlgebraError::FieldMismatch);
    }
    let ell = lambda.ell;
    let mut coeffs = Vec::with_capacity(a.coords().len());
    for c in a.coords() {
        let den = bigint_mod(c.denom(), ell);
        let inv = inv_mod(den, ell).ok_or(AlgebraError::DenominatorAtEll { ell })?;
        coeffs.push(mul_mod(bigint_mod(c.numer(), ell), inv, ell));
    }
    let m = lambda.residue_modulus();
    Ok(ResidueElem::new(&m, FpPoly::new(ell, coeffs)))
}

/// `ℓ`-adic valuation of an integer, `None` for zero.
pub fn int_valuation(x: &BigInt, ell: u128) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let l = BigInt::from(ell);
    let mut v = 0;
    let mut y = x.clone();
    while y.is_multiple_of(&l) {
        y /= &l;
        v += 1;
    }
    Some(v)
}

/// `true` when every coordinate of `a` lies in `ℓZ_(ℓ)`, i.e. `a ∈ ℓZ[α]`
/// localized at `ℓ`.
pub fn divisible_by_ell(a: &FieldElement, ell: u128) -> Result<bool, AlgebraError> {
    for c in a.coords() {
        if bigint_mod(c.denom(), ell) == 0 {
            return Err(AlgebraError::DenominatorAtEll { ell });
        }
        if bigint_mod(c.numer(), ell) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `u128` view of a big prime, or `ModulusTooLarge`.
pub fn prime_to_u128(p: &BigUint) -> Result<u128, AlgebraError> {
    p.to_u128()
        .ok_or_else(|| AlgebraError::ModulusTooLarge(p.to_string()))
}
