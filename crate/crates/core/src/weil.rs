//! Weil integers and Weil-weight multisets of Frobenius characteristic
//! polynomials.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::arith::{binomial, prime_power};
use crate::algebra::embed::{all_roots_on_circle, max_abs_embedding};
use crate::algebra::numfield::{FieldElement, NumberField};
use crate::algebra::poly::{interpolate, IntPoly, RatPoly};
use crate::algebra::zfactor::{factor_over_z_with, integral_monic_rescaling};
use crate::algebra::{AlgebraError, FactorOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeilError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("coefficients are not all algebraic integers")]
    NotIntegral,
    #[error("zero is a root")]
    ZeroRoot,
    #[error("factor {factor} is not of Weil type: {reason}")]
    NotTypeW { factor: RatPoly, reason: String },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("coefficients live in different fields")]
    FieldMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Monic polynomial with coefficients in a number field `E`, tied to the
/// residue cardinality `q` of the place it describes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPolyOverE {
    field: Arc<NumberField>,
    coeffs: Vec<FieldElement>,
    q: u64,
}

impl CharPolyOverE {
    /// Coefficients lowest degree first; the last one must be 1.
    pub fn new(
        field: &Arc<NumberField>,
        coeffs: Vec<FieldElement>,
        q: u64,
    ) -> Result<Self, WeilError> {
        if prime_power(q).is_none() {
            return Err(WeilError::NotPrimePower(q));
        }
        if coeffs.len() < 2 || !coeffs.last().is_some_and(FieldElement::is_one) {
            return Err(WeilError::NotMonic);
        }
        if coeffs
            .iter()
            .any(|c| c.field().gen_poly() != field.gen_poly())
        {
            return Err(WeilError::FieldMismatch);
        }
        Ok(Self {
            field: field.clone(),
            coeffs,
            q,
        })
    }

    /// Rational polynomial viewed over `E = Q`.
    pub fn over_q(p: &RatPoly, q: u64) -> Result<Self, WeilError> {
        let field = NumberField::rationals();
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| FieldElement::from_rational(&field, c.clone()))
            .collect();
        Self::new(&field, coeffs, q)
    }

    pub fn from_int_poly(p: &IntPoly, q: u64) -> Result<Self, WeilError> {
        Self::over_q(&p.to_rat(), q)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `T^i`.
    pub fn coeff(&self, i: usize) -> &FieldElement {
        &self.coeffs[i]
    }

    /// Every coefficient is an algebraic integer.
    pub fn is_e_integral(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_integral)
    }

    /// The polynomial evaluated at a rational point, as an element of `E`.
    pub fn eval_rational(&self, t: &BigRational) -> FieldElement {
        let mut acc = FieldElement::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t).add(c).expect("same field");
        }
        acc
    }

    /// Rational coefficients when `E = Q` or every coefficient is rational.
    pub fn as_rational(&self) -> Option<RatPoly> {
        self.coeffs
            .iter()
            .map(FieldElement::as_rational)
            .collect::<Option<Vec<_>>>()
            .map(RatPoly::new)
    }
}

impl fmt::Display for CharPolyOverE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_rational() {
            return write!(f, "{p}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mon = match i {
                0 => String::new(),
                1 => "T".into(),
                _ => format!("T^{i}"),
            };
            if c.is_one() && i > 0 {
                write!(f, "{mon}")?;
            } else if i == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}){mon}")?;
            }
        }
        Ok(())
    }
}

/// Weights of the roots of a polynomial, stored in the view over `Q_ℓ`
/// (one entry per root of the norm polynomial).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeilWeightMultiset {
    over_ql: Vec<u32>,
    field_degree: usize,
}

impl WeilWeightMultiset {
    pub fn from_over_ql(mut entries: Vec<u32>, field_degree: usize) -> Self {
        entries.sort_unstable();
        Self {
            over_ql: entries,
            field_degree,
        }
    }

    /// Full multiset, one weight per root of the norm polynomial.
    pub fn over_ql(&self) -> &[u32] {
        &self.over_ql
    }

    /// Multiset for the `E`-linear view: each multiplicity divided by
    /// `[E:Q]`, when every division is exact.
    pub fn over_e_lambda(&self) -> Option<Vec<u32>> {
        let d = self.field_degree;
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.over_ql.len() {
            let w = self.over_ql[i];
            let run = self.over_ql[i..].iter().take_while(|&&x| x == w).count();
            if run % d != 0 {
                return None;
            }
            out.extend(std::iter::repeat_n(w, run / d));
            i += run;
        }
        Some(out)
    }

    pub fn field_degree(&self) -> usize {
        self.field_degree
    }

    /// Sum of the over-`Q_ℓ` entries.
    pub fn sigma(&self) -> u64 {
        self.over_ql.iter().map(|&w| w as u64).sum()
    }

    /// Multiset union.
    pub fn union(&self, o: &Self) -> Self {
        let mut v = self.over_ql.clone();
        v.extend_from_slice(&o.over_ql);
        Self::from_over_ql(v, self.field_degree)
    }
}

impl fmt::Display for WeilWeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.over_ql.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn q_pow(q: u64, w: u32) -> BigInt {
    num_traits::pow(BigInt::from(q), w as usize)
}

/// `true` iff every complex root `z` of the monic `m` has `|z|² = q^w`.
pub fn is_weil_integer_poly(m: &IntPoly, q: u64, w: u32) -> Result<bool, WeilError> {
    if !m.is_monic() {
        return Err(WeilError::NotMonic);
    }
    if m.coeff(0).is_zero() {
        return Ok(false);
    }
    let c = BigRational::from_integer(q_pow(q, w));
    Ok(all_roots_on_circle(&m.to_rat(), &c))
}

/// Product of the conjugates of `P` over all embeddings of `E`, with rational
/// coefficients (no integrality requirement).
pub fn norm_poly_rational(p: &CharPolyOverE) -> RatPoly {
    if let Some(r) = p.as_rational() {
        if p.field.is_rationals() {
            return r;
        }
        return r.pow(p.field.degree() as u32);
    }
    let total = p.degree() * p.field.degree();
    let pts: Vec<_> = (0..=total as i64)
        .map(|t| {
            let t = BigRational::from_integer(BigInt::from(t));
            let v = p.eval_rational(&t).norm();
            (t, v)
        })
        .collect();
    interpolate(&pts)
}

/// Norm polynomial of an `E`-integral `P`: monic over `Z` of degree
/// `n·[E:Q]`.
pub fn norm_poly(p: &CharPolyOverE) -> Result<IntPoly, WeilError> {
    if !p.is_e_integral() {
        return Err(WeilError::NotIntegral);
    }
    Ok(norm_poly_rational(p)
        .to_int()
        .expect("integral coefficients have an integral norm polynomial"))
}

/// Exponent `e` with `x = q^e`, if any.
fn log_exact(x: &BigRational, q: u64) -> Option<u32> {
    if !x.is_integer() || !x.is_positive() {
        return None;
    }
    let mut n = x.to_integer();
    let qb = BigInt::from(q);
    let mut e = 0;
    while !n.is_one() {
        if !(&n % &qb).is_zero() {
            return None;
        }
        n /= &qb;
        e += 1;
    }
    Some(e)
}

/// Integral Weil weights of the roots of a monic rational polynomial, one
/// entry per root. Roots need not be algebraic integers.
pub fn root_weights(m: &RatPoly, q: u64, opts: &FactorOptions) -> Result<Vec<u32>, WeilError> {
    if m.is_zero() || m.deg() == 0 {
        return Ok(Vec::new());
    }
    let m = m.monic();
    if m.coeff(0).is_zero() {
        return Err(WeilError::ZeroRoot);
    }
    // Roots of F are D times the roots of m.
    let (d, f) = integral_monic_rescaling(&m);
    let dr = BigRational::from_integer(d);
    let mut out = Vec::new();
    for (g, mult) in factor_over_z_with(&f, opts)? {
        let deg = g.deg();
        // G_m(T) = D^{-deg} G(D·T) has the corresponding roots of m.
        let mut scale = BigRational::one();
        let coeffs: Vec<BigRational> = g
            .coeffs()
            .iter()
            .map(|c| {
                let v = BigRational::from_integer(c.clone()) * &scale;
                scale *= &dr;
                v
            })
            .collect();
        let lead = coeffs[deg].clone();
        let gm = RatPoly::new(coeffs).scale(&(BigRational::one() / lead));
        let c0 = gm.coeff(0);
        let sq = &c0 * &c0;
        let Some(e) = log_exact(&sq, q) else {
            return Err(WeilError::NotTypeW {
                factor: gm,
                reason: format!("constant term squared {sq} is not a power of {q}"),
            });
        };
        if !(e as usize).is_multiple_of(deg) {
            return Err(WeilError::NotTypeW {
                factor: gm,
                reason: format!("weight {e}/{deg} is not an integer"),
            });
        }
        let w = (e as usize / deg) as u32;
        if !all_roots_on_circle(&gm, &BigRational::from_integer(q_pow(q, w))) {
            return Err(WeilError::NotTypeW {
                factor: gm,
                reason: format!("roots do not all have absolute value {q}^({w}/2)"),
            });
        }
        out.extend(std::iter::repeat_n(w, deg * mult as usize));
    }
    out.sort_unstable();
    Ok(out)
}

/// Weil weights of an `E`-integral `P` with `P(0) ≠ 0`.
pub fn weil_weights(p: &CharPolyOverE) -> Result<WeilWeightMultiset, WeilError> {
    weil_weights_with(p, &FactorOptions::default())
}

pub fn weil_weights_with(
    p: &CharPolyOverE,
    opts: &FactorOptions,
) -> Result<WeilWeightMultiset, WeilError> {
    if p.coeff(0).is_zero() {
        return Err(WeilError::ZeroRoot);
    }
    let nq = norm_poly(p)?;
    let w = root_weights(&nq.to_rat(), p.q, opts)?;
    Ok(WeilWeightMultiset::from_over_ql(w, p.field.degree()))
}

/// Weil weights without the integrality requirement (roots may be Weil
/// numbers that are not algebraic integers).
pub fn weil_weights_lenient(
    p: &CharPolyOverE,
    opts: &FactorOptions,
) -> Result<WeilWeightMultiset, WeilError> {
    if p.coeff(0).is_zero() {
        return Err(WeilError::ZeroRoot);
    }
    let w = root_weights(&norm_poly_rational(p), p.q, opts)?;
    Ok(WeilWeightMultiset::from_over_ql(w, p.field.degree()))
}

/// `|ι(c_{n-i})|² ≤ binom(n,i)²·q^{w_total}` for every coefficient and
/// embedding.
pub fn coefficient_weil_bound_check(p: &CharPolyOverE, w_total: u32) -> bool {
    let n = p.degree();
    let qw = q_pow(p.q, w_total);
    (1..=n).all(|i| {
        let b = BigInt::from(binomial(n as u64, i as u64));
        let bound = BigRational::from_integer(&b * &b * &qw);
        max_abs_embedding(p.coeff(n - i), &bound).within()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn weil_integer_examples() {
        assert_eq!(is_weil_integer_poly(&ip(&[2048, 24, 1]), 2, 11), Ok(true));
        assert_eq!(is_weil_integer_poly(&ip(&[-1, 1]), 7, 0), Ok(true));
        assert_eq!(is_weil_integer_poly(&ip(&[2, -3, 1]), 2, 1), Ok(false));
        assert_eq!(is_weil_integer_poly(&ip(&[-3, 1]), 3, 2), Ok(true));
        assert_eq!(is_weil_integer_poly(&ip(&[0, 1]), 3, 0), Ok(false));
        assert_eq!(
            is_weil_integer_poly(&ip(&[1, 2]), 3, 0),
            Err(WeilError::NotMonic)
        );
    }

    #[test]
    fn norm_polys() {
        let qi = NumberField::new(ip(&[1, 0, 1])).unwrap();
        let i = FieldElement::generator(&qi);
        let p = CharPolyOverE::new(&qi, vec![i.neg(), FieldElement::one(&qi)], 2).unwrap();
        assert_eq!(norm_poly(&p).unwrap(), ip(&[1, 0, 1]));
        let qs2 = NumberField::new(ip(&[-2, 0, 1])).unwrap();
        let a = FieldElement::new(&qs2, vec![rat(-1), rat(-1)]).unwrap();
        let p = CharPolyOverE::new(&qs2, vec![a, FieldElement::one(&qs2)], 2).unwrap();
        assert_eq!(norm_poly(&p).unwrap(), ip(&[-1, -2, 1]));
        let d = CharPolyOverE::from_int_poly(&ip(&[2048, 24, 1]), 2).unwrap();
        assert_eq!(norm_poly(&d).unwrap(), ip(&[2048, 24, 1]));
    }

    #[test]
    fn weights() {
        let d = CharPolyOverE::from_int_poly(&ip(&[2048, 24, 1]), 2).unwrap();
        assert_eq!(weil_weights(&d).unwrap().over_ql(), &[11, 11]);
        let p = CharPolyOverE::from_int_poly(&(&ip(&[-1, 1]) * &ip(&[-4, 1])), 2).unwrap();
        assert_eq!(weil_weights(&p).unwrap().over_ql(), &[0, 4]);
        let p = CharPolyOverE::from_int_poly(&ip(&[-27, 1]), 3).unwrap();
        assert_eq!(weil_weights(&p).unwrap().over_ql(), &[6]);
        // roots 1 and 2 are Weil integers of weights 0 and 2
        let mixed = CharPolyOverE::from_int_poly(&ip(&[2, -3, 1]), 2).unwrap();
        assert_eq!(weil_weights(&mixed).unwrap().over_ql(), &[0, 2]);
        let bad = CharPolyOverE::from_int_poly(&ip(&[-3, 1]), 2).unwrap();
        assert!(matches!(
            weil_weights(&bad),
            Err(WeilError::NotTypeW { .. })
        ));
        let zero = CharPolyOverE::from_int_poly(&ip(&[0, -3, 1]), 2).unwrap();
        assert_eq!(weil_weights(&zero), Err(WeilError::ZeroRoot));
        let half = CharPolyOverE::over_q(
            &RatPoly::new(vec![BigRational::new((-1).into(), 2.into()), rat(1)]),
            2,
        )
        .unwrap();
        assert_eq!(weil_weights(&half), Err(WeilError::NotIntegral));
    }

    #[test]
    fn over_e_lambda_view() {
        let qi = NumberField::new(ip(&[1, 0, 1])).unwrap();
        let i = FieldElement::generator(&qi);
        // (T - 2i)(T - 1) has norm polynomial (T^2 + 4)(T - 1)^2
        let two_i = i.scale(&rat(2));
        let c0 = two_i.clone();
        let c1 = two_i.neg().sub(&FieldElement::one(&qi)).unwrap();
        let p = CharPolyOverE::new(&qi, vec![c0, c1, FieldElement::one(&qi)], 2).unwrap();
        let w = weil_weights(&p).unwrap();
        assert_eq!(w.over_ql(), &[0, 0, 2, 2]);
        assert_eq!(w.over_e_lambda(), Some(vec![0, 2]));
        assert_eq!(w.sigma(), 4);
    }

    #[test]
    fn lenient_weights_allow_denominators() {
        // roots of T - 1/2 have weight -2 under q = 2: not an integer weight
        let p = CharPolyOverE::over_q(
            &RatPoly::new(vec![BigRational::new((-1).into(), 2.into()), rat(1)]),
            2,
        )
        .unwrap();
        assert!(weil_weights_lenient(&p, &FactorOptions::default()).is_err());
        // T^2 + (24 + 1/2^20)T + 2048 still has its constant term on the circle
        let p = CharPolyOverE::over_q(
            &RatPoly::new(vec![
                rat(2048),
                rat(24) + BigRational::new(1.into(), (1i64 << 20).into()),
                rat(1),
            ]),
            2,
        )
        .unwrap();
        assert_eq!(
            weil_weights_lenient(&p, &FactorOptions::default())
                .unwrap()
                .over_ql(),
            &[11, 11]
        );
    }

    #[test]
    fn coefficient_bounds() {
        let d = CharPolyOverE::from_int_poly(&ip(&[2048, 24, 1]), 2).unwrap();
        assert!(coefficient_weil_bound_check(&d, 22));
        let one = CharPolyOverE::from_int_poly(&ip(&[-1, 1]), 5).unwrap();
        assert!(coefficient_weil_bound_check(&one, 0));
        let p = CharPolyOverE::from_int_poly(&ip(&[4, -5, 1]), 2).unwrap();
        assert!(!coefficient_weil_bound_check(&p, 2));
    }
}
