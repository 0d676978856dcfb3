//! Number fields `Q[x]/(g)` and their elements in the power basis.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;
use super::poly::{discriminant, resultant, IntPoly, RatPoly};
use super::zfactor::factor_over_z;
use super::AlgebraError;

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    gen_poly: IntPoly,
    degree: usize,
    disc: BigInt,
}

impl NumberField {
    /// Build `Q[x]/(g)`; `g` must be monic and irreducible over `Q`.
    pub fn new(gen_poly: IntPoly) -> Result<Arc<Self>, AlgebraError> {
        let degree = gen_poly.deg();
        if gen_poly.is_zero() || degree == 0 {
            return Err(AlgebraError::InvalidField("degree 0".into()));
        }
        if !gen_poly.is_monic() {
            return Err(AlgebraError::InvalidField(format!(
                "{gen_poly} is not monic"
            )));
        }
        if degree > 1 {
            let factors = factor_over_z(&gen_poly)?;
            if factors.len() != 1 || factors[0].1 != 1 {
                return Err(AlgebraError::InvalidField(format!(
                    "{gen_poly} is reducible"
                )));
            }
        }
        let disc = discriminant(&gen_poly);
        Ok(Arc::new(Self {
            gen_poly,
            degree,
            disc,
        }))
    }

    /// `Q` presented as `Q[x]/(x)`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(Self {
            gen_poly: IntPoly::from_i64s(&[0, 1]),
            degree: 1,
            disc: BigInt::one(),
        })
    }

    pub fn gen_poly(&self) -> &IntPoly {
        &self.gen_poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            write!(f, "Q")
        } else {
            write!(f, "Q[a]/({})", self.gen_poly.to_string().replace('T', "a"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl FieldElement {
    /// Element with the given power-basis coordinates (padded with zeros).
    pub fn new(field: &Arc<NumberField>, coords: Vec<BigRational>) -> Result<Self, AlgebraError> {
        if coords.len() > field.degree {
            return Err(AlgebraError::InvalidField(format!(
                "{} coordinates for a degree {} field",
                coords.len(),
                field.degree
            )));
        }
        let mut coords = coords;
        coords.resize(field.degree, BigRational::zero());
        Ok(Self {
            field: field.clone(),
            coords,
        })
    }

    /// Reduce an arbitrary polynomial in `α` into the field.
    pub fn from_poly(field: &Arc<NumberField>, p: &RatPoly) -> Self {
        let r = p.rem(&field.gen_poly.to_rat());
        let coords = (0..field.degree).map(|i| r.coeff(i)).collect();
        Self {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_int(field: &Arc<NumberField>, n: BigInt) -> Self {
        Self::from_rational(field, BigRational::from_integer(n))
    }

    pub fn from_i64(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_int(field, BigInt::from(n))
    }

    pub fn from_rational(field: &Arc<NumberField>, x: BigRational) -> Self {
        Self::from_poly(field, &RatPoly::constant(x))
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &RatPoly::zero())
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_i64(field, 1)
    }

    /// The generator `α`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &RatPoly::x())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coords[0].clone())
    }

    fn same_field(&self, o: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.field, &o.field) || self.field.gen_poly == o.field.gen_poly {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_field(o)?;
        Ok(Self {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_field(o)?;
        Ok(Self {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_field(o)?;
        Ok(Self::from_poly(
            &self.field,
            &(&self.to_poly() * &o.to_poly()),
        ))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let (g, s, _) = self.to_poly().xgcd(&self.field.gen_poly.to_rat());
        debug_assert_eq!(g.deg(), 0);
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Matrix of multiplication by `self` on the power basis (columns are
    /// images of basis vectors).
    pub fn mult_matrix(&self) -> RatMatrix {
        let d = self.field.degree;
        let mut m = RatMatrix::zero(d);
        let mut basis = Self::one(&self.field);
        let alpha = Self::generator(&self.field);
        for j in 0..d {
            let img = self.mul(&basis).expect("same field");
            for i in 0..d {
                m.set(i, j, img.coords[i].clone());
            }
            basis = basis.mul(&alpha).expect("same field");
        }
        m
    }

    /// Characteristic polynomial over `Q` of multiplication by `self`.
    pub fn charpoly(&self) -> RatPoly {
        self.mult_matrix().charpoly()
    }

    /// Minimal polynomial over `Q` (monic).
    pub fn minpoly(&self) -> RatPoly {
        self.charpoly().squarefree_part()
    }

    /// Product of all embeddings, as `Res(g, a)`.
    pub fn norm(&self) -> BigRational {
        resultant(&self.field.gen_poly.to_rat(), &self.to_poly())
    }

    pub fn trace(&self) -> BigRational {
        self.mult_matrix().trace()
    }

    /// Algebraic integer test via the characteristic polynomial.
    pub fn is_integral(&self) -> bool {
        if self.coords.iter().all(|c| c.is_integer()) {
            return true;
        }
        self.charpoly().coeffs().iter().all(|c| c.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        use num_integer::Integer;
        self.coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "a")?;
                    } else {
                        write!(f, "a^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(c: &[i64]) -> Arc<NumberField> {
        NumberField::new(IntPoly::from_i64s(c)).unwrap()
    }

    fn el(k: &Arc<NumberField>, c: &[i64]) -> FieldElement {
        FieldElement::new(
            k,
            c.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
        .unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn norms() {
        let qi = field(&[1, 0, 1]);
        assert_eq!(el(&qi, &[1, 1]).norm(), q(2));
        assert_eq!(el(&qi, &[1]).norm(), q(1));
        let qs2 = field(&[-2, 0, 1]);
        assert_eq!(el(&qs2, &[0, 1]).norm(), q(-2));
        assert_eq!(el(&qs2, &[0, 1]).mult_matrix().det(), q(-2));
    }

    #[test]
    fn inverse_and_integrality() {
        let qs5 = field(&[-5, 0, 1]);
        let golden = FieldElement::new(
            &qs5,
            vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::new(1.into(), 2.into()),
            ],
        )
        .unwrap();
        assert!(golden.is_integral());
        assert_eq!(golden.minpoly(), RatPoly::from_i64s(&[-1, -1, 1]));
        let half = FieldElement::from_rational(&qs5, BigRational::new(1.into(), 2.into()));
        assert!(!half.is_integral());
        let x = el(&qs5, &[3, 2]);
        assert!(x.mul(&x.inverse().unwrap()).unwrap().is_one());
        assert_eq!(
            FieldElement::zero(&qs5).inverse(),
            Err(AlgebraError::NotInvertible)
        );
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(NumberField::new(IntPoly::from_i64s(&[-1, 0, 1])).is_err());
        assert!(NumberField::new(IntPoly::from_i64s(&[1, 0, 2])).is_err());
        assert!(NumberField::new(IntPoly::from_i64s(&[3])).is_err());
        assert_eq!(field(&[1, 0, 1]).disc(), &BigInt::from(-4));
    }

    #[test]
    fn mismatched_fields() {
        let a = el(&field(&[1, 0, 1]), &[0, 1]);
        let b = el(&field(&[-2, 0, 1]), &[0, 1]);
        assert_eq!(a.mul(&b), Err(AlgebraError::FieldMismatch));
        assert_eq!(a.to_string(), "a");
        assert_eq!(el(&field(&[1, 0, 1]), &[-1, 3]).to_string(), "-1 + 3*a");
    }
}
