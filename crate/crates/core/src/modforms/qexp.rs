//! Truncated q-expansions with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `a_0 + a_1 q + … + a_prec q^prec`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QExpansion {
    coeffs: Vec<BigRational>,
}

impl QExpansion {
    /// Coefficients `a_0..=a_prec`; `prec` must be at least 1.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(coeffs.len() >= 2, "precision must be at least 1");
        Self { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(
            c.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn zero(prec: usize) -> Self {
        Self::new(vec![BigRational::zero(); prec + 1])
    }

    pub fn one(prec: usize) -> Self {
        let mut z = Self::zero(prec);
        z.coeffs[0] = BigRational::one();
        z
    }

    /// Largest index with a known coefficient.
    pub fn prec(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `a_n`; panics beyond the precision.
    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, prec: usize) -> Self {
        Self::new(self.coeffs[..=prec.min(self.prec())].to_vec())
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        Self::new((0..=p).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        Self::new((0..=p).map(|i| &self.coeffs[i] - &o.coeffs[i]).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Product truncated to the smaller precision.
    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        let mut out = vec![BigRational::zero(); p + 1];
        for (i, a) in self.coeffs.iter().take(p + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(p + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.prec());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integer coefficients, when integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = abs.is_one();
            match n {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{abs}q")?,
                _ if unit => write!(f, "q^{n}")?,
                _ => write!(f, "{abs}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = QExpansion::from_i64s(&[1, 1, 0, 0]);
        assert_eq!(a.pow(3), QExpansion::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(
            a.mul(&QExpansion::from_i64s(&[1, -1])),
            QExpansion::from_i64s(&[1, 0])
        );
        assert_eq!(
            QExpansion::from_i64s(&[0, 1, -24]).to_string(),
            "q - 24q^2 + O(q^3)"
        );
        assert_eq!(QExpansion::from_i64s(&[0, 0, 5]).valuation(), Some(2));
    }
}
