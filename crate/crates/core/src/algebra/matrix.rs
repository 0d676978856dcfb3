//! Small dense matrices over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::RatPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    rows: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        Self { n, rows }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            rows: vec![vec![BigRational::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = BigRational::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.rows[i][j] += a * &o.rows[k][j];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).fold(BigRational::zero(), |acc, i| acc + &self.rows[i][i])
    }

    /// Characteristic polynomial `det(T·I - M)` by Faddeev–LeVerrier.
    pub fn charpoly(&self) -> RatPoly {
        let n = self.n;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            m = self.mul(&m);
            for i in 0..n {
                m.rows[i][i] += &coeffs[n - k + 1];
            }
            let am = self.mul(&m);
            coeffs[n - k] = -am.trace() / BigRational::from_integer(BigInt::from(k));
        }
        RatPoly::new(coeffs)
    }

    /// Determinant by fraction-tracking Gaussian elimination.
    pub fn det(&self) -> BigRational {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return BigRational::zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                let (top, bottom) = a.split_at_mut(r);
                for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= &factor * y;
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    #[test]
    fn charpoly_and_det() {
        let a = m(&[&[0, -1], &[1, 0]]);
        assert_eq!(a.charpoly(), RatPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(a.det(), BigRational::one());
        let b = m(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 4]]);
        // det(T - B) evaluated at 0 equals -det(B)
        assert_eq!(b.charpoly().coeff(0), -b.det());
        assert_eq!(b.det(), BigRational::from_integer(25.into()));
    }
}
