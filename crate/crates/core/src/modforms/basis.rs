//! Level-one modular forms: Eisenstein series, the Miller basis of cusp
//! forms, and Hecke operators on it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::matrix::RatMatrix;

use super::bernoulli::bernoulli;
use super::qexp::QExpansion;
use super::ModFormError;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `σ_e(n) = Σ_{d | n} d^e`.
pub fn divisor_sigma(e: u32, n: u64) -> BigInt {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| num_traits::pow(BigInt::from(d), e as usize))
        .sum()
}

/// `E_k = 1 - (2k/B_k) Σ σ_{k-1}(n) qⁿ` for even `k ≥ 4`.
pub fn eisenstein(k: u64, prec: usize) -> Result<QExpansion, ModFormError> {
    if k < 4 || k % 2 == 1 {
        return Err(ModFormError::BadWeight(k));
    }
    let c = -rat(2 * k as i64) / bernoulli(k)?;
    let mut coeffs = vec![rat(1)];
    coeffs.extend(
        (1..=prec as u64).map(|n| &c * BigRational::from_integer(divisor_sigma(k as u32 - 1, n))),
    );
    Ok(QExpansion::new(coeffs))
}

/// `Δ = (E_4³ - E_6²)/1728`.
pub fn delta(prec: usize) -> QExpansion {
    let e4 = eisenstein(4, prec).expect("weight 4");
    let e6 = eisenstein(6, prec).expect("weight 6");
    e4.pow(3)
        .sub(&e6.pow(2))
        .scale(&BigRational::new(1.into(), 1728.into()))
}

/// `dim S_k(SL_2(Z))`.
pub fn cusp_dimension(k: i64) -> usize {
    if k < 12 || k % 2 != 0 {
        return 0;
    }
    let d = (k / 12) as usize;
    if k % 12 == 2 {
        d - 1
    } else {
        d
    }
}

/// `(a, b)` with `4a + 6b = m`, `b ∈ {0, 1}`.
fn e4_e6_exponents(m: u64) -> (u32, u32) {
    if m.is_multiple_of(4) {
        ((m / 4) as u32, 0)
    } else {
        (((m - 6) / 4) as u32, 1)
    }
}

/// Basis `f_1, …, f_d` of `S_k` with `a_i(f_j) = δ_ij` for `1 ≤ i, j ≤ d`.
pub fn miller_basis(k: u64, prec: usize) -> Result<Vec<QExpansion>, ModFormError> {
    if k % 2 == 1 {
        return Err(ModFormError::BadWeight(k));
    }
    let d = cusp_dimension(k as i64);
    if d == 0 {
        return Ok(Vec::new());
    }
    if prec < d {
        return Err(ModFormError::InsufficientPrecision {
            need: d,
            have: prec,
        });
    }
    let e4 = eisenstein(4, prec)?;
    let e6 = eisenstein(6, prec)?;
    let dl = delta(prec);
    let mut basis: Vec<QExpansion> = (1..=d as u64)
        .map(|c| {
            let (a, b) = e4_e6_exponents(k - 12 * c);
            dl.pow(c as u32).mul(&e4.pow(a)).mul(&e6.pow(b))
        })
        .collect();
    // f_c = q^c + …; clear a_j(f_c) for j > c from the bottom up.
    for j in (1..d).rev() {
        let (head, tail) = basis.split_at_mut(j);
        for f in head.iter_mut() {
            let a = f.coeff(j + 1).clone();
            if !a.is_zero() {
                *f = f.sub(&tail[0].scale(&a));
            }
        }
    }
    Ok(basis)
}

/// `a_n(T_p f) = a_{np}(f) + p^{k-1} a_{n/p}(f)` for `n ≤ prec/p`.
pub fn hecke_apply(k: u64, p: u64, f: &QExpansion) -> QExpansion {
    let p = p as usize;
    let pk = BigRational::from_integer(num_traits::pow(BigInt::from(p), k as usize - 1));
    let top = f.prec() / p;
    QExpansion::new(
        (0..=top.max(1))
            .map(|n| {
                let mut a = if n * p <= f.prec() {
                    f.coeff(n * p).clone()
                } else {
                    BigRational::zero()
                };
                if n % p == 0 {
                    a += &pk * f.coeff(n / p);
                }
                a
            })
            .collect(),
    )
}

/// Matrix of `T_p` on a Miller basis: column `j` holds the coordinates of
/// `T_p f_j`.
pub fn hecke_matrix(k: u64, p: u64, basis: &[QExpansion]) -> Result<RatMatrix, ModFormError> {
    let d = basis.len();
    let need = d * p as usize;
    if let Some(f) = basis.iter().find(|f| f.prec() < need) {
        return Err(ModFormError::InsufficientPrecision {
            need,
            have: f.prec(),
        });
    }
    let mut m = RatMatrix::zero(d);
    for (j, f) in basis.iter().enumerate() {
        let t = hecke_apply(k, p, f);
        for i in 0..d {
            m.set(i, j, t.coeff(i + 1).clone());
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_coefficients() {
        assert_eq!(
            eisenstein(4, 3).unwrap(),
            QExpansion::from_i64s(&[1, 240, 2160, 6720])
        );
        assert_eq!(eisenstein(6, 1).unwrap().coeff(1), &rat(-504));
        assert!(eisenstein(2, 3).is_err());
    }

    #[test]
    fn delta_and_basis() {
        assert_eq!(delta(3), QExpansion::from_i64s(&[0, 1, -24, 252]));
        assert_eq!(miller_basis(12, 3).unwrap(), vec![delta(3)]);
        assert!(miller_basis(10, 5).unwrap().is_empty());
        assert_eq!(miller_basis(26, 5).unwrap().len(), 1);
        let b = miller_basis(24, 10).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!((b[0].coeff(1), b[0].coeff(2)), (&rat(1), &rat(0)));
        assert_eq!((b[1].coeff(1), b[1].coeff(2)), (&rat(0), &rat(1)));
    }

    #[test]
    fn hecke_values() {
        let b = miller_basis(12, 10).unwrap();
        assert_eq!(hecke_matrix(12, 2, &b).unwrap().get(0, 0), &rat(-24));
        assert_eq!(hecke_matrix(12, 3, &b).unwrap().get(0, 0), &rat(252));
        let b = miller_basis(16, 10).unwrap();
        assert_eq!(hecke_matrix(16, 2, &b).unwrap().get(0, 0), &rat(216));
        assert!(hecke_matrix(12, 13, &miller_basis(12, 5).unwrap()).is_err());
    }

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = (0..=26).step_by(2).map(cusp_dimension).collect();
        assert_eq!(dims, vec![0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1]);
    }
}
