//! Exact `q`-expansions built from infinite products and divisor sums.

use num_bigint::BigInt;
use num_traits::Zero;

/// `Δ = q ∏ (1 - q^n)^24`, coefficients `τ(0), …, τ(prec)`.
pub fn tau(prec: usize) -> Vec<BigInt> {
    // ∏ (1 - q^n) truncated at q^prec, raised to the 24th power
    let mut euler = vec![BigInt::zero(); prec + 1];
    euler[0] = BigInt::from(1);
    for n in 1..=prec {
        for i in (n..=prec).rev() {
            let t = euler[i - n].clone();
            euler[i] -= t;
        }
    }
    let mut p = vec![BigInt::zero(); prec + 1];
    p[0] = BigInt::from(1);
    for _ in 0..24 {
        p = mul(&p, &euler);
    }
    let mut out = vec![BigInt::zero(); prec + 1];
    out[1..].clone_from_slice(&p[..prec]);
    out
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn sigma(n: u64, k: u32) -> BigInt {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| num_traits::pow(BigInt::from(d), k as usize))
        .sum()
}

/// `E_4 = 1 + 240 Σ σ_3(n) q^n`.
pub fn e4(prec: usize) -> Vec<BigInt> {
    (0..=prec as u64)
        .map(|n| {
            if n == 0 {
                BigInt::from(1)
            } else {
                240 * sigma(n, 3)
            }
        })
        .collect()
}

/// The unique normalized cusp form of weight 16, `E_4 Δ`.
pub fn e4_delta(prec: usize) -> Vec<BigInt> {
    mul(&e4(prec), &tau(prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_taus() {
        let t = tau(10);
        let want = [
            0i64, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
        ];
        assert_eq!(t, want.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert_eq!(e4_delta(3)[2], BigInt::from(216));
    }
}
