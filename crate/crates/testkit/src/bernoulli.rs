//! Bernoulli numbers by the Akiyama–Tanigawa algorithm (convention `B_1 = +1/2`,
//! irrelevant for the even indices used in tests).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub fn bernoulli(n: usize) -> BigRational {
    let mut a = vec![BigRational::zero(); n + 1];
    for m in 0..=n {
        a[m] = BigRational::new(BigInt::from(1), BigInt::from(m as u64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = BigRational::from_integer(BigInt::from(j as u64)) * (&a[j - 1] - &a[j]);
        }
    }
    a[0].clone()
}
