//! Integer helpers by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Prime divisors of `|n|` below `limit`, plus the cofactor left over.
pub fn small_prime_divisors(n: &BigInt, limit: u64) -> (Vec<u64>, BigInt) {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return (out, m);
    }
    for p in primes_up_to(limit) {
        let bp = BigInt::from(p);
        if (&m % &bp).is_zero() {
            out.push(p);
            while (&m % &bp).is_zero() {
                m /= &bp;
            }
        }
    }
    (out, m)
}

pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u128 % m as u128, b as u128 % m as u128, e);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    r as u64
}

pub fn big_mod(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    u64::try_from(r).expect("residue fits")
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}
