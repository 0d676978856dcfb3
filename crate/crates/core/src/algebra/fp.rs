//! Polynomials over a prime field `F_p` (`p < 2^128`) and their factorization:
//! squarefree decomposition, distinct-degree and equal-degree splitting.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::{add_mod, bigint_mod, inv_mod, is_prime, mul_mod, sub_mod};
use super::poly::IntPoly;
use super::{AlgebraError, FactorOptions};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u128,
    coeffs: Vec<u128>,
}

impl FpPoly {
    pub fn new(p: u128, coeffs: Vec<u128>) -> Self {
        let mut coeffs: Vec<u128> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn from_int(f: &IntPoly, p: u128) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| bigint_mod(c, p)).collect())
    }

    /// Lift to `Z` with coefficients in `[0, p)`.
    pub fn to_int(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lift to `Z` with coefficients in `(-p/2, p/2]`.
    pub fn to_int_symmetric(&self) -> IntPoly {
        let half = self.p / 2;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        -BigInt::from(self.p - c)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    pub fn zero(p: u128) -> Self {
        Self { p, coeffs: vec![] }
    }

    pub fn one(p: u128) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u128) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u128 {
        self.p
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, k: u128) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&c| mul_mod(c, k, self.p)).collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| add_mod(self.coeff(i), o.coeff(i), self.p))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| sub_mod(self.coeff(i), o.coeff(i), self.p))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, self.p), self.p);
            }
        }
        Self::new(self.p, out)
    }

    pub fn divmod(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let p = self.p;
        let dd = d.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let inv = inv_mod(d.leading(), p).expect("nonzero leading coefficient");
        let mut quot = vec![0u128; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dd], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = sub_mod(rem[i + j], mul_mod(c, dc, p), p);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divmod(d).expect("nonzero divisor").1
    }

    pub fn div_exact(&self, d: &Self) -> Self {
        self.divmod(d).expect("nonzero divisor").0
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, (i as u128) % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u128) -> u128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Inverse of the Frobenius on a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    fn sort_key(&self) -> (usize, Vec<u128>) {
        (self.deg(), self.coeffs.clone())
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_int(), self.p)
    }
}

/// Factor `f` modulo `p` into monic irreducibles with multiplicities, using
/// the default seed.
pub fn factor_mod_p(f: &IntPoly, p: u128) -> Result<Vec<(FpPoly, u32)>, AlgebraError> {
    factor_mod_p_with(f, p, &FactorOptions::default())
}

/// Factor `f` modulo `p`. Output is sorted by degree, then by coefficients
/// (lowest degree first); it is independent of the seed.
pub fn factor_mod_p_with(
    f: &IntPoly,
    p: u128,
    opts: &FactorOptions,
) -> Result<Vec<(FpPoly, u32)>, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p.to_string()));
    }
    let fp = FpPoly::from_int(f, p);
    if fp.is_zero() {
        return Err(AlgebraError::ZeroModP(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(&fp, opts.seed));
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(&fp.monic()) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by_key(|(g, _)| g.sort_key());
    // Distinct squarefree layers never share a factor, so no merging is needed.
    Ok(out)
}

fn seed_for(f: &FpPoly, seed: u64) -> u64 {
    const FNV_OFFSET: u64 = 0xcbf29ce484222325;
    const FNV_PRIME: u64 = 0x100000001b3;
    let mut h = FNV_OFFSET;
    let mut feed = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(FNV_PRIME);
        }
    };
    feed(&f.p.to_le_bytes());
    for c in &f.coeffs {
        feed(&c.to_le_bytes());
    }
    feed(&seed.to_le_bytes());
    h
}

/// Squarefree parts with multiplicities; input monic and nonzero.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.deg() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if c.deg() > 0 {
        let p = u32::try_from(f.p).expect("p-th powers only arise for small p");
        for (g, m) in squarefree_decomposition(&c.pth_root().monic()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Split a squarefree monic polynomial into products of irreducibles of
/// equal degree: `(product, degree)`.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let pb = BigUint::from(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pb, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of irreducibles of degree `d`.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    if f.deg() == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let n = f.deg();
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (num_traits::pow(BigUint::from(p), d) - BigUint::one()) >> 1;
            a.pow_mod(&e, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < n {
            let other = f.div_exact(&g);
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&other.monic(), d, rng));
            return out;
        }
    }
}

/// Product of `factors` raised to their multiplicities.
pub fn expand_factors(p: u128, factors: &[(FpPoly, u32)]) -> FpPoly {
    let mut acc = FpPoly::one(p);
    for (g, m) in factors {
        for _ in 0..*m {
            acc = acc.mul(g);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn fp(p: u128, c: &[u128]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    #[test]
    fn splits_t2_plus_1_mod_5() {
        let f = factor_mod_p(&ip(&[1, 0, 1]), 5).unwrap();
        assert_eq!(f, vec![(fp(5, &[2, 1]), 1), (fp(5, &[3, 1]), 1)]);
    }

    #[test]
    fn inert_and_repeated() {
        assert_eq!(
            factor_mod_p(&ip(&[1, 0, 1]), 3).unwrap(),
            vec![(fp(3, &[1, 0, 1]), 1)]
        );
        assert_eq!(
            factor_mod_p(&ip(&[0, 0, 1]), 7).unwrap(),
            vec![(fp(7, &[0, 1]), 2)]
        );
        assert_eq!(
            factor_mod_p(&ip(&[1, 0, 1]), 2).unwrap(),
            vec![(fp(2, &[1, 1]), 2)]
        );
    }

    #[test]
    fn pth_powers_are_found() {
        // (T + 1)^6 mod 3 = ((T + 1)^3)^2
        let f = ip(&[1, 1]).pow(6);
        assert_eq!(factor_mod_p(&f, 3).unwrap(), vec![(fp(3, &[1, 1]), 6)]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            factor_mod_p(&ip(&[1, 1]), 4),
            Err(AlgebraError::NotPrime(_))
        ));
        assert_eq!(
            factor_mod_p(&ip(&[5, 10]), 5),
            Err(AlgebraError::ZeroModP(5))
        );
    }

    #[test]
    fn seed_does_not_change_output() {
        let f = &(&ip(&[1, 0, 1]) * &ip(&[-2, 0, 0, 1])) * &ip(&[3, 1, 0, 0, 1]);
        for p in [2u128, 3, 5, 7, 11, 13, 101] {
            let base = factor_mod_p(&f, p).unwrap();
            for seed in 1..5 {
                let opts = FactorOptions {
                    seed,
                    ..FactorOptions::default()
                };
                assert_eq!(factor_mod_p_with(&f, p, &opts).unwrap(), base);
            }
            assert_eq!(expand_factors(p, &base), FpPoly::from_int(&f, p).monic());
        }
    }

    #[test]
    fn modulus_above_u64() {
        let p = 26315271553053477373u128;
        let f = &ip(&[-3, 1]) * &ip(&[5, 0, 1]);
        let out = factor_mod_p(&f, p).unwrap();
        assert_eq!(expand_factors(p, &out), FpPoly::from_int(&f, p));
    }
}
