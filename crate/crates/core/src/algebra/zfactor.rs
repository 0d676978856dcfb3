//! Factorization over `Z`: squarefree decomposition, a good prime, Hensel
//! lifting and subset recombination.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::{inv_mod, is_prime};
use super::fp::{factor_mod_p_with, FpPoly};
use super::poly::{IntPoly, RatPoly};
use super::{AlgebraError, FactorOptions};

/// Irreducible factors of a nonzero polynomial over `Z`, primitive with
/// positive leading coefficient, with multiplicities. The content is dropped.
pub fn factor_over_z(f: &IntPoly) -> Result<Vec<(IntPoly, u32)>, AlgebraError> {
    factor_over_z_with(f, &FactorOptions::default())
}

pub fn factor_over_z_with(
    f: &IntPoly,
    opts: &FactorOptions,
) -> Result<Vec<(IntPoly, u32)>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    if f.deg() > opts.degree_cap {
        return Err(AlgebraError::DegreeCapExceeded {
            degree: f.deg(),
            cap: opts.degree_cap,
        });
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.primitive_part()) {
        for g in factor_squarefree(&part, opts)? {
            out.push((g, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(out)
}

/// Yun's algorithm over `Q`, parts returned primitive.
fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let fr = f.to_rat();
    let df = fr.derivative();
    let a0 = fr.gcd(&df);
    let mut b = fr.divmod(&a0).expect("nonzero").0;
    let mut c = df.divmod(&a0).expect("nonzero").0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.to_primitive_int(), i));
        }
        b = b.divmod(&a).expect("nonzero").0;
        if b.deg() == 0 {
            break;
        }
        c = d.divmod(&a).expect("nonzero").0;
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Factor a primitive squarefree polynomial with positive leading coefficient.
fn factor_squarefree(f: &IntPoly, opts: &FactorOptions) -> Result<Vec<IntPoly>, AlgebraError> {
    let n = f.deg();
    if n <= 1 {
        return Ok(vec![f.primitive_part()]);
    }
    // Pull out the factor T^k first: it keeps the good-prime search simple.
    if f.coeff(0).is_zero() {
        let (q, _) = f
            .divmod_monic(&IntPoly::from_i64s(&[0, 1]))
            .expect("monic divisor");
        let mut out = vec![IntPoly::from_i64s(&[0, 1])];
        out.extend(factor_squarefree(&q, opts)?);
        return Ok(out);
    }
    if f.is_monic() {
        return factor_monic(f, opts);
    }
    // a^{n-1} f(T/a) is monic; factors map back via g(aT).
    let a = f.leading();
    let monic = IntPoly::new(
        (0..=n)
            .map(|i| {
                if i == n {
                    BigInt::one()
                } else {
                    f.coeff(i) * num_traits::pow(a.clone(), n - 1 - i)
                }
            })
            .collect(),
    );
    let mut out = Vec::new();
    for g in factor_monic(&monic, opts)? {
        let mut ap = BigInt::one();
        let scaled = IntPoly::new(
            g.coeffs()
                .iter()
                .map(|c| {
                    let v = c * &ap;
                    ap *= &a;
                    v
                })
                .collect(),
        );
        out.push(scaled.primitive_part());
    }
    Ok(out)
}

fn choose_prime(f: &IntPoly, opts: &FactorOptions) -> Result<(u128, Vec<FpPoly>), AlgebraError> {
    let mut best: Option<(u128, Vec<FpPoly>)> = None;
    let mut good = 0;
    let mut p: u128 = 2;
    while good < 5 {
        p += 1;
        if !is_prime(p) {
            continue;
        }
        let fp = FpPoly::from_int(f, p);
        if fp.deg() != f.deg() || fp.gcd(&fp.derivative()).deg() > 0 {
            continue;
        }
        good += 1;
        let factors: Vec<FpPoly> = factor_mod_p_with(f, p, opts)?
            .into_iter()
            .map(|(g, _)| g)
            .collect();
        if factors.len() == 1 {
            return Ok((p, factors));
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    Ok(best.expect("at least one good prime"))
}

/// Bound on the coefficients of any factor of `f`.
fn factor_coefficient_bound(f: &IntPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    (BigInt::one() << f.deg()) * (norm2.sqrt() + BigInt::one())
}

fn factor_monic(f: &IntPoly, opts: &FactorOptions) -> Result<Vec<IntPoly>, AlgebraError> {
    let (p, local) = choose_prime(f, opts)?;
    if local.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let bound = factor_coefficient_bound(f) * 2;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut k = 1;
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &local, p, k);
    Ok(recombine(f, lifted, &modulus))
}

fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half: BigInt = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lift the monic factorization `f ≡ ∏ local` (mod p) to mod `p^k`.
fn hensel_lift(f: &IntPoly, local: &[FpPoly], p: u128, k: u32) -> Vec<IntPoly> {
    if local.len() == 1 {
        return vec![reduce(f, &num_traits::pow(BigInt::from(p), k as usize))];
    }
    let mid = local.len() / 2;
    let g0 = local[..mid]
        .iter()
        .fold(FpPoly::one(p), |acc, x| acc.mul(x));
    let h0 = local[mid..]
        .iter()
        .fold(FpPoly::one(p), |acc, x| acc.mul(x));
    let (g, h) = lift_pair(f, &g0, &h0, p, k);
    let mut out = hensel_lift(&g, &local[..mid], p, k);
    out.extend(hensel_lift(&h, &local[mid..], p, k));
    out
}

/// Extended gcd over `F_p` returning `(s, t)` with `s·a + t·b = 1`.
fn fp_bezout(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
    let p = a.modulus();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
    let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1).expect("nonzero");
        r0 = std::mem::replace(&mut r1, r);
        let s = s0.sub(&q.mul(&s1));
        s0 = std::mem::replace(&mut s1, s);
        let t = t0.sub(&q.mul(&t1));
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(r0.leading(), p).expect("coprime factors");
    (s0.scale(inv), t0.scale(inv))
}

/// Linear Hensel lifting of `f ≡ g0·h0 (mod p)` to `f ≡ g·h (mod p^k)` with
/// `g`, `h` monic.
fn lift_pair(f: &IntPoly, g0: &FpPoly, h0: &FpPoly, p: u128, k: u32) -> (IntPoly, IntPoly) {
    let pb = BigInt::from(p);
    let target_mod = num_traits::pow(pb.clone(), k as usize);
    let f = reduce(f, &target_mod);
    let (s, t) = fp_bezout(g0, h0);
    let mut g = g0.to_int();
    let mut h = h0.to_int();
    let mut m = pb.clone();
    for _ in 1..k {
        let diff = reduce(&(&f - &(&g * &h)), &target_mod);
        let e = IntPoly::new(diff.coeffs().iter().map(|c| c / &m).collect());
        let e = FpPoly::from_int(&e, p);
        let (q, r) = t.mul(&e).divmod(g0).expect("nonzero");
        let dh = s.mul(&e).add(&q.mul(h0));
        g = &g + &r.to_int().scale(&m);
        h = &h + &dh.to_int().scale(&m);
        m *= &pb;
    }
    (reduce(&g, &target_mod), reduce(&h, &target_mod))
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in (0..lifted.len()).combinations(size) {
            // Constant terms must divide the constant term of what is left.
            let c0 = subset.iter().fold(BigInt::one(), |acc, &i| {
                (acc * lifted[i].coeff(0)).mod_floor(modulus)
            });
            let c0 = symmetric(&IntPoly::constant(c0), modulus).coeff(0);
            if !c0.is_zero() && !rest.coeff(0).is_multiple_of(&c0) {
                continue;
            }
            let cand = subset.iter().fold(IntPoly::one(), |acc, &i| {
                reduce(&(&acc * &lifted[i]), modulus)
            });
            let cand = symmetric(&cand, modulus);
            if let Ok((q, r)) = rest.divmod_monic(&cand) {
                if r.is_zero() {
                    hit = Some((subset, cand, q));
                    break;
                }
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(rest);
    found
}

/// `true` when the polynomial has no nontrivial factorization over `Q`.
pub fn is_irreducible(f: &IntPoly) -> Result<bool, AlgebraError> {
    let factors = factor_over_z(f)?;
    Ok(factors.len() == 1 && factors[0].1 == 1)
}

/// Monic integral rescaling: for `f` with rational coefficients returns
/// `(D, F)` with `F(T) = D^{deg} · f(T/D) / lc` monic over `Z`.
pub fn integral_monic_rescaling(f: &RatPoly) -> (BigInt, IntPoly) {
    let m = f.monic();
    let n = m.deg();
    let d = m.clear_denominators().0;
    let dr = num_rational::BigRational::from_integer(d.clone());
    let mut pw = num_rational::BigRational::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for i in (0..=n).rev() {
        let v = m.coeff(i) * &pw;
        debug_assert!(v.is_integer());
        coeffs[i] = v.to_integer();
        pw *= &dr;
    }
    (d, IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn product(factors: &[(IntPoly, u32)]) -> IntPoly {
        factors
            .iter()
            .fold(IntPoly::one(), |acc, (g, m)| &acc * &g.pow(*m))
    }

    #[test]
    fn swinnerton_dyer_like_stays_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible
        let f = ip(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_over_z(&f).unwrap(), vec![(f.clone(), 1)]);
    }

    #[test]
    fn recovers_products() {
        let a = ip(&[1, 0, 1]);
        let b = ip(&[-2, 0, 0, 1]);
        let c = ip(&[2048, 24, 1]);
        let f = &(&a * &b.pow(2)) * &c;
        let out = factor_over_z(&f).unwrap();
        assert_eq!(product(&out), f);
        assert_eq!(out.len(), 3);
        assert!(out.contains(&(b, 2)));
    }

    #[test]
    fn non_monic_and_zero_root() {
        let f = &ip(&[1, 2]) * &ip(&[-1, 0, 3]);
        let f = &f * &ip(&[0, 1]);
        let out = factor_over_z(&f).unwrap();
        assert_eq!(product(&out), f);
        assert_eq!(out.len(), 3);
    }

    #[test]
    fn degree_cap() {
        let f = ip(&[1, 0, 0, 0, 0, 1]);
        let opts = FactorOptions {
            seed: 0,
            degree_cap: 4,
        };
        assert_eq!(
            factor_over_z_with(&f, &opts),
            Err(AlgebraError::DegreeCapExceeded { degree: 5, cap: 4 })
        );
    }

    #[test]
    fn cyclotomic_split() {
        // T^12 - 1 = product of Φ_d for d | 12
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = ip(&c);
        let out = factor_over_z(&f).unwrap();
        assert_eq!(out.len(), 6);
        assert_eq!(product(&out), f);
    }

    #[test]
    fn rescaling_is_monic() {
        let f = RatPoly::new(vec![
            num_rational::BigRational::new(1.into(), 4.into()),
            num_rational::BigRational::new(3.into(), 2.into()),
            num_rational::BigRational::one(),
        ]);
        let (d, g) = integral_monic_rescaling(&f);
        assert_eq!(d, BigInt::from(4));
        assert!(g.is_monic());
        assert_eq!(g, ip(&[4, 6, 1]));
    }
}
