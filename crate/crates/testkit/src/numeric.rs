//! Complex roots of integer polynomials in fixed-point arithmetic with
//! `PREC` fractional bits (about 240 decimal digits), found by Durand–Kerner.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub const PREC: u32 = 800;

/// Fixed-point complex number `(re + i·im) / 2^PREC`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

fn one() -> BigInt {
    BigInt::from(1) << PREC
}

fn fmul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> PREC
}

impl Cx {
    pub fn from_int(n: &BigInt) -> Self {
        Cx {
            re: n << PREC,
            im: BigInt::zero(),
        }
    }

    fn add(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx {
            re: fmul(&self.re, &o.re) - fmul(&self.im, &o.im),
            im: fmul(&self.re, &o.im) + fmul(&self.im, &o.re),
        }
    }

    fn div(&self, o: &Cx) -> Cx {
        let den = fmul(&o.re, &o.re) + fmul(&o.im, &o.im);
        let re = fmul(&self.re, &o.re) + fmul(&self.im, &o.im);
        let im = fmul(&self.im, &o.re) - fmul(&self.re, &o.im);
        Cx {
            re: (re << PREC).div_floor(&den),
            im: (im << PREC).div_floor(&den),
        }
    }

    /// `|z|²` in fixed point.
    pub fn abs_sq(&self) -> BigInt {
        fmul(&self.re, &self.re) + fmul(&self.im, &self.im)
    }

    fn size(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

/// Horner evaluation of a monic polynomial given low to high.
fn eval(coeffs: &[BigInt], z: &Cx) -> Cx {
    coeffs
        .iter()
        .rev()
        .fold(Cx::from_int(&BigInt::zero()), |acc, c| {
            acc.mul(z).add(&Cx::from_int(c))
        })
}

/// All complex roots of a monic integer polynomial (low to high), with
/// multiplicity.
pub fn roots(coeffs: &[BigInt]) -> Vec<Cx> {
    let n = coeffs.len() - 1;
    assert!(
        n >= 1 && coeffs[n] == BigInt::from(1),
        "monic of degree >= 1"
    );
    // Fujiwara: every root lies within 2·max |c_{n-i}|^{1/i}
    let bound = (1..=n)
        .map(|i| {
            let c = coeffs[n - i].abs();
            let c = if i == n { c / 2 } else { c };
            c.nth_root(i as u32) + 1
        })
        .max()
        .unwrap()
        * 2;
    // starting points r·(0.4 + 0.9i)^j
    let seed = Cx {
        re: one() * 4 / 10,
        im: one() * 9 / 10,
    };
    let mut z: Vec<Cx> = Vec::with_capacity(n);
    let mut w = Cx {
        re: &bound << PREC,
        im: BigInt::zero(),
    };
    for _ in 0..n {
        w = w.mul(&seed);
        z.push(w.clone());
    }
    let tol = BigInt::from(1) << (PREC / 2 + 40);
    for _ in 0..4000 {
        let mut moved = BigInt::zero();
        for i in 0..n {
            let mut den = Cx::from_int(&BigInt::from(1));
            for j in (0..n).filter(|&j| j != i) {
                den = den.mul(&z[i].sub(&z[j]));
            }
            if den.size().is_zero() {
                continue;
            }
            let step = eval(coeffs, &z[i]).div(&den);
            moved = moved.max(step.size());
            z[i] = z[i].sub(&step);
        }
        // multiple roots converge only linearly, to about half precision
        if moved < tol {
            break;
        }
    }
    z
}

/// Every root has `| |α|²/q^w - 1 | < 10^-30`.
pub fn is_weil_numeric(coeffs: &[BigInt], q: u64, w: u32) -> bool {
    let target = num_traits::pow(BigInt::from(q), w as usize) << PREC;
    roots(coeffs).iter().all(|r| {
        let diff = (r.abs_sq() - &target).abs();
        // diff / target < 10^-30  ⟺  10^30·diff < target
        diff * num_traits::pow(BigInt::from(10), 30) < target
    })
}

/// `N(a) = ∏ a(α)` over the roots of the defining polynomial, rounded to the
/// nearest integer, together with `max |a(α)|²` in fixed point.
pub fn norm_and_max_abs_sq(genpoly: &[BigInt], a: &[BigInt]) -> (BigInt, BigInt) {
    let mut prod = Cx::from_int(&BigInt::from(1));
    let mut max = BigInt::zero();
    for r in roots(genpoly) {
        let v = a
            .iter()
            .rev()
            .fold(Cx::from_int(&BigInt::zero()), |acc, c| {
                acc.mul(&r).add(&Cx::from_int(c))
            });
        max = max.max(v.abs_sq());
        prod = prod.mul(&v);
    }
    let half = BigInt::from(1) << (PREC - 1);
    ((prod.re + half) >> PREC, max)
}

/// `∏_σ Σ_i σ(a_i)·T^i` over the embeddings `σ` of `Q[x]/(genpoly)`, where
/// each `a_i` has integer coordinates over the common denominator `denom`.
/// The product has rational coefficients; they are returned as
/// `denom^{deg(genpoly)}` times the true value, rounded to integers.
pub fn norm_polynomial_scaled(genpoly: &[BigInt], coeffs: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut prod: Vec<Cx> = vec![Cx::from_int(&BigInt::from(1))];
    for r in roots(genpoly) {
        let local: Vec<Cx> = coeffs
            .iter()
            .map(|a| {
                a.iter()
                    .rev()
                    .fold(Cx::from_int(&BigInt::zero()), |acc, c| {
                        acc.mul(&r).add(&Cx::from_int(c))
                    })
            })
            .collect();
        let mut next = vec![Cx::from_int(&BigInt::zero()); prod.len() + local.len() - 1];
        for (i, x) in prod.iter().enumerate() {
            for (j, y) in local.iter().enumerate() {
                next[i + j] = next[i + j].add(&x.mul(y));
            }
        }
        prod = next;
    }
    let half = BigInt::from(1) << (PREC - 1);
    prod.into_iter().map(|c| (c.re + &half) >> PREC).collect()
}

/// `x` as a fixed-point real.
pub fn fixed(x: &BigInt) -> BigInt {
    x << PREC
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn weil_examples() {
        assert!(is_weil_numeric(&ints(&[2048, 24, 1]), 2, 11));
        assert!(is_weil_numeric(&ints(&[4, -4, 1]), 2, 2));
        assert!(!is_weil_numeric(&ints(&[1, -3, 1]), 2, 0));
        assert!(is_weil_numeric(&ints(&[1, 0, 0, 0, 1]), 5, 0));
    }

    #[test]
    fn norms() {
        // N(3 + 2i) = 13
        let (n, m) = norm_and_max_abs_sq(&ints(&[1, 0, 1]), &ints(&[3, 2]));
        assert_eq!(n, BigInt::from(13));
        assert!((m - fixed(&BigInt::from(13))).abs() < BigInt::from(1) << (PREC - 100));
        // N(1 + √2) = -1
        assert_eq!(
            norm_and_max_abs_sq(&ints(&[-2, 0, 1]), &ints(&[1, 1])).0,
            BigInt::from(-1)
        );
    }

    #[test]
    fn norm_polynomials() {
        // (T - i)(T + i) = T^2 + 1
        let got = norm_polynomial_scaled(&ints(&[1, 0, 1]), &[ints(&[0, -1]), ints(&[1])]);
        assert_eq!(got, ints(&[1, 0, 1]));
        // (T - √2)(T + √2) = T^2 - 2
        let got = norm_polynomial_scaled(&ints(&[-2, 0, 1]), &[ints(&[0, -1]), ints(&[1])]);
        assert_eq!(got, ints(&[-2, 0, 1]));
    }
}
