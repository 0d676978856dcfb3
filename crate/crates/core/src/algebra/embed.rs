//! Exact comparison of `|z|²` against a rational for all complex roots of a
//! rational polynomial.
//!
//! Two tools are used. Roots on the circle `|z|² = c` are detected through the
//! trace polynomial of `z + c/z`, whose roots must be real and bounded by
//! `2√c`. Roots off the circle are counted by squaring the roots (so the
//! radius becomes the rational `c`), mapping the disc to the left half-plane
//! and evaluating a Cauchy index with a Sturm remainder sequence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::numfield::FieldElement;
use super::poly::{interpolate, resultant, RatPoly};
use super::sturm::{remainder_sequence, sturm_real_roots, variations, Bound};

/// Outcome of comparing `max_ι |ι(a)|²` with a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddingBound {
    AllBelow,
    Equal,
    SomeAbove,
}

impl EmbeddingBound {
    /// `|ι(a)|² ≤ bound` for every embedding.
    pub fn within(self) -> bool {
        self != EmbeddingBound::SomeAbove
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Characteristic polynomial of `z + c/z` over the roots `z` of the monic
/// polynomial `m`, assuming `m(0) ≠ 0`.
pub fn trace_polynomial(m: &RatPoly, c: &BigRational) -> RatPoly {
    let m = m.monic();
    let d = m.deg();
    let m0 = m.coeff(0);
    let pts: Vec<_> = (0..=d as i64)
        .map(|s| {
            let s = rat(s);
            // z² - s·z + c
            let quad = RatPoly::new(vec![c.clone(), -s.clone(), BigRational::one()]);
            (s, resultant(&m, &quad) / &m0)
        })
        .collect();
    interpolate(&pts)
}

/// `U ↦ ∏ (U - β_i²)` for the roots `β_i` of `r`, up to a sign.
fn squared_roots(r: &RatPoly) -> RatPoly {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, c) in r.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    let e = RatPoly::new(even);
    let o = RatPoly::new(odd);
    // r(S)·r(-S) = E(S²)² - S²·O(S²)²
    let u = RatPoly::x();
    &(&e * &e) - &(&u * &(&o * &o))
}

/// `true` iff every complex root `z` of `m` has `|z|² = c` (`c > 0`).
///
/// Checks the functional equation `T^d m(c/T) = m(0) m(T)` and then that the
/// roots of the trace polynomial are real with `β² ≤ 4c`.
pub fn all_roots_on_circle(m: &RatPoly, c: &BigRational) -> bool {
    if m.is_zero() || !c.is_positive() {
        return false;
    }
    let m = m.monic();
    if m.deg() == 0 {
        return true;
    }
    let m0 = m.coeff(0);
    if m0.is_zero() {
        return false;
    }
    if m.reflect(c) != m.scale(&m0) {
        return false;
    }
    let r = trace_polynomial(&m, c).squarefree_part();
    let real = sturm_real_roots(&r, &Bound::NegInf, &Bound::PosInf).expect("squarefree");
    if real != r.deg() {
        return false;
    }
    let s = squared_roots(&r).squarefree_part();
    let four_c = c * rat(4);
    sturm_real_roots(&s, &Bound::Finite(four_c), &Bound::PosInf).expect("squarefree") == 0
}

/// Number of roots of `h` (counted with multiplicity) in the open right
/// half-plane; `h` must have real coefficients and no roots on the imaginary
/// axis.
fn right_half_plane_roots(h: &RatPoly) -> usize {
    let m = h.deg();
    // h(iy) = A(y) + i·B(y)
    let mut a = vec![BigRational::zero(); m + 1];
    let mut b = vec![BigRational::zero(); m + 1];
    for (k, c) in h.coeffs().iter().enumerate() {
        let sign = if (k / 2) % 2 == 0 {
            c.clone()
        } else {
            -c.clone()
        };
        if k % 2 == 0 {
            a[k] = sign;
        } else {
            b[k] = sign;
        }
    }
    let a = RatPoly::new(a);
    let b = RatPoly::new(b);
    // Cauchy index of B/A over the real line.
    let index: i64 = if a.is_zero() {
        0
    } else {
        let seq = remainder_sequence(&a, &b);
        variations(&seq, &Bound::NegInf) as i64 - variations(&seq, &Bound::PosInf) as i64
    };
    // arctan(B/A) contributes only when B dominates A at infinity.
    let tail: i64 =
        if !b.is_zero() && !a.is_zero() && b.deg() > a.deg() && (b.deg() - a.deg()) % 2 == 1 {
            if (b.leading() * a.leading()).is_positive() {
                1
            } else {
                -1
            }
        } else {
            0
        };
    let left_minus_right = -index + tail;
    ((m as i64 - left_minus_right) / 2) as usize
}

/// Number of roots of `r` (with multiplicity) with `|z|² > c`, given that no
/// root satisfies `|z|² = c` and `c > 0`.
pub fn roots_outside(r: &RatPoly, c: &BigRational) -> usize {
    if r.deg() == 0 {
        return 0;
    }
    // u = z² keeps |u| > c ⟺ |z|² > c.
    let q = squared_roots(r);
    let m = q.deg();
    // h(s) = (1-s)^m q(c(1+s)/(1-s)); |u| < c ⟺ Re s < 0.
    let one_plus = RatPoly::from_i64s(&[1, 1]);
    let one_minus = RatPoly::from_i64s(&[1, -1]);
    let mut h = RatPoly::zero();
    let mut cpow = BigRational::one();
    for k in 0..=m {
        let term = &one_plus.pow(k as u32) * &one_minus.pow((m - k) as u32);
        h = &h + &term.scale(&(q.coeff(k) * &cpow));
        cpow *= c;
    }
    right_half_plane_roots(&h)
}

/// Compare `max_ι |ι(a)|²` with `c0_sq`.
pub fn max_abs_embedding(a: &FieldElement, c0_sq: &BigRational) -> EmbeddingBound {
    compare_root_moduli(&a.charpoly(), c0_sq)
}

/// Compare the largest `|z|²` over the roots of `m` with `c`.
pub fn compare_root_moduli(m: &RatPoly, c: &BigRational) -> EmbeddingBound {
    let s = m.squarefree_part();
    if s.deg() == 0 {
        return EmbeddingBound::AllBelow;
    }
    if !c.is_positive() {
        // Only z = 0 can meet a bound of 0.
        let only_zero = s.deg() == 1 && s.coeff(0).is_zero();
        return if c.is_zero() && only_zero {
            EmbeddingBound::Equal
        } else {
            EmbeddingBound::SomeAbove
        };
    }
    let d = s.gcd(&s.reflect(c));
    let mut rest = s.clone();
    if d.deg() > 0 {
        if !all_roots_on_circle(&d, c) {
            // Roots of d pair up as z, c/z, so one of each pair is outside.
            return EmbeddingBound::SomeAbove;
        }
        rest = s.divmod(&d).expect("nonzero").0;
    }
    if roots_outside(&rest, c) > 0 {
        EmbeddingBound::SomeAbove
    } else if d.deg() > 0 {
        EmbeddingBound::Equal
    } else {
        EmbeddingBound::AllBelow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numfield::NumberField;
    use crate::algebra::poly::IntPoly;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn half_plane_counts() {
        assert_eq!(right_half_plane_roots(&rp(&[1, 1])), 0);
        assert_eq!(right_half_plane_roots(&rp(&[-1, 1])), 1);
        assert_eq!(right_half_plane_roots(&rp(&[1, 2, 1])), 0);
        // (s-1)(s+2)(s-3)
        let h = &(&rp(&[-1, 1]) * &rp(&[2, 1])) * &rp(&[-3, 1]);
        assert_eq!(right_half_plane_roots(&h), 2);
        // s^2 - 2s + 5, roots 1 ± 2i
        assert_eq!(right_half_plane_roots(&rp(&[5, -2, 1])), 2);
        // s^2 - 1
        assert_eq!(right_half_plane_roots(&rp(&[-1, 0, 1])), 1);
    }

    #[test]
    fn outside_counts() {
        // roots 3, 1/2, 2i with c = 2
        let r = &(&rp(&[-3, 1]) * &rp(&[-1, 2])) * &rp(&[4, 0, 1]);
        assert_eq!(roots_outside(&r, &rat(2)), 3);
        assert_eq!(roots_outside(&r, &rat(5)), 1);
        assert_eq!(roots_outside(&r, &rat(10)), 0);
    }

    #[test]
    fn circle_test() {
        assert!(all_roots_on_circle(&rp(&[2048, 24, 1]), &rat(2048)));
        assert!(!all_roots_on_circle(&rp(&[2, -3, 1]), &rat(2)));
        assert!(all_roots_on_circle(&rp(&[-1, 1]), &rat(1)));
        assert!(all_roots_on_circle(&rp(&[4, 0, 1]), &rat(4)));
        // real roots ±2 with c=4 are on the circle
        assert!(all_roots_on_circle(&rp(&[-4, 0, 1]), &rat(4)));
    }

    #[test]
    fn embeddings() {
        let q = NumberField::rationals();
        assert_eq!(
            max_abs_embedding(&FieldElement::from_i64(&q, 3), &rat(10)),
            EmbeddingBound::AllBelow
        );
        let qi = NumberField::new(IntPoly::from_i64s(&[1, 0, 1])).unwrap();
        let one_plus_i = FieldElement::new(&qi, vec![rat(1), rat(1)]).unwrap();
        assert_eq!(
            max_abs_embedding(&one_plus_i, &rat(2)),
            EmbeddingBound::Equal
        );
        let qs2 = NumberField::new(IntPoly::from_i64s(&[-2, 0, 1])).unwrap();
        assert_eq!(
            max_abs_embedding(&FieldElement::generator(&qs2), &rat(1)),
            EmbeddingBound::SomeAbove
        );
        // √2 against 2: both embeddings on the circle
        assert_eq!(
            max_abs_embedding(&FieldElement::generator(&qs2), &rat(2)),
            EmbeddingBound::Equal
        );
        // 1 + √2 against 2: one embedding (2.414) outside, reflected pair absent
        let x = FieldElement::new(&qs2, vec![rat(1), rat(1)]).unwrap();
        assert_eq!(max_abs_embedding(&x, &rat(6)), EmbeddingBound::AllBelow);
        assert_eq!(max_abs_embedding(&x, &rat(5)), EmbeddingBound::SomeAbove);
        assert_eq!(
            max_abs_embedding(&FieldElement::zero(&q), &rat(0)),
            EmbeddingBound::Equal
        );
    }
}
