//! Exact real-root counting with Sturm sequences.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::RatPoly;
use super::AlgebraError;

/// Endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Finite(BigRational),
}

impl Bound {
    pub fn finite(x: BigRational) -> Self {
        Bound::Finite(x)
    }
}

/// Signed remainder sequence `p0, p1, -rem(p0, p1), ...`.
pub(crate) fn remainder_sequence(p0: &RatPoly, p1: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p0.clone()];
    if p1.is_zero() {
        return seq;
    }
    seq.push(p1.clone());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_at(p: &RatPoly, at: &Bound) -> i8 {
    if p.is_zero() {
        return 0;
    }
    let s = match at {
        Bound::Finite(x) => {
            let v = p.eval(x);
            return if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
        }
        Bound::PosInf => 1,
        Bound::NegInf => {
            if p.deg().is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    };
    if p.leading().is_positive() {
        s
    } else {
        -s
    }
}

/// Number of sign changes in the sequence evaluated at `at`, zeros skipped.
pub(crate) fn variations(seq: &[RatPoly], at: &Bound) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let s = sign_at(p, at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of the squarefree polynomial `f` in
/// `(lo, hi]`.
pub fn sturm_real_roots(f: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize, AlgebraError> {
    if f.is_zero() || !f.is_squarefree() {
        return Err(AlgebraError::NotSquarefree);
    }
    if f.deg() == 0 {
        return Ok(0);
    }
    let empty = match (lo, hi) {
        (Bound::PosInf, _) | (_, Bound::NegInf) => true,
        (Bound::Finite(a), Bound::Finite(b)) => a >= b,
        _ => false,
    };
    if empty {
        return Ok(0);
    }
    let seq = remainder_sequence(f, &f.derivative());
    let (vl, vh) = (variations(&seq, lo), variations(&seq, hi));
    Ok(vl.saturating_sub(vh))
}

/// Count real roots of `f` (any polynomial) after making it squarefree.
pub fn count_distinct_real_roots(f: &RatPoly) -> usize {
    if f.is_zero() {
        return 0;
    }
    sturm_real_roots(&f.squarefree_part(), &Bound::NegInf, &Bound::PosInf)
        .expect("squarefree part is squarefree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    fn fin(n: i64) -> Bound {
        Bound::Finite(BigRational::from_integer(n.into()))
    }

    #[test]
    fn whole_line() {
        assert_eq!(
            sturm_real_roots(&rp(&[-2, 0, 1]), &Bound::NegInf, &Bound::PosInf),
            Ok(2)
        );
        assert_eq!(
            sturm_real_roots(&rp(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf),
            Ok(0)
        );
    }

    #[test]
    fn half_open_interval() {
        let f = rp(&[0, -1, 0, 1]);
        assert_eq!(sturm_real_roots(&f, &fin(0), &fin(2)), Ok(1));
        assert_eq!(sturm_real_roots(&f, &fin(-1), &fin(0)), Ok(1));
        assert_eq!(sturm_real_roots(&f, &fin(-2), &fin(1)), Ok(3));
        assert_eq!(sturm_real_roots(&f, &fin(2), &fin(-2)), Ok(0));
    }

    #[test]
    fn rejects_repeated_roots() {
        assert_eq!(
            sturm_real_roots(&rp(&[1, 2, 1]), &Bound::NegInf, &Bound::PosInf),
            Err(AlgebraError::NotSquarefree)
        );
        assert_eq!(count_distinct_real_roots(&rp(&[1, 2, 1])), 1);
    }
}
