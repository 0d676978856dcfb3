//! Exhaustive enumeration of small monic integer polynomials whose roots are
//! all `q`-Weil numbers of integer weights, decided numerically.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arith::binomial;
use crate::numeric::{roots, PREC};

/// Weight `w ≤ w_cap` with `|α|² = q^w` to 30 digits, if any.
fn weight_of(abs_sq: &BigInt, q: u64, w_cap: u32) -> Option<u32> {
    (0..=w_cap).find(|&w| {
        let target = num_traits::pow(BigInt::from(q), w as usize) << PREC;
        (abs_sq - &target).abs() * num_traits::pow(BigInt::from(10), 30) < target
    })
}

/// Weights of the roots when every root is a Weil number of weight at most
/// `w_cap`.
pub fn weil_type(coeffs: &[BigInt], q: u64, w_cap: u32) -> Option<Vec<u32>> {
    let mut ws: Vec<u32> = roots(coeffs)
        .iter()
        .map(|r| weight_of(&r.abs_sq(), q, w_cap))
        .collect::<Option<_>>()?;
    ws.sort_unstable();
    Some(ws)
}

/// Double-precision Durand–Kerner, used only to discard polynomials that
/// are far from Weil type before the exact-precision check.
fn roughly_weil(coeffs: &[f64], q: f64, w_cap: u32) -> bool {
    let n = coeffs.len() - 1;
    let eval = |z: (f64, f64)| {
        coeffs.iter().rev().fold((0.0, 0.0), |(re, im), &c| {
            (re * z.0 - im * z.1 + c, re * z.1 + im * z.0)
        })
    };
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|j| {
            let t = 0.4 + 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            (radius * t.cos(), radius * t.sin())
        })
        .collect();
    for _ in 0..2000 {
        for i in 0..n {
            let mut den = (1.0, 0.0);
            for j in (0..n).filter(|&j| j != i) {
                let d = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
            }
            let num = eval(z[i]);
            let norm = den.0 * den.0 + den.1 * den.1;
            if norm == 0.0 {
                continue;
            }
            let step = (
                (num.0 * den.0 + num.1 * den.1) / norm,
                (num.1 * den.0 - num.0 * den.1) / norm,
            );
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
        }
    }
    z.iter().all(|&(re, im)| {
        let a = re * re + im * im;
        (0..=w_cap).any(|w| (a / q.powi(w as i32) - 1.0).abs() < 1e-3)
    })
}

/// Every monic degree-`n` integer polynomial (low to high) whose roots are
/// Weil numbers with weights summing to at most `w_cap`.
pub fn family(n: usize, q: u64, w_cap: u32) -> Vec<Vec<BigInt>> {
    // |c_{n-i}| ≤ C(n,i) q^{i·w_cap/2}, enlarged to an integer box
    let bounds: Vec<i64> = (0..n)
        .map(|j| {
            let i = (n - j) as u64;
            let b = binomial(n as u64, i)
                * num_traits::pow(BigInt::from(q), (i as usize * w_cap as usize).div_ceil(2));
            i64::try_from(b).expect("small box")
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    enumerate(&bounds, 0, &mut cur, &mut |c| {
        let mut approx: Vec<f64> = c.iter().map(|&x| x as f64).collect();
        approx.push(1.0);
        if !roughly_weil(&approx, q as f64, w_cap) {
            return;
        }
        let mut coeffs: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        coeffs.push(BigInt::from(1));
        if let Some(ws) = weil_type(&coeffs, q, w_cap) {
            if ws.iter().sum::<u32>() <= w_cap {
                out.push(coeffs);
            }
        }
    });
    out
}

fn enumerate(bounds: &[i64], i: usize, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if i == bounds.len() {
        f(cur);
        return;
    }
    for x in -bounds[i]..=bounds[i] {
        // a nonzero constant term is forced since roots have |α| ≥ 1
        if i == 0 && x == 0 {
            continue;
        }
        cur[i] = x;
        enumerate(bounds, i + 1, cur, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_family() {
        let got: Vec<i64> = family(1, 2, 2)
            .iter()
            .map(|c| i64::try_from(&c[0]).unwrap())
            .collect();
        assert_eq!(got, [-2, -1, 1, 2]);
    }

    #[test]
    fn quadratic_members() {
        let fam = family(2, 2, 2);
        let has = |c: [i64; 2]| {
            fam.iter()
                .any(|p| p[0] == BigInt::from(c[0]) && p[1] == BigInt::from(c[1]))
        };
        assert!(has([2, 2]));
        assert!(has([1, 0]));
        assert!(has([-2, 1]));
        assert!(!has([4, 0]));
    }
}
