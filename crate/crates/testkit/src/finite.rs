//! Brute-force arithmetic over `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{big_mod, pow_mod};

/// Roots in `F_p` of an integer polynomial (low to high) by trying all.
pub fn roots_mod_p(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let c: Vec<u64> = coeffs.iter().map(|x| big_mod(x, p)).collect();
    (0..p)
        .filter(|&x| {
            c.iter()
                .rev()
                .fold(0u128, |acc, &a| (acc * x as u128 + a as u128) % p as u128)
                == 0
        })
        .collect()
}

fn inv(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "not invertible");
    pow_mod(a, p - 2, p)
}

/// Characteristic polynomial over `F_p` (low to high, monic) by reduction to
/// upper Hessenberg form.
pub fn charpoly(mat: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = mat.len();
    let pm = p as u128;
    let mut h: Vec<Vec<u128>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| (x % p) as u128).collect())
        .collect();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let iv = inv(h[col + 1][col] as u64, p) as u128;
        for r in col + 2..n {
            let m = h[r][col] * iv % pm;
            if m == 0 {
                continue;
            }
            // row_r -= m·row_{col+1}, then col_{col+1} += m·col_r
            let (top, bottom) = h.split_at_mut(r);
            for (x, y) in bottom[0].iter_mut().zip(&top[col + 1]) {
                *x = (*x + pm - m * y % pm) % pm;
            }
            for row in h.iter_mut() {
                row[col + 1] = (row[col + 1] + m * row[r]) % pm;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (∏_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<Vec<u128>> = vec![vec![1]];
    for m in 0..n {
        let prev = &ps[m];
        let mut next = vec![0u128; m + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % pm;
            next[i] = (next[i] + pm - h[m][m] * c % pm) % pm;
        }
        let mut prod = 1u128;
        for i in (0..m).rev() {
            prod = prod * h[i + 1][i] % pm;
            let coef = h[i][m] * prod % pm;
            for (t, &c) in ps[i].iter().enumerate() {
                next[t] = (next[t] + pm - coef * c % pm) % pm;
            }
        }
        ps.push(next);
    }
    ps[n].iter().map(|&x| x as u64).collect()
}

/// `a / denom` reduced modulo `(p, m(α))`, where `a` is given by integer
/// coordinates in the power basis and `m` is monic; `None` if `p` divides
/// `denom`. Works for any prime size.
pub fn residue(a: &[BigInt], denom: &BigInt, m: &[BigInt], p: &BigInt) -> Option<Vec<BigInt>> {
    let md = |x: &BigInt| x.mod_floor(p);
    let dm = md(denom);
    if dm.is_zero() {
        return None;
    }
    let di = dm.modpow(&(p - 2), p);
    let mut r: Vec<BigInt> = a.iter().map(|x| md(&(md(x) * &di))).collect();
    let d = m.len() - 1;
    while r.len() > d {
        let lead = r.pop().unwrap();
        let shift = r.len() - d;
        for (i, c) in m[..d].iter().enumerate() {
            r[shift + i] = md(&(&r[shift + i] - &lead * c));
        }
    }
    r.resize(d, BigInt::zero());
    Some(r)
}

/// Matrix of multiplication by `a` on the basis `1, α, …, α^{d-1}` of
/// `Z[x]/(g)`, `g` monic; column `j` holds `a·α^j`.
pub fn regular_matrix(g: &[BigInt], a: &[BigInt]) -> Vec<Vec<BigInt>> {
    let d = g.len() - 1;
    let mut col: Vec<BigInt> = a.to_vec();
    col.resize(d, BigInt::from(0));
    let mut cols = Vec::with_capacity(d);
    for _ in 0..d {
        cols.push(col.clone());
        // multiply by α: shift up and reduce x^d = -Σ g_i x^i
        let top = col.pop().unwrap();
        col.insert(0, BigInt::from(0));
        for i in 0..d {
            col[i] -= &top * &g[i];
        }
    }
    (0..d)
        .map(|r| (0..d).map(|c| cols[c][r].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_roots() {
        let c: Vec<BigInt> = [1, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(roots_mod_p(&c, 5), [2, 3]);
        assert!(roots_mod_p(&c, 7).is_empty());
    }

    #[test]
    fn hessenberg_charpoly() {
        // [[1,2],[3,4]]: x² - 5x - 2
        assert_eq!(charpoly(&[vec![1, 2], vec![3, 4]], 7), [5, 2, 1]);
        let m = vec![
            vec![0, 0, 1, 2],
            vec![1, 0, 0, 3],
            vec![0, 1, 0, 1],
            vec![5, 0, 2, 0],
        ];
        // agree with the cofactor expansion det(xI - M) evaluated at x = 0..p
        let cp = charpoly(&m, 11);
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        assert_eq!(cp[3], 0); // trace
        let det0 = {
            // det(-M) = det(M) for even size; det(M) by permutations
            let perms = permutations(4);
            let mut s: i64 = 0;
            for (perm, sign) in perms {
                s += sign * (0..4).map(|i| m[i][perm[i]] as i64).product::<i64>();
            }
            s.rem_euclid(11) as u64
        };
        assert_eq!(cp[0], det0);
    }

    fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
        if n == 1 {
            return vec![(vec![0], 1)];
        }
        let mut out = Vec::new();
        for (p, s) in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                let sign = if (n - 1 - pos).is_multiple_of(2) {
                    s
                } else {
                    -s
                };
                out.push((q, sign));
            }
        }
        out
    }

    #[test]
    fn regular_representation() {
        // i in Z[i] acts by [[0,-1],[1,0]]
        let g: Vec<BigInt> = [1, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        let m = regular_matrix(&g, &[BigInt::from(0), BigInt::from(1)]);
        assert_eq!(
            m,
            vec![vec![0.into(), (-1).into()], vec![1.into(), 0.into()]]
        );
        assert_eq!(
            residue(
                &[3.into(), 1.into()],
                &1.into(),
                &[3.into(), 1.into()],
                &5.into()
            ),
            Some(vec![0.into()])
        );
    }
}
