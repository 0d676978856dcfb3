//! Exact evaluation of the explicit constants `C`, `C′`, `C̃`, `C₁`, `C̃₁`
//! and comparison of a prime against them, all in integer arithmetic.
//!
//! Every constant has the shape `max{β, R^{a/d}}` with integers `β` (absent
//! for `C₁`, `C̃₁`), `R`, `a`, `d`. Then `ℓ > R^{a/d} ⟺ ℓ^d > R^a`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use thiserror::Error;

use crate::algebra::arith::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `max{e²b+1, (2·binom(n,[n/2])·q^{nb})^{[E:Q]/f}}`
    CMain,
    /// `max{e²b+1, (2·binom(n,[n/2])·q^{nb[K:Q]/[K_v:Q_q]})^{[E:Q]/f}}`
    CPrime,
    /// `max{e²b+1, 2·binom(n,[n/2])·q^{nb}}`
    CTilde,
    /// `(2·binom(n,[n/2])·q^{w/2})^{[E:Q]/f}`
    C1,
    /// `2·binom(n,[n/2])·q^{w/2}`
    C1Tilde,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::CMain => "C",
            BoundKind::CPrime => "C'",
            BoundKind::CTilde => "C~",
            BoundKind::C1 => "C1",
            BoundKind::C1Tilde => "C1~",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("parameter `{0}` must be positive")]
    NonPositive(&'static str),
    #[error("exponent n·b·[K:Q]/[K_v:Q_q] = {num}/{den} is not integral after clearing 2f")]
    NonIntegralExponent { num: u64, den: u64 },
}

/// Raw parameters; which ones are required depends on the kind.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoundParams {
    /// `[E:Q]`
    pub e_deg: Option<u64>,
    /// `f_λ`
    pub f: Option<u64>,
    pub n: Option<u64>,
    /// Hodge–Tate bound `b`.
    pub b: Option<u64>,
    /// Weight cap `w` for `C₁`, `C̃₁`.
    pub w: Option<u64>,
    /// Ramification bound `e`.
    pub e: Option<u64>,
    pub q: Option<u64>,
    /// `[K:Q]` for `C′`.
    pub k_deg: Option<u64>,
    /// `[K_v:Q_q]` for `C′`.
    pub kv_deg: Option<u64>,
}

impl BoundParams {
    pub fn ctilde(n: u64, b: u64, e: u64, q: u64) -> Self {
        Self {
            n: Some(n),
            b: Some(b),
            e: Some(e),
            q: Some(q),
            ..Self::default()
        }
    }

    pub fn cmain(e_deg: u64, f: u64, n: u64, b: u64, e: u64, q: u64) -> Self {
        Self {
            e_deg: Some(e_deg),
            f: Some(f),
            ..Self::ctilde(n, b, e, q)
        }
    }

    pub fn c1(e_deg: u64, f: u64, n: u64, w: u64, q: u64) -> Self {
        Self {
            e_deg: Some(e_deg),
            f: Some(f),
            n: Some(n),
            w: Some(w),
            q: Some(q),
            ..Self::default()
        }
    }

    pub fn c1tilde(n: u64, w: u64, q: u64) -> Self {
        Self {
            n: Some(n),
            w: Some(w),
            q: Some(q),
            ..Self::default()
        }
    }
}

/// Normalized constant `max{branch1, radicand^{num/den}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundExpr {
    kind: BoundKind,
    params: BoundParams,
    branch1: Option<BigUint>,
    radicand: BigUint,
    num: u64,
    den: u64,
}

/// Integer summary of a constant's value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Threshold {
    /// `⌈B⌉`.
    pub ceil: BigUint,
    /// `B` is an integer.
    pub exact: bool,
}

impl Threshold {
    /// Largest integer that does not exceed the constant, so that
    /// `ℓ > B ⟺ ℓ > floor`.
    pub fn floor(&self) -> BigUint {
        if self.exact {
            self.ceil.clone()
        } else {
            &self.ceil - 1u32
        }
    }
}

fn need(v: Option<u64>, name: &'static str) -> Result<u64, BoundError> {
    v.ok_or(BoundError::MissingParam(name))
}

fn positive(v: Option<u64>, name: &'static str) -> Result<u64, BoundError> {
    match need(v, name)? {
        0 => Err(BoundError::NonPositive(name)),
        x => Ok(x),
    }
}

fn pow(base: &BigUint, e: u64) -> BigUint {
    num_traits::pow(base.clone(), e as usize)
}

pub fn make_bound(kind: BoundKind, params: &BoundParams) -> Result<BoundExpr, BoundError> {
    let n = positive(params.n, "n")?;
    let q = positive(params.q, "q")?;
    if q < 2 {
        return Err(BoundError::NonPositive("q"));
    }
    let qb = BigUint::from(q);
    let two_binom = binomial(n, n / 2) * 2u32;
    let branch1 = |params: &BoundParams| -> Result<BigUint, BoundError> {
        let e = positive(params.e, "e")?;
        let b = need(params.b, "b")?;
        Ok(BigUint::from(e) * e * b + 1u32)
    };
    let (branch1, radicand, num, den) = match kind {
        BoundKind::CTilde => {
            let b = need(params.b, "b")?;
            let r = &two_binom * pow(&qb, n * b);
            (Some(branch1(params)?), r, 1, 1)
        }
        BoundKind::CMain => {
            let b = need(params.b, "b")?;
            let ed = positive(params.e_deg, "edeg")?;
            let f = positive(params.f, "f")?;
            let r = &two_binom * pow(&qb, n * b);
            (Some(branch1(params)?), r, ed, f)
        }
        BoundKind::CPrime => {
            let b = need(params.b, "b")?;
            let ed = positive(params.e_deg, "edeg")?;
            let f = positive(params.f, "f")?;
            let kd = positive(params.k_deg, "kdeg")?;
            let kv = positive(params.kv_deg, "kvdeg")?;
            if (n * b * kd * 2 * f) % kv != 0 {
                return Err(BoundError::NonIntegralExponent {
                    num: n * b * kd,
                    den: kv,
                });
            }
            // (2·binom·q^{nbK/Kv})^{E/f} = ((2·binom)^{Kv}·q^{nbK})^{E/(f·Kv)}
            let r = pow(&two_binom, kv) * pow(&qb, n * b * kd);
            (Some(branch1(params)?), r, ed, f * kv)
        }
        BoundKind::C1 => {
            let w = need(params.w, "w")?;
            let ed = positive(params.e_deg, "edeg")?;
            let f = positive(params.f, "f")?;
            // (2·binom·q^{w/2})^{E/f} = (4·binom²·q^w)^{E/(2f)}
            let r = &two_binom * &two_binom * pow(&qb, w);
            (None, r, ed, 2 * f)
        }
        BoundKind::C1Tilde => {
            let w = need(params.w, "w")?;
            let r = &two_binom * &two_binom * pow(&qb, w);
            (None, r, 1, 2)
        }
    };
    let g = num.gcd(&den);
    let (mut radicand, mut num, mut den) = (radicand, num / g, den / g);
    // Pull perfect powers out of the radicand so exact values print exactly.
    if den > 1 {
        let r = radicand.nth_root(den as u32);
        if pow(&r, den) == radicand {
            radicand = r;
            den = 1;
        }
    }
    if num > 1 && den == 1 {
        radicand = pow(&radicand, num);
        num = 1;
    }
    Ok(BoundExpr {
        kind,
        params: params.clone(),
        branch1,
        radicand,
        num,
        den,
    })
}

impl BoundExpr {
    pub fn kind(&self) -> BoundKind {
        self.kind
    }

    pub fn params(&self) -> &BoundParams {
        &self.params
    }

    /// `e²b + 1` when the constant has that branch.
    pub fn branch1(&self) -> Option<&BigUint> {
        self.branch1.as_ref()
    }

    /// Second branch as `(radicand, num, den)` meaning `radicand^{num/den}`.
    pub fn branch2(&self) -> (&BigUint, u64, u64) {
        (&self.radicand, self.num, self.den)
    }

    fn branch2_exceeded_by(&self, x: &BigUint) -> bool {
        pow(x, self.den) > pow(&self.radicand, self.num)
    }

    /// `ℓ > B`, exactly.
    pub fn exceeded_by(&self, ell: &BigUint) -> bool {
        self.branch1.as_ref().is_none_or(|b1| ell > b1) && self.branch2_exceeded_by(ell)
    }

    pub fn threshold(&self) -> Threshold {
        let target = pow(&self.radicand, self.num);
        let root = target.nth_root(self.den as u32);
        let exact2 = pow(&root, self.den) == target;
        match &self.branch1 {
            Some(b1) if exact2 => Threshold {
                ceil: b1.max(&root).clone(),
                exact: true,
            },
            Some(b1) if *b1 > root => Threshold {
                ceil: b1.clone(),
                exact: true,
            },
            _ if exact2 => Threshold {
                ceil: root,
                exact: true,
            },
            _ => Threshold {
                ceil: root + 1u32,
                exact: false,
            },
        }
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b2 = match (self.num, self.den) {
            (1, 1) => self.radicand.to_string(),
            (a, 1) => format!("{}^{a}", self.radicand),
            (a, d) => format!("{}^({a}/{d})", self.radicand),
        };
        match &self.branch1 {
            Some(b1) => write!(f, "{} = max{{{b1}, {b2}}}", self.kind.name()),
            None => write!(f, "{} = {b2}", self.kind.name()),
        }
    }
}

/// `ℓ > B`.
pub fn exceeds(ell: u128, b: &BoundExpr) -> bool {
    b.exceeded_by(&BigUint::from(ell))
}

pub fn threshold_value(b: &BoundExpr) -> Threshold {
    b.threshold()
}

/// `2·binom(n, [n/2])` as used by every constant.
pub fn two_central_binomial(n: u64) -> BigUint {
    binomial(n, n / 2) * 2u32
}

/// The constant `4·q^{2(k-1)}` of the weight-`k` audit as an integer.
pub fn eisenstein_audit_threshold(q: u64, k: u64) -> BigUint {
    BigUint::from(4u32) * pow(&BigUint::from(q), 2 * (k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u128) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn ctilde_matches_audit_constant() {
        let b = make_bound(BoundKind::CTilde, &BoundParams::ctilde(2, 11, 1, 2)).unwrap();
        assert_eq!(b.branch1(), Some(&big(12)));
        assert_eq!(
            b.threshold(),
            Threshold {
                ceil: big(16777216),
                exact: true
            }
        );
        assert!(exceeds(16777259, &b));
        assert!(!exceeds(691, &b));
        assert!(!exceeds(16777216, &b));
        assert!(exceeds(16777217, &b));
    }

    #[test]
    fn small_constants() {
        let b = make_bound(BoundKind::C1Tilde, &BoundParams::c1tilde(1, 0, 5)).unwrap();
        assert_eq!(b.threshold().ceil, big(2));
        let b = make_bound(BoundKind::CMain, &BoundParams::cmain(2, 1, 2, 1, 2, 3)).unwrap();
        assert_eq!(b.threshold().ceil, big(1296));
        assert_eq!(b.branch1(), Some(&big(5)));
        let b = make_bound(BoundKind::C1, &BoundParams::c1(2, 1, 2, 2, 2)).unwrap();
        assert_eq!(b.threshold().ceil, big(64));
        assert!(exceeds(67, &b));
        assert!(!exceeds(61, &b));
    }

    #[test]
    fn irrational_values() {
        // C1~ with n = 1, w = 1, q = 2 is 2·√2
        let b = make_bound(BoundKind::C1Tilde, &BoundParams::c1tilde(1, 1, 2)).unwrap();
        let t = b.threshold();
        assert_eq!(
            t,
            Threshold {
                ceil: big(3),
                exact: false
            }
        );
        assert_eq!(t.floor(), big(2));
        assert!(exceeds(3, &b));
        assert!(!exceeds(2, &b));
    }

    #[test]
    fn cprime_exponent_checks() {
        let mut p = BoundParams::cmain(1, 1, 2, 1, 1, 2);
        p.k_deg = Some(2);
        p.kv_deg = Some(3);
        assert!(matches!(
            make_bound(BoundKind::CPrime, &p),
            Err(BoundError::NonIntegralExponent { .. })
        ));
        p.kv_deg = Some(2);
        let b = make_bound(BoundKind::CPrime, &p).unwrap();
        let c = make_bound(BoundKind::CMain, &BoundParams::cmain(1, 1, 2, 1, 1, 2)).unwrap();
        assert_eq!(b.threshold(), c.threshold());
        // n·b·[K:Q]/[K_v:Q_q] = 1/2 is accepted once 2f clears it
        let mut p = BoundParams::cmain(1, 1, 1, 1, 1, 2);
        p.k_deg = Some(1);
        p.kv_deg = Some(2);
        let b = make_bound(BoundKind::CPrime, &p).unwrap();
        // max{2, 2·√2}
        assert_eq!(
            b.threshold(),
            Threshold {
                ceil: big(3),
                exact: false
            }
        );
    }

    #[test]
    fn missing_params() {
        assert_eq!(
            make_bound(BoundKind::CMain, &BoundParams::ctilde(2, 11, 1, 2)),
            Err(BoundError::MissingParam("edeg"))
        );
        assert_eq!(
            make_bound(BoundKind::C1Tilde, &BoundParams::default()),
            Err(BoundError::MissingParam("n"))
        );
    }
}
