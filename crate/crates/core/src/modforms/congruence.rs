//! Frobenius descriptors of eigenforms, congruences `a_p ≡ p^i + p^j` with
//! characters, and the audit of the large-prime exclusion result.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::arith::{factor_integer, is_prime, pow_mod, primes_up_to, totient};
use crate::algebra::numfield::FieldElement;
use crate::algebra::prime::{primes_above, PrimeIdeal};
use crate::bounds::{exceeds, make_bound, BoundKind, BoundParams};
use crate::engine::descriptor::{
    ht_over_ql, LocalDescriptorU, LocalDescriptorV, RepDescriptor, SemistableFlag,
};
use crate::tame::TameCharacter;
use crate::weil::CharPolyOverE;

use super::eigen::Eigenform;
use super::ModFormError;

/// `[SL_2(Z) : Γ_0(N)] = N ∏_{p | N} (1 + 1/p)`.
pub fn gamma0_index(n: u64) -> u64 {
    let mut idx = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            idx = idx / p * (p + 1);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        idx = idx / m * (m + 1);
    }
    idx
}

/// `⌈k·[SL_2(Z):Γ_0(N)]/12⌉`.
pub fn sturm_bound(k: u64, level: u64) -> u64 {
    (k * gamma0_index(level)).div_ceil(12)
}

/// Default scan range `max(50, 4·sturm)`.
pub fn default_p_max(k: u64, level: u64) -> u64 {
    (4 * sturm_bound(k, level)).max(50)
}

/// `ℓ² | n`; a square that overflows cannot divide a `u64`.
fn ell_sq_divides(n: u64, ell: u128) -> bool {
    ell.checked_mul(ell)
        .is_some_and(|sq| (n as u128).is_multiple_of(sq))
}

/// Descriptor of the `λ`-adic representation of `f` with Frobenius data at
/// the prime `q` and Hodge–Tate weights `{0, k-1}`.
pub fn frobenius_descriptor(
    f: &Eigenform,
    q: u64,
    lambda: &PrimeIdeal,
) -> Result<RepDescriptor, ModFormError> {
    let ell = lambda.ell();
    if !is_prime(q as u128) || f.level.is_multiple_of(q) || q as u128 == ell {
        return Err(ModFormError::BadPrime(format!(
            "q = {q} must be a prime not dividing ell*N"
        )));
    }
    if lambda.field().gen_poly() != f.field.gen_poly() {
        return Err(ModFormError::InvalidForm(
            "lambda is not a prime of the Hecke field".into(),
        ));
    }
    let a_q = f
        .ap(q)
        .ok_or_else(|| ModFormError::InsufficientCoefficients(format!("a_{q} is unknown")))?;
    let eps_q = f.eps_value(q).expect("q is prime to N");
    let qk = FieldElement::from_int(&f.field, num_traits::pow(BigInt::from(q), f.k as usize - 1));
    let charpoly = CharPolyOverE::new(
        &f.field,
        vec![eps_q.mul(&qk)?, a_q.neg(), FieldElement::one(&f.field)],
        q,
    )?;
    let flag = if !(f.level as u128).is_multiple_of(ell) {
        SemistableFlag::Crystalline
    } else if !ell_sq_divides(f.level, ell) {
        SemistableFlag::Semistable
    } else {
        return Err(ModFormError::BadPrime(format!(
            "ell^2 divides the level {}",
            f.level
        )));
    };
    let m = lambda.local_degree();
    let ordinary = f
        .ap(ell.to_u64().unwrap_or(0))
        .and_then(|a| lambda.reduce(a).ok())
        .is_some_and(|r| !r.is_zero());
    let mut tame_chars = Vec::new();
    for _ in 0..m {
        if ordinary {
            tame_chars.push(TameCharacter::from_u64(ell, 1, f.k - 1)?);
            tame_chars.push(TameCharacter::from_u64(ell, 1, 0)?);
        } else {
            tame_chars.push(TameCharacter::from_u64(ell, 2, f.k - 1)?);
        }
    }
    let at_v = LocalDescriptorV {
        q,
        charpoly,
        semistable_at_v: true,
    };
    let at_u = LocalDescriptorU {
        ell,
        e_u: 1,
        e_cap: 1,
        ht: ht_over_ql(&[0, f.k - 1], m),
        tame_chars,
        flag,
    };
    Ok(RepDescriptor::new(2, &f.field, f.k - 1, at_v, at_u)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetectMode {
    /// `(i, j) = (0, k-1)` at every prime found through norms.
    EisensteinScan,
    /// Every `(i, j)` modulo a fixed prime.
    FixedEll(u128),
}

/// `a_p ≡ p^i + p^j (mod λ)` for every checked prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub k: u64,
    pub i: u64,
    pub j: u64,
    pub lambda: PrimeIdeal,
    pub checked_primes: Vec<u64>,
    pub sturm: u64,
}

impl CongruenceWitness {
    pub fn ell(&self) -> u128 {
        self.lambda.ell()
    }
}

impl fmt::Display for CongruenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} ell={} i={} j={} lambda={} primes<={} sturm={}",
            self.k,
            self.ell(),
            self.i,
            self.j,
            self.lambda,
            self.checked_primes.last().copied().unwrap_or(0),
            self.sturm
        )
    }
}

/// `p^i + p^j mod ℓ`.
fn target(p: u64, i: u64, j: u64, ell: u128) -> u128 {
    let p = p as u128 % ell;
    (pow_mod(p, i as u128, ell) + pow_mod(p, j as u128, ell)) % ell
}

/// Coordinates of `a_p mod λ` for the checked primes, or `None` when some
/// `a_p` has `ℓ` in a denominator.
fn residues(f: &Eigenform, lambda: &PrimeIdeal, primes: &[u64]) -> Option<Vec<Vec<u128>>> {
    primes
        .iter()
        .map(|p| lambda.reduce(&f.ap[p]).ok().map(|r| r.coords()))
        .collect()
}

fn is_scalar(c: &[u128], t: u128) -> bool {
    c[0] == t && c[1..].iter().all(|&x| x == 0)
}

/// Searches for congruences with `p^i + p^j` at every prime `p ≤ p_max`
/// prime to `ℓN`. Witnesses are ordered by `(ℓ, λ, i, j)`.
pub fn detect_congruences(
    f: &Eigenform,
    mode: DetectMode,
    p_max: u64,
) -> Result<Vec<CongruenceWitness>, ModFormError> {
    let all_primes = primes_up_to(p_max);
    if let Some(p) = all_primes.iter().find(|p| !f.ap.contains_key(p)) {
        return Err(ModFormError::InsufficientCoefficients(format!(
            "a_{p} is unknown (p_max = {p_max})"
        )));
    }
    let sturm = sturm_bound(f.k, f.level);
    let checked = |ell: u128| -> Vec<u64> {
        all_primes
            .iter()
            .copied()
            .filter(|&p| p as u128 != ell && !f.level.is_multiple_of(p))
            .collect()
    };
    let mut out = Vec::new();
    match mode {
        DetectMode::EisensteinScan => {
            let mut candidates = eisenstein_candidates(f, &all_primes);
            candidates.extend(
                all_primes
                    .iter()
                    .map(|&p| p as u128)
                    .filter(|&p| p > f.k as u128),
            );
            candidates.sort_unstable();
            candidates.dedup();
            for ell in candidates {
                let primes = checked(ell);
                let Ok(lambdas) = primes_above(&f.field, ell) else {
                    continue;
                };
                for lambda in lambdas {
                    let Some(res) = residues(f, &lambda, &primes) else {
                        continue;
                    };
                    if primes
                        .iter()
                        .zip(&res)
                        .all(|(&p, r)| is_scalar(r, target(p, 0, f.k - 1, ell)))
                    {
                        out.push(CongruenceWitness {
                            k: f.k,
                            i: 0,
                            j: f.k - 1,
                            lambda,
                            checked_primes: primes.clone(),
                            sturm,
                        });
                    }
                }
            }
        }
        DetectMode::FixedEll(ell) => {
            if !is_prime(ell) {
                return Err(ModFormError::BadPrime(format!("{ell} is not prime")));
            }
            let primes = checked(ell);
            let top = (ell - 2) as u64;
            for lambda in primes_above(&f.field, ell)? {
                let Some(res) = residues(f, &lambda, &primes) else {
                    continue;
                };
                // p^i mod ℓ for every checked p and i ≤ ℓ - 2
                let powers: Vec<Vec<u128>> = primes
                    .iter()
                    .map(|&p| {
                        let mut v = Vec::with_capacity(top as usize + 1);
                        let mut x = 1u128;
                        for _ in 0..=top {
                            v.push(x);
                            x = x * (p as u128 % ell) % ell;
                        }
                        v
                    })
                    .collect();
                for i in 0..=top {
                    for j in i..=top {
                        let ok = res
                            .iter()
                            .zip(&powers)
                            .all(|(r, pw)| is_scalar(r, (pw[i as usize] + pw[j as usize]) % ell));
                        if ok {
                            out.push(CongruenceWitness {
                                k: f.k,
                                i,
                                j,
                                lambda: lambda.clone(),
                                checked_primes: primes.clone(),
                                sturm,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Prime divisors `ℓ > k` of `gcd_p |N(a_p - 1 - p^{k-1})|`.
fn eisenstein_candidates(f: &Eigenform, primes: &[u64]) -> Vec<u128> {
    let mut g = BigInt::zero();
    for &p in primes.iter().filter(|&&p| !f.level.is_multiple_of(p)) {
        let t = BigInt::from(1) + num_traits::pow(BigInt::from(p), f.k as usize - 1);
        let d = f.ap[&p]
            .sub(&FieldElement::from_int(&f.field, t))
            .expect("same field");
        let n = d.norm();
        // norms of algebraic integers are integers
        g = g.gcd(&n.numer().abs());
        if g.is_zero() {
            continue;
        }
        if g == BigInt::from(1) {
            return Vec::new();
        }
    }
    if g.is_zero() {
        return Vec::new();
    }
    let g: BigUint = g.to_biguint().expect("nonnegative");
    factor_integer(&g)
        .into_iter()
        .filter_map(|(p, _)| p.to_u128())
        .filter(|&p| p > f.k as u128)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuditOutcome {
    /// All gates passed and the conclusion holds.
    Consistent,
    /// The named gate failed, so nothing is claimed.
    Inapplicable { gate: &'static str },
    /// A verified witness violates a proven conclusion.
    Contradiction(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub gates: Vec<AuditCheck>,
    /// Consequences that hold whenever `ℓ > 2` and `ℓ ∤ φ(N)`.
    pub side_checks: Vec<AuditCheck>,
    pub outcome: AuditOutcome,
}

fn check(name: &'static str, holds: bool, detail: impl Into<String>) -> AuditCheck {
    AuditCheck {
        name,
        holds,
        detail: detail.into(),
    }
}

/// Audits a verified witness against the exclusion of Eisenstein-type
/// congruences for `ℓ > 4q^{2(k-1)}`, and against the constraints it puts
/// on the character.
pub fn audit_eisenstein_exclusion(
    w: &CongruenceWitness,
    f: &Eigenform,
    q: u64,
) -> Result<AuditReport, ModFormError> {
    let ell = w.ell();
    let n = f.level;
    let k = f.k;
    let phi = totient(n) as u128;
    let bound = make_bound(
        BoundKind::CTilde,
        &BoundParams::ctilde(2, k.saturating_sub(1), 1, q),
    )?;
    let gates = vec![
        check("q prime", is_prime(q as u128), format!("q = {q}")),
        check(
            "q does not divide N",
            !n.is_multiple_of(q),
            format!("N = {n}"),
        ),
        check(
            "ell does not divide phi(N)",
            !phi.is_multiple_of(ell),
            format!("phi(N) = {phi}"),
        ),
        check(
            "ell^2 does not divide N",
            !ell_sq_divides(n, ell),
            format!("N = {n}"),
        ),
        check(
            "ell exceeds the bound",
            exceeds(ell, &bound),
            format!("{ell} vs {bound}"),
        ),
    ];

    let mut side_checks = Vec::new();
    let (i, j) = (w.i as i128, w.j as i128);
    let m = ell as i128 - 1;
    if ell > 2 && !phi.is_multiple_of(ell) {
        let e = (i + j - (k as i128 - 1)).rem_euclid(m) as u128;
        let mut char_ok = true;
        for &(g, _) in f.eps.generators() {
            // a representative of g mod N that is prime to ℓ
            let rep = (0..ell as u64)
                .map(|t| g + t * n)
                .find(|x| !(*x as u128).is_multiple_of(ell))
                .expect("some shift is prime to ell");
            let lhs = f.eps.value(g).expect("generator is a unit");
            let lhs = w.lambda.reduce(&lhs)?;
            let rhs = pow_mod(rep as u128 % ell, e, ell);
            char_ok &= is_scalar(&lhs.coords(), rhs);
        }
        side_checks.push(check(
            "character matches x^(i+j-(k-1))",
            char_ok,
            format!("exponent {e} mod {m}"),
        ));
        if !(n as u128).is_multiple_of(ell) {
            let sum_ok = (i + j - (k as i128 - 1)).rem_euclid(m) == 0;
            side_checks.push(check(
                "i+j = k-1 mod ell-1",
                sum_ok,
                format!("{} = {} mod {m}", i + j, k - 1),
            ));
            let trivial = f.eps.generators().iter().all(|&(g, _)| {
                let v = f.eps.value(g).expect("unit");
                w.lambda
                    .reduce(&v)
                    .map(|r| is_scalar(&r.coords(), 1))
                    .unwrap_or(false)
            });
            side_checks.push(check("character is trivial mod ell", trivial, ""));
        }
    }

    let outcome = if let Some(s) = side_checks.iter().find(|s| !s.holds) {
        AuditOutcome::Contradiction(format!("side check failed: {}", s.name))
    } else if let Some(g) = gates.iter().find(|g| !g.holds) {
        AuditOutcome::Inapplicable { gate: g.name }
    } else if k == 1 || k.is_multiple_of(2) || !(n as u128).is_multiple_of(ell) {
        AuditOutcome::Contradiction(format!(
            "congruence ({}, {}) at ell = {ell} exists although it is excluded",
            w.i, w.j
        ))
    } else {
        let half = |x: i128| (2 * x - (k as i128 - 1)).rem_euclid(m) == 0;
        if half(i) && half(j) {
            AuditOutcome::Consistent
        } else {
            AuditOutcome::Contradiction(format!("i = {i}, j = {j} are not (k-1)/2 mod ell-1"))
        }
    };
    Ok(AuditReport {
        gates,
        side_checks,
        outcome,
    })
}
