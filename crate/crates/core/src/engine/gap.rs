//! Congruences between bounded algebraic integers: the norm argument, the
//! comparison of two Frobenius polynomials, and reduction of a residue
//! polynomial from `k_λ` down to `F_ℓ`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::algebra::embed::{max_abs_embedding, EmbeddingBound};
use crate::algebra::fp::FpPoly;
use crate::algebra::numfield::FieldElement;
use crate::algebra::prime::{divisible_by_ell, reduce_mod_lambda, PrimeIdeal, ResidueElem};
use crate::algebra::FactorOptions;
use crate::bounds::{make_bound, two_central_binomial, BoundExpr, BoundKind, BoundParams};
use crate::weil::{coefficient_weil_bound_check, weil_weights_lenient, CharPolyOverE};

use super::certificate::{first_failure, Certificate, CertificateInput, Step, StepStatus, Verdict};
use super::EngineError;

/// Congruence modulo the prime `λ`, or modulo `ℓO_E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceMode {
    ModLambda,
    ModEll,
}

impl fmt::Display for CongruenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ModLambda => "mod-lambda",
            Self::ModEll => "mod-ell",
        })
    }
}

/// Outcome of the norm argument `ℓ^f ≤ |N(a)| ≤ C0^{[E:Q]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormBoundReport {
    pub ell: u128,
    /// `f_λ` in mod-`λ` mode, `[E:Q]` in mod-`ℓ` mode.
    pub exponent: usize,
    pub field_degree: usize,
    pub norm_abs: BigInt,
    pub embedding: EmbeddingBound,
    /// `ℓ^exponent ≤ |N(a)|`.
    pub lower_holds: bool,
    /// `|N(a)|² ≤ C0²^{[E:Q]}`.
    pub upper_holds: bool,
    /// `ℓ^{2·exponent} ≤ C0²^{[E:Q]}`, i.e. `ℓ ≤ C0^{[E:Q]/exponent}`.
    pub conclusion_holds: bool,
    /// The conclusion holds with equality.
    pub tight: bool,
}

impl NormBoundReport {
    /// Every link of the chain was checked.
    pub fn certified(&self) -> bool {
        self.embedding.within() && self.lower_holds && self.upper_holds && self.conclusion_holds
    }
}

impl fmt::Display for NormBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = |b: bool| if b { "<=" } else { ">" };
        write!(
            f,
            "{}^{} {} |N(a)| = {} {} C0^{}; ell <= C0^({}/{}) {}{}",
            self.ell,
            self.exponent,
            rel(self.lower_holds),
            self.norm_abs,
            rel(self.upper_holds),
            self.field_degree,
            self.field_degree,
            self.exponent,
            if self.conclusion_holds {
                "holds"
            } else {
                "fails"
            },
            if self.tight { " (tight)" } else { "" }
        )
    }
}

fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    num_traits::pow(x.clone(), e)
}

/// The norm argument for a nonzero algebraic integer `a` divisible by `λ`
/// (or by `ℓ`): checks `|ι(a)| ≤ C0` for every embedding and the chain
/// `ℓ^f ≤ |N(a)| ≤ C0^{[E:Q]}`.
pub fn norm_bound_lemma(
    a: &FieldElement,
    lambda: &PrimeIdeal,
    c0_sq: &BigRational,
    mode: CongruenceMode,
) -> Result<NormBoundReport, EngineError> {
    if a.field().gen_poly() != lambda.field().gen_poly() {
        return Err(EngineError::FieldMismatch);
    }
    if a.is_zero() {
        return Err(EngineError::ZeroElement);
    }
    if !a.is_integral() {
        return Err(EngineError::NotIntegral);
    }
    let ell = lambda.ell();
    let divisible = match mode {
        CongruenceMode::ModLambda => reduce_mod_lambda(a, lambda)?.is_zero(),
        CongruenceMode::ModEll => divisible_by_ell(a, ell)?,
    };
    if !divisible {
        return Err(EngineError::DivisibilityHypothesisFails);
    }
    let d = a.field().degree();
    let exponent = match mode {
        CongruenceMode::ModLambda => lambda.f(),
        CongruenceMode::ModEll => d,
    };
    let norm_abs = a.norm().abs().to_integer();
    let ell_r = BigRational::from_integer(BigInt::from(ell));
    let n_r = BigRational::from_integer(norm_abs.clone());
    let c0_pow = pow_rat(c0_sq, d);
    let ell_pow_sq = pow_rat(&ell_r, 2 * exponent);
    Ok(NormBoundReport {
        ell,
        exponent,
        field_degree: d,
        embedding: max_abs_embedding(a, c0_sq),
        lower_holds: pow_rat(&ell_r, exponent) <= n_r,
        upper_holds: &n_r * &n_r <= c0_pow,
        conclusion_holds: ell_pow_sq <= c0_pow,
        tight: ell_pow_sq == c0_pow,
        norm_abs,
    })
}

/// Coefficientwise reduction of `P` modulo `λ`.
pub fn reduce_charpoly_mod_lambda(
    p: &CharPolyOverE,
    lambda: &PrimeIdeal,
) -> Result<Vec<ResidueElem>, EngineError> {
    p.coeffs()
        .iter()
        .map(|c| reduce_mod_lambda(c, lambda).map_err(EngineError::from))
        .collect()
}

fn residue_poly_mul(a: &[ResidueElem], b: &[ResidueElem], m: &FpPoly) -> Vec<ResidueElem> {
    let mut out = vec![ResidueElem::zero(m); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// `(∏_σ σ(P̄))^{e_λ}` over `Gal(k_λ/F_ℓ)`: the `F_ℓ`-characteristic polynomial
/// of Frobenius on `T/ℓT` given the one on `T/λT`.
pub fn reduce_charpoly_mod_ell(pbar: &[ResidueElem], lambda: &PrimeIdeal) -> FpPoly {
    let m = lambda.residue_modulus();
    let ell = lambda.ell();
    let one = vec![ResidueElem::one(&m)];
    let mut conj: Vec<ResidueElem> = pbar.to_vec();
    let mut norm = one.clone();
    for _ in 0..lambda.f() {
        norm = residue_poly_mul(&norm, &conj, &m);
        conj = conj.iter().map(ResidueElem::frobenius).collect();
    }
    let mut out = one;
    for _ in 0..lambda.e() {
        out = residue_poly_mul(&out, &norm, &m);
    }
    let coeffs = out
        .iter()
        .map(|c| {
            let v = c.coords();
            debug_assert!(
                v.iter().skip(1).all(|&x| x == 0),
                "Galois-stable coefficient"
            );
            v[0]
        })
        .collect();
    FpPoly::new(ell, coeffs)
}

/// `P ≡ P2` coefficientwise in the given mode.
pub fn charpolys_congruent(
    p: &CharPolyOverE,
    p2: &CharPolyOverE,
    lambda: &PrimeIdeal,
    mode: CongruenceMode,
) -> Result<bool, EngineError> {
    if p.degree() != p2.degree() {
        return Err(EngineError::DimensionMismatch {
            left: p.degree(),
            right: p2.degree(),
        });
    }
    for (a, b) in p.coeffs().iter().zip(p2.coeffs()) {
        let d = a.sub(b)?;
        let ok = match mode {
            CongruenceMode::ModLambda => reduce_mod_lambda(&d, lambda)?.is_zero(),
            CongruenceMode::ModEll => divisible_by_ell(&d, lambda.ell())?,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(2·binom(n, [n/2]))²·q^w`, the square of the coefficient bound for
/// degree-`n` polynomials whose weights sum to at most `w`.
pub fn coefficient_bound_sq(n: usize, q: u64, w: u64) -> BigRational {
    let b = BigInt::from(two_central_binomial(n as u64));
    let qw = num_traits::pow(BigInt::from(q), w as usize);
    BigRational::from_integer(&b * &b * qw)
}

/// Explains why congruent but distinct polynomials are possible, by running
/// the norm argument on the first differing coefficient.
pub(crate) fn diagnose_mismatch(
    p: &CharPolyOverE,
    p2: &CharPolyOverE,
    lambda: &PrimeIdeal,
    w: u64,
    mode: CongruenceMode,
) -> String {
    let Some(i) = (0..p.degree()).find(|&i| p.coeff(i) != p2.coeff(i)) else {
        return "polynomials agree".into();
    };
    let d = p.coeff(i).sub(p2.coeff(i)).expect("same field");
    let c0_sq = coefficient_bound_sq(p.degree(), p.q(), w);
    match norm_bound_lemma(&d, lambda, &c0_sq, mode) {
        Err(EngineError::NotIntegral) => format!(
            "coefficients of T^{i} differ by {d}, which is not an algebraic integer: E-integrality fails"
        ),
        Ok(r) if !r.embedding.within() => format!(
            "coefficients of T^{i} differ by {d}, which has an embedding above the Weil coefficient bound"
        ),
        Ok(r) => format!("coefficients of T^{i} differ by {d}; norm chain {r}"),
        Err(e) => format!("coefficients of T^{i} differ by {d}: {e}"),
    }
}

/// `Σ` of the Weil weights in the `E_λ`-linear view.
fn sigma_over_e(p: &CharPolyOverE, opts: &FactorOptions) -> Result<BigRational, String> {
    let w = weil_weights_lenient(p, opts).map_err(|e| e.to_string())?;
    Ok(BigRational::new(
        BigInt::from(w.sigma()),
        BigInt::from(w.field_degree()),
    ))
}

fn weil_step(
    index: usize,
    name: &str,
    p: &CharPolyOverE,
    w_cap: u32,
    opts: &FactorOptions,
) -> Step {
    let mut s = Step::new(
        index,
        "weil-type",
        format!("{name} has Weil roots with total weight at most {w_cap}"),
    );
    s.note("poly", p);
    s.note("e_integral", p.is_e_integral());
    match sigma_over_e(p, opts) {
        Err(e) => s.fail(e),
        Ok(sig) => {
            s.note("sigma", &sig);
            if sig > BigRational::from_integer(w_cap.into()) {
                s.fail(format!("weights sum to {sig} > {w_cap}"));
            } else if !coefficient_weil_bound_check(p, w_cap) {
                s.fail("a coefficient exceeds binom(n,i)*q^(w/2)");
            }
        }
    }
    s
}

pub(crate) fn bound_for_gap(
    n: usize,
    q: u64,
    w: u64,
    lambda: &PrimeIdeal,
    mode: CongruenceMode,
) -> Result<BoundExpr, EngineError> {
    Ok(match mode {
        CongruenceMode::ModLambda => make_bound(
            BoundKind::C1,
            &BoundParams::c1(
                lambda.field().degree() as u64,
                lambda.f() as u64,
                n as u64,
                w,
                q,
            ),
        )?,
        CongruenceMode::ModEll => {
            make_bound(BoundKind::C1Tilde, &BoundParams::c1tilde(n as u64, w, q))?
        }
    })
}

pub fn gap_principle(
    p: &CharPolyOverE,
    p2: &CharPolyOverE,
    lambda: &PrimeIdeal,
    w_cap: u32,
    mode: CongruenceMode,
) -> Result<Certificate, EngineError> {
    gap_principle_with(p, p2, lambda, w_cap, mode, &FactorOptions::default())
}

/// Two monic polynomials of Weil type with weights summing to at most
/// `w_cap`, congruent modulo a prime above the coefficient bound, must be
/// equal.
pub fn gap_principle_with(
    p: &CharPolyOverE,
    p2: &CharPolyOverE,
    lambda: &PrimeIdeal,
    w_cap: u32,
    mode: CongruenceMode,
    opts: &FactorOptions,
) -> Result<Certificate, EngineError> {
    if p.degree() != p2.degree() {
        return Err(EngineError::DimensionMismatch {
            left: p.degree(),
            right: p2.degree(),
        });
    }
    let gp = lambda.field().gen_poly();
    if p.field().gen_poly() != gp || p2.field().gen_poly() != gp {
        return Err(EngineError::FieldMismatch);
    }
    if p.q() != p2.q() {
        return Err(EngineError::DescriptorMismatch(format!(
            "q differs: {} vs {}",
            p.q(),
            p2.q()
        )));
    }
    let n = p.degree();
    let ell = lambda.ell();
    let mut steps = Vec::new();

    let bound = bound_for_gap(n, p.q(), w_cap as u64, lambda, mode)?;
    let mut s = Step::new(
        1,
        "bound",
        format!("ell = {ell} exceeds {}", bound.kind().name()),
    );
    s.note("bound", &bound);
    if !bound.exceeded_by(&ell.into()) {
        s.fail(format!("{ell} <= {bound}"));
    }
    steps.push(s);
    steps.push(weil_step(2, "P", p, w_cap, opts));
    steps.push(weil_step(3, "P'", p2, w_cap, opts));

    let mut s = Step::new(4, "congruence", format!("P and P' agree {mode}"));
    match charpolys_congruent(p, p2, lambda, mode) {
        Ok(true) => {}
        Ok(false) => s.fail("some coefficient differs"),
        Err(e) => s.fail(e),
    }
    steps.push(s);

    let mut s = Step::new(5, "equality", "P = P'");
    let verdict = if let Some(f) = first_failure(&steps) {
        s.status = StepStatus::Skipped;
        Verdict::Inapplicable {
            step: f.index,
            reason: f.reason().unwrap_or("failed").to_string(),
        }
    } else if p == p2 {
        Verdict::Concluded("P = P'".into())
    } else {
        let diagnosis = diagnose_mismatch(p, p2, lambda, w_cap as u64, mode);
        s.fail(&diagnosis);
        Verdict::Contradiction { step: 5, diagnosis }
    };
    steps.push(s);

    Ok(Certificate {
        title: format!("gap principle {mode} at {lambda}"),
        input: CertificateInput::Gap {
            p: p.clone(),
            p2: p2.clone(),
            lambda: lambda.clone(),
            w_cap,
            mode,
        },
        steps,
        verdict,
        options: *opts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numfield::NumberField;
    use crate::algebra::poly::IntPoly;
    use crate::algebra::prime::primes_above;
    use std::sync::Arc;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn field(c: &[i64]) -> Arc<NumberField> {
        NumberField::new(IntPoly::from_i64s(c)).unwrap()
    }

    fn cp(c: &[i64], q: u64) -> CharPolyOverE {
        CharPolyOverE::from_int_poly(&IntPoly::from_i64s(c), q).unwrap()
    }

    #[test]
    fn norm_lemma_examples() {
        let q = NumberField::rationals();
        let l7 = &primes_above(&q, 7).unwrap()[0];
        let r = norm_bound_lemma(
            &FieldElement::from_i64(&q, 7),
            l7,
            &rat(49),
            CongruenceMode::ModEll,
        )
        .unwrap();
        assert!(r.certified() && r.tight);

        let qi = field(&[1, 0, 1]);
        let l2 = &primes_above(&qi, 2).unwrap()[0];
        let a = FieldElement::new(&qi, vec![rat(1), rat(1)]).unwrap();
        let r = norm_bound_lemma(&a, l2, &rat(2), CongruenceMode::ModLambda).unwrap();
        assert!(r.certified());
        assert_eq!(r.norm_abs, BigInt::from(2));

        let l3 = &primes_above(&qi, 3).unwrap()[0];
        let r = norm_bound_lemma(
            &FieldElement::from_i64(&qi, 3),
            l3,
            &rat(9),
            CongruenceMode::ModLambda,
        )
        .unwrap();
        assert!(r.certified() && r.tight);
        assert_eq!(r.exponent, 2);

        assert_eq!(
            norm_bound_lemma(&FieldElement::zero(&q), l7, &rat(1), CongruenceMode::ModEll),
            Err(EngineError::ZeroElement)
        );
        assert_eq!(
            norm_bound_lemma(
                &FieldElement::from_i64(&q, 5),
                l7,
                &rat(100),
                CongruenceMode::ModEll
            ),
            Err(EngineError::DivisibilityHypothesisFails)
        );
    }

    #[test]
    fn gap_examples() {
        let q = NumberField::rationals();
        let p = cp(&[2048, 24, 1], 2);
        let big = &primes_above(&q, 16777259).unwrap()[0];
        let c = gap_principle(&p, &p, big, 22, CongruenceMode::ModEll).unwrap();
        assert_eq!(c.verdict, Verdict::Concluded("P = P'".into()));
        c.verify().unwrap();

        let l3 = &primes_above(&q, 3).unwrap()[0];
        let c = gap_principle(&p, &cp(&[2048, -24, 1], 2), l3, 22, CongruenceMode::ModEll).unwrap();
        assert!(matches!(c.verdict, Verdict::Inapplicable { step: 1, .. }));
        assert_eq!(c.failed_steps(), vec![1]);
        c.verify().unwrap();
    }

    #[test]
    fn lambda_to_ell() {
        let qi = field(&[1, 0, 1]);
        let l3 = &primes_above(&qi, 3).unwrap()[0];
        let m = l3.residue_modulus();
        // T - x over F_9
        let alpha = ResidueElem::new(&m, FpPoly::new(3, vec![0, 1]));
        let pbar = vec![alpha.neg(), ResidueElem::one(&m)];
        // (T - i)(T + i) = T^2 + 1
        assert_eq!(
            reduce_charpoly_mod_ell(&pbar, l3),
            FpPoly::new(3, vec![1, 0, 1])
        );

        let l2 = &primes_above(&qi, 2).unwrap()[0];
        let m2 = l2.residue_modulus();
        let pbar = vec![ResidueElem::one(&m2).neg(), ResidueElem::one(&m2)];
        assert_eq!(
            reduce_charpoly_mod_ell(&pbar, l2),
            FpPoly::new(2, vec![1, 0, 1])
        );
    }
}
