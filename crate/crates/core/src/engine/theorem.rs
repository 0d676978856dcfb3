//! Step-by-step replay of the comparison argument for two representations
//! that are congruent at `u | ℓ`, ending in the gap principle at `v`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::prime::PrimeIdeal;
use crate::algebra::FactorOptions;
use crate::bounds::{make_bound, BoundExpr, BoundKind, BoundParams};
use crate::tame::ti_rep_multiset;
use crate::weil::weil_weights_lenient;

use super::certificate::{first_failure, Certificate, CertificateInput, Step, StepStatus, Verdict};
use super::descriptor::RepDescriptor;
use super::gap::{charpolys_congruent, diagnose_mismatch, CongruenceMode};
use super::validators::{caruso_validate, sigma_weights_over_ql, CarusoOutcome};
use super::EngineError;

/// Which statement to replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    /// Congruence mod `λ` forces equal Frobenius polynomials.
    SamePolynomial,
    /// Congruence mod `λ` forces equal Weil weights, without unramifiedness
    /// at `v`.
    SameWeights,
    /// Congruence mod `ℓ` with the field-independent constant.
    SamePolynomialModEll,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Self::SamePolynomial => "t11",
            Self::SameWeights => "t12",
            Self::SamePolynomialModEll => "t14",
        }
    }

    pub fn mode(self) -> CongruenceMode {
        match self {
            Self::SamePolynomialModEll => CongruenceMode::ModEll,
            _ => CongruenceMode::ModLambda,
        }
    }

    /// The constant `ℓ` has to exceed.
    pub fn bound(self, d: &RepDescriptor, lambda: &PrimeIdeal) -> Result<BoundExpr, EngineError> {
        let (n, b, e, q) = (d.n() as u64, d.b(), d.at_u().e_cap, d.q());
        Ok(match self {
            Self::SamePolynomialModEll => {
                make_bound(BoundKind::CTilde, &BoundParams::ctilde(n, b, e, q))?
            }
            _ => make_bound(
                BoundKind::CMain,
                &BoundParams::cmain(d.field().degree() as u64, lambda.f() as u64, n, b, e, q),
            )?,
        })
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "t11" => Ok(Self::SamePolynomial),
            "t12" => Ok(Self::SameWeights),
            "t14" => Ok(Self::SamePolynomialModEll),
            _ => Err(format!("unknown statement {s:?}; expected t11, t12 or t14")),
        }
    }
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn check_compatible(
    a: &RepDescriptor,
    b: &RepDescriptor,
    lambda: &PrimeIdeal,
) -> Result<(), EngineError> {
    let mismatch = |what: &str| Err(EngineError::DescriptorMismatch(what.to_string()));
    if a.n() != b.n() {
        return Err(EngineError::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.field().gen_poly() != b.field().gen_poly()
        || a.field().gen_poly() != lambda.field().gen_poly()
    {
        return Err(EngineError::FieldMismatch);
    }
    if a.b() != b.b() {
        return mismatch("Hodge-Tate bounds differ");
    }
    if a.at_u().e_cap != b.at_u().e_cap {
        return mismatch("ramification bounds differ");
    }
    if a.q() != b.q() {
        return mismatch("residue cardinalities q differ");
    }
    if a.ell() != b.ell() || a.ell() != lambda.ell() {
        return mismatch("descriptors and lambda lie above different primes");
    }
    Ok(())
}

pub fn run_theorem(
    left: &RepDescriptor,
    right: &RepDescriptor,
    lambda: &PrimeIdeal,
    which: Which,
    congruence_at_u_holds: bool,
) -> Result<Certificate, EngineError> {
    run_theorem_with(
        left,
        right,
        lambda,
        which,
        congruence_at_u_holds,
        &FactorOptions::default(),
    )
}

/// Replays the argument as six steps: the size of `ℓ`, the ramification
/// gate, agreement of tame data at `u`, the weight identity for both sides,
/// the weight cap, and the gap principle at `v`. Every step is evaluated so
/// that a certificate lists all failing gates; the verdict names the first.
pub fn run_theorem_with(
    left: &RepDescriptor,
    right: &RepDescriptor,
    lambda: &PrimeIdeal,
    which: Which,
    congruence_at_u_holds: bool,
    opts: &FactorOptions,
) -> Result<Certificate, EngineError> {
    check_compatible(left, right, lambda)?;
    let ell = lambda.ell();
    let (n, b, e_cap) = (left.n() as u64, left.b(), left.at_u().e_cap);
    let m = lambda.local_degree();
    let mut steps = Vec::with_capacity(6);

    // 1. ℓ > C
    let bound = which.bound(left, lambda)?;
    let mut s = Step::new(
        1,
        "bound",
        format!("ell = {ell} exceeds {}", bound.kind().name()),
    );
    s.note("bound", &bound);
    s.note("threshold", bound.threshold().floor());
    if !bound.exceeded_by(&ell.into()) {
        s.fail(format!("{ell} <= {bound}"));
    }
    steps.push(s);

    // 2. e²b < ℓ - 1
    let e2b = BigInt::from(e_cap) * e_cap * b;
    let mut s = Step::new(2, "ramification", "e^2 b < ell - 1");
    s.note("e^2 b", &e2b);
    if e2b >= BigInt::from(ell) - 1 {
        s.fail(format!("{e2b} >= {}", ell - 1));
    }
    steps.push(s);

    // 3. equal tame data at u, each side within its Hodge–Tate range
    let b_right = BigRational::new(BigInt::from(ell) - 2, BigInt::from(e_cap * e_cap));
    let mut s = Step::new(
        3,
        "tame",
        "tame inertia weights agree at u and satisfy the semistable bounds",
    );
    s.note("attested congruence at u", congruence_at_u_holds);
    s.note("b'", &b_right);
    let mut problems = Vec::new();
    if !congruence_at_u_holds {
        problems.push("congruence at u is not attested".to_string());
    }
    for (name, d, bd) in [("V", left, rat(b)), ("V'", right, b_right.clone())] {
        let u = d.at_u();
        if e_cap % u.e_u != 0 {
            problems.push(format!(
                "{name}: e_u = {} does not divide e = {e_cap}",
                u.e_u
            ));
        }
        if u.ht.iter().any(|&h| rat(h) > bd) {
            problems.push(format!("{name}: Hodge-Tate weights exceed {bd}"));
        }
        match caruso_validate(u, &bd) {
            CarusoOutcome::Pass => {}
            CarusoOutcome::Violation(r) => problems.push(format!("{name}: {r}")),
            CarusoOutcome::Inapplicable(r) => problems.push(format!("{name}: {r}")),
        }
    }
    match (
        ti_rep_multiset(&left.at_u().tame_chars, left.at_u().e_u),
        ti_rep_multiset(&right.at_u().tame_chars, right.at_u().e_u),
    ) {
        (Ok(a), Ok(b)) => {
            s.note("TI(V)", &a);
            s.note("TI(V')", &b);
            if a.entries() != b.entries() {
                problems.push("tame inertia weights differ".into());
            }
        }
        (Err(e), _) | (_, Err(e)) => problems.push(e.to_string()),
    }
    if !problems.is_empty() {
        s.fail(problems.join("; "));
    }
    steps.push(s);

    // 4. Σ(TI) = Σ(HT) = Σ(W)/2 on both sides
    let mut s = Step::new(4, "type-G", "sum(TI) = sum(HT) = sum(W)/2 for V and V'");
    s.note("[E_lambda:Q_ell]", m);
    let mut sums = Vec::new();
    let mut problems = Vec::new();
    for (name, d) in [("V", left), ("V'", right)] {
        let u = d.at_u();
        let sigma_ht = rat(u.ht.iter().sum());
        if u.ht.len() != d.n() * m {
            problems.push(format!(
                "{name}: {} Hodge-Tate weights, expected n*[E_lambda:Q_ell] = {}",
                u.ht.len(),
                d.n() * m
            ));
        }
        if let Ok(ti) = ti_rep_multiset(&u.tame_chars, u.e_u) {
            if ti.sigma() != sigma_ht {
                problems.push(format!(
                    "{name}: sum(TI) = {} but sum(HT) = {sigma_ht}",
                    ti.sigma()
                ));
            }
        }
        match sigma_weights_over_ql(d.charpoly(), m, opts) {
            Ok(sw) => {
                s.note(&format!("sum(W({name}))"), &sw);
                if sw != &sigma_ht * rat(2) {
                    problems.push(format!(
                        "{name}: sum(W) = {sw} but 2 sum(HT) = {}",
                        &sigma_ht * rat(2)
                    ));
                }
                sums.push(Some(sw));
            }
            Err(e) => {
                problems.push(format!("{name}: {e}"));
                sums.push(None);
            }
        }
    }
    if !problems.is_empty() {
        s.fail(problems.join("; "));
    }
    steps.push(s);

    // 5. Σ(W) ≤ [E_λ:Q_ℓ]·2nb
    let cap = rat(m as u64 * 2 * n * b);
    let mut s = Step::new(
        5,
        "weight-cap",
        "sum(W) <= [E_lambda:Q_ell] 2nb for V and V'",
    );
    s.note("cap", &cap);
    let mut problems = Vec::new();
    for (name, sw) in ["V", "V'"].iter().zip(&sums) {
        match sw {
            Some(x) if *x > cap => problems.push(format!("{name}: {x} > {cap}")),
            Some(_) => {}
            None => problems.push(format!("{name}: weights unavailable")),
        }
    }
    if !problems.is_empty() {
        s.fail(problems.join("; "));
    }
    steps.push(s);

    // 6. congruence at v, then the conclusion
    let mode = which.mode();
    let conclusion = match which {
        Which::SameWeights => "W_v(V) = W_v(V')",
        _ => "P = P'",
    };
    let mut s = Step::new(
        6,
        "gap",
        format!("congruence {mode} at v forces {conclusion}"),
    );
    s.note("P", left.charpoly());
    s.note("P'", right.charpoly());
    if which != Which::SameWeights && !(left.at_v().semistable_at_v && right.at_v().semistable_at_v)
    {
        s.fail("semisimplification at v is not attested unramified");
    } else {
        match charpolys_congruent(left.charpoly(), right.charpoly(), lambda, mode) {
            Ok(true) => {}
            Ok(false) => s.fail(format!("P and P' are not congruent {mode}")),
            Err(e) => s.fail(e),
        }
    }

    let failed = first_failure(&steps)
        .or(Some(&s).filter(|s| !s.verified()))
        .map(|f| (f.index, f.reason().unwrap_or("failed").to_string()));
    let verdict = if let Some((step, reason)) = failed {
        Verdict::Inapplicable { step, reason }
    } else {
        let holds = match which {
            Which::SameWeights => {
                let w = weil_weights_lenient(left.charpoly(), opts);
                let w2 = weil_weights_lenient(right.charpoly(), opts);
                s.note(
                    "W(V)",
                    w.as_ref().map(|x| x.to_string()).unwrap_or_default(),
                );
                s.note(
                    "W(V')",
                    w2.as_ref().map(|x| x.to_string()).unwrap_or_default(),
                );
                matches!((&w, &w2), (Ok(a), Ok(b)) if a == b)
            }
            _ => left.charpoly() == right.charpoly(),
        };
        if holds {
            Verdict::Concluded(conclusion.to_string())
        } else {
            let diagnosis =
                diagnose_mismatch(left.charpoly(), right.charpoly(), lambda, 2 * n * b, mode);
            s.fail(&diagnosis);
            Verdict::Contradiction { step: 6, diagnosis }
        }
    };
    if matches!(verdict, Verdict::Inapplicable { step, .. } if step < 6) && s.verified() {
        // congruence holds but the conclusion is not asserted
        s.note("conclusion", "not asserted");
    }
    steps.push(s);
    debug_assert!(
        !matches!(verdict, Verdict::Concluded(_))
            || steps.iter().all(|s| s.status == StepStatus::Verified)
    );

    Ok(Certificate {
        title: format!("{which} at {lambda}"),
        input: CertificateInput::Theorem {
            left: Box::new(left.clone()),
            right: Box::new(right.clone()),
            lambda: lambda.clone(),
            which,
            attested: congruence_at_u_holds,
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
    use crate::algebra::poly::{IntPoly, RatPoly};
    use crate::algebra::prime::primes_above;
    use crate::engine::descriptor::{LocalDescriptorU, LocalDescriptorV, SemistableFlag};
    use crate::tame::TameCharacter;
    use crate::weil::CharPolyOverE;

    const ELL: u128 = 16777259;

    fn delta(ell: u128, charpoly: CharPolyOverE) -> RepDescriptor {
        let q = NumberField::rationals();
        let v = LocalDescriptorV {
            q: 2,
            charpoly,
            semistable_at_v: true,
        };
        let u = LocalDescriptorU {
            ell,
            e_u: 1,
            e_cap: 1,
            ht: vec![0, 11],
            tame_chars: vec![
                TameCharacter::from_u64(ell, 1, 11).unwrap(),
                TameCharacter::from_u64(ell, 1, 0).unwrap(),
            ],
            flag: SemistableFlag::Crystalline,
        };
        RepDescriptor::new(2, &q, 11, v, u).unwrap()
    }

    fn delta_poly() -> CharPolyOverE {
        CharPolyOverE::from_int_poly(&IntPoly::from_i64s(&[2048, 24, 1]), 2).unwrap()
    }

    fn lam(ell: u128) -> PrimeIdeal {
        primes_above(&NumberField::rationals(), ell)
            .unwrap()
            .remove(0)
    }

    #[test]
    fn reflexive_pair_concludes() {
        let d = delta(ELL, delta_poly());
        for which in [
            Which::SamePolynomial,
            Which::SameWeights,
            Which::SamePolynomialModEll,
        ] {
            let c = run_theorem(&d, &d, &lam(ELL), which, true).unwrap();
            assert!(matches!(c.verdict, Verdict::Concluded(_)), "{c}");
            assert!(c.steps.iter().all(|s| s.verified()));
            c.verify().unwrap();
        }
    }

    #[test]
    fn small_ell_is_inapplicable() {
        let d = delta(691, delta_poly());
        let c = run_theorem(&d, &d, &lam(691), Which::SamePolynomial, true).unwrap();
        assert!(matches!(c.verdict, Verdict::Inapplicable { step: 1, .. }));
        assert_eq!(c.failed_steps(), vec![1]);
        c.verify().unwrap();
    }

    #[test]
    fn non_integral_partner_contradicts() {
        // 24 + ℓ/2^20 is congruent to 24 mod ℓ but not an integer
        let shift = BigRational::new(BigInt::from(ELL), BigInt::from(1u64 << 20));
        let c1 = BigRational::from_integer(24.into()) + shift;
        let p2 = RatPoly::new(vec![
            BigRational::from_integer(2048.into()),
            c1,
            BigRational::from_integer(1.into()),
        ]);
        let right = delta(ELL, CharPolyOverE::over_q(&p2, 2).unwrap());
        let left = delta(ELL, delta_poly());
        let c = run_theorem(&left, &right, &lam(ELL), Which::SamePolynomial, true).unwrap();
        match &c.verdict {
            Verdict::Contradiction { step: 6, diagnosis } => {
                assert!(diagnosis.contains("E-integrality"), "{diagnosis}")
            }
            v => panic!("unexpected {v}"),
        }
        c.verify().unwrap();
    }

    #[test]
    fn attestation_and_tame_mismatch_hit_step_three() {
        let d = delta(ELL, delta_poly());
        let c = run_theorem(&d, &d, &lam(ELL), Which::SamePolynomialModEll, false).unwrap();
        assert_eq!(c.failed_steps(), vec![3]);
        let mut u = d.at_u().clone();
        u.tame_chars = vec![
            TameCharacter::from_u64(ELL, 1, 10).unwrap(),
            TameCharacter::from_u64(ELL, 1, 1).unwrap(),
        ];
        u.ht = vec![1, 10];
        let d2 = d.with_at_u(u).unwrap();
        let c = run_theorem(&d, &d2, &lam(ELL), Which::SamePolynomialModEll, true).unwrap();
        assert_eq!(c.failed_steps(), vec![3]);
    }

    #[test]
    fn non_congruent_hits_step_six() {
        let d = delta(ELL, delta_poly());
        let p2 = CharPolyOverE::from_int_poly(&IntPoly::from_i64s(&[2048, 25, 1]), 2).unwrap();
        let d2 = d.with_charpoly(p2).unwrap();
        let c = run_theorem(&d, &d2, &lam(ELL), Which::SamePolynomial, true).unwrap();
        assert_eq!(c.failed_steps(), vec![6]);
        assert!(matches!(c.verdict, Verdict::Inapplicable { step: 6, .. }));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let d = delta(691, delta_poly());
        let mut c = run_theorem(&d, &d, &lam(691), Which::SamePolynomial, true).unwrap();
        c.verdict = Verdict::Concluded("P = P'".into());
        assert!(c.verify().is_err());
    }
}
