//! Checks on single descriptors: integrality, the weight identity of type
//! (G), and the bounds on tame inertia weights of semistable representations
//! with small Hodge–Tate weights.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::FactorOptions;
use crate::tame::ti_rep_multiset;
use crate::weil::{weil_weights_lenient, CharPolyOverE};

use super::descriptor::{LocalDescriptorU, RepDescriptor};
use super::EngineError;

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact sum of a multiset.
pub fn sigma(xs: &[BigRational]) -> BigRational {
    xs.iter().fold(BigRational::zero(), |acc, x| acc + x)
}

pub fn is_e_integral(p: &CharPolyOverE) -> bool {
    p.is_e_integral()
}

/// Both sides of the type (G) identity, in the `Q_ℓ`-linear view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeGReport {
    pub holds: bool,
    /// `Σ(W_v)`, which is the total weight when the identity holds.
    pub sigma_w: BigRational,
    pub sigma_ht: BigRational,
    /// `[E_λ:Q_ℓ]` used to spread the `E_λ`-linear weights.
    pub local_degree: usize,
}

/// Weil weights of the descriptor's Frobenius polynomial summed in the
/// `Q_ℓ`-linear view (each `E_λ`-weight counted `local_degree` times). Roots
/// are not required to be algebraic integers.
pub fn sigma_weights_over_ql(
    p: &CharPolyOverE,
    local_degree: usize,
    opts: &FactorOptions,
) -> Result<BigRational, EngineError> {
    let w = weil_weights_lenient(p, opts)?;
    let per_e = BigRational::new(BigInt::from(w.sigma()), BigInt::from(w.field_degree()));
    Ok(per_e * rat(local_degree as u64))
}

/// `Σ(W_v(V)) = 2Σ(HT_u(V))` with `[E_λ:Q_ℓ] = |HT| / n`.
pub fn is_type_g(desc: &RepDescriptor) -> Result<TypeGReport, EngineError> {
    let ht = &desc.at_u().ht;
    if ht.is_empty() || !ht.len().is_multiple_of(desc.n()) {
        return Err(EngineError::InvalidDescriptor(format!(
            "{} Hodge-Tate weights do not fill n = {} copies of E_lambda",
            ht.len(),
            desc.n()
        )));
    }
    is_type_g_at(desc, ht.len() / desc.n(), &FactorOptions::default())
}

/// Type (G) test with an explicit `[E_λ:Q_ℓ]`.
pub fn is_type_g_at(
    desc: &RepDescriptor,
    local_degree: usize,
    opts: &FactorOptions,
) -> Result<TypeGReport, EngineError> {
    let sigma_w = sigma_weights_over_ql(desc.charpoly(), local_degree, opts)?;
    let sigma_ht = rat(desc.at_u().ht.iter().sum());
    Ok(TypeGReport {
        holds: desc.at_u().ht.len() == desc.n() * local_degree && sigma_w == &sigma_ht * rat(2),
        sigma_w,
        sigma_ht,
        local_degree,
    })
}

/// `Σ_v [K_v:Q_q] Σ(W_v) = 2 Σ_u [K_u:Q_ℓ] Σ(HT_u)`.
pub fn global_weight_identity(at_q: &[(u64, BigRational)], at_ell: &[(u64, BigRational)]) -> bool {
    let weighted = |xs: &[(u64, BigRational)]| {
        xs.iter()
            .fold(BigRational::zero(), |acc, (d, s)| acc + rat(*d) * s)
    };
    weighted(at_q) == weighted(at_ell) * rat(2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CarusoOutcome {
    Pass,
    Violation(String),
    /// `e_u·b < ℓ - 1` fails, so nothing can be said.
    Inapplicable(String),
}

impl CarusoOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CarusoOutcome::Pass)
    }
}

/// For `e_u·b < ℓ - 1`: the tame inertia weights lie in `[0, b]` and sum to
/// `Σ(HT)`.
pub fn caruso_validate(at_u: &LocalDescriptorU, b: &BigRational) -> CarusoOutcome {
    let ell_minus_one = BigRational::from_integer(BigInt::from(at_u.ell) - 1);
    let eb = rat(at_u.e_u) * b;
    if eb >= ell_minus_one {
        return CarusoOutcome::Inapplicable(format!(
            "e*b = {eb} is not below ell - 1 = {ell_minus_one}"
        ));
    }
    let ti = match ti_rep_multiset(&at_u.tame_chars, at_u.e_u) {
        Ok(t) => t,
        Err(e) => return CarusoOutcome::Violation(e.to_string()),
    };
    if !ti.within(&BigRational::zero(), b) {
        return CarusoOutcome::Violation(format!("(i) TI = {ti} is not inside [0, {b}]"));
    }
    let sum_ht = rat(at_u.ht.iter().sum());
    if ti.sigma() != sum_ht {
        return CarusoOutcome::Violation(format!(
            "(ii) sum of TI {} differs from sum of HT {sum_ht}",
            ti.sigma()
        ));
    }
    CarusoOutcome::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numfield::NumberField;
    use crate::algebra::poly::IntPoly;
    use crate::engine::descriptor::{LocalDescriptorV, SemistableFlag};
    use crate::tame::TameCharacter;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn at_u(ell: u128, ht: Vec<u64>, digits: &[u64]) -> LocalDescriptorU {
        LocalDescriptorU {
            ell,
            e_u: 1,
            e_cap: 1,
            ht,
            tame_chars: digits
                .iter()
                .map(|&d| TameCharacter::from_u64(ell, 1, d).unwrap())
                .collect(),
            flag: SemistableFlag::Crystalline,
        }
    }

    fn desc(poly: &[i64], q: u64, ht: Vec<u64>) -> RepDescriptor {
        let p = CharPolyOverE::from_int_poly(&IntPoly::from_i64s(poly), q).unwrap();
        let v = LocalDescriptorV {
            q,
            charpoly: p,
            semistable_at_v: true,
        };
        let n = poly.len() - 1;
        RepDescriptor::new(n, &NumberField::rationals(), 11, v, at_u(691, ht, &[])).unwrap()
    }

    #[test]
    fn sums() {
        assert_eq!(sigma(&[r(11, 1), r(11, 1)]), r(22, 1));
        assert_eq!(sigma(&[]), r(0, 1));
        assert_eq!(sigma(&[r(1, 2), r(3, 2)]), r(2, 1));
    }

    #[test]
    fn type_g() {
        let d = desc(&[2048, 24, 1], 2, vec![0, 11]);
        let rep = is_type_g(&d).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.sigma_w, r(22, 1));
        // Q_ℓ(r) at q = 3: Frobenius acts by 3^r
        let d = desc(&[-27, 1], 3, vec![3]);
        let rep = is_type_g(&d).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.sigma_w, r(6, 1));
        // W = {1, 1} against HT = {1, 1}
        assert!(!is_type_g(&desc(&[2, 0, 1], 2, vec![1, 1])).unwrap().holds);
    }

    #[test]
    fn global_identity() {
        assert!(global_weight_identity(&[(1, r(22, 1))], &[(1, r(11, 1))]));
        assert!(global_weight_identity(
            &[(2, r(2, 1))],
            &[(1, r(1, 1)), (1, r(1, 1))]
        ));
        assert!(!global_weight_identity(&[(1, r(2, 1))], &[(1, r(2, 1))]));
    }

    #[test]
    fn caruso() {
        assert_eq!(
            caruso_validate(&at_u(691, vec![0, 11], &[11, 0]), &r(11, 1)),
            CarusoOutcome::Pass
        );
        assert!(matches!(
            caruso_validate(&at_u(7, vec![0], &[1]), &r(1, 1)),
            CarusoOutcome::Violation(_)
        ));
        assert!(matches!(
            caruso_validate(&at_u(11, vec![0, 11], &[0, 0]), &r(11, 1)),
            CarusoOutcome::Inapplicable(_)
        ));
        assert!(matches!(
            caruso_validate(&at_u(691, vec![0, 11], &[12, 689]), &r(11, 1)),
            CarusoOutcome::Violation(_)
        ));
    }
}
