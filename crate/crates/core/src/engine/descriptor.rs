//! Numerical shadows of an `n`-dimensional `E_λ`-linear representation: the
//! Frobenius characteristic polynomial at a place `v ∤ ℓ` and the Hodge–Tate
//! and tame inertia data at a place `u | ℓ`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::arith::{is_prime, prime_power};
use crate::algebra::numfield::NumberField;
use crate::tame::TameCharacter;
use crate::weil::CharPolyOverE;

use super::EngineError;

/// How the representation becomes semistable at `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SemistableFlag {
    Crystalline,
    Semistable,
    /// Semistable after a totally ramified extension of the given degree.
    AfterExtension(u64),
}

impl fmt::Display for SemistableFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Crystalline => write!(f, "crystalline"),
            Self::Semistable => write!(f, "semistable"),
            Self::AfterExtension(e) => write!(f, "after-extension:{e}"),
        }
    }
}

impl std::str::FromStr for SemistableFlag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "crystalline" => Ok(Self::Crystalline),
            "semistable" => Ok(Self::Semistable),
            _ => {
                let e = s
                    .strip_prefix("after-extension:")
                    .and_then(|x| x.parse::<u64>().ok())
                    .filter(|&e| e >= 1)
                    .ok_or_else(|| format!("unknown semistability flag {s:?}"))?;
                Ok(Self::AfterExtension(e))
            }
        }
    }
}

/// Data at the place `v` with residue field of size `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalDescriptorV {
    pub q: u64,
    /// Frobenius characteristic polynomial of the semisimplification.
    pub charpoly: CharPolyOverE,
    /// The semisimplification is unramified at `v`.
    pub semistable_at_v: bool,
}

/// Data at the place `u` above `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalDescriptorU {
    pub ell: u128,
    /// Absolute ramification index of `K_u`.
    pub e_u: u64,
    /// Bound `e` on the ramification needed for semistability.
    pub e_cap: u64,
    /// Hodge–Tate weights, one per `Q_ℓ`-dimension.
    pub ht: Vec<u64>,
    /// Tame characters of the mod-`λ` semisimplification.
    pub tame_chars: Vec<TameCharacter>,
    pub flag: SemistableFlag,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepDescriptor {
    n: usize,
    field: Arc<NumberField>,
    b: u64,
    at_v: LocalDescriptorV,
    at_u: LocalDescriptorU,
}

fn invalid(msg: impl Into<String>) -> EngineError {
    EngineError::InvalidDescriptor(msg.into())
}

impl RepDescriptor {
    pub fn new(
        n: usize,
        field: &Arc<NumberField>,
        b: u64,
        at_v: LocalDescriptorV,
        mut at_u: LocalDescriptorU,
    ) -> Result<Self, EngineError> {
        if n == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        if at_v.charpoly.degree() != n {
            return Err(invalid(format!(
                "characteristic polynomial has degree {} but n = {n}",
                at_v.charpoly.degree()
            )));
        }
        if at_v.charpoly.field().gen_poly() != field.gen_poly() {
            return Err(invalid(
                "characteristic polynomial is over a different field",
            ));
        }
        if at_v.charpoly.q() != at_v.q {
            return Err(invalid(
                "characteristic polynomial is tied to a different q",
            ));
        }
        let Some((p, _)) = prime_power(at_v.q) else {
            return Err(invalid(format!("q = {} is not a prime power", at_v.q)));
        };
        if !is_prime(at_u.ell) {
            return Err(invalid(format!("ell = {} is not prime", at_u.ell)));
        }
        if p as u128 == at_u.ell {
            return Err(invalid("v must not lie above ell"));
        }
        if at_u.e_u == 0 || at_u.e_cap == 0 {
            return Err(invalid("ramification indices must be at least 1"));
        }
        if let Some(c) = at_u.tame_chars.iter().find(|c| c.ell() != at_u.ell) {
            return Err(invalid(format!(
                "tame character {c} is not at ell = {}",
                at_u.ell
            )));
        }
        if at_u.ht.len() > n * field.degree() {
            return Err(invalid(format!(
                "{} Hodge-Tate weights exceed n*[E:Q] = {}",
                at_u.ht.len(),
                n * field.degree()
            )));
        }
        at_u.ht.sort_unstable();
        Ok(Self {
            n,
            field: field.clone(),
            b,
            at_v,
            at_u,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Hodge–Tate bound `b`.
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn at_v(&self) -> &LocalDescriptorV {
        &self.at_v
    }

    pub fn at_u(&self) -> &LocalDescriptorU {
        &self.at_u
    }

    pub fn q(&self) -> u64 {
        self.at_v.q
    }

    pub fn ell(&self) -> u128 {
        self.at_u.ell
    }

    pub fn charpoly(&self) -> &CharPolyOverE {
        &self.at_v.charpoly
    }

    /// Copy with another characteristic polynomial at `v`.
    pub fn with_charpoly(&self, charpoly: CharPolyOverE) -> Result<Self, EngineError> {
        let at_v = LocalDescriptorV {
            q: charpoly.q(),
            charpoly,
            ..self.at_v.clone()
        };
        Self::new(self.n, &self.field, self.b, at_v, self.at_u.clone())
    }

    /// Copy with other data at `u`.
    pub fn with_at_u(&self, at_u: LocalDescriptorU) -> Result<Self, EngineError> {
        Self::new(self.n, &self.field, self.b, self.at_v.clone(), at_u)
    }

    /// Copy with another Hodge–Tate bound.
    pub fn with_b(&self, b: u64) -> Self {
        Self { b, ..self.clone() }
    }
}

/// Spreads per-embedding Hodge–Tate weights to the `Q_ℓ`-linear view, where
/// each weight appears `[E_λ:Q_ℓ]` times.
pub fn ht_over_ql(per_embedding: &[u64], local_degree: usize) -> Vec<u64> {
    let mut out: Vec<u64> = per_embedding
        .iter()
        .flat_map(|&h| std::iter::repeat_n(h, local_degree))
        .collect();
    out.sort_unstable();
    out
}
