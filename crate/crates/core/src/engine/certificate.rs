//! Re-checkable records of a replayed argument.

use std::fmt;

use thiserror::Error;

use crate::algebra::prime::PrimeIdeal;
use crate::algebra::FactorOptions;
use crate::weil::CharPolyOverE;

use super::descriptor::RepDescriptor;
use super::gap::{gap_principle_with, CongruenceMode};
use super::theorem::{run_theorem_with, Which};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepStatus {
    Verified,
    Failed,
    /// Not evaluated because an earlier hypothesis failed.
    Skipped,
}

impl fmt::Display for StepStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Verified => "verified",
            Self::Failed => "failed",
            Self::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// 1-based position.
    pub index: usize,
    pub claim: String,
    /// Short name of the check, stable across runs.
    pub tag: &'static str,
    pub status: StepStatus,
    /// Key/value evidence in insertion order.
    pub witness: Vec<(String, String)>,
}

impl Step {
    pub fn new(index: usize, tag: &'static str, claim: impl Into<String>) -> Self {
        Self {
            index,
            claim: claim.into(),
            tag,
            status: StepStatus::Verified,
            witness: Vec::new(),
        }
    }

    pub fn note(&mut self, key: &str, value: impl fmt::Display) {
        self.witness.push((key.to_string(), value.to_string()));
    }

    /// Mark failed and record why.
    pub fn fail(&mut self, reason: impl fmt::Display) {
        self.status = StepStatus::Failed;
        self.note("reason", reason);
    }

    pub fn verified(&self) -> bool {
        self.status == StepStatus::Verified
    }

    /// First recorded failure reason.
    pub fn reason(&self) -> Option<&str> {
        self.witness
            .iter()
            .find(|(k, _)| k == "reason")
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Concluded(String),
    Inapplicable {
        step: usize,
        reason: String,
    },
    /// Every hypothesis checked out yet the conclusion failed, so some
    /// hypothesis that is taken on trust must be false.
    Contradiction {
        step: usize,
        diagnosis: String,
    },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Concluded(_) => "concluded",
            Self::Inapplicable { .. } => "inapplicable",
            Self::Contradiction { .. } => "contradiction",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Concluded(s) => write!(f, "concluded: {s}"),
            Self::Inapplicable { step, reason } => {
                write!(f, "inapplicable at step {step}: {reason}")
            }
            Self::Contradiction { step, diagnosis } => {
                write!(f, "contradiction at step {step}: {diagnosis}")
            }
        }
    }
}

/// Inputs kept so the certificate can be replayed from scratch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateInput {
    Theorem {
        left: Box<RepDescriptor>,
        right: Box<RepDescriptor>,
        lambda: PrimeIdeal,
        which: Which,
        attested: bool,
    },
    Gap {
        p: CharPolyOverE,
        p2: CharPolyOverE,
        lambda: PrimeIdeal,
        w_cap: u32,
        mode: CongruenceMode,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub title: String,
    pub input: CertificateInput,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
    pub options: FactorOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("replay failed: {0}")]
    Replay(String),
    #[error("step {0} does not match its replay")]
    StepMismatch(usize),
    #[error("verdict does not match its replay")]
    VerdictMismatch,
    #[error("concluded although step {0} is not verified")]
    UnverifiedStep(usize),
    #[error("conclusion does not hold: {0}")]
    ConclusionFalse(String),
}

impl Certificate {
    /// Indices of failed steps.
    pub fn failed_steps(&self) -> Vec<usize> {
        self.steps
            .iter()
            .filter(|s| s.status == StepStatus::Failed)
            .map(|s| s.index)
            .collect()
    }

    /// Replays every check from the stored inputs and compares; a concluded
    /// certificate additionally has its conclusion re-checked directly.
    pub fn verify(&self) -> Result<(), VerifyError> {
        let replay = match &self.input {
            CertificateInput::Theorem {
                left,
                right,
                lambda,
                which,
                attested,
            } => run_theorem_with(left, right, lambda, *which, *attested, &self.options),
            CertificateInput::Gap {
                p,
                p2,
                lambda,
                w_cap,
                mode,
            } => gap_principle_with(p, p2, lambda, *w_cap, *mode, &self.options),
        }
        .map_err(|e| VerifyError::Replay(e.to_string()))?;
        if replay.steps.len() != self.steps.len() {
            return Err(VerifyError::StepMismatch(
                replay.steps.len().min(self.steps.len()) + 1,
            ));
        }
        for (a, b) in self.steps.iter().zip(&replay.steps) {
            if a.status != b.status || a.tag != b.tag {
                return Err(VerifyError::StepMismatch(a.index));
            }
        }
        if replay.verdict != self.verdict {
            return Err(VerifyError::VerdictMismatch);
        }
        if let Verdict::Concluded(_) = self.verdict {
            if let Some(s) = self.steps.iter().find(|s| !s.verified()) {
                return Err(VerifyError::UnverifiedStep(s.index));
            }
            self.recheck_conclusion()?;
        }
        Ok(())
    }

    /// Direct checks of the concluded statement that do not go through the
    /// step machinery.
    fn recheck_conclusion(&self) -> Result<(), VerifyError> {
        match &self.input {
            CertificateInput::Theorem {
                left,
                right,
                lambda,
                which,
                ..
            } => {
                let bound = which
                    .bound(left, lambda)
                    .map_err(|e| VerifyError::Replay(e.to_string()))?;
                let floor = bound.threshold().floor();
                if num_bigint::BigUint::from(lambda.ell()) <= floor {
                    return Err(VerifyError::ConclusionFalse(format!(
                        "ell = {} does not exceed {floor}",
                        lambda.ell()
                    )));
                }
                match which {
                    Which::SameWeights => {
                        let w = crate::weil::weil_weights_lenient(left.charpoly(), &self.options);
                        let w2 = crate::weil::weil_weights_lenient(right.charpoly(), &self.options);
                        match (w, w2) {
                            (Ok(a), Ok(b)) if a == b => Ok(()),
                            _ => Err(VerifyError::ConclusionFalse("weights differ".into())),
                        }
                    }
                    _ if left.charpoly() == right.charpoly() => Ok(()),
                    _ => Err(VerifyError::ConclusionFalse("polynomials differ".into())),
                }
            }
            CertificateInput::Gap { p, p2, .. } if p == p2 => Ok(()),
            CertificateInput::Gap { .. } => {
                Err(VerifyError::ConclusionFalse("polynomials differ".into()))
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for s in &self.steps {
            writeln!(
                f,
                "  [{}] {:<8} {:<10} {}",
                s.index, s.status, s.tag, s.claim
            )?;
            for (k, v) in &s.witness {
                writeln!(f, "        {k}: {v}")?;
            }
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

/// Verdict for a list of steps whose last entry is the conclusion: the first
/// failed hypothesis wins.
pub(crate) fn first_failure(steps: &[Step]) -> Option<&Step> {
    steps.iter().find(|s| s.status == StepStatus::Failed)
}
