use std::fmt::Write;
use std::path::PathBuf;

use clap::Subcommand;
use galcong_core::engine::run_theorem_with;
use galcong_core::{
    parse_descriptor, primes_above, Certificate, FactorOptions, RepDescriptor, Verdict, Which,
};
use serde_json::json;

use crate::output::{verdict_code, Report, Style};

#[derive(Subcommand)]
pub enum EngineCmd {
    /// Compare two descriptors and print the certificate.
    Run {
        #[arg(long)]
        which: Which,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        ell: u128,
        /// Position of the prime in the list of primes above ell, ordered by
        /// residue degree and then local factor.
        #[arg(long, default_value_t = 0)]
        lambda_index: usize,
        /// Do not attest that the two representations are congruent at u.
        #[arg(long)]
        unattested: bool,
        /// One JSON object per line: header, steps, verdict.
        #[arg(long)]
        json: bool,
    },
}

fn load(path: &PathBuf) -> Result<RepDescriptor, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_descriptor(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn run(cmd: EngineCmd, opts: &FactorOptions, style: Style) -> Result<Report, String> {
    let EngineCmd::Run {
        which,
        left,
        right,
        ell,
        lambda_index,
        unattested,
        json,
    } = cmd;
    let (l, r) = (load(&left)?, load(&right)?);
    let primes = primes_above(l.field(), ell).map_err(|e| e.to_string())?;
    let lambda = primes
        .get(lambda_index)
        .ok_or_else(|| format!("only {} primes lie above {ell}", primes.len()))?;
    let cert =
        run_theorem_with(&l, &r, lambda, which, !unattested, opts).map_err(|e| e.to_string())?;
    let text = if json {
        render_json(&cert, which, !unattested)
    } else {
        render_text(&cert, style)
    };
    Ok(Report::new(text, verdict_code(&cert.verdict)))
}

pub fn render_text(cert: &Certificate, style: Style) -> String {
    let body = cert.to_string();
    let (head, verdict) = body.rsplit_once('\n').unwrap_or(("", &body));
    let painted = match cert.verdict {
        Verdict::Concluded(_) => style.good(verdict),
        Verdict::Inapplicable { .. } => style.warn(verdict),
        Verdict::Contradiction { .. } => style.bad(verdict),
    };
    let mut out = String::new();
    if !head.is_empty() {
        let _ = writeln!(out, "{head}");
    }
    let _ = writeln!(out, "{painted}");
    out
}

pub fn render_json(cert: &Certificate, which: Which, attested: bool) -> String {
    let mut out = String::new();
    let header = json!({
        "record": "certificate",
        "title": cert.title,
        "which": which.name(),
        "attested": attested,
        "seed": cert.options.seed,
    });
    let _ = writeln!(out, "{header}");
    for s in &cert.steps {
        let witness: Vec<[&str; 2]> = s
            .witness
            .iter()
            .map(|(k, v)| [k.as_str(), v.as_str()])
            .collect();
        let step = json!({
            "record": "step",
            "index": s.index,
            "tag": s.tag,
            "claim": s.claim,
            "status": s.status.to_string(),
            "witness": witness,
        });
        let _ = writeln!(out, "{step}");
    }
    let (step, detail) = match &cert.verdict {
        Verdict::Concluded(s) => (None, s.as_str()),
        Verdict::Inapplicable { step, reason } => (Some(*step), reason.as_str()),
        Verdict::Contradiction { step, diagnosis } => (Some(*step), diagnosis.as_str()),
    };
    let verdict = json!({
        "record": "verdict",
        "verdict": cert.verdict.label(),
        "step": step,
        "detail": detail,
    });
    let _ = writeln!(out, "{verdict}");
    out
}
