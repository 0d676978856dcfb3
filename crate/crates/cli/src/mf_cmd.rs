use std::fmt::Write;
use std::path::PathBuf;

use clap::Subcommand;
use galcong_core::modforms::{
    audit_eisenstein_exclusion, cusp_dimension, default_p_max, default_precision,
    detect_congruences, eigenforms_with,
};
use galcong_core::{
    parse_eigenform, AuditOutcome, CongruenceWitness, DetectMode, Eigenform, FactorOptions,
};

use crate::output::{table, Report, Style, CONTRADICTION, INAPPLICABLE, OK};

#[derive(Subcommand)]
pub enum MfCmd {
    /// Normalized eigenforms of level one and weight k.
    Eigenforms {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        prec: Option<usize>,
        /// Print a_p for primes up to this bound.
        #[arg(long, default_value_t = 13)]
        show: u64,
    },
    /// Congruences a_p = p^i + p^j modulo primes above ell.
    Detect {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        pmax: Option<u64>,
        /// Scan every (i, j) modulo this prime instead of the Eisenstein scan.
        #[arg(long)]
        ell: Option<u128>,
    },
    /// Detect Eisenstein congruences and audit each against the large-prime
    /// exclusion.
    Audit {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        pmax: Option<u64>,
    },
    /// Audit eigenforms read from coefficient tables.
    Ingest {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        pmax: Option<u64>,
        #[arg(long)]
        ell: Option<u128>,
    },
}

pub fn run(cmd: MfCmd, opts: &FactorOptions, style: Style) -> Result<Report, String> {
    match cmd {
        MfCmd::Eigenforms { k, prec, show } => {
            let forms = compute(k, prec, opts)?;
            let mut out = format!(
                "weight {k}: dim S_k = {}, {} Galois orbit(s)\n",
                cusp_dimension(k as i64),
                forms.len()
            );
            for (i, f) in forms.iter().enumerate() {
                let _ = writeln!(out, "form {}: field {}", i + 1, f.field);
                for (p, a) in f.ap.range(..=show) {
                    let _ = writeln!(out, "  a_{p} = {a}");
                }
            }
            Ok(Report::ok(out))
        }
        MfCmd::Detect { k, pmax, ell } => {
            let forms = compute(k, None, opts)?;
            let mut rows = Vec::new();
            for (idx, f) in forms.iter().enumerate() {
                for w in detect(f, pmax, ell)? {
                    rows.push(witness_row(idx + 1, &w));
                }
            }
            Ok(Report::ok(table(&HEADER, &rows)))
        }
        MfCmd::Audit { k, q, pmax } => {
            let forms = compute(k, None, opts)?;
            audit_all(
                forms
                    .iter()
                    .enumerate()
                    .map(|(i, f)| (format!("k={k} form {}", i + 1), f)),
                q,
                pmax,
                None,
                style,
            )
        }
        MfCmd::Ingest {
            files,
            q,
            pmax,
            ell,
        } => {
            let mut forms = Vec::new();
            for path in &files {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                let f = parse_eigenform(&text).map_err(|e| format!("{}: {e}", path.display()))?;
                forms.push((path.display().to_string(), f));
            }
            audit_all(
                forms.iter().map(|(n, f)| (n.clone(), f)),
                q,
                pmax,
                ell,
                style,
            )
        }
    }
}

const HEADER: [&str; 8] = [
    "form", "ell", "i", "j", "lambda", "p_max", "primes", "sturm",
];

fn compute(k: u64, prec: Option<usize>, opts: &FactorOptions) -> Result<Vec<Eigenform>, String> {
    let prec = prec.unwrap_or_else(|| default_precision(k));
    eigenforms_with(k, prec, opts).map_err(|e| e.to_string())
}

fn detect(
    f: &Eigenform,
    pmax: Option<u64>,
    ell: Option<u128>,
) -> Result<Vec<CongruenceWitness>, String> {
    let pmax = pmax.unwrap_or_else(|| default_p_max(f.k, f.level));
    let mode = ell.map_or(DetectMode::EisensteinScan, DetectMode::FixedEll);
    detect_congruences(f, mode, pmax).map_err(|e| e.to_string())
}

fn witness_row(form: usize, w: &CongruenceWitness) -> Vec<String> {
    vec![
        form.to_string(),
        w.ell().to_string(),
        w.i.to_string(),
        w.j.to_string(),
        w.lambda.to_string(),
        w.checked_primes.last().copied().unwrap_or(0).to_string(),
        w.checked_primes.len().to_string(),
        w.sturm.to_string(),
    ]
}

fn audit_all<'a>(
    forms: impl Iterator<Item = (String, &'a Eigenform)>,
    q: u64,
    pmax: Option<u64>,
    ell: Option<u128>,
    style: Style,
) -> Result<Report, String> {
    let mut out = String::new();
    let mut code = OK;
    let mut any = false;
    for (name, f) in forms {
        let witnesses = detect(f, pmax, ell)?;
        let _ = writeln!(
            out,
            "{name}: k={} N={} witnesses={}",
            f.k,
            f.level,
            witnesses.len()
        );
        for w in &witnesses {
            any = true;
            let report = audit_eisenstein_exclusion(w, f, q).map_err(|e| e.to_string())?;
            let _ = writeln!(
                out,
                "  witness ell={} i={} j={} lambda={}",
                w.ell(),
                w.i,
                w.j,
                w.lambda
            );
            for g in &report.gates {
                let mark = if g.holds { "pass" } else { "FAIL" };
                let _ = writeln!(out, "    gate  {mark}  {} ({})", g.name, g.detail);
            }
            for s in &report.side_checks {
                let mark = if s.holds { "pass" } else { "FAIL" };
                let detail = if s.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", s.detail)
                };
                let _ = writeln!(out, "    side  {mark}  {}{detail}", s.name);
            }
            let line = match &report.outcome {
                AuditOutcome::Consistent => style.good("    outcome: consistent"),
                AuditOutcome::Inapplicable { gate } => {
                    code = code.max(INAPPLICABLE);
                    style.warn(&format!("    outcome: inapplicable ({gate})"))
                }
                AuditOutcome::Contradiction(why) => {
                    code = CONTRADICTION;
                    style.bad(&format!("    outcome: contradiction ({why})"))
                }
            };
            let _ = writeln!(out, "{line}");
        }
    }
    if !any {
        let _ = writeln!(out, "no congruences found");
    }
    Ok(Report::new(out, code))
}
