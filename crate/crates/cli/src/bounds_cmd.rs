use std::fmt::Write;

use clap::{Subcommand, ValueEnum};
use galcong_core::{exceeds, make_bound, BoundKind, BoundParams};

use crate::output::Report;

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    C,
    Cprime,
    Ctilde,
    C1,
    C1tilde,
}

impl From<Kind> for BoundKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::C => BoundKind::CMain,
            Kind::Cprime => BoundKind::CPrime,
            Kind::Ctilde => BoundKind::CTilde,
            Kind::C1 => BoundKind::C1,
            Kind::C1tilde => BoundKind::C1Tilde,
        }
    }
}

#[derive(Subcommand)]
pub enum BoundsCmd {
    /// Print the exact threshold of a bound, and compare a prime with it.
    Eval {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<u64>,
        /// Hodge-Tate bound.
        #[arg(long)]
        b: Option<u64>,
        /// Ramification bound.
        #[arg(long)]
        e: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        /// Degree of the coefficient field.
        #[arg(long)]
        edeg: Option<u64>,
        /// Residue degree of the prime.
        #[arg(long)]
        f: Option<u64>,
        /// Weight cap.
        #[arg(long)]
        w: Option<u64>,
        /// Degree of the base field.
        #[arg(long)]
        kdeg: Option<u64>,
        /// Local degree of the base field at the place above q.
        #[arg(long)]
        kvdeg: Option<u64>,
        #[arg(long)]
        ell: Option<u128>,
    },
}

pub fn run(cmd: BoundsCmd) -> Result<Report, String> {
    let BoundsCmd::Eval {
        kind,
        n,
        b,
        e,
        q,
        edeg,
        f,
        w,
        kdeg,
        kvdeg,
        ell,
    } = cmd;
    let params = BoundParams {
        e_deg: edeg,
        f,
        n,
        b,
        w,
        e,
        q,
        k_deg: kdeg,
        kv_deg: kvdeg,
    };
    let bound = make_bound(kind.into(), &params).map_err(|e| e.to_string())?;
    let t = bound.threshold();
    let mut out = String::new();
    if t.exact {
        let _ = writeln!(out, "{}", t.ceil);
    } else {
        let _ = writeln!(out, "{} < bound < {}", t.floor(), t.ceil);
    }
    let _ = writeln!(out, "{bound}");
    if let Some(ell) = ell {
        let rel = if exceeds(ell, &bound) { ">" } else { "<=" };
        let _ = writeln!(out, "ell = {ell} {rel} {}", bound.kind().name());
    }
    Ok(Report::ok(out))
}
