//! Report assembly and optional terminal styling.

use std::fmt::Write;
use std::io::IsTerminal;

use galcong_core::Verdict;

pub const OK: u8 = 0;
pub const INAPPLICABLE: u8 = 2;
pub const CONTRADICTION: u8 = 3;

/// Text for standard output plus the exit code.
pub struct Report {
    pub text: String,
    pub code: u8,
}

impl Report {
    pub fn new(text: String, code: u8) -> Self {
        Self { text, code }
    }

    pub fn ok(text: String) -> Self {
        Self::new(text, OK)
    }
}

/// Colors only on a terminal, and never with `NO_COLOR` set.
#[derive(Clone, Copy)]
pub struct Style {
    color: bool,
}

impl Style {
    pub fn detect() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Self {
            color: !no_color && std::io::stdout().is_terminal(),
        }
    }

    fn paint(self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn good(self, s: &str) -> String {
        self.paint("32", s)
    }

    pub fn warn(self, s: &str) -> String {
        self.paint("33", s)
    }

    pub fn bad(self, s: &str) -> String {
        self.paint("31;1", s)
    }
}

pub fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Concluded(_) => OK,
        Verdict::Inapplicable { .. } => INAPPLICABLE,
        Verdict::Contradiction { .. } => CONTRADICTION,
    }
}

/// Left-aligned table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec(), &mut out);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

pub fn parse_ints(s: &str) -> Result<Vec<num_bigint::BigInt>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|e| format!("bad integer {x:?}: {e}"))
        })
        .collect()
}
