use clap::Subcommand;
use galcong_core::weil::{is_weil_integer_poly, weil_weights_with};
use galcong_core::{CharPolyOverE, FactorOptions, IntPoly};

use crate::output::{parse_ints, Report, CONTRADICTION};

#[derive(Subcommand)]
pub enum WeilCmd {
    /// Decide whether every root of a monic integer polynomial has absolute
    /// value q^(w/2) under every embedding.
    Check {
        /// Coefficients from the constant term up, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        w: u32,
    },
    /// Weil weights of a Frobenius polynomial with integer coefficients.
    Weights {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        q: u64,
    },
}

pub fn run(cmd: WeilCmd, opts: &FactorOptions) -> Result<Report, String> {
    match cmd {
        WeilCmd::Check { poly, q, w } => {
            let p = IntPoly::new(parse_ints(&poly)?);
            let yes = is_weil_integer_poly(&p, q, w).map_err(|e| e.to_string())?;
            let text = format!(
                "{p}: {} q = {q}, w = {w}\n",
                if yes {
                    "Weil integer for"
                } else {
                    "not a Weil integer for"
                }
            );
            Ok(Report::new(text, if yes { 0 } else { CONTRADICTION }))
        }
        WeilCmd::Weights { poly, q } => {
            let p = IntPoly::new(parse_ints(&poly)?);
            let cp = CharPolyOverE::from_int_poly(&p, q).map_err(|e| e.to_string())?;
            match weil_weights_with(&cp, opts) {
                Ok(w) => Ok(Report::ok(format!("{p}: W = {w}, sum {}\n", w.sigma()))),
                Err(e) => Ok(Report::new(format!("{p}: {e}\n"), CONTRADICTION)),
            }
        }
    }
}
