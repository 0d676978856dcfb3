use clap::Subcommand;
use galcong_core::TameCharacter;
use num_bigint::BigUint;

use crate::output::Report;

#[derive(Subcommand)]
pub enum TameCmd {
    /// Base-ell digits of a tame character and its tame inertia weights.
    Digits {
        #[arg(long)]
        ell: u128,
        /// Level: the character is a power of the fundamental character of
        /// level h.
        #[arg(long)]
        h: u32,
        /// Exponent.
        #[arg(long)]
        d: BigUint,
        /// Ramification index.
        #[arg(long, default_value_t = 1)]
        e: u64,
    },
}

pub fn run(cmd: TameCmd) -> Result<Report, String> {
    let TameCmd::Digits { ell, h, d, e } = cmd;
    let chi = TameCharacter::new(ell, h, d).map_err(|e| e.to_string())?;
    let ti = chi.ti_multiset(e).map_err(|e| e.to_string())?;
    let digits: Vec<String> = chi.digits().iter().map(u128::to_string).collect();
    Ok(Report::ok(format!("{} → TI {ti}\n", digits.join(","))))
}
