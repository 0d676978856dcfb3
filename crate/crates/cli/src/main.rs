//! `galcong`: bounds, Weil weights, tame inertia, certificates and modular
//! form congruences from the command line.
//!
//! Exit codes: 0 success or concluded, 2 inapplicable, 3 contradiction or
//! violation, 1 usage and input errors.

mod bounds_cmd;
mod engine_cmd;
mod mf_cmd;
mod output;
mod tame_cmd;
mod weil_cmd;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use galcong_core::FactorOptions;

use output::{Report, Style};

#[derive(Parser)]
#[command(
    name = "galcong",
    version,
    about = "Congruences of Galois representations, checked exactly"
)]
struct Cli {
    /// Seed for the randomized steps of polynomial factorization.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the explicit prime bounds.
    #[command(subcommand)]
    Bounds(bounds_cmd::BoundsCmd),
    /// Weil integers and Weil weights of Frobenius polynomials.
    #[command(subcommand)]
    Weil(weil_cmd::WeilCmd),
    /// Digits and tame inertia weights of tame characters.
    #[command(subcommand)]
    Tame(tame_cmd::TameCmd),
    /// Replay the comparison of two representation descriptors.
    #[command(subcommand)]
    Engine(engine_cmd::EngineCmd),
    /// Level-one eigenforms, Eisenstein congruences and their audit.
    #[command(subcommand)]
    Mf(mf_cmd::MfCmd),
}

fn run(cli: Cli, style: Style) -> Result<Report, String> {
    let opts = FactorOptions {
        seed: cli.seed,
        ..FactorOptions::default()
    };
    match cli.command {
        Command::Bounds(c) => bounds_cmd::run(c),
        Command::Weil(c) => weil_cmd::run(c, &opts),
        Command::Tame(c) => tame_cmd::run(c),
        Command::Engine(c) => engine_cmd::run(c, &opts, style),
        Command::Mf(c) => mf_cmd::run(c, &opts, style),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let style = Style::detect();
    match run(cli, style) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.text.as_bytes());
            ExitCode::from(report.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
