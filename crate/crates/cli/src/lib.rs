//! Command-line front end for the `gauss_appell` library.
//!
//! Every subcommand writes to a caller-supplied sink so the same code paths
//! serve the `gap` binary and the tests.

pub mod args;
pub mod config;
pub mod gen;
pub mod numbers;
pub mod plot;
pub mod verify;

use std::io::Write;

use anyhow::Result;

pub use args::{Cli, Command};

/// Runs one parsed command. `Ok(false)` means a verification check failed.
pub fn run(command: &Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Gen(a) => gen::cmd_gen(a, out).map(|_| true),
        Command::Eval(a) => gen::cmd_eval(a, out).map(|_| true),
        Command::Verify(a) => verify::cmd_verify(a, out),
        Command::Plot(a) => plot::cmd_plot(a, out).map(|_| true),
        Command::Numbers(a) => numbers::cmd_numbers(a, out).map(|_| true),
    }
}

/// Parses `argv` (without the program name) and runs it into `out`.
pub fn run_args<I, S>(argv: I, out: &mut dyn Write) -> Result<bool>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = Cli::try_parse_from(
        std::iter::once(std::ffi::OsString::from("gap")).chain(argv.into_iter().map(Into::into)),
    )?;
    run(&cli.command, out)
}
