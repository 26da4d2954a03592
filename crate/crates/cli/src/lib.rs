//! Command-line front end for the `harmonic-casimir` library.
//!
//! [`run`] writes to any sink so the commands can be exercised in-process.

// `!(x > 0.0)` guards are deliberate: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod sweep;

use std::io::Write;

pub use args::Cli;
pub use error::CliError;

use args::Command;

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Potential(a) => sweep::run(a, out),
        Command::Calibrate(a) => commands::calibrate(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Modes(a) => commands::modes(a, out),
        Command::Fields(a) => commands::fields(a, out),
    }
}
