use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use harmonic_casimir::CoefficientSource;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "hcasimir", version, about = "Retarded dispersion potential between harmonically bound composite particles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep the interaction potential over separations.
    Potential(PotentialArgs),
    /// Convert between mass and static polarizability.
    Calibrate(CalibrateArgs),
    /// Run the cross-module consistency checks.
    Verify(VerifyArgs),
    /// Non-retarded normal modes of a London pair.
    Modes(ModesArgs),
    /// Fields of an oscillating dipole at one point.
    Fields(FieldsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Constant,
    London,
    Tabulated,
}

fn parse_source(s: &str) -> Result<CoefficientSource, String> {
    s.parse().map_err(|e: harmonic_casimir::Error| e.to_string())
}

/// Flags accepted by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct SharedArgs {
    /// Casimir coefficient source: paper (25/16) or derived (11/8)
    #[arg(long, value_parser = parse_source)]
    pub coeff_source: Option<CoefficientSource>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long)]
    pub max_panels: Option<usize>,
    #[arg(long = "out", value_enum)]
    pub out: Option<OutputFormat>,
    /// Flat JSON object with the same keys as the flags; flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    /// static polarizability of particle 1 (and 2 unless --alpha0-2 is given)
    #[arg(long, allow_negative_numbers = true)]
    pub alpha0: Option<f64>,
    #[arg(long = "alpha0-2", allow_negative_numbers = true)]
    pub alpha0_2: Option<f64>,
    /// London resonance frequency, rad/s
    #[arg(long)]
    pub omega0: Option<f64>,
    /// London resonance energy ħω₀ in MeV (alternative to --omega0)
    #[arg(long)]
    pub hbar_omega0_mev: Option<f64>,
    /// CSV file with columns omega,alpha for the tabulated model
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub r_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    pub scale: Option<Scale>,
    #[command(flatten)]
    pub shared: SharedArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CalibrateArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub mass_kg: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha0: Option<f64>,
    #[command(flatten)]
    pub shared: SharedArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub shared: SharedArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ModesArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha0: Option<f64>,
    /// rad/s (default 1)
    #[arg(long)]
    pub omega0: Option<f64>,
    #[command(flatten)]
    pub shared: SharedArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FieldsArgs {
    /// rad/s
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// m
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    /// polar angle from the dipole axis, rad
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// s
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// dipole amplitude (default 1)
    #[arg(long, allow_negative_numbers = true)]
    pub p0: Option<f64>,
    #[command(flatten)]
    pub shared: SharedArgs,
}
