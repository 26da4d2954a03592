//! `--config` files: a flat JSON object whose keys mirror the long flags.

use std::path::{Path, PathBuf};

use harmonic_casimir::{CoefficientSource, QuadratureSettings};
use serde::Deserialize;

use crate::args::{ModelKind, OutputFormat, Scale, SharedArgs};
use crate::error::CliError;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FileConfig {
    pub coeff_source: Option<String>,
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub max_panels: Option<usize>,
    pub out: Option<OutputFormat>,

    pub model: Option<ModelKind>,
    pub alpha0: Option<f64>,
    #[serde(rename = "alpha0-2")]
    pub alpha0_2: Option<f64>,
    pub omega0: Option<f64>,
    pub hbar_omega0_mev: Option<f64>,
    pub table: Option<PathBuf>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub points: Option<usize>,
    pub scale: Option<Scale>,

    pub mass_kg: Option<f64>,

    pub omega: Option<f64>,
    pub r: Option<f64>,
    pub theta: Option<f64>,
    pub t: Option<f64>,
    pub p0: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("bad config {}: {e}", path.display())))
    }

    pub fn for_args(shared: &SharedArgs) -> Result<Self, CliError> {
        match &shared.config {
            Some(p) => Self::load(p),
            None => Ok(Self::default()),
        }
    }
}

/// Shared settings after merging flags over the config file.
#[derive(Debug, Clone, Copy)]
pub struct Resolved {
    pub coeff_source: CoefficientSource,
    pub quadrature: QuadratureSettings,
    pub out: OutputFormat,
}

pub fn resolve_shared(shared: &SharedArgs, file: &FileConfig) -> Result<Resolved, CliError> {
    let coeff_source = match (shared.coeff_source, &file.coeff_source) {
        (Some(s), _) => s,
        (None, Some(s)) => s.parse()?,
        (None, None) => CoefficientSource::default(),
    };
    let d = QuadratureSettings::default();
    let quadrature = QuadratureSettings {
        rel_tol: shared.rel_tol.or(file.rel_tol).unwrap_or(d.rel_tol),
        abs_tol: shared.abs_tol.or(file.abs_tol).unwrap_or(d.abs_tol),
        max_panels: shared.max_panels.or(file.max_panels).unwrap_or(d.max_panels),
    };
    quadrature.validate()?;
    Ok(Resolved {
        coeff_source,
        quadrature,
        out: shared.out.or(file.out).unwrap_or(OutputFormat::Csv),
    })
}
