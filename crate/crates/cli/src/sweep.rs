//! The `potential` subcommand: an r-sweep of the full, expanded and limiting
//! potentials.

use std::io::Write;
use std::path::{Path, PathBuf};

use harmonic_casimir::constants::{HBAR, MEV};
use harmonic_casimir::potential::{
    casimir_limit, potential_expanded, potential_full, vdw_limit_general, vdw_limit_london,
};
use harmonic_casimir::{
    expansion_polynomial, CoefficientSource, Error, ParticlePair, PolarizabilityModel, QuadratureSettings,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::args::{ModelKind, OutputFormat, PotentialArgs, Scale};
use crate::config::{resolve_shared, FileConfig};
use crate::error::CliError;
use crate::output::{raw_number, sci};

pub const CSV_HEADER: [&str; 7] = [
    "r_m",
    "V_full_J",
    "V_expanded_J",
    "V_vdw_J",
    "V_casimir_J",
    "err_estimate_J",
    "coeff_source",
];

/// A fully resolved sweep definition.
#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub model: ModelKind,
    pub alpha0: Option<f64>,
    #[serde(rename = "alpha0-2")]
    pub alpha0_2: Option<f64>,
    pub omega0: Option<f64>,
    pub table: Option<PathBuf>,
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
    pub scale: Scale,
    #[serde(serialize_with = "source_label")]
    pub coeff_source: CoefficientSource,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_panels: usize,
    pub output_format: OutputFormat,
}

fn source_label<S: serde::Serializer>(s: &CoefficientSource, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(s.label())
}

impl SweepConfig {
    pub fn from_args(args: &PotentialArgs) -> Result<Self, CliError> {
        let file = FileConfig::for_args(&args.shared)?;
        let shared = resolve_shared(&args.shared, &file)?;
        let model = args.model.or(file.model).unwrap_or(ModelKind::London);
        let omega0 = match (args.omega0.or(file.omega0), args.hbar_omega0_mev.or(file.hbar_omega0_mev)) {
            (Some(w), _) => Some(w),
            (None, Some(mev)) => Some(mev * MEV / HBAR),
            (None, None) => None,
        };
        let r_min = args
            .r_min
            .or(file.r_min)
            .ok_or_else(|| CliError::Invalid("--r-min is required".into()))?;
        let r_max = args
            .r_max
            .or(file.r_max)
            .ok_or_else(|| CliError::Invalid("--r-max is required".into()))?;
        let cfg = Self {
            model,
            alpha0: args.alpha0.or(file.alpha0),
            alpha0_2: args.alpha0_2.or(file.alpha0_2),
            omega0,
            table: args.table.clone().or(file.table),
            r_min,
            r_max,
            points: args.points.or(file.points).unwrap_or(50),
            scale: args.scale.or(file.scale).unwrap_or(Scale::Log),
            coeff_source: shared.coeff_source,
            rel_tol: shared.quadrature.rel_tol,
            abs_tol: shared.quadrature.abs_tol,
            max_panels: shared.quadrature.max_panels,
            output_format: shared.out,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.r_min > 0.0) || !self.r_max.is_finite() {
            return Err(CliError::Invalid("separations must be positive and finite".into()));
        }
        if !(self.r_min < self.r_max) {
            return Err(CliError::Invalid(format!(
                "r-min ({}) must be smaller than r-max ({})",
                self.r_min, self.r_max
            )));
        }
        if self.points < 2 {
            return Err(CliError::Invalid("points must be at least 2".into()));
        }
        self.quadrature().validate()?;
        Ok(())
    }

    pub fn quadrature(&self) -> QuadratureSettings {
        QuadratureSettings {
            rel_tol: self.rel_tol,
            abs_tol: self.abs_tol,
            max_panels: self.max_panels,
        }
    }

    pub fn models(&self) -> Result<(PolarizabilityModel, PolarizabilityModel), CliError> {
        let need_alpha = || {
            self.alpha0
                .ok_or_else(|| CliError::Invalid("--alpha0 is required for this model".into()))
        };
        match self.model {
            ModelKind::Constant => {
                let a1 = need_alpha()?;
                let a2 = self.alpha0_2.unwrap_or(a1);
                Ok((PolarizabilityModel::constant(a1)?, PolarizabilityModel::constant(a2)?))
            }
            ModelKind::London => {
                let a1 = need_alpha()?;
                let a2 = self.alpha0_2.unwrap_or(a1);
                let w0 = self
                    .omega0
                    .ok_or_else(|| CliError::Invalid("--omega0 or --hbar-omega0-mev is required for the London model".into()))?;
                Ok((PolarizabilityModel::london(a1, w0)?, PolarizabilityModel::london(a2, w0)?))
            }
            ModelKind::Tabulated => {
                if self.alpha0_2.is_some() {
                    return Err(CliError::Invalid("--alpha0-2 is not supported with a tabulated model".into()));
                }
                let path = self
                    .table
                    .as_ref()
                    .ok_or_else(|| CliError::Invalid("--table is required for the tabulated model".into()))?;
                let m = read_table(path)?;
                Ok((m.clone(), m))
            }
        }
    }

    pub fn separations(&self) -> Vec<f64> {
        let n = self.points;
        let mut rs: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    Scale::Linear => self.r_min + t * (self.r_max - self.r_min),
                    Scale::Log => {
                        let (lo, hi) = (self.r_min.log10(), self.r_max.log10());
                        10f64.powf(lo + t * (hi - lo))
                    }
                }
            })
            .collect();
        rs[0] = self.r_min;
        rs[n - 1] = self.r_max;
        rs
    }
}

/// Reads `omega,alpha` rows (header optional).
pub fn read_table(path: &Path) -> Result<PolarizabilityModel, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Invalid(format!("cannot read table {}: {e}", path.display())))?;
    let mut samples = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        if rec.len() != 2 {
            return Err(CliError::Invalid(format!("table row {} must have two columns", i + 1)));
        }
        let parsed = (rec[0].parse::<f64>(), rec[1].parse::<f64>());
        match parsed {
            (Ok(w), Ok(a)) => samples.push((w, a)),
            _ if i == 0 => continue,
            _ => return Err(CliError::Invalid(format!("table row {} is not numeric", i + 1))),
        }
    }
    Ok(PolarizabilityModel::tabulated(&samples)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub r_m: f64,
    pub v_full: f64,
    pub v_expanded: f64,
    /// `None` when the plateau integral diverges (non-decaying response).
    pub v_vdw: Option<f64>,
    pub v_casimir: f64,
    pub err_estimate: f64,
    pub coeff_source: CoefficientSource,
}

fn vdw_plateau(m1: &PolarizabilityModel, m2: &PolarizabilityModel, q: &QuadratureSettings) -> Result<Option<f64>, CliError> {
    if let (
        PolarizabilityModel::London { alpha0: a1, omega0: w1 },
        PolarizabilityModel::London { alpha0: a2, omega0: w2 },
    ) = (m1, m2)
    {
        if w1 == w2 {
            return Ok(Some(vdw_limit_london(*a1, *a2, *w1)?.value_si));
        }
    }
    let pair = ParticlePair::new(m1.clone(), m2.clone(), 1.0)?;
    match vdw_limit_general(&pair, q) {
        Ok(v) => Ok(Some(v.value_si)),
        Err(Error::Divergent { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Computes every row; rows run in parallel but come back in sweep order.
pub fn compute_rows(cfg: &SweepConfig) -> Result<Vec<Row>, CliError> {
    let (m1, m2) = cfg.models()?;
    let q = cfg.quadrature();
    let base = ParticlePair::new(m1.clone(), m2.clone(), cfg.r_min)?;
    base.check_stability()?;
    let v_vdw = vdw_plateau(&m1, &m2, &q)?;
    let poly = expansion_polynomial(cfg.coeff_source);
    cfg.separations()
        .into_par_iter()
        .map(|r| {
            let pair = base.with_separation(r)?;
            let full = potential_full(&pair, &q)?;
            let expanded = potential_expanded(&pair, &poly, &q)?;
            let casimir = casimir_limit(&pair, cfg.coeff_source)?;
            Ok(Row {
                r_m: r,
                v_full: full.value_si,
                v_expanded: expanded.value_si,
                v_vdw,
                v_casimir: casimir.value_si,
                err_estimate: full.error_estimate,
                coeff_source: cfg.coeff_source,
            })
        })
        .collect::<Result<Vec<_>, Error>>()
        .map_err(CliError::from)
}

#[derive(Serialize)]
struct JsonRow {
    r_m: Option<Box<RawValue>>,
    #[serde(rename = "V_full_J")]
    v_full: Option<Box<RawValue>>,
    #[serde(rename = "V_expanded_J")]
    v_expanded: Option<Box<RawValue>>,
    #[serde(rename = "V_vdw_J")]
    v_vdw: Option<Box<RawValue>>,
    #[serde(rename = "V_casimir_J")]
    v_casimir: Option<Box<RawValue>>,
    #[serde(rename = "err_estimate_J")]
    err_estimate: Option<Box<RawValue>>,
    coeff_source: &'static str,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    config: &'a SweepConfig,
    rows: Vec<JsonRow>,
}

pub fn write_rows(out: &mut dyn Write, cfg: &SweepConfig, rows: &[Row]) -> Result<(), CliError> {
    match cfg.output_format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in rows {
                w.write_record([
                    sci(r.r_m),
                    sci(r.v_full),
                    sci(r.v_expanded),
                    sci(r.v_vdw.unwrap_or(f64::NAN)),
                    sci(r.v_casimir),
                    sci(r.err_estimate),
                    r.coeff_source.label().to_owned(),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let doc = JsonDocument {
                config: cfg,
                rows: rows
                    .iter()
                    .map(|r| JsonRow {
                        r_m: raw_number(r.r_m),
                        v_full: raw_number(r.v_full),
                        v_expanded: raw_number(r.v_expanded),
                        v_vdw: r.v_vdw.and_then(raw_number),
                        v_casimir: raw_number(r.v_casimir),
                        err_estimate: raw_number(r.err_estimate),
                        coeff_source: r.coeff_source.label(),
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn run(args: &PotentialArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = SweepConfig::from_args(args)?;
    let rows = compute_rows(&cfg)?;
    write_rows(out, &cfg, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn london_cfg() -> SweepConfig {
        SweepConfig {
            model: ModelKind::London,
            alpha0: Some(1e-3),
            alpha0_2: None,
            omega0: Some(1.0),
            table: None,
            r_min: 1e5,
            r_max: 1e11,
            points: 5,
            scale: Scale::Log,
            coeff_source: CoefficientSource::SelfConsistent,
            rel_tol: 1e-10,
            abs_tol: 1e-16,
            max_panels: 2000,
            output_format: OutputFormat::Csv,
        }
    }

    #[test]
    fn log_and_linear_grids_hit_endpoints() {
        let mut c = london_cfg();
        let rs = c.separations();
        assert_eq!(rs.len(), 5);
        assert_eq!(rs[0], 1e5);
        assert_eq!(rs[4], 1e11);
        assert!((rs[2] / 1e8 - 1.0).abs() < 1e-12);
        c.scale = Scale::Linear;
        c.r_min = 1.0;
        c.r_max = 2.0;
        assert_eq!(c.separations(), vec![1.0, 1.25, 1.5, 1.75, 2.0]);
    }

    #[test]
    fn bad_configs_rejected() {
        let mut c = london_cfg();
        c.points = 1;
        assert!(c.validate().is_err());
        let mut c = london_cfg();
        c.r_min = c.r_max;
        assert!(c.validate().is_err());
        let mut c = london_cfg();
        c.omega0 = None;
        assert!(matches!(c.models(), Err(CliError::Invalid(_))));
    }

    #[test]
    fn constant_model_has_no_plateau() {
        let mut c = london_cfg();
        c.model = ModelKind::Constant;
        c.r_min = 1.0;
        c.r_max = 10.0;
        c.points = 2;
        let rows = compute_rows(&c).unwrap();
        assert!(rows.iter().all(|r| r.v_vdw.is_none()));
        assert!(rows[1].v_full < 0.0);
    }

    #[test]
    fn unstable_model_is_numerical_failure() {
        let mut c = london_cfg();
        c.alpha0 = Some(1.2);
        let e = compute_rows(&c).unwrap_err();
        assert_eq!(e.exit_code(), 3);
        assert!(e.to_string().contains("instability"));
    }

    #[test]
    fn csv_layout() {
        let c = london_cfg();
        let rows = compute_rows(&c).unwrap();
        let mut buf = Vec::new();
        write_rows(&mut buf, &c, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(lines.count(), 5);
    }
}
