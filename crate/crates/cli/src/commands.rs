//! `calibrate`, `verify`, `modes` and `fields`.

use std::io::Write;

use harmonic_casimir::constants::{HBAR, MEV};
use harmonic_casimir::fields::{
    field_frequency_domain, field_time_domain, maxwell_residual, DifferenceSteps, EvaluationPoint,
    MonochromaticDipole,
};
use harmonic_casimir::gravity::{mass_to_polarizability, polarizability_to_mass};
use harmonic_casimir::modes::{
    nonretarded_mode_spectrum, zero_point_energy_imaginary_axis_nonretarded, zero_point_energy_mode_sum,
};
use harmonic_casimir::verify::run_all;
use harmonic_casimir::Calibration;
use num_complex::Complex64;
use serde::Serialize;

use crate::args::{CalibrateArgs, FieldsArgs, ModesArgs, OutputFormat, VerifyArgs};
use crate::config::{resolve_shared, FileConfig};
use crate::error::CliError;
use crate::output::{write_record, Record};

pub fn calibrate(args: &CalibrateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = FileConfig::for_args(&args.shared)?;
    let shared = resolve_shared(&args.shared, &file)?;
    let cal = Calibration::new(shared.coeff_source);
    let (mass, alpha0) = match (args.mass_kg.or(file.mass_kg), args.alpha0.or(file.alpha0)) {
        (Some(m), None) => (m, mass_to_polarizability(m, &cal)?),
        (None, Some(a)) => (polarizability_to_mass(a, &cal)?, a),
        (None, None) => (1.0 / cal.k, 1.0),
        (Some(_), Some(_)) => {
            return Err(CliError::Invalid("give either --mass-kg or --alpha0, not both".into()));
        }
    };
    let mut rec = Record::default();
    rec.push("coeff_source", shared.coeff_source.label())
        .push("casimir_moment", shared.coeff_source.casimir_moment())
        .push("k_per_kg", cal.k)
        .push("mass_kg", mass)
        .push("alpha0", alpha0);
    write_record(out, shared.out, &rec)
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    passed: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    checks: Vec<CheckJson<'a>>,
    passed: usize,
    total: usize,
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = FileConfig::for_args(&args.shared)?;
    let shared = resolve_shared(&args.shared, &file)?;
    let checks = run_all();
    let passed = checks.iter().filter(|c| c.passed).count();
    match shared.out {
        OutputFormat::Csv => {
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", c.name, c.detail)?;
            }
            writeln!(out, "{passed}/{} checks passed", checks.len())?;
        }
        OutputFormat::Json => {
            let doc = VerifyJson {
                checks: checks
                    .iter()
                    .map(|c| CheckJson {
                        name: c.name,
                        passed: c.passed,
                        detail: &c.detail,
                    })
                    .collect(),
                passed,
                total: checks.len(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(CliError::Verification(format!("{}: {}", c.name, c.detail))),
        None => Ok(()),
    }
}

pub fn modes(args: &ModesArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = FileConfig::for_args(&args.shared)?;
    let shared = resolve_shared(&args.shared, &file)?;
    let alpha0 = args
        .alpha0
        .or(file.alpha0)
        .ok_or_else(|| CliError::Invalid("--alpha0 is required".into()))?;
    let omega0 = args.omega0.or(file.omega0).unwrap_or(1.0);
    let spectrum = nonretarded_mode_spectrum(alpha0, omega0)?;
    let e_sum = zero_point_energy_mode_sum(&spectrum);
    let e_int = zero_point_energy_imaginary_axis_nonretarded(alpha0, omega0, &shared.quadrature)?;
    let unit = HBAR * omega0;

    let mut rec = Record::default();
    for (i, m) in spectrum.modes.iter().enumerate() {
        rec.push(format!("mode_{}_rad_s", i + 1), m.frequency)
            .push(format!("mode_{}_multiplicity", i + 1), m.multiplicity);
    }
    for (i, m) in spectrum.reference.iter().enumerate() {
        rec.push(format!("pole_{}_rad_s", i + 1), m.frequency)
            .push(format!("pole_{}_multiplicity", i + 1), m.multiplicity);
    }
    rec.push("energy_mode_sum_J", e_sum)
        .push("energy_imaginary_axis_J", e_int)
        .push("energy_mode_sum_hbar_omega0", e_sum / unit)
        .push("energy_imaginary_axis_hbar_omega0", e_int / unit)
        .push("energy_mode_sum_MeV", e_sum / MEV)
        .push("relative_difference", ((e_sum - e_int) / e_sum).abs());
    write_record(out, shared.out, &rec)
}

pub fn fields(args: &FieldsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = FileConfig::for_args(&args.shared)?;
    let shared = resolve_shared(&args.shared, &file)?;
    let required = |v: Option<f64>, name: &str| v.ok_or_else(|| CliError::Invalid(format!("--{name} is required")));
    let omega = required(args.omega.or(file.omega), "omega")?;
    let r = required(args.r.or(file.r), "r")?;
    let theta = required(args.theta.or(file.theta), "theta")?;
    let t = args.t.or(file.t).unwrap_or(0.0);
    let p0 = args.p0.or(file.p0).unwrap_or(1.0);
    if !(omega >= 0.0) || !omega.is_finite() {
        return Err(CliError::Invalid(format!("omega must be non-negative, got {omega}")));
    }
    if !p0.is_finite() {
        return Err(CliError::Invalid("p0 must be finite".into()));
    }

    let dipole = MonochromaticDipole { p0, omega };
    let point = EvaluationPoint::new(r, theta, t)?;
    let f = field_time_domain(&dipole, &point)?;

    // frequency-domain cross-check in the φ = 0 half-plane
    let (st, ct) = theta.sin_cos();
    let e_freq = field_frequency_domain([0.0, 0.0, 1.0], Complex64::new(p0, 0.0), omega, [r * st, 0.0, r * ct])?;
    let phase = Complex64::from_polar(1.0, -omega * t);
    let e_cart: [f64; 3] = std::array::from_fn(|i| (e_freq[i] * phase).re);
    let e_r_freq = e_cart[0] * st + e_cart[2] * ct;
    let e_theta_freq = e_cart[0] * ct - e_cart[2] * st;
    let x = omega * r / harmonic_casimir::constants::SPEED_OF_LIGHT;
    let scale = p0.abs().max(f64::MIN_POSITIVE) * (1.0 + x).powi(2);
    let deviation = (f.e[0] - e_r_freq).abs().max((f.e[1] - e_theta_freq).abs()) / scale;

    let steps = DifferenceSteps::default_for(&dipole, r);
    let res = maxwell_residual(&dipole, &point, steps)?;

    let mut rec = Record::default();
    rec.push("x", x)
        .push("E_r", f.e[0])
        .push("E_theta", f.e[1])
        .push("B_phi", f.b[2])
        .push("E_r_frequency_domain", e_r_freq)
        .push("E_theta_frequency_domain", e_theta_freq)
        .push("time_frequency_deviation", deviation)
        .push("maxwell_curl_residual", (res.curl.iter().map(|v| v * v).sum::<f64>()).sqrt())
        .push("maxwell_div_residual", res.div.abs())
        .push("step_m", steps.space)
        .push("step_s", steps.time);
    write_record(out, shared.out, &rec)
}
