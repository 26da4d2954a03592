//! Mapping the Casimir branch onto Newtonian gravity.
//!
//! With α̃(0) = k·m the Casimir limit −(M/2π)ħc·α₁α₂/r becomes −γm₁m₂/r when
//! k² = 2πγ/(M·ħc). For the published moment M = 25/16 this is
//! k = √(32πγ/25ħc); for the self-consistent M = 11/8 it is √(16πγ/11ħc).

use std::f64::consts::PI;

use crate::coefficients::CoefficientSource;
use crate::constants::{GRAVITATIONAL_CONSTANT, HBAR, MEV, SPEED_OF_LIGHT};
use crate::error::{invalid, Result};
use crate::modes::ParticlePair;
use crate::polarizability::PolarizabilityModel;
use crate::potential::potential_full;
use crate::quadrature::QuadratureSettings;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Calibration {
    pub source: CoefficientSource,
    /// α̃(0) per kilogram
    pub k: f64,
}

impl Calibration {
    pub fn new(source: CoefficientSource) -> Self {
        let k = (2.0 * PI * GRAVITATIONAL_CONSTANT / (source.casimir_moment() * HBAR * SPEED_OF_LIGHT)).sqrt();
        Self { source, k }
    }
}

pub fn mass_to_polarizability(m: f64, cal: &Calibration) -> Result<f64> {
    if !(m > 0.0) || !m.is_finite() {
        return Err(invalid(format!("mass must be positive, got {m}")));
    }
    Ok(cal.k * m)
}

pub fn polarizability_to_mass(alpha0: f64, cal: &Calibration) -> Result<f64> {
    if !(alpha0 > 0.0) || !alpha0.is_finite() {
        return Err(invalid(format!("static polarizability must be positive, got {alpha0}")));
    }
    Ok(alpha0 / cal.k)
}

/// −γ·m₁·m₂/r in joules.
pub fn newton_potential(m1: f64, m2: f64, r: f64) -> Result<f64> {
    if !(m1 > 0.0) || !(m2 > 0.0) {
        return Err(invalid("masses must be positive"));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid(format!("separation must be positive, got {r}")));
    }
    Ok(-GRAVITATIONAL_CONSTANT * m1 * m2 / r)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonComparison {
    pub r: f64,
    pub v_dispersion: f64,
    pub v_newton: f64,
    pub relative_deviation: f64,
}

/// Full dispersion potential of two calibrated constant-α particles compared
/// with Newton's law at each separation.
pub fn newton_equivalence_report(
    m1: f64,
    m2: f64,
    r_values: &[f64],
    cal: &Calibration,
    q: &QuadratureSettings,
) -> Result<Vec<NewtonComparison>> {
    let a1 = mass_to_polarizability(m1, cal)?;
    let a2 = mass_to_polarizability(m2, cal)?;
    let base = ParticlePair::new(
        PolarizabilityModel::constant(a1)?,
        PolarizabilityModel::constant(a2)?,
        1.0,
    )?;
    r_values
        .iter()
        .map(|&r| {
            let pair = base.with_separation(r)?;
            let v_dispersion = potential_full(&pair, q)?.value_si;
            let v_newton = newton_potential(m1, m2, r)?;
            Ok(NewtonComparison {
                r,
                v_dispersion,
                v_newton,
                relative_deviation: ((v_dispersion - v_newton) / v_newton).abs(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBound {
    pub joules: f64,
    pub mev: f64,
}

/// Smallest ħω₀ that keeps the crossover below `r_c`:
/// ħω₀ = (8/3)(M/2π)·ħc/r_c.
pub fn characteristic_energy_bound(r_c: f64, source: CoefficientSource) -> Result<EnergyBound> {
    if !(r_c > 0.0) || !r_c.is_finite() {
        return Err(invalid(format!("crossover distance must be positive, got {r_c}")));
    }
    let joules = 8.0 / 3.0 * source.casimir_moment() / (2.0 * PI) * HBAR * SPEED_OF_LIGHT / r_c;
    Ok(EnergyBound {
        joules,
        mev: joules / MEV,
    })
}
