//! Two-particle normal modes.
//!
//! The induced dipoles close a loop p₁ = α₁α₂γ̃²p₁; non-trivial solutions
//! exist where |Ã| = |I − α₁α₂γ̃²| vanishes. With γ̃ = g_par·α + g_perp·β the
//! determinant factorises into one longitudinal and two transverse factors.
//!
//! The zero-point energy shift is a sum over zeros minus poles of |Ã|. In the
//! non-retarded limit the zeros are known in closed form, which gives an
//! independent check of the imaginary-axis integral used for the potential.

use num_complex::Complex64;

use crate::constants::HBAR;
use crate::error::{invalid, Error, Result};
use crate::fields::{propagator, propagator_at, FrequencyAxis};
use crate::polarizability::PolarizabilityModel;
use crate::quadrature::{integrate_semi_infinite, QuadratureSettings};

#[derive(Debug, Clone, PartialEq)]
pub struct ParticlePair {
    pub model1: PolarizabilityModel,
    pub model2: PolarizabilityModel,
    /// separation, m
    pub r: f64,
}

impl ParticlePair {
    pub fn new(model1: PolarizabilityModel, model2: PolarizabilityModel, r: f64) -> Result<Self> {
        let pair = Self { model1, model2, r };
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r > 0.0) || !self.r.is_finite() {
            return Err(invalid(format!("separation must be positive, got {}", self.r)));
        }
        self.model1.validate()?;
        self.model2.validate()
    }

    pub fn with_separation(&self, r: f64) -> Result<Self> {
        Self::new(self.model1.clone(), self.model2.clone(), r)
    }

    /// α₁(0)·α₂(0)
    pub fn static_coupling(&self) -> f64 {
        self.model1.static_value() * self.model2.static_value()
    }

    /// Upper bound of α₁(iω)·α₂(iω) over ω ≥ 0.
    pub fn coupling_bound(&self) -> f64 {
        self.model1.upper_bound() * self.model2.upper_bound()
    }

    /// The imaginary-axis coupling terms are bounded by their value at ω = 0,
    /// so a coupling bound below one keeps |Ã(iω)| positive everywhere.
    pub fn check_stability(&self) -> Result<()> {
        let a = self.coupling_bound();
        if a >= 1.0 {
            return Err(Error::Instability(format!(
                "α₁(0)·α₂(0) = {a} ≥ 1: the coupled pair has no stable ground state"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeterminantValue {
    /// Real on the imaginary axis.
    pub value: Complex64,
    pub omega: f64,
    pub axis: FrequencyAxis,
}

/// |Ã| at real frequency ω or imaginary frequency iω.
pub fn determinant(pair: &ParticlePair, omega: f64, axis: FrequencyAxis) -> Result<DeterminantValue> {
    pair.validate()?;
    match axis {
        FrequencyAxis::Real => {
            let v = determinant_at(pair, Complex64::new(omega, 0.0))?;
            Ok(DeterminantValue { value: v, omega, axis })
        }
        FrequencyAxis::Imaginary => {
            let v = imaginary_axis_determinant(pair, omega)?;
            Ok(DeterminantValue {
                value: Complex64::new(v, 0.0),
                omega,
                axis,
            })
        }
    }
}

/// Real-axis determinant continued to complex frequency z.
pub fn determinant_at(pair: &ParticlePair, z: Complex64) -> Result<Complex64> {
    let g = propagator_at(z, pair.r)?;
    let a = pair.model1.eval_complex(z)? * pair.model2.eval_complex(z)?;
    let one = Complex64::new(1.0, 0.0);
    let t = one - a * g.g_perp * g.g_perp;
    Ok((one - a * g.g_par * g.g_par) * t * t)
}

pub(crate) fn imaginary_axis_determinant(pair: &ParticlePair, omega: f64) -> Result<f64> {
    let (eps_par, eps_perp) = coupling_terms(pair, omega)?;
    let t = 1.0 - eps_perp;
    Ok((1.0 - eps_par) * t * t)
}

/// α₁α₂·g_par² and α₁α₂·g_perp² on the imaginary axis.
pub(crate) fn coupling_terms(pair: &ParticlePair, omega: f64) -> Result<(f64, f64)> {
    let g = propagator(omega, FrequencyAxis::Imaginary, pair.r)?;
    let a = pair.model1.eval(omega)? * pair.model2.eval(omega)?;
    Ok((a * g.g_par.re * g.g_par.re, a * g.g_perp.re * g.g_perp.re))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    /// rad/s
    pub frequency: f64,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeSpectrum {
    /// Zeros of |Ã|: the coupled normal modes.
    pub modes: Vec<Mode>,
    /// Poles of |Ã|: the modes at infinite separation.
    pub reference: Vec<Mode>,
}

impl ModeSpectrum {
    pub fn validate(&self) -> Result<()> {
        for m in self.modes.iter().chain(&self.reference) {
            if !(m.frequency > 0.0) || m.multiplicity == 0 {
                return Err(invalid("mode frequencies must be positive with multiplicity >= 1"));
            }
        }
        Ok(())
    }
}

/// Normal modes of two identical London particles with the retardation
/// factor set to one (both propagator brackets equal −1).
///
/// |Ã| = (1 − α(z)²)³ with α(z) = α₀/(1 − (z/ω₀)²) vanishes at
/// ω₀√(1 − α₀) and ω₀√(1 + α₀), each three-fold, and has a sixfold pole at ω₀.
pub fn nonretarded_mode_spectrum(alpha0: f64, omega0: f64) -> Result<ModeSpectrum> {
    if !(omega0 > 0.0) || !omega0.is_finite() {
        return Err(invalid(format!("resonance frequency must be positive, got {omega0}")));
    }
    if !(alpha0 > 0.0) || !alpha0.is_finite() {
        return Err(invalid(format!("polarizability must be positive, got {alpha0}")));
    }
    if alpha0 >= 1.0 {
        return Err(Error::Instability(format!(
            "α₀ = {alpha0} ≥ 1: the lower mode frequency would be imaginary"
        )));
    }
    Ok(ModeSpectrum {
        modes: vec![
            Mode {
                frequency: omega0 * (1.0 - alpha0).sqrt(),
                multiplicity: 3,
            },
            Mode {
                frequency: omega0 * (1.0 + alpha0).sqrt(),
                multiplicity: 3,
            },
        ],
        reference: vec![Mode {
            frequency: omega0,
            multiplicity: 6,
        }],
    })
}

/// (ħ/2)(Σ zeros − Σ poles), in joules.
pub fn zero_point_energy_mode_sum(spectrum: &ModeSpectrum) -> f64 {
    let sum = |ms: &[Mode]| -> f64 { ms.iter().map(|m| m.multiplicity as f64 * m.frequency).sum() };
    0.5 * HBAR * (sum(&spectrum.modes) - sum(&spectrum.reference))
}

/// (ħ/2π)∫₀^∞ dω 3·ln(1 − α₀²/(1 + (ω/ω₀)²)²), in joules.
pub fn zero_point_energy_imaginary_axis_nonretarded(
    alpha0: f64,
    omega0: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    if !(omega0 > 0.0) || !omega0.is_finite() {
        return Err(invalid(format!("resonance frequency must be positive, got {omega0}")));
    }
    if !(alpha0 >= 0.0) || !alpha0.is_finite() {
        return Err(invalid(format!("polarizability must be non-negative, got {alpha0}")));
    }
    if alpha0 >= 1.0 {
        return Err(Error::Instability(format!("α₀ = {alpha0} ≥ 1")));
    }
    if alpha0 == 0.0 {
        return Ok(0.0);
    }
    let a2 = alpha0 * alpha0;
    // u = ω/ω₀, integrand normalised by α₀²
    let f = |u: f64| {
        let d = 1.0 + u * u;
        3.0 * (-a2 / (d * d)).ln_1p() / a2
    };
    let res = integrate_semi_infinite(f, 0.0, 1.0, &[], settings).map_err(|e| match e {
        Error::NumericalFailure { detail, .. } => Error::NumericalFailure {
            operation: "zero_point_energy_imaginary_axis_nonretarded",
            detail,
        },
        other => other,
    })?;
    Ok(HBAR * omega0 * a2 * res.value / (2.0 * std::f64::consts::PI))
}
