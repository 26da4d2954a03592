//! Physical constants (CODATA 2018) and the reduced frequency variable.

use crate::error::{invalid, Result};

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054571817e-34;
/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 2.99792458e8;
/// Newtonian gravitational constant, m³/(kg·s²).
pub const GRAVITATIONAL_CONSTANT: f64 = 6.67430e-11;
/// Unified atomic mass unit, kg.
pub const ATOMIC_MASS_UNIT: f64 = 1.66053907e-27;
/// One MeV expressed in joules (exact, from the SI elementary charge).
pub const MEV: f64 = 1.602176634e-13;
/// One femtometre in metres.
pub const FEMTOMETRE: f64 = 1e-15;

/// The constant table used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub c: f64,
    pub gamma_g: f64,
    pub m_u: f64,
    /// ħc in MeV·fm, derived from `hbar` and `c`.
    pub hbar_c_mev_fm: f64,
}

impl Constants {
    /// ħc in J·m.
    pub fn hbar_c(&self) -> f64 {
        self.hbar * self.c
    }
}

pub fn si_constants() -> Constants {
    Constants {
        hbar: HBAR,
        c: SPEED_OF_LIGHT,
        gamma_g: GRAVITATIONAL_CONSTANT,
        m_u: ATOMIC_MASS_UNIT,
        hbar_c_mev_fm: HBAR * SPEED_OF_LIGHT / (MEV * FEMTOMETRE),
    }
}

/// The dimensionless combination x = ωr/c.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ReducedFrequency {
    pub x: f64,
}

pub fn reduced_frequency(omega: f64, r: f64) -> Result<ReducedFrequency> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid(format!("separation must be positive, got {r}")));
    }
    if !(omega >= 0.0) || !omega.is_finite() {
        return Err(invalid(format!("frequency must be non-negative, got {omega}")));
    }
    Ok(ReducedFrequency {
        x: omega * r / SPEED_OF_LIGHT,
    })
}
