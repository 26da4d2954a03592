//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function has a plain-Rust twin (`*_impl`) so the logic is
//! testable on the host; the exports only translate errors into `JsError`.

use harmonic_casimir::constants::{HBAR, MEV, SPEED_OF_LIGHT};
use harmonic_casimir::fields::{field_time_domain_cartesian, MonochromaticDipole};
use harmonic_casimir::gravity::mass_to_polarizability;
use harmonic_casimir::potential::{casimir_limit, crossover_distance, potential_full, vdw_limit_london};
use harmonic_casimir::{Calibration, CoefficientSource, Error, ParticlePair, PolarizabilityModel, QuadratureSettings};
use wasm_bindgen::prelude::*;

/// A log-spaced sweep of the London-pair potential, energies in MeV.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Sweep {
    r_m: Vec<f64>,
    full_mev: Vec<f64>,
    casimir_derived_mev: Vec<f64>,
    casimir_paper_mev: Vec<f64>,
    vdw_mev: f64,
    crossover_m: f64,
}

#[wasm_bindgen]
impl Sweep {
    #[wasm_bindgen(getter)]
    pub fn r_m(&self) -> Vec<f64> {
        self.r_m.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn full_mev(&self) -> Vec<f64> {
        self.full_mev.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn casimir_derived_mev(&self) -> Vec<f64> {
        self.casimir_derived_mev.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn casimir_paper_mev(&self) -> Vec<f64> {
        self.casimir_paper_mev.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn vdw_mev(&self) -> f64 {
        self.vdw_mev
    }
    #[wasm_bindgen(getter)]
    pub fn crossover_m(&self) -> f64 {
        self.crossover_m
    }
}

pub fn potential_sweep_impl(
    alpha0: f64,
    hbar_omega0_mev: f64,
    rho_min: f64,
    rho_max: f64,
    points: usize,
) -> Result<Sweep, Error> {
    if !(rho_min > 0.0 && rho_min < rho_max && rho_max.is_finite()) {
        return Err(Error::InvalidInput("need 0 < rho_min < rho_max".into()));
    }
    if !(2..=2000).contains(&points) {
        return Err(Error::InvalidInput("points must be between 2 and 2000".into()));
    }
    let omega0 = hbar_omega0_mev * MEV / HBAR;
    let m = PolarizabilityModel::london(alpha0, omega0)?;
    let base = ParticlePair::new(m.clone(), m, SPEED_OF_LIGHT / omega0)?;
    base.check_stability()?;
    let q = QuadratureSettings::default();
    let (lo, hi) = (rho_min.log10(), rho_max.log10());
    let mut s = Sweep {
        r_m: Vec::with_capacity(points),
        full_mev: Vec::with_capacity(points),
        casimir_derived_mev: Vec::with_capacity(points),
        casimir_paper_mev: Vec::with_capacity(points),
        vdw_mev: vdw_limit_london(alpha0, alpha0, omega0)?.value_si / MEV,
        crossover_m: crossover_distance(omega0, CoefficientSource::SelfConsistent)?,
    };
    for i in 0..points {
        let rho = 10f64.powf(lo + (hi - lo) * i as f64 / (points - 1) as f64);
        let pair = base.with_separation(rho * SPEED_OF_LIGHT / omega0)?;
        s.r_m.push(pair.r);
        s.full_mev.push(potential_full(&pair, &q)?.value_si / MEV);
        s.casimir_derived_mev
            .push(casimir_limit(&pair, CoefficientSource::SelfConsistent)?.value_si / MEV);
        s.casimir_paper_mev
            .push(casimir_limit(&pair, CoefficientSource::PaperPublished)?.value_si / MEV);
    }
    Ok(s)
}

/// Potential of two identical London particles over ρ = rω₀/c ∈ [rho_min, rho_max].
#[wasm_bindgen]
pub fn potential_sweep(
    alpha0: f64,
    hbar_omega0_mev: f64,
    rho_min: f64,
    rho_max: f64,
    points: usize,
) -> Result<Sweep, JsError> {
    potential_sweep_impl(alpha0, hbar_omega0_mev, rho_min, rho_max, points).map_err(|e| JsError::new(&e.to_string()))
}

/// E_z of a ẑ-oriented dipole on an n×n grid of the x–z plane, row-major from
/// the top-left. Coordinates span ±extent in units of c/ω; `phase` is ωt.
/// Values are divided by 1 + x² so near and far zones share one colour scale.
pub fn field_map_impl(n: usize, extent: f64, phase: f64) -> Result<Vec<f64>, Error> {
    if !(2..=512).contains(&n) {
        return Err(Error::InvalidInput("grid size must be between 2 and 512".into()));
    }
    if !(extent > 0.0 && extent.is_finite() && phase.is_finite()) {
        return Err(Error::InvalidInput("extent must be positive and phase finite".into()));
    }
    // ω = c makes positions in metres equal to reduced distances x
    let dipole = MonochromaticDipole {
        p0: 1.0,
        omega: SPEED_OF_LIGHT,
    };
    let t = phase / SPEED_OF_LIGHT;
    let step = 2.0 * extent / (n - 1) as f64;
    let mut out = Vec::with_capacity(n * n);
    for row in 0..n {
        let z = extent - row as f64 * step;
        for col in 0..n {
            let x = -extent + col as f64 * step;
            let r2 = x * x + z * z;
            if r2 < (0.5 * step).powi(2) {
                out.push(f64::NAN);
                continue;
            }
            let f = field_time_domain_cartesian(&dipole, [x, 0.0, z], t)?;
            out.push(f.e[2] / (1.0 + r2));
        }
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn field_map(n: usize, extent: f64, phase: f64) -> Result<Vec<f64>, JsError> {
    field_map_impl(n, extent, phase).map_err(|e| JsError::new(&e.to_string()))
}

pub fn calibrate_mass_impl(mass_kg: f64, source: &str) -> Result<f64, Error> {
    let src: CoefficientSource = source.parse()?;
    mass_to_polarizability(mass_kg, &Calibration::new(src))
}

/// Static polarizability assigned to a mass; `source` is "paper" or "derived".
#[wasm_bindgen]
pub fn calibrate_mass(mass_kg: f64, source: &str) -> Result<f64, JsError> {
    calibrate_mass_impl(mass_kg, source).map_err(|e| JsError::new(&e.to_string()))
}
