//! Cross-module consistency checks, each pairing a computation with an
//! independent route to the same number.
//!
//! Sample points come from a fixed low-discrepancy sequence so that reports
//! are reproducible.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coefficients::{expansion_polynomial, CoefficientSource};
use crate::constants::{ATOMIC_MASS_UNIT, HBAR, MEV, SPEED_OF_LIGHT as C};
use crate::error::Result;
use crate::fields::{
    field_frequency_domain, field_time_domain, maxwell_residual, projectors, propagator, propagator_at,
    static_dipole_field, DifferenceSteps, DipoleMoment, EvaluationPoint, FrequencyAxis, MonochromaticDipole,
};
use crate::gravity::{characteristic_energy_bound, mass_to_polarizability, newton_equivalence_report, Calibration};
use crate::modes::{
    determinant, determinant_at, nonretarded_mode_spectrum, zero_point_energy_imaginary_axis_nonretarded,
    zero_point_energy_mode_sum, ParticlePair,
};
use crate::polarizability::PolarizabilityModel;
use crate::potential::{casimir_limit, crossover_distance, potential_full, vdw_limit_london};
use crate::quadrature::QuadratureSettings;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Weyl sequence in [0, 1)^d.
pub(crate) struct Weyl {
    n: u64,
}

impl Weyl {
    pub(crate) fn new() -> Self {
        Self { n: 0 }
    }

    pub(crate) fn next<const D: usize>(&mut self) -> [f64; D] {
        self.n += 1;
        // generalised golden ratios
        let phi = match D {
            1 => 1.618033988749895,
            2 => 1.324717957244746,
            3 => 1.220744084605759,
            _ => 1.0 + 1.0 / (D as f64 + 1.0),
        };
        std::array::from_fn(|i| {
            let alpha = 1.0 / phi.powi(i as i32 + 1);
            (0.5 + alpha * self.n as f64).fract()
        })
    }
}

pub(crate) fn unit_vector(u: [f64; 2]) -> [f64; 3] {
    let z = 2.0 * u[0] - 1.0;
    let s = (1.0 - z * z).max(0.0).sqrt();
    let phi = 2.0 * PI * u[1];
    [s * phi.cos(), s * phi.sin(), z]
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs().max(a.abs())
    }
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    match f() {
        Ok((passed, detail)) => CheckResult { name, passed, detail },
        Err(e) => CheckResult {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

pub fn projector_identities() -> CheckResult {
    check("projector identities", || {
        let mut seq = Weyl::new();
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let p = projectors(unit_vector(seq.next::<2>()))?;
            let (a, b) = (p.alpha_tensor, p.beta_tensor);
            for i in 0..3 {
                for j in 0..3 {
                    let aa: f64 = (0..3).map(|k| a[i][k] * a[k][j]).sum();
                    let bb: f64 = (0..3).map(|k| b[i][k] * b[k][j]).sum();
                    let ab: f64 = (0..3).map(|k| a[i][k] * b[k][j]).sum();
                    let id = if i == j { 1.0 } else { 0.0 };
                    worst = worst
                        .max((aa - a[i][j]).abs())
                        .max((bb - b[i][j]).abs())
                        .max(ab.abs())
                        .max((a[i][j] + b[i][j] - id).abs());
                }
            }
        }
        Ok((worst <= 1e-12, format!("1000 axes, max deviation {worst:.2e}")))
    })
}

pub fn wick_consistency() -> CheckResult {
    check("Wick rotation of propagator and determinant", || {
        let r = 1.0;
        let mut worst: f64 = 0.0;
        let m = PolarizabilityModel::london(0.3, 0.8 * C)?;
        let pair = ParticlePair::new(m.clone(), m, r)?;
        for x in [0.01, 0.5, 1.0, 3.0, 10.0] {
            let w = x * C / r;
            let direct = propagator(w, FrequencyAxis::Imaginary, r)?;
            let rotated = propagator_at(Complex64::new(0.0, w), r)?;
            for (d, z) in [(direct.g_par, rotated.g_par), (direct.g_perp, rotated.g_perp)] {
                let dev = if d.re == 0.0 { z.norm() } else { (z - d).norm() / d.norm() };
                worst = worst.max(dev);
            }
            let det = determinant(&pair, w, FrequencyAxis::Imaginary)?.value;
            let det_z = determinant_at(&pair, Complex64::new(0.0, w))?;
            worst = worst.max((det_z - det).norm() / det.norm());
        }
        Ok((worst <= 1e-12, format!("max relative deviation {worst:.2e}")))
    })
}

pub fn static_field() -> CheckResult {
    check("static dipole field equals -p", || {
        let mut seq = Weyl::new();
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let u = seq.next::<3>();
            let p = [4.0 * u[0] - 2.0, 4.0 * u[1] - 2.0, 4.0 * u[2] - 2.0];
            let f = static_dipole_field(&DipoleMoment { p });
            for ((e, b), p) in f.e.iter().zip(&f.b).zip(&p) {
                worst = worst.max((e + p).abs()).max(b.abs());
            }
            let d = MonochromaticDipole { p0: p[2], omega: 0.0 };
            let th = PI * u[0];
            let s = field_time_domain(&d, &EvaluationPoint::new(1.0 + 100.0 * u[1], th, 0.0)?)?.to_cartesian(th, 0.0);
            worst = worst.max(s.e[0].abs()).max(s.e[1].abs()).max((s.e[2] + p[2]).abs() / 2.0);
        }
        Ok((worst <= 4.0 * f64::EPSILON, format!("max deviation {worst:.2e}")))
    })
}

/// Largest relative disagreement between the time-domain field and the real
/// part of the frequency-domain field over `n` sample points.
pub fn time_frequency_deviation(n: usize) -> Result<f64> {
    let mut seq = Weyl::new();
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let u = seq.next::<3>();
        let r = 0.1 + 10.0 * u[0];
        let theta = PI * u[1];
        let x = 0.01 + 10.0 * u[2];
        let omega = x * C / r;
        let t = (u[0] + u[1]) * 4.0 * PI / omega;
        let p0 = 0.5 + u[2];
        let d = MonochromaticDipole { p0, omega };
        let time = field_time_domain(&d, &EvaluationPoint::new(r, theta, t)?)?.to_cartesian(theta, 0.0);
        let r_vec = [r * theta.sin(), 0.0, r * theta.cos()];
        let freq = field_frequency_domain([0.0, 0.0, 1.0], Complex64::new(p0, 0.0), omega, r_vec)?;
        let phase = Complex64::new(0.0, -omega * t).exp();
        let scale = p0 * (1.0 + x) * (1.0 + x);
        for (f, e) in freq.iter().zip(&time.e) {
            worst = worst.max(((f * phase).re - e).abs() / scale);
        }
    }
    Ok(worst)
}

pub fn time_frequency_agreement() -> CheckResult {
    check("time/frequency field agreement", || {
        let worst = time_frequency_deviation(100)?;
        Ok((worst <= 1e-10, format!("100 points, max relative deviation {worst:.2e}")))
    })
}

/// Observed convergence orders log₂(res(h)/res(h/2)) over three halvings.
pub fn maxwell_orders(dipole: &MonochromaticDipole, point: &EvaluationPoint) -> Result<Vec<f64>> {
    let mut steps = DifferenceSteps::default_for(dipole, point.r);
    let mut prev = maxwell_residual(dipole, point, steps)?.magnitude();
    let mut orders = Vec::with_capacity(3);
    for _ in 0..3 {
        steps = steps.halved();
        let cur = maxwell_residual(dipole, point, steps)?.magnitude();
        orders.push((prev / cur).log2());
        prev = cur;
    }
    Ok(orders)
}

pub fn maxwell_convergence() -> CheckResult {
    check("homogeneous Maxwell residual order", || {
        let cases = [
            (MonochromaticDipole { p0: 1.0, omega: 1.3 * C }, EvaluationPoint::new(1.7, 1.1, 0.4 / C)?),
            (MonochromaticDipole { p0: 0.7, omega: 0.2 * C }, EvaluationPoint::new(3.0, 0.4, 2.0 / C)?),
            (MonochromaticDipole { p0: 2.0, omega: 5.0 * C }, EvaluationPoint::new(0.9, 2.5, -1.0 / C)?),
        ];
        let mut all = Vec::new();
        for (d, p) in &cases {
            all.extend(maxwell_orders(d, p)?);
        }
        let ok = all.iter().all(|o| (o - 2.0).abs() <= 0.2);
        let lo = all.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = all.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Ok((ok, format!("orders in [{lo:.3}, {hi:.3}]")))
    })
}

pub fn argument_principle() -> CheckResult {
    check("mode sum vs imaginary-axis integral", || {
        let q = QuadratureSettings::default();
        let mut worst: f64 = 0.0;
        for a in [0.01, 0.1, 0.3, 0.5] {
            let sum = zero_point_energy_mode_sum(&nonretarded_mode_spectrum(a, 1.0)?);
            let integral = zero_point_energy_imaginary_axis_nonretarded(a, 1.0, &q)?;
            let closed = 1.5 * HBAR * ((1.0 - a).sqrt() + (1.0 + a).sqrt() - 2.0);
            worst = worst.max(rel(integral, sum)).max(rel(sum, closed));
        }
        Ok((worst <= 1e-8, format!("α₀ ∈ {{0.01, 0.1, 0.3, 0.5}}, max relative deviation {worst:.2e}")))
    })
}

pub fn casimir_moment() -> CheckResult {
    check("constant-α Casimir moment", || {
        let q = QuadratureSettings::default();
        let pair = ParticlePair::new(
            PolarizabilityModel::constant(1e-3)?,
            PolarizabilityModel::constant(1e-3)?,
            1.0,
        )?;
        let m = potential_full(&pair, &q)?.reduced_moment(1.0, 1e-6);
        let derived = CoefficientSource::SelfConsistent.casimir_moment();
        let published = CoefficientSource::PaperPublished.casimir_moment();
        let ok = (m - derived).abs() <= 1e-5;
        Ok((
            ok,
            format!(
                "quadrature {m:.6}; derived moment {derived} (cubic coefficient {}), published moment {published} \
                 (cubic coefficient {}); the published coefficient is not reproduced by the determinant",
                expansion_polynomial(CoefficientSource::SelfConsistent).coefficients[3],
                expansion_polynomial(CoefficientSource::PaperPublished).coefficients[3],
            ),
        ))
    })
}

pub fn vdw_matching() -> CheckResult {
    check("van der Waals plateau", || {
        let q = QuadratureSettings::default();
        let a0 = 1e-2;
        let mut detail = Vec::new();
        let mut ok = true;
        for rho in [1e-3, 1e-2] {
            let m = PolarizabilityModel::london(a0, 1.0)?;
            let pair = ParticlePair::new(m.clone(), m, rho * C)?;
            let full = potential_full(&pair, &q)?.value_si;
            let plateau = vdw_limit_london(a0, a0, 1.0)?.value_si;
            let dev = rel(full, plateau);
            ok &= dev <= 5.0 * rho;
            detail.push(format!("ρ={rho:e}: {dev:.2e}"));
        }
        Ok((ok, detail.join(", ")))
    })
}

pub fn casimir_matching() -> CheckResult {
    check("Casimir 1/r branch", || {
        let q = QuadratureSettings::default();
        let a0 = 1e-4;
        let mut detail = Vec::new();
        let mut ok = true;
        for rho in [1e2, 1e3] {
            let m = PolarizabilityModel::london(a0, 1.0)?;
            let pair = ParticlePair::new(m.clone(), m, rho * C)?;
            let full = potential_full(&pair, &q)?.value_si;
            let lim = casimir_limit(&pair, CoefficientSource::SelfConsistent)?.value_si;
            let ratio = full / lim;
            ok &= (ratio - 1.0).abs() <= 5.0 / rho;
            detail.push(format!("ρ={rho:e}: ratio {ratio:.6}"));
        }
        Ok((ok, detail.join(", ")))
    })
}

pub fn atomic_mass_unit() -> CheckResult {
    check("α_u reproduction (published calibration)", || {
        let a = mass_to_polarizability(ATOMIC_MASS_UNIT, &Calibration::new(CoefficientSource::PaperPublished))?;
        Ok(((a / 1.529e-19 - 1.0).abs() <= 1e-3, format!("α_u = {a:.4e} (expected 1.529e-19)")))
    })
}

pub fn crossover_and_bound() -> CheckResult {
    check("crossover distance and energy bound", || {
        let rc = crossover_distance(130.9 * MEV / HBAR, CoefficientSource::PaperPublished)?;
        let e = characteristic_energy_bound(1e-15, CoefficientSource::PaperPublished)?;
        let ok = (rc / 1e-15 - 1.0).abs() <= 5e-3 && (125.0..=135.0).contains(&e.mev);
        Ok((ok, format!("r_c = {rc:.4e} m, ħω₀ ≥ {:.2} MeV", e.mev)))
    })
}

pub fn newton_equivalence() -> CheckResult {
    check("Newton equivalence", || {
        let q = QuadratureSettings::default();
        let rs = [1e-10, 1e-5, 1.0];
        let m = ATOMIC_MASS_UNIT;
        let matched = newton_equivalence_report(m, m, &rs, &Calibration::new(CoefficientSource::SelfConsistent), &q)?;
        let mismatched = newton_equivalence_report(m, m, &rs, &Calibration::new(CoefficientSource::PaperPublished), &q)?;
        let worst = matched.iter().map(|c| c.relative_deviation).fold(0.0, f64::max);
        let gap_ok = mismatched.iter().all(|c| (c.relative_deviation - 0.12).abs() <= 0.01);
        Ok((
            worst <= 1e-5 && gap_ok,
            format!(
                "matched sources deviation {worst:.2e}; published calibration deviation {:.4}",
                mismatched[0].relative_deviation
            ),
        ))
    })
}

/// Every check, in a fixed order.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        projector_identities(),
        wick_consistency(),
        static_field(),
        time_frequency_agreement(),
        maxwell_convergence(),
        argument_principle(),
        casimir_moment(),
        vdw_matching(),
        casimir_matching(),
        atomic_mass_unit(),
        crossover_and_bound(),
        newton_equivalence(),
    ]
}
