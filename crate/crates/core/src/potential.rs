//! The dispersion interaction V(r) between two composite particles.
//!
//! V(r) = (ħ/2π)∫₀^∞ dω ln|Ã(iω)|. The integral is carried out in the reduced
//! frequency x = ωr/c, so that
//!
//! ```text
//! V(r) = (ħc / 2πr) ∫₀^∞ dx ln|Ã(i x c/r)|
//! ```
//!
//! and normalised by the coupling bound sup α₁·sup α₂ so that tolerances are
//! meaningful even when α₁α₂ is of order 1e-38. The integration is cut at a
//! point where e^{−2x} has killed the coupling, and the analytic bound on the
//! neglected tail is added to the error estimate.

use std::f64::consts::PI;

use crate::coefficients::{expansion_polynomial, CoefficientSource, ExpansionPolynomial};
use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{invalid, Error, Result};
use crate::modes::{coupling_terms, ParticlePair};
use crate::quadrature::{integrate, integrate_semi_infinite, QuadratureResult, QuadratureSettings};

/// Knees beyond this reduced frequency do not matter: e^{−2x} dominates.
const KNEE_CAP: f64 = 40.0;
/// Distance past the last breakpoint at which the integration stops.
const TAIL_MARGIN: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Full,
    Expanded,
    VdwLimit,
    CasimirLimit,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Full => "full",
            Self::Expanded => "expanded",
            Self::VdwLimit => "vdw",
            Self::CasimirLimit => "casimir",
        }
    }
}

/// The energy unit a reduced value is expressed in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnergyScale {
    /// ħω, ω in rad/s
    HbarOmega { omega: f64 },
    /// ħc/r, r in m
    HbarCOverR { r: f64 },
}

impl EnergyScale {
    pub fn joules(&self) -> f64 {
        match *self {
            Self::HbarOmega { omega } => HBAR * omega,
            Self::HbarCOverR { r } => HBAR * SPEED_OF_LIGHT / r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialResult {
    /// J
    pub value_si: f64,
    /// `value_si` in units of `scale`
    pub value_reduced: f64,
    pub scale: EnergyScale,
    pub method: Method,
    /// J, non-negative
    pub error_estimate: f64,
    pub coeff_source: Option<CoefficientSource>,
}

impl PotentialResult {
    fn from_reduced(reduced: f64, reduced_err: f64, scale: EnergyScale, method: Method, src: Option<CoefficientSource>) -> Self {
        let j = scale.joules();
        Self {
            value_si: reduced * j,
            value_reduced: reduced,
            scale,
            method,
            error_estimate: reduced_err.abs() * j,
            coeff_source: src,
        }
    }

    /// V·2πr/(ħc·α₁α₂) sign-flipped: the reduced Casimir moment.
    pub fn reduced_moment(&self, r: f64, coupling: f64) -> f64 {
        -2.0 * PI * self.value_si * r / (HBAR * SPEED_OF_LIGHT * coupling)
    }
}

fn rename_failure(e: Error, operation: &'static str) -> Error {
    match e {
        Error::NumericalFailure { detail, .. } => Error::NumericalFailure { operation, detail },
        other => other,
    }
}

/// Initial breakpoints in x for a pair: the retardation knee at x = 1, the
/// polarizability knees at x = ωₖr/c, and decade points between them.
fn breakpoints(pair: &ParticlePair) -> Vec<f64> {
    let mut knees = vec![1.0];
    for m in [&pair.model1, &pair.model2] {
        for w in m.knee_frequencies() {
            let x = w * pair.r / SPEED_OF_LIGHT;
            if x > 0.0 && x < KNEE_CAP {
                knees.push(x);
            }
        }
    }
    knees.sort_by(f64::total_cmp);
    let lowest = knees[0];
    let mut pts = vec![0.0];
    // decades from the lowest knee up to 1
    let mut d = lowest;
    while d < 1.0 {
        pts.push(d);
        d *= 10.0;
    }
    pts.extend(knees);
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs().max(1e-300));
    let end = pts[pts.len() - 1] + TAIL_MARGIN;
    pts.push(end);
    pts
}

fn zero_result(pair: &ParticlePair, method: Method, src: Option<CoefficientSource>) -> PotentialResult {
    PotentialResult::from_reduced(0.0, 0.0, EnergyScale::HbarCOverR { r: pair.r }, method, src)
}

/// Full imaginary-axis quadrature of ln|Ã(iω)|.
pub fn potential_full(pair: &ParticlePair, q: &QuadratureSettings) -> Result<PotentialResult> {
    pair.validate()?;
    q.validate()?;
    pair.check_stability()?;
    let a = pair.coupling_bound();
    if a == 0.0 {
        return Ok(zero_result(pair, Method::Full, None));
    }
    let omega_per_x = SPEED_OF_LIGHT / pair.r;
    let f = |x: f64| match coupling_terms(pair, x * omega_per_x) {
        Ok((e_par, e_perp)) => ((-e_par).ln_1p() + 2.0 * (-e_perp).ln_1p()) / a,
        Err(_) => f64::NAN,
    };
    let pts = breakpoints(pair);
    let QuadratureResult { value, error, .. } =
        integrate(f, &pts, q).map_err(|e| rename_failure(e, "potential_full"))?;
    // |ln(1−ε)| ≤ ε/(1−ε) and ε_par + 2ε_perp ≤ a·e^{−2x}·P(x)
    let tail = expansion_polynomial(CoefficientSource::SelfConsistent).tail_bound(pts[pts.len() - 1]) / (1.0 - a);
    let scale = 1.0 / (2.0 * PI);
    Ok(PotentialResult::from_reduced(
        value * a * scale,
        (error + tail) * a * scale,
        EnergyScale::HbarCOverR { r: pair.r },
        Method::Full,
        None,
    ))
}

/// First-order expansion −(ħ/2π)∫dω α₁α₂ e^{−2ωr/c} P(ωr/c).
pub fn potential_expanded(pair: &ParticlePair, poly: &ExpansionPolynomial, q: &QuadratureSettings) -> Result<PotentialResult> {
    pair.validate()?;
    q.validate()?;
    pair.check_stability()?;
    let a = pair.coupling_bound();
    if a == 0.0 {
        return Ok(zero_result(pair, Method::Expanded, poly.source));
    }
    let omega_per_x = SPEED_OF_LIGHT / pair.r;
    let (m1, m2) = (&pair.model1, &pair.model2);
    let f = |x: f64| {
        let w = x * omega_per_x;
        -m1.eval_unchecked(w) * m2.eval_unchecked(w) / a * (-2.0 * x).exp() * poly.eval(x)
    };
    let pts = breakpoints(pair);
    let QuadratureResult { value, error, .. } =
        integrate(f, &pts, q).map_err(|e| rename_failure(e, "potential_expanded"))?;
    let tail = poly.tail_bound(pts[pts.len() - 1]);
    let scale = 1.0 / (2.0 * PI);
    Ok(PotentialResult::from_reduced(
        value * a * scale,
        (error + tail) * a * scale,
        EnergyScale::HbarCOverR { r: pair.r },
        Method::Expanded,
        poly.source,
    ))
}

/// Large-separation limit −(M/2π)·ħc·α₁(0)α₂(0)/r, where M is the source's
/// Casimir moment (25/16 published, 11/8 self-consistent).
pub fn casimir_limit(pair: &ParticlePair, source: CoefficientSource) -> Result<PotentialResult> {
    pair.validate()?;
    let reduced = -source.casimir_moment() / (2.0 * PI) * pair.static_coupling();
    Ok(PotentialResult::from_reduced(
        reduced,
        0.0,
        EnergyScale::HbarCOverR { r: pair.r },
        Method::CasimirLimit,
        Some(source),
    ))
}

/// Short-range plateau for two London particles sharing ω₀:
/// V = −(3/8)·α₀₁·α₀₂·ħω₀.
pub fn vdw_limit_london(alpha0_1: f64, alpha0_2: f64, omega0: f64) -> Result<PotentialResult> {
    for a in [alpha0_1, alpha0_2] {
        if !(a >= 0.0) || !a.is_finite() {
            return Err(invalid(format!("polarizability must be finite and >= 0, got {a}")));
        }
    }
    if !(omega0 > 0.0) || !omega0.is_finite() {
        return Err(invalid(format!("resonance frequency must be positive, got {omega0}")));
    }
    Ok(PotentialResult::from_reduced(
        -0.375 * alpha0_1 * alpha0_2,
        0.0,
        EnergyScale::HbarOmega { omega: omega0 },
        Method::VdwLimit,
        None,
    ))
}

/// Short-range plateau −(3ħ/2π)∫₀^∞ dω α₁(iω)α₂(iω) for arbitrary models.
/// The separation stored in `pair` is not used.
pub fn vdw_limit_general(pair: &ParticlePair, q: &QuadratureSettings) -> Result<PotentialResult> {
    pair.validate()?;
    q.validate()?;
    let (m1, m2) = (&pair.model1, &pair.model2);
    let a = pair.coupling_bound();
    let omega_s = match (m1.characteristic_frequency(), m2.characteristic_frequency()) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => 1.0,
    };
    if a == 0.0 {
        return Ok(PotentialResult::from_reduced(
            0.0,
            0.0,
            EnergyScale::HbarOmega { omega: omega_s },
            Method::VdwLimit,
            None,
        ));
    }
    if m1.tail_exponent() + m2.tail_exponent() <= 1 {
        return Err(Error::Divergent {
            operation: "vdw_limit_general",
            detail: "α₁(iω)α₂(iω) does not decay fast enough to be integrable".into(),
        });
    }
    let f = |u: f64| {
        let w = u * omega_s;
        m1.eval_unchecked(w) * m2.eval_unchecked(w) / a
    };
    let knees: Vec<f64> = m1
        .knee_frequencies()
        .into_iter()
        .chain(m2.knee_frequencies())
        .map(|w| w / omega_s)
        .collect();
    let res = integrate_semi_infinite(f, 0.0, 1.0, &knees, q).map_err(|e| rename_failure(e, "vdw_limit_general"))?;
    let scale = 3.0 / (2.0 * PI) * a;
    Ok(PotentialResult::from_reduced(
        -res.value * scale,
        res.error * scale,
        EnergyScale::HbarOmega { omega: omega_s },
        Method::VdwLimit,
        None,
    ))
}

/// Separation at which the London plateau equals the Casimir branch:
/// r_c = (8/3)·(M/2π)·c/ω₀.
pub fn crossover_distance(omega0: f64, source: CoefficientSource) -> Result<f64> {
    if !(omega0 > 0.0) || !omega0.is_finite() {
        return Err(invalid(format!("resonance frequency must be positive, got {omega0}")));
    }
    Ok(8.0 / 3.0 * source.casimir_moment() / (2.0 * PI) * SPEED_OF_LIGHT / omega0)
}
