//! Fields of an oscillating dipole in the harmonic-interaction theory and the
//! pair propagator built from them.
//!
//! With a charge field Ẽ = q̃r the static dipole field is simply −p̃ and has no
//! spatial dependence. A time-dependent dipole p(t) along ẑ radiates
//!
//! ```text
//! E_r = {−[p] + 2(r/c)[ṗ] − (r/c)²[p̈]} cos θ
//! E_θ = { [p] − ½(r/c)[ṗ] + ½(r/c)²[p̈]} sin θ
//! B_φ = {−(r/c)[ṗ] + ½(r/c)²[p̈]} sin θ
//! ```
//!
//! with brackets evaluated at the retarded time t − r/c. Spherical components
//! refer to the basis (r̂, θ̂, φ̂) of a frame whose z-axis lies along p.

use num_complex::Complex64;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{invalid, Result};

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];
pub type CVec3 = [Complex64; 3];
pub type CMat3 = [[Complex64; 3]; 3];

/// A static dipole moment (Cartesian components, reduced units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleMoment {
    pub p: Vec3,
}

/// A dipole p(t) = p0·cos(ωt) oriented along ẑ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonochromaticDipole {
    pub p0: f64,
    pub omega: f64,
}

impl MonochromaticDipole {
    /// p, ṗ, p̈ at time `t`.
    fn derivatives(&self, t: f64) -> (f64, f64, f64) {
        let (s, c) = (self.omega * t).sin_cos();
        let w = self.omega;
        (self.p0 * c, -self.p0 * w * s, -self.p0 * w * w * c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationPoint {
    pub r: f64,
    pub theta: f64,
    pub t: f64,
}

impl EvaluationPoint {
    pub fn new(r: f64, theta: f64, t: f64) -> Result<Self> {
        let p = Self { r, theta, t };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if !(self.r > 0.0) || !self.r.is_finite() {
            return Err(invalid(format!("radial distance must be positive, got {}", self.r)));
        }
        if !(0.0..=std::f64::consts::PI).contains(&self.theta) {
            return Err(invalid(format!("polar angle must lie in [0, π], got {}", self.theta)));
        }
        if !self.t.is_finite() {
            return Err(invalid("time must be finite"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// (x̂, ŷ, ẑ)
    Cartesian,
    /// (r̂, θ̂, φ̂) of the source dipole frame
    Spherical,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub e: Vec3,
    pub b: Vec3,
    pub basis: Basis,
}

impl FieldSample {
    /// Re-express a spherical-basis sample in Cartesian components at the
    /// direction (θ, φ).
    pub fn to_cartesian(&self, theta: f64, phi: f64) -> FieldSample {
        match self.basis {
            Basis::Cartesian => *self,
            Basis::Spherical => FieldSample {
                e: spherical_to_cartesian(self.e, theta, phi),
                b: spherical_to_cartesian(self.b, theta, phi),
                basis: Basis::Cartesian,
            },
        }
    }
}

/// Convert components (v_r, v_θ, v_φ) to Cartesian at direction (θ, φ).
pub fn spherical_to_cartesian(v: Vec3, theta: f64, phi: f64) -> Vec3 {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let r_hat = [st * cp, st * sp, ct];
    let t_hat = [ct * cp, ct * sp, -st];
    let p_hat = [-sp, cp, 0.0];
    std::array::from_fn(|i| v[0] * r_hat[i] + v[1] * t_hat[i] + v[2] * p_hat[i])
}

/// The field of a static dipole: E = −p everywhere, B = 0.
pub fn static_dipole_field(p: &DipoleMoment) -> FieldSample {
    FieldSample {
        e: p.p.map(|v| -v),
        b: [0.0; 3],
        basis: Basis::Cartesian,
    }
}

/// sin θ, cos θ with the dipole axis (θ = 0, π) hit exactly.
fn polar_sin_cos(theta: f64) -> (f64, f64) {
    if theta == std::f64::consts::PI {
        (0.0, -1.0)
    } else {
        theta.sin_cos()
    }
}

/// Retarded fields of a monochromatic dipole, spherical basis.
pub fn field_time_domain(dipole: &MonochromaticDipole, point: &EvaluationPoint) -> Result<FieldSample> {
    point.validate()?;
    let tau = point.r / SPEED_OF_LIGHT;
    let (p, pd, pdd) = dipole.derivatives(point.t - tau);
    let (st, ct) = polar_sin_cos(point.theta);
    let e_r = (-p + 2.0 * tau * pd - tau * tau * pdd) * ct;
    let e_t = (p - 0.5 * tau * pd + 0.5 * tau * tau * pdd) * st;
    let b_p = (-tau * pd + 0.5 * tau * tau * pdd) * st;
    Ok(FieldSample {
        e: [e_r, e_t, 0.0],
        b: [0.0, 0.0, b_p],
        basis: Basis::Spherical,
    })
}

/// Retarded fields at a Cartesian position, Cartesian components.
///
/// Uses the projector form E = (p̂·r̂)r̂·[…] + (p̂ − (p̂·r̂)r̂)·[…], which stays
/// regular on the dipole axis.
pub fn field_time_domain_cartesian(dipole: &MonochromaticDipole, pos: Vec3, t: f64) -> Result<FieldSample> {
    let r = norm(pos);
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid("evaluation point must not coincide with the dipole"));
    }
    if dipole.omega == 0.0 {
        // every bracket reduces to −p0, so E = −p0 ẑ exactly
        return Ok(FieldSample {
            e: [0.0, 0.0, -dipole.p0],
            b: [0.0; 3],
            basis: Basis::Cartesian,
        });
    }
    let r_hat = pos.map(|v| v / r);
    let tau = r / SPEED_OF_LIGHT;
    let (p, pd, pdd) = dipole.derivatives(t - tau);
    let par = -p + 2.0 * tau * pd - tau * tau * pdd;
    let perp = -p + 0.5 * tau * pd - 0.5 * tau * tau * pdd;
    let cos_t = r_hat[2];
    let z_hat = [0.0, 0.0, 1.0];
    let e = std::array::from_fn(|i| cos_t * r_hat[i] * par + (z_hat[i] - cos_t * r_hat[i]) * perp);
    // φ̂ sin θ = ẑ × r̂
    let b_coef = -tau * pd + 0.5 * tau * tau * pdd;
    let b = [-r_hat[1] * b_coef, r_hat[0] * b_coef, 0.0];
    Ok(FieldSample {
        e,
        b,
        basis: Basis::Cartesian,
    })
}

/// Frequency-domain field Ẽ(r, ω) of a dipole p̂·p(ω) at displacement `r_vec`.
///
/// Time dependence is e^{−iωt}; Re[Ẽ e^{−iωt}] reproduces the time-domain
/// field of a real amplitude p(ω).
pub fn field_frequency_domain(p_hat: Vec3, p_omega: Complex64, omega: f64, r_vec: Vec3) -> Result<CVec3> {
    let r = norm(r_vec);
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid("zero separation"));
    }
    let r_hat = r_vec.map(|v| v / r);
    let coeffs = propagator_at(Complex64::new(omega, 0.0), r)?;
    let p = p_hat.map(|v| p_omega * v);
    Ok(coeffs.apply(r_hat, p))
}

/// The two projectors onto and transverse to the separation axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projectors {
    /// r̂r̂ᵀ
    pub alpha_tensor: Mat3,
    /// I − r̂r̂ᵀ
    pub beta_tensor: Mat3,
}

pub fn projectors(r_hat: Vec3) -> Result<Projectors> {
    let n = norm(r_hat);
    if !((n - 1.0).abs() <= 1e-12) {
        return Err(invalid(format!("projector axis must be a unit vector, |r_hat| = {n}")));
    }
    let alpha_tensor: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| r_hat[i] * r_hat[j]));
    let beta_tensor: Mat3 = std::array::from_fn(|i| {
        std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 } - alpha_tensor[i][j])
    });
    Ok(Projectors {
        alpha_tensor,
        beta_tensor,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrequencyAxis {
    Real,
    Imaginary,
}

/// Scalar coefficients of the propagator on the parallel and perpendicular
/// projectors: γ̃ = g_par·α + g_perp·β.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorCoefficients {
    pub g_par: Complex64,
    pub g_perp: Complex64,
    pub omega: f64,
    pub axis: FrequencyAxis,
    pub r: f64,
}

impl PropagatorCoefficients {
    pub fn tensor(&self, r_hat: Vec3) -> CMat3 {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let a = r_hat[i] * r_hat[j];
                let b = if i == j { 1.0 } else { 0.0 } - a;
                self.g_par * a + self.g_perp * b
            })
        })
    }

    /// γ̃·p for a unit axis `r_hat`.
    pub fn apply(&self, r_hat: Vec3, p: CVec3) -> CVec3 {
        let dot = r_hat[0] * p[0] + r_hat[1] * p[1] + r_hat[2] * p[2];
        std::array::from_fn(|i| {
            let par = dot * r_hat[i];
            self.g_par * par + self.g_perp * (p[i] - par)
        })
    }
}

/// Propagator coefficients at real frequency ω or imaginary frequency iω.
pub fn propagator(omega: f64, axis: FrequencyAxis, r: f64) -> Result<PropagatorCoefficients> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid(format!("separation must be positive, got {r}")));
    }
    match axis {
        FrequencyAxis::Real => propagator_at(Complex64::new(omega, 0.0), r),
        FrequencyAxis::Imaginary => {
            if !(omega >= 0.0) {
                return Err(invalid("imaginary-axis frequency must be non-negative"));
            }
            let (par, perp) = imaginary_axis_brackets(omega * r / SPEED_OF_LIGHT);
            Ok(PropagatorCoefficients {
                g_par: Complex64::new(par, 0.0),
                g_perp: Complex64::new(perp, 0.0),
                omega,
                axis,
                r,
            })
        }
    }
}

/// Real-axis propagator formula continued to complex frequency z.
///
/// The recorded `omega`/`axis` describe z when it lies on one of the axes;
/// off-axis arguments are tagged as real with ω = Re z.
pub fn propagator_at(z: Complex64, r: f64) -> Result<PropagatorCoefficients> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(invalid(format!("separation must be positive, got {r}")));
    }
    let x = z * (r / SPEED_OF_LIGHT);
    let i = Complex64::i();
    let phase = (i * x).exp();
    let one = Complex64::new(1.0, 0.0);
    let g_par = phase * (-one + 2.0 * (-i * x) + x * x);
    let g_perp = phase * (-one + 0.5 * (-i * x) + 0.5 * x * x);
    let (omega, axis) = if z.re == 0.0 && z.im != 0.0 {
        (z.im, FrequencyAxis::Imaginary)
    } else {
        (z.re, FrequencyAxis::Real)
    };
    Ok(PropagatorCoefficients {
        g_par,
        g_perp,
        omega,
        axis,
        r,
    })
}

/// (e^{−x}·B_par(x), e^{−x}·B_perp(x)) with x = ωr/c on the imaginary axis,
/// B_par = −1 + 2x − x², B_perp = −1 + x/2 − x²/2.
pub fn imaginary_axis_brackets(x: f64) -> (f64, f64) {
    let decay = (-x).exp();
    let par = -1.0 + 2.0 * x - x * x;
    let perp = -1.0 + 0.5 * x - 0.5 * x * x;
    (decay * par, decay * perp)
}

/// Finite-difference steps for [`maxwell_residual`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DifferenceSteps {
    /// spatial step, m
    pub space: f64,
    /// time step, s
    pub time: f64,
}

impl DifferenceSteps {
    /// h = min(r/100, 0.01·c/ω), with a time step of h/c.
    pub fn default_for(dipole: &MonochromaticDipole, r: f64) -> Self {
        let mut h = r / 100.0;
        if dipole.omega > 0.0 {
            h = h.min(0.01 * SPEED_OF_LIGHT / dipole.omega);
        }
        Self {
            space: h,
            time: h / SPEED_OF_LIGHT,
        }
    }

    pub fn halved(&self) -> Self {
        Self {
            space: self.space / 2.0,
            time: self.time / 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxwellResidual {
    /// ∇×E + (1/c)∂B/∂t, Cartesian
    pub curl: Vec3,
    /// ∇·B
    pub div: f64,
}

impl MaxwellResidual {
    pub fn magnitude(&self) -> f64 {
        (norm(self.curl).powi(2) + self.div * self.div).sqrt()
    }
}

/// Central-difference residuals of the two homogeneous Maxwell equations at
/// `point` (taken in the φ = 0 half-plane).
pub fn maxwell_residual(
    dipole: &MonochromaticDipole,
    point: &EvaluationPoint,
    steps: DifferenceSteps,
) -> Result<MaxwellResidual> {
    point.validate()?;
    let (h, ht) = (steps.space, steps.time);
    if !(h > 0.0) || !(ht > 0.0) {
        return Err(invalid("finite-difference steps must be positive"));
    }
    if !(point.r > 2.0 * h) {
        return Err(invalid("evaluation radius must exceed twice the spatial step"));
    }
    if h * dipole.omega / SPEED_OF_LIGHT > 0.1 || ht * dipole.omega > 0.1 {
        return Err(invalid("finite-difference step too large relative to the wavelength"));
    }
    let (st, ct) = point.theta.sin_cos();
    let x0 = [point.r * st, 0.0, point.r * ct];
    let t0 = point.t;

    let at = |dx: usize, s: f64, dt: f64| -> Result<FieldSample> {
        let mut pos = x0;
        pos[dx] += s;
        field_time_domain_cartesian(dipole, pos, t0 + dt)
    };

    // de[k][i] = ∂E_i/∂x_k, db[k][i] = ∂B_i/∂x_k
    let mut de = [[0.0; 3]; 3];
    let mut db = [[0.0; 3]; 3];
    for k in 0..3 {
        let plus = at(k, h, 0.0)?;
        let minus = at(k, -h, 0.0)?;
        for i in 0..3 {
            de[k][i] = (plus.e[i] - minus.e[i]) / (2.0 * h);
            db[k][i] = (plus.b[i] - minus.b[i]) / (2.0 * h);
        }
    }
    let later = at(0, 0.0, ht)?;
    let earlier = at(0, 0.0, -ht)?;
    let db_dt: Vec3 = std::array::from_fn(|i| (later.b[i] - earlier.b[i]) / (2.0 * ht));

    let curl_e = [de[1][2] - de[2][1], de[2][0] - de[0][2], de[0][1] - de[1][0]];
    let curl = std::array::from_fn(|i| curl_e[i] + db_dt[i] / SPEED_OF_LIGHT);
    let div = db[0][0] + db[1][1] + db[2][2];
    Ok(MaxwellResidual { curl, div })
}

pub(crate) fn norm(v: Vec3) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}
