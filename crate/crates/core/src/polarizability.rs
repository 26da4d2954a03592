//! Frequency-dependent polarizability models.
//!
//! All models are evaluated on the imaginary frequency axis, where the
//! response is real and non-negative. The London model additionally supports
//! evaluation at an arbitrary complex frequency, which is what the real-axis
//! determinant needs.

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};

/// Dimensionless response α̃(iω) of a composite particle.
#[derive(Debug, Clone, PartialEq)]
pub enum PolarizabilityModel {
    /// Frequency independent.
    Constant { alpha0: f64 },
    /// Single resonance: α̃(iω) = α₀ / (1 + (ω/ω₀)²).
    London { alpha0: f64, omega0: f64 },
    /// Sampled response on the imaginary axis.
    Tabulated(TabulatedPolarizability),
}

/// Samples of α̃(iω), interpolated linearly in ln ω.
///
/// Below the first sample the first value is held. Above the last sample the
/// response falls off as `alpha_last * (omega_last / omega)^2`, the London tail.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedPolarizability {
    omega: Vec<f64>,
    alpha: Vec<f64>,
}

impl TabulatedPolarizability {
    pub fn new(samples: &[(f64, f64)]) -> Result<Self> {
        if samples.is_empty() {
            return Err(invalid("tabulated polarizability needs at least one sample"));
        }
        let mut omega = Vec::with_capacity(samples.len());
        let mut alpha = Vec::with_capacity(samples.len());
        for &(w, a) in samples {
            if !(w >= 0.0) || !w.is_finite() {
                return Err(invalid(format!("tabulated frequency {w} must be finite and >= 0")));
            }
            if !(a >= 0.0) || !a.is_finite() {
                return Err(invalid(format!("tabulated polarizability {a} must be finite and >= 0")));
            }
            if let Some(&last) = omega.last() {
                if w <= last {
                    return Err(invalid("tabulated frequencies must be strictly increasing"));
                }
            }
            omega.push(w);
            alpha.push(a);
        }
        if *omega.last().unwrap() <= 0.0 {
            return Err(invalid("last tabulated frequency must be positive"));
        }
        Ok(Self { omega, alpha })
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.omega.iter().copied().zip(self.alpha.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    fn eval(&self, w: f64) -> f64 {
        let n = self.omega.len();
        if w <= self.omega[0] {
            return self.alpha[0];
        }
        let (w_last, a_last) = (self.omega[n - 1], self.alpha[n - 1]);
        if w >= w_last {
            let s = w_last / w;
            return a_last * s * s;
        }
        // first index with omega[i] > w; i >= 1 here
        let i = self.omega.partition_point(|&s| s <= w);
        let (w0, w1) = (self.omega[i - 1], self.omega[i]);
        let (a0, a1) = (self.alpha[i - 1], self.alpha[i]);
        let t = if w0 > 0.0 {
            (w / w0).ln() / (w1 / w0).ln()
        } else {
            // ln ω is unbounded at zero; fall back to linear in ω
            w / w1
        };
        a0 + t * (a1 - a0)
    }

    fn max_alpha(&self) -> f64 {
        self.alpha.iter().copied().fold(0.0, f64::max)
    }
}

impl PolarizabilityModel {
    pub fn constant(alpha0: f64) -> Result<Self> {
        let m = Self::Constant { alpha0 };
        m.validate()?;
        Ok(m)
    }

    pub fn london(alpha0: f64, omega0: f64) -> Result<Self> {
        let m = Self::London { alpha0, omega0 };
        m.validate()?;
        Ok(m)
    }

    pub fn tabulated(samples: &[(f64, f64)]) -> Result<Self> {
        Ok(Self::Tabulated(TabulatedPolarizability::new(samples)?))
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Constant { alpha0 } => check_alpha(alpha0),
            Self::London { alpha0, omega0 } => {
                check_alpha(alpha0)?;
                if !(omega0 > 0.0) || !omega0.is_finite() {
                    return Err(invalid(format!("resonance frequency must be positive, got {omega0}")));
                }
                Ok(())
            }
            Self::Tabulated(_) => Ok(()),
        }
    }

    /// α̃(iω) for ω ≥ 0.
    pub fn eval(&self, omega: f64) -> Result<f64> {
        if !(omega >= 0.0) {
            return Err(invalid(format!("frequency must be non-negative, got {omega}")));
        }
        Ok(self.eval_unchecked(omega))
    }

    pub(crate) fn eval_unchecked(&self, omega: f64) -> f64 {
        match self {
            Self::Constant { alpha0 } => *alpha0,
            Self::London { alpha0, omega0 } => {
                let u = omega / omega0;
                alpha0 / (1.0 + u * u)
            }
            Self::Tabulated(t) => t.eval(omega),
        }
    }

    /// α̃(z) at a complex frequency z, where the analytic continuation is known.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        match *self {
            Self::Constant { alpha0 } => Ok(Complex64::new(alpha0, 0.0)),
            Self::London { alpha0, omega0 } => {
                let u = z / omega0;
                let denom = Complex64::new(1.0, 0.0) - u * u;
                if denom.norm() == 0.0 {
                    return Err(invalid("London polarizability evaluated at its resonance"));
                }
                Ok(alpha0 / denom)
            }
            Self::Tabulated(_) => Err(invalid(
                "tabulated polarizability is only defined on the imaginary axis",
            )),
        }
    }

    /// The static value α̃(0).
    pub fn static_value(&self) -> f64 {
        self.eval_unchecked(0.0)
    }

    /// sup over ω ≥ 0 of α̃(iω).
    pub fn upper_bound(&self) -> f64 {
        match self {
            Self::Constant { alpha0 } | Self::London { alpha0, .. } => *alpha0,
            Self::Tabulated(t) => t.max_alpha(),
        }
    }

    /// Power of the large-ω falloff, α̃(iω) ~ ω^(-n).
    pub fn tail_exponent(&self) -> u32 {
        match self {
            Self::Constant { .. } => 0,
            Self::London { .. } | Self::Tabulated(_) => 2,
        }
    }

    /// Frequencies (rad/s) at which the response changes character.
    pub fn knee_frequencies(&self) -> Vec<f64> {
        match self {
            Self::Constant { .. } => Vec::new(),
            Self::London { omega0, .. } => vec![*omega0],
            Self::Tabulated(t) => {
                // the table ends; interior samples are left to adaptivity
                let first = t.omega.iter().copied().find(|&w| w > 0.0);
                let last = t.omega[t.omega.len() - 1];
                let mut k: Vec<f64> = first.into_iter().collect();
                if k.last() != Some(&last) {
                    k.push(last);
                }
                k
            }
        }
    }

    /// A representative frequency scale, if the model has one.
    pub fn characteristic_frequency(&self) -> Option<f64> {
        match self {
            Self::Constant { .. } => None,
            Self::London { omega0, .. } => Some(*omega0),
            Self::Tabulated(t) => {
                // geometric centre of the positive sample range
                let pos: Vec<f64> = t.omega.iter().copied().filter(|&w| w > 0.0).collect();
                Some((pos[0] * pos[pos.len() - 1]).sqrt())
            }
        }
    }
}

fn check_alpha(alpha0: f64) -> Result<()> {
    if !(alpha0 >= 0.0) || !alpha0.is_finite() {
        return Err(Error::InvalidInput(format!(
            "polarizability must be finite and >= 0, got {alpha0}"
        )));
    }
    Ok(())
}

/// Free-function form of [`PolarizabilityModel::eval`].
pub fn eval_polarizability(model: &PolarizabilityModel, omega: f64) -> Result<f64> {
    model.eval(omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn london_examples() {
        let m = PolarizabilityModel::london(0.2, 1.0).unwrap();
        assert_eq!(m.eval(0.0).unwrap(), 0.2);
        assert!((m.eval(1.0).unwrap() - 0.1).abs() < 1e-15);
    }

    #[test]
    fn constant_ignores_frequency() {
        let m = PolarizabilityModel::constant(1e-3).unwrap();
        assert_eq!(m.eval(5e20).unwrap(), 1e-3);
    }

    #[test]
    fn negative_frequency_rejected() {
        let m = PolarizabilityModel::constant(1e-3).unwrap();
        assert!(matches!(m.eval(-1.0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn bad_parameters_rejected() {
        assert!(PolarizabilityModel::constant(-1.0).is_err());
        assert!(PolarizabilityModel::london(0.1, 0.0).is_err());
        assert!(PolarizabilityModel::tabulated(&[]).is_err());
        assert!(PolarizabilityModel::tabulated(&[(1.0, 0.1), (1.0, 0.2)]).is_err());
        assert!(PolarizabilityModel::tabulated(&[(1.0, -0.1)]).is_err());
        assert!(PolarizabilityModel::tabulated(&[(0.0, 0.1)]).is_err());
    }

    #[test]
    fn tabulated_interpolates_in_log_frequency() {
        let m = PolarizabilityModel::tabulated(&[(1.0, 1.0), (100.0, 0.0)]).unwrap();
        // ω = 10 is halfway in ln ω
        assert!((m.eval(10.0).unwrap() - 0.5).abs() < 1e-14);
        assert_eq!(m.eval(0.5).unwrap(), 1.0);
        assert_eq!(m.eval(1.0).unwrap(), 1.0);
    }

    #[test]
    fn tabulated_zero_first_sample() {
        let m = PolarizabilityModel::tabulated(&[(0.0, 2.0), (4.0, 1.0)]).unwrap();
        assert_eq!(m.eval(0.0).unwrap(), 2.0);
        assert!((m.eval(2.0).unwrap() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn tabulated_tail_extrapolation() {
        let m = PolarizabilityModel::tabulated(&[(1.0, 0.3), (10.0, 0.2)]).unwrap();
        assert!((m.eval(20.0).unwrap() - 0.2 * 0.25).abs() < 1e-16);
        assert_eq!(m.eval(10.0).unwrap(), 0.2);
    }

    #[test]
    fn london_complex_matches_imaginary_axis() {
        let m = PolarizabilityModel::london(0.3, 2.0).unwrap();
        for w in [0.0, 0.5, 2.0, 9.0] {
            let z = m.eval_complex(Complex64::new(0.0, w)).unwrap();
            assert!((z.re - m.eval(w).unwrap()).abs() < 1e-15);
            assert_eq!(z.im, 0.0);
        }
        assert!(m.eval_complex(Complex64::new(2.0, 0.0)).is_err());
    }

    proptest! {
        #[test]
        fn models_non_negative(a in 0.0f64..1.0, w0 in 1e-3f64..1e3, s in 0.0f64..1e6) {
            let w = s * w0;
            let tab = PolarizabilityModel::tabulated(&[(w0 * 0.1, a), (w0, a * 0.5), (w0 * 10.0, a * 0.01)]).unwrap();
            for m in [
                PolarizabilityModel::constant(a).unwrap(),
                PolarizabilityModel::london(a, w0).unwrap(),
                tab,
            ] {
                prop_assert!(m.eval(w).unwrap() >= 0.0);
            }
        }

        #[test]
        fn london_strictly_decreasing(a in 1e-6f64..1.0, w0 in 1e-3f64..1e3, u1 in 0.0f64..1e3, du in 1e-6f64..1e3) {
            let m = PolarizabilityModel::london(a, w0).unwrap();
            let w1 = u1 * w0;
            let w2 = w1 + du * w0;
            prop_assert!(m.eval(w2).unwrap() < m.eval(w1).unwrap());
        }
    }
}
