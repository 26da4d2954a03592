//! The small-polarizability expansion polynomial and the two coefficient
//! sources it can come from.
//!
//! Expanding ln|Ã(iω)| to first order in α₁α₂ gives
//! −α₁α₂ e^{−2x} P(x) with P(x) = B_par(x)² + 2·B_perp(x)², where
//! B_par = −1 + 2x − x² and B_perp = −1 + x/2 − x²/2. That polynomial is
//! 3 − 6x + (17/2)x² − 5x³ + (3/2)x⁴. The published form of the expansion
//! prints −9/2 for the cubic coefficient instead; both are kept and every
//! result records which one was used.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoefficientSource {
    /// Coefficients as printed: cubic term −9/2, Casimir moment 25/16.
    PaperPublished,
    /// Coefficients re-derived from the determinant: cubic term −5, Casimir
    /// moment 11/8. This is what the full quadrature converges to.
    #[default]
    SelfConsistent,
}

impl CoefficientSource {
    /// Short label used on the command line and in output files.
    pub fn label(&self) -> &'static str {
        match self {
            Self::PaperPublished => "paper",
            Self::SelfConsistent => "derived",
        }
    }

    /// ∫₀^∞ e^{−2x} P(x) dx for this source's polynomial.
    pub fn casimir_moment(&self) -> f64 {
        expansion_polynomial(*self).laplace_moment()
    }
}

impl fmt::Display for CoefficientSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CoefficientSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" | "published" => Ok(Self::PaperPublished),
            "derived" | "self-consistent" => Ok(Self::SelfConsistent),
            other => Err(invalid(format!("unknown coefficient source '{other}' (expected paper|derived)"))),
        }
    }
}

/// P(x) = c₀ + c₁x + c₂x² + c₃x³ + c₄x⁴.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionPolynomial {
    pub coefficients: [f64; 5],
    /// `None` for user-supplied coefficients.
    pub source: Option<CoefficientSource>,
}

impl ExpansionPolynomial {
    pub fn custom(coefficients: [f64; 5]) -> Self {
        Self {
            coefficients,
            source: None,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// ∫₀^∞ e^{−2x} P(x) dx = Σ cₙ n!/2^{n+1}.
    pub fn laplace_moment(&self) -> f64 {
        let mut factorial = 1.0;
        let mut pow2 = 2.0;
        let mut sum = 0.0;
        for (n, &c) in self.coefficients.iter().enumerate() {
            if n > 0 {
                factorial *= n as f64;
                pow2 *= 2.0;
            }
            sum += c * factorial / pow2;
        }
        sum
    }

    /// Upper bound of ∫_X^∞ e^{−2x} |P(x)| dx for X ≥ 0, using |cₙ|.
    pub fn tail_bound(&self, x0: f64) -> f64 {
        let x0 = x0.max(0.0);
        let mut total = 0.0;
        for (n, &c) in self.coefficients.iter().enumerate() {
            total += c.abs() * exp_moment_tail(n, x0);
        }
        total
    }
}

/// ∫_X^∞ xⁿ e^{−2x} dx = e^{−2X} Σ_{k=0}^{n} n!/(k!·2^{n−k+1}) X^k.
fn exp_moment_tail(n: usize, x0: f64) -> f64 {
    let mut n_fact = 1.0;
    for i in 1..=n {
        n_fact *= i as f64;
    }
    let mut sum = 0.0;
    let mut k_fact = 1.0;
    for k in 0..=n {
        if k > 0 {
            k_fact *= k as f64;
        }
        sum += n_fact / k_fact / 2f64.powi((n - k + 1) as i32) * x0.powi(k as i32);
    }
    (-2.0 * x0).exp() * sum
}

pub fn expansion_polynomial(source: CoefficientSource) -> ExpansionPolynomial {
    let coefficients = match source {
        CoefficientSource::PaperPublished => [3.0, -6.0, 8.5, -4.5, 1.5],
        CoefficientSource::SelfConsistent => [3.0, -6.0, 8.5, -5.0, 1.5],
    };
    ExpansionPolynomial {
        coefficients,
        source: Some(source),
    }
}
