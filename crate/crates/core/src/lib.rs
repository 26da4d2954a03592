//! Retarded dispersion interaction between composite particles whose
//! constituents are bound by harmonic-oscillator forces.
//!
//! The crate builds the interaction from the ground up: dipole fields and the
//! pair propagator ([`fields`]), the two-particle normal-mode determinant
//! ([`modes`]), the zero-point-energy potential and its limits
//! ([`potential`]), and the mass ↔ polarizability calibration that maps the
//! long-range 1/r branch onto Newtonian gravity ([`gravity`]).
//!
//! Internally everything runs in reduced variables (x = ωr/c, energies in
//! ħc/r or ħω₀); SI values are produced at the result boundary.

// `!(x > 0.0)` guards are deliberate: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coefficients;
pub mod constants;
pub mod error;
pub mod fields;
pub mod gravity;
pub mod modes;
pub mod polarizability;
pub mod potential;
pub mod quadrature;
pub mod verify;

pub use coefficients::{expansion_polynomial, CoefficientSource, ExpansionPolynomial};
pub use constants::{reduced_frequency, si_constants, Constants, ReducedFrequency};
pub use error::{Error, Result};
pub use fields::FrequencyAxis;
pub use gravity::{Calibration, NewtonComparison};
pub use modes::{ModeSpectrum, ParticlePair};
pub use polarizability::{eval_polarizability, PolarizabilityModel};
pub use potential::{Method, PotentialResult};
pub use quadrature::QuadratureSettings;
