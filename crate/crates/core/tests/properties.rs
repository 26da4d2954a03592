use std::f64::consts::PI;

use harmonic_casimir::constants::{GRAVITATIONAL_CONSTANT, HBAR, SPEED_OF_LIGHT as C};
use harmonic_casimir::fields::{
    field_frequency_domain, field_time_domain, projectors, propagator, propagator_at, EvaluationPoint,
    MonochromaticDipole,
};
use harmonic_casimir::gravity::{mass_to_polarizability, newton_potential};
use harmonic_casimir::modes::{determinant, determinant_at};
use harmonic_casimir::potential::{
    casimir_limit, potential_expanded, potential_full, vdw_limit_general, vdw_limit_london,
};
use harmonic_casimir::{
    eval_polarizability, expansion_polynomial, reduced_frequency, Calibration, CoefficientSource, FrequencyAxis,
    ParticlePair, PolarizabilityModel, QuadratureSettings,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const OMEGA0: f64 = 1e15;

fn q() -> QuadratureSettings {
    QuadratureSettings::default()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn london(a1: f64, a2: f64, rho: f64) -> ParticlePair {
    ParticlePair::new(
        PolarizabilityModel::london(a1, OMEGA0).unwrap(),
        PolarizabilityModel::london(a2, OMEGA0).unwrap(),
        rho * C / OMEGA0,
    )
    .unwrap()
}

fn constant(a1: f64, a2: f64, r: f64) -> ParticlePair {
    ParticlePair::new(
        PolarizabilityModel::constant(a1).unwrap(),
        PolarizabilityModel::constant(a2).unwrap(),
        r,
    )
    .unwrap()
}

fn max_abs_diff(a: [[f64; 3]; 3], b: [[f64; 3]; 3]) -> f64 {
    (0..9).map(|k| (a[k / 3][k % 3] - b[k / 3][k % 3]).abs()).fold(0.0, f64::max)
}

fn matmul(a: [[f64; 3]; 3], b: [[f64; 3]; 3]) -> [[f64; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()))
}

#[test]
fn projector_identities_on_random_axes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let zero = [[0.0; 3]; 3];
    let eye: [[f64; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }));
    for _ in 0..1000 {
        // uniform on the sphere
        let z: f64 = rng.gen_range(-1.0..1.0);
        let phi: f64 = rng.gen_range(0.0..2.0 * PI);
        let s = (1.0 - z * z).sqrt();
        let p = projectors([s * phi.cos(), s * phi.sin(), z]).unwrap();
        let (a, b) = (p.alpha_tensor, p.beta_tensor);
        assert!(max_abs_diff(matmul(a, a), a) <= 1e-12);
        assert!(max_abs_diff(matmul(b, b), b) <= 1e-12);
        assert!(max_abs_diff(matmul(a, b), zero) <= 1e-12);
        let sum: [[f64; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| a[i][j] + b[i][j]));
        assert!(max_abs_diff(sum, eye) <= 1e-12);
    }
}

#[test]
fn projectors_reject_non_unit_axis() {
    assert!(projectors([1.0, 1.0, 0.0]).is_err());
    assert!(projectors([0.0; 3]).is_err());
}

#[test]
fn wick_identity_at_listed_points() {
    for x in [0.01, 0.5, 1.0, 3.0, 10.0] {
        let (omega, r) = (1e12, x * C / 1e12);
        let a = propagator(omega, FrequencyAxis::Imaginary, r).unwrap();
        let b = propagator_at(Complex64::new(0.0, omega), r).unwrap();
        // closed form e^{−x}(−1 + 2x − x²), e^{−x}(−1 + x/2 − x²/2)
        let par = (-x).exp() * (-1.0 + 2.0 * x - x * x);
        let perp = (-x).exp() * (-1.0 + 0.5 * x - 0.5 * x * x);
        for (got, want) in [(a.g_par, par), (b.g_par, par), (a.g_perp, perp), (b.g_perp, perp)] {
            assert!((got.re - want).abs() <= 1e-12 * want.abs(), "x={x}: {got} vs {want}");
            assert!(got.im.abs() <= 1e-12 * want.abs());
        }
    }
}

#[test]
fn brackets_at_zero_frequency() {
    let g = propagator(0.0, FrequencyAxis::Imaginary, 1.0).unwrap();
    assert_eq!((g.g_par.re, g.g_perp.re), (-1.0, -1.0));
    let g = propagator(0.0, FrequencyAxis::Real, 1.0).unwrap();
    assert_eq!((g.g_par.re, g.g_perp.re), (-1.0, -1.0));
}

#[test]
fn determinant_tends_to_one() {
    let pair = london(0.5, 0.5, 1.0);
    let omega = 50.0 * C / pair.r;
    let d = determinant(&pair, omega, FrequencyAxis::Imaginary).unwrap();
    assert!((d.value.re - 1.0).abs() < 1e-10);
    assert_eq!(d.value.im, 0.0);
}

#[test]
fn determinant_factorizes_over_propagator() {
    let pair = london(0.3, 0.2, 0.7);
    for z in [Complex64::new(3e14, 0.0), Complex64::new(0.0, 2e15), Complex64::new(1e15, 4e14)] {
        let g = propagator_at(z, pair.r).unwrap();
        let a = pair.model1.eval_complex(z).unwrap() * pair.model2.eval_complex(z).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let want = (one - a * g.g_par * g.g_par) * (one - a * g.g_perp * g.g_perp).powi(2);
        let got = determinant_at(&pair, z).unwrap();
        assert!((got - want).norm() <= 1e-14 * want.norm().max(1.0));
    }
}

#[test]
fn casimir_limit_matching() {
    for rho in [1e2, 1e3] {
        let pair = london(1e-4, 1e-4, rho);
        let ratio = potential_full(&pair, &q()).unwrap().value_si
            / casimir_limit(&pair, CoefficientSource::SelfConsistent).unwrap().value_si;
        assert!((ratio - 1.0).abs() <= 5.0 / rho, "rho={rho}: ratio {ratio}");
    }
}

#[test]
fn vdw_limit_matching() {
    for rho in [1e-3, 1e-2] {
        let pair = london(1e-4, 1e-4, rho);
        let full = potential_full(&pair, &q()).unwrap().value_si;
        let plateau = vdw_limit_london(1e-4, 1e-4, OMEGA0).unwrap().value_si;
        assert!(rel(full, plateau) <= 5.0 * rho, "rho={rho}");
    }
}

#[test]
fn tabulated_london_reproduces_plateau() {
    let samples: Vec<(f64, f64)> = (0..2000)
        .map(|i| {
            let w = OMEGA0 * 10f64.powf(-4.0 + 8.0 * i as f64 / 1999.0);
            (w, 1e-3 / (1.0 + (w / OMEGA0).powi(2)))
        })
        .collect();
    let table = PolarizabilityModel::tabulated(&samples).unwrap();
    let pair = ParticlePair::new(table.clone(), table, 1e-9).unwrap();
    // every sample is a kink of the interpolant
    let settings = QuadratureSettings {
        max_panels: 20_000,
        ..q()
    };
    let v = vdw_limit_general(&pair, &settings).unwrap().value_si;
    let exact = -0.375 * 1e-6 * HBAR * OMEGA0;
    assert!(rel(v, exact) <= 1e-4, "{v:e} vs {exact:e}");
}

#[test]
fn constant_model_plateau_diverges() {
    let err = vdw_limit_general(&constant(1e-3, 1e-3, 1.0), &q()).unwrap_err();
    assert!(matches!(err, harmonic_casimir::Error::Divergent { .. }));
}

#[test]
fn quadrature_error_estimates_are_honest() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let coarse = QuadratureSettings {
        rel_tol: 1e-6,
        abs_tol: 1e-12,
        ..q()
    };
    let fine = coarse.tightened(10.0);
    let trials = 200;
    let mut honest = 0;
    for _ in 0..trials {
        let a: f64 = 10f64.powf(rng.gen_range(-4.0..-0.3));
        let rho = 10f64.powf(rng.gen_range(-4.0..4.0));
        let pair = if rng.gen_bool(0.5) { london(a, a, rho) } else { constant(a, a, rho * C / OMEGA0) };
        let v = potential_full(&pair, &coarse).unwrap();
        let w = potential_full(&pair, &fine).unwrap();
        assert!(v.error_estimate >= 0.0);
        if v.error_estimate >= (v.value_si - w.value_si).abs() {
            honest += 1;
        }
    }
    assert!(honest * 100 >= 95 * trials, "{honest}/{trials} honest estimates");
}

#[test]
fn newton_closure_is_algebraic() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for src in [CoefficientSource::SelfConsistent, CoefficientSource::PaperPublished] {
        let cal = Calibration::new(src);
        let want_k = (GRAVITATIONAL_CONSTANT * 2.0 * PI / (src.casimir_moment() * HBAR * C)).sqrt();
        assert!(rel(cal.k, want_k) < 1e-15);
        for _ in 0..200 {
            let m1 = 10f64.powf(rng.gen_range(-27.0..-25.0));
            let m2 = 10f64.powf(rng.gen_range(-27.0..-25.0));
            let r = 10f64.powf(rng.gen_range(-12.0..0.0));
            let pair = constant(
                mass_to_polarizability(m1, &cal).unwrap(),
                mass_to_polarizability(m2, &cal).unwrap(),
                r,
            );
            let v = casimir_limit(&pair, src).unwrap().value_si;
            assert!(rel(v, newton_potential(m1, m2, r).unwrap()) <= 1e-12);
            assert!(pair.static_coupling() < 1e-30);
        }
    }
}

#[test]
fn on_axis_magnetic_field_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let omega = 10f64.powf(rng.gen_range(0.0..18.0));
        let r = 10f64.powf(rng.gen_range(-3.0..3.0)) * C / omega;
        for theta in [0.0, PI] {
            let p = EvaluationPoint::new(r, theta, rng.gen_range(0.0..10.0 / omega)).unwrap();
            let f = field_time_domain(&MonochromaticDipole { p0: 1.0, omega }, &p).unwrap();
            assert!(f.b.iter().all(|&b| b == 0.0));
        }
    }
}

#[test]
fn reduced_frequency_round_trip() {
    for x in [0.1, 1.0, 10.0] {
        let r = 3.7e-6;
        assert!(rel(reduced_frequency(x * C / r, r).unwrap().x, x) <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn polarizability_non_negative(a in 1e-6f64..0.99, lw in -6.0f64..6.0) {
        let omega = OMEGA0 * 10f64.powf(lw);
        for m in [
            PolarizabilityModel::constant(a).unwrap(),
            PolarizabilityModel::london(a, OMEGA0).unwrap(),
            PolarizabilityModel::tabulated(&[(0.0, a), (OMEGA0, a / 2.0), (1e3 * OMEGA0, a / 1e6)]).unwrap(),
        ] {
            prop_assert!(eval_polarizability(&m, omega).unwrap() >= 0.0);
        }
    }

    #[test]
    fn london_strictly_decreasing(a in 1e-6f64..0.99, l1 in -3.0f64..3.0, dl in 1e-3f64..3.0) {
        let m = PolarizabilityModel::london(a, OMEGA0).unwrap();
        let (w1, w2) = (OMEGA0 * 10f64.powf(l1), OMEGA0 * 10f64.powf(l1 + dl));
        prop_assert!(m.eval(w2).unwrap() < m.eval(w1).unwrap());
    }

    #[test]
    fn wick_consistency(lx in -3.0f64..1.7, a1 in 1e-4f64..0.9, a2 in 1e-4f64..0.9) {
        let x = 10f64.powf(lx);
        let pair = london(a1, a2, 1.0);
        let omega = x * C / pair.r;
        let d_imag = determinant(&pair, omega, FrequencyAxis::Imaginary).unwrap().value;
        let d_rot = determinant_at(&pair, Complex64::new(0.0, omega)).unwrap();
        prop_assert!((d_imag - d_rot).norm() <= 1e-12 * d_imag.norm());
    }

    #[test]
    fn determinant_positive_when_stable(lx in -6.0f64..2.0, a1 in 1e-4f64..0.99, f in 0.0f64..0.999) {
        // α₁α₂ < 1 by construction
        let a2 = f / a1.max(1.0);
        prop_assume!(a2 > 0.0);
        let pair = ParticlePair::new(
            PolarizabilityModel::constant(a1).unwrap(),
            PolarizabilityModel::constant(a2).unwrap(),
            1.0,
        ).unwrap();
        let omega = 10f64.powf(lx) * C;
        prop_assert!(determinant(&pair, omega, FrequencyAxis::Imaginary).unwrap().value.re > 0.0);
    }

    #[test]
    fn attractive_across_six_decades(la1 in -4.0f64..-0.2, la2 in -4.0f64..-0.2, lrho in -3.0f64..3.0) {
        let pair = london(10f64.powf(la1), 10f64.powf(la2), 10f64.powf(lrho));
        let v = potential_full(&pair, &q()).unwrap();
        prop_assert!(v.value_si < 0.0);
        prop_assert!(v.error_estimate >= 0.0);
    }

    #[test]
    fn v_times_r_constant(la in -4.0f64..-0.5, lr in -12.0f64..-4.0) {
        let a = 10f64.powf(la);
        let r0 = 10f64.powf(lr);
        let base = potential_full(&constant(a, a, r0), &q()).unwrap().value_si * r0;
        for d in 1..=4 {
            let r = r0 * 10f64.powi(d);
            let v = potential_full(&constant(a, a, r), &q()).unwrap().value_si * r;
            prop_assert!(rel(v, base) <= 1e-8);
        }
    }

    #[test]
    fn expansion_accuracy(la in -3.0f64..-2.0, lrho in -2.0f64..2.0, is_london in any::<bool>()) {
        let a = 10f64.powf(la);
        let rho = 10f64.powf(lrho);
        let pair = if is_london { london(a, a, rho) } else { constant(a, a, rho * C / OMEGA0) };
        let poly = expansion_polynomial(CoefficientSource::SelfConsistent);
        let full = potential_full(&pair, &q()).unwrap().value_si;
        let exp = potential_expanded(&pair, &poly, &q()).unwrap().value_si;
        prop_assert!(rel(exp, full) <= 10.0 * a * a);
    }

    #[test]
    fn time_and_frequency_fields_agree(lw in 3.0f64..18.0, lx in -2.0f64..1.3, theta in 0.0f64..PI, phase in 0.0f64..6.3) {
        let omega = 10f64.powf(lw);
        let x = 10f64.powf(lx);
        let r = x * C / omega;
        let t = phase / omega;
        let f = field_time_domain(&MonochromaticDipole { p0: 1.0, omega }, &EvaluationPoint::new(r, theta, t).unwrap()).unwrap();
        let (st, ct) = theta.sin_cos();
        let e = field_frequency_domain([0.0, 0.0, 1.0], Complex64::new(1.0, 0.0), omega, [r * st, 0.0, r * ct]).unwrap();
        let ph = Complex64::from_polar(1.0, -omega * t);
        let (ex, ez) = ((e[0] * ph).re, (e[2] * ph).re);
        let scale = (1.0 + x).powi(2);
        prop_assert!((f.e[0] - (ex * st + ez * ct)).abs() <= 1e-10 * scale);
        prop_assert!((f.e[1] - (ex * ct - ez * st)).abs() <= 1e-10 * scale);
    }

    #[test]
    fn calibration_is_linear(l1 in -27.0f64..-20.0, l2 in -27.0f64..-20.0) {
        let cal = Calibration::new(CoefficientSource::SelfConsistent);
        let (m1, m2) = (10f64.powf(l1), 10f64.powf(l2));
        let sum = mass_to_polarizability(m1 + m2, &cal).unwrap();
        let parts = mass_to_polarizability(m1, &cal).unwrap() + mass_to_polarizability(m2, &cal).unwrap();
        prop_assert!(rel(sum, parts) <= 1e-15);
    }
}
