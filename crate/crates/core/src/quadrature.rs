//! Globally adaptive 21-point Gauss–Kronrod quadrature.
//!
//! Panels are kept in a max-heap keyed on their error estimate; the worst
//! panel is bisected until the summed estimate meets the tolerance or the
//! panel budget runs out. Error estimates use the QUADPACK rescaling of
//! |K21 − G10|.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    /// Absolute tolerance in the units of the (normalised) integrand.
    pub abs_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-16,
            max_panels: 2000,
        }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(invalid("quadrature tolerances must be positive"));
        }
        if self.max_panels == 0 {
            return Err(invalid("quadrature needs at least one panel"));
        }
        Ok(())
    }

    /// Same settings with both tolerances divided by `factor`.
    pub fn tightened(&self, factor: f64) -> Self {
        Self {
            rel_tol: self.rel_tol / factor,
            abs_tol: self.abs_tol / factor,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

// Kronrod abscissae; odd indices are the 10-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208745922008,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[10];
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    if !kronrod.is_finite() {
        return Err(Error::NumericalFailure {
            operation: "quadrature",
            detail: format!("non-finite integrand on [{a:e}, {b:e}]"),
        });
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let h = half.abs();
    let value = kronrod * half;
    let res_abs = res_abs * h;
    let res_asc = res_asc * h;
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel { a, b, value, error })
}

/// Integrate `f` over `[breakpoints[0], breakpoints[last]]`, starting with one
/// panel per consecutive pair of breakpoints.
pub fn integrate<F: Fn(f64) -> f64>(f: F, breakpoints: &[f64], settings: &QuadratureSettings) -> Result<QuadratureResult> {
    settings.validate()?;
    if breakpoints.len() < 2 {
        return Err(invalid("integration needs at least two breakpoints"));
    }
    if breakpoints.windows(2).any(|w| !(w[1] > w[0]) || !w[0].is_finite() || !w[1].is_finite()) {
        return Err(invalid("breakpoints must be finite and strictly increasing"));
    }
    let mut heap = BinaryHeap::new();
    for w in breakpoints.windows(2) {
        heap.push(gauss_kronrod(&f, w[0], w[1])?);
    }
    loop {
        let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        let target = settings.abs_tol.max(settings.rel_tol * value.abs());
        if error <= target {
            return Ok(QuadratureResult {
                value,
                error,
                panels: heap.len(),
            });
        }
        if heap.len() >= settings.max_panels {
            return Err(Error::NumericalFailure {
                operation: "quadrature",
                detail: format!(
                    "panel budget {} exhausted: estimate {value:e}, error {error:e}, target {target:e}",
                    settings.max_panels
                ),
            });
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // interval cannot be split further in floating point
            return Err(Error::NumericalFailure {
                operation: "quadrature",
                detail: format!("cannot bisect [{:e}, {:e}] further", worst.a, worst.b),
            });
        }
        heap.push(gauss_kronrod(&f, worst.a, mid)?);
        heap.push(gauss_kronrod(&f, mid, worst.b)?);
    }
}

/// Integrate `f` over `[a, ∞)` through the map x = a + scale·(1 − t)/t.
///
/// `knees` are points (in x) where the integrand changes character; they
/// become initial breakpoints in t.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    scale: f64,
    knees: &[f64],
    settings: &QuadratureSettings,
) -> Result<QuadratureResult> {
    if !(scale > 0.0) || !scale.is_finite() || !a.is_finite() {
        return Err(invalid("semi-infinite map needs a finite start and positive scale"));
    }
    let g = |t: f64| {
        if t <= 0.0 {
            return 0.0;
        }
        let s = (1.0 - t) / t;
        f(a + scale * s) * scale / (t * t)
    };
    let mut pts = vec![0.0, 1.0];
    for &k in knees {
        if k > a && k.is_finite() {
            let t = scale / (scale + (k - a));
            if t > 0.0 && t < 1.0 {
                pts.push(t);
            }
        }
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|x, y| (*x - *y).abs() < 1e-14);
    integrate(g, &pts, settings)
}
