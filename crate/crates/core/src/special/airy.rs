//! Airy function of the first kind for real arguments.
//!
//! Three regimes, chosen so that `Ai(t)` keeps full relative accuracy for
//! `t >= 0` despite its exponential decay:
//!
//! * `|t| <= 1`: Maclaurin series `Ai = c1 f(t) - c2 g(t)`;
//! * `1 < t <= 8`: `Ai(t) = (1/pi) sqrt(t/3) K_{1/3}(zeta)`, with the Bessel
//!   function from its `cosh` integral, summed by the trapezoidal rule
//!   (geometric convergence for this analytic integrand);
//! * `t > 8`: the large-argument asymptotic series, truncated at its smallest
//!   term.
//!
//! Here `zeta = (2/3) t^{3/2}`.

use std::f64::consts::PI;

const AI0: f64 = 0.355_028_053_887_817_2;
const MINUS_AIP0: f64 = 0.258_819_403_792_806_8;

const SERIES_MAX: f64 = 1.0;
const ASYMPTOTIC_MIN: f64 = 8.0;
const TRAPEZOID_STEP: f64 = 0.1;

fn zeta(t: f64) -> f64 {
    2.0 / 3.0 * t * t.sqrt()
}

/// `Ai(t)`. Accurate to ~1e-14 relative for `t >= 0`; for negative
/// arguments the Maclaurin series is used and accuracy is absolute.
pub fn airy_ai(t: f64) -> f64 {
    if t.is_nan() {
        return f64::NAN;
    }
    if t <= SERIES_MAX {
        maclaurin(t)
    } else {
        airy_ai_scaled(t) * (-zeta(t)).exp()
    }
}

/// `exp(zeta) Ai(t)` for `t >= 0`; NaN for negative `t`.
pub fn airy_ai_scaled(t: f64) -> f64 {
    if t.is_nan() || t < 0.0 {
        return f64::NAN;
    }
    if t == f64::INFINITY {
        return 0.0;
    }
    if t <= SERIES_MAX {
        maclaurin(t) * zeta(t).exp()
    } else if t <= ASYMPTOTIC_MIN {
        bessel_integral_scaled(t)
    } else {
        asymptotic_scaled(t)
    }
}

fn maclaurin(t: f64) -> f64 {
    let t3 = t * t * t;
    let mut f_term = 1.0;
    let mut g_term = t;
    let mut f = f_term;
    let mut g = g_term;
    for k in 1..200 {
        let k3 = 3.0 * k as f64;
        f_term *= t3 / ((k3 - 1.0) * k3);
        g_term *= t3 / (k3 * (k3 + 1.0));
        f += f_term;
        g += g_term;
        if f_term.abs() <= 1e-17 * f.abs() && g_term.abs() <= 1e-17 * g.abs().max(f64::MIN_POSITIVE)
        {
            break;
        }
    }
    AI0 * f - MINUS_AIP0 * g
}

fn bessel_integral_scaled(t: f64) -> f64 {
    let z = zeta(t);
    // exp(z) K_{1/3}(z) = int_0^inf exp(-z (cosh u - 1)) cosh(u/3) du
    let integrand = |u: f64| {
        let s = (0.5 * u).sinh();
        (-2.0 * z * s * s).exp() * (u / 3.0).cosh()
    };
    let mut sum = 0.5 * integrand(0.0);
    for k in 1.. {
        let term = integrand(k as f64 * TRAPEZOID_STEP);
        sum += term;
        if term <= 1e-18 * sum {
            break;
        }
    }
    (t / 3.0).sqrt() / PI * TRAPEZOID_STEP * sum
}

fn asymptotic_scaled(t: f64) -> f64 {
    let z = zeta(t);
    let mut coeff = 1.0;
    let mut term: f64 = 1.0;
    let mut sum = 1.0;
    for k in 1..100 {
        let kf = k as f64;
        coeff *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        let next = -term.signum() * coeff / z.powi(k);
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() <= 1e-17 {
            break;
        }
    }
    sum / (2.0 * PI.sqrt() * t.sqrt().sqrt())
}
