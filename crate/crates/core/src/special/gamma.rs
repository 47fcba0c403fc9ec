use std::f64::consts::PI;

/// Below this argument the Stirling series is not used directly; the argument
/// is shifted upward with the recurrence `Gamma(x+1) = x Gamma(x)`.
const STIRLING_MIN: f64 = 10.0;

/// B_{2k} / (2k (2k-1)) for k = 1..8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// Natural logarithm of the gamma function for `x > 0`.
///
/// Returns NaN for non-positive or NaN input and `+inf` for `x = +inf`.
/// Absolute error is a few ulps of `max(1, |ln Gamma(x)|)`.
pub fn ln_gamma(x: f64) -> f64 {
    if x.is_nan() || x <= 0.0 {
        return f64::NAN;
    }
    if x.is_infinite() {
        return f64::INFINITY;
    }
    if let Some(v) = small_exact(x) {
        return v;
    }
    if x >= STIRLING_MIN {
        return stirling(x);
    }
    // Gamma(x) = Gamma(x + k) / (x (x+1) ... (x+k-1))
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < STIRLING_MIN {
        product *= shifted;
        shifted += 1.0;
    }
    stirling(shifted) - product.ln()
}

/// Integers and half-integers up to `EXACT_MAX`, where the factorial or
/// double factorial is an exact double and only the final `ln` rounds.
const EXACT_MAX: f64 = 15.0;

fn small_exact(x: f64) -> Option<f64> {
    if x > EXACT_MAX || (2.0 * x).fract() != 0.0 {
        return None;
    }
    if x.fract() == 0.0 {
        // Gamma(n) = (n-1)!
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        Some(f.ln())
    } else {
        // Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m
        let m = x - 0.5;
        let mut f = 1.0;
        let mut k = 3.0;
        while k < 2.0 * m {
            f *= k;
            k += 2.0;
        }
        Some(f.ln() + 0.5 * PI.ln() - m * std::f64::consts::LN_2)
    }
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv_sq = inv * inv;
    let mut series = 0.0;
    for c in STIRLING_COEFFS.iter().rev() {
        series = series * inv_sq + c;
    }
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series * inv
}

/// `ln Gamma(x + d) - ln Gamma(x)` for `x > 0`, `x + d > 0`.
///
/// For large `x` the two Stirling series are differenced term by term, so the
/// result keeps relative accuracy where the plain difference of two large
/// logarithms would cancel.
pub fn ln_gamma_ratio(x: f64, d: f64) -> f64 {
    let y = x + d;
    if x.is_nan() || y.is_nan() || x <= 0.0 || y <= 0.0 {
        return f64::NAN;
    }
    if d == 0.0 {
        return 0.0;
    }
    if x < STIRLING_MIN || y < STIRLING_MIN || !x.is_finite() {
        return ln_gamma(y) - ln_gamma(x);
    }
    // (y - 1/2) ln y - (x - 1/2) ln x - d, rearranged around ln(1 + d/x).
    let lead = (x - 0.5) * (d / x).ln_1p() + d * y.ln() - d;
    let (ix, iy) = (1.0 / x, 1.0 / y);
    let (ix2, iy2) = (ix * ix, iy * iy);
    let (mut sx, mut sy) = (0.0, 0.0);
    for c in STIRLING_COEFFS.iter().rev() {
        sx = sx * ix2 + c;
        sy = sy * iy2 + c;
    }
    lead + (sy * iy - sx * ix)
}
