use std::fmt;
use std::ops::{Div, Mul, Neg};

use super::ln_gamma;

/// A real number stored as a sign and the natural log of its magnitude.
///
/// Products and quotients of gamma functions with arguments in the millions
/// stay finite in this form long after `f64` would overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    sign: i8,
    logmag: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        sign: 0,
        logmag: f64::NEG_INFINITY,
    };
    pub const ONE: SignedLog = SignedLog {
        sign: 1,
        logmag: 0.0,
    };

    /// Builds `sign * exp(logmag)`. A zero sign forces the log to `-inf`.
    pub fn new(sign: i8, logmag: f64) -> Self {
        match sign.signum() {
            0 => Self::ZERO,
            s => SignedLog { sign: s, logmag },
        }
    }

    /// Positive number `exp(logmag)`.
    pub fn from_ln(logmag: f64) -> Self {
        SignedLog { sign: 1, logmag }
    }

    pub fn from_f64(value: f64) -> Self {
        if value == 0.0 {
            Self::ZERO
        } else {
            SignedLog {
                sign: if value < 0.0 { -1 } else { 1 },
                logmag: value.abs().ln(),
            }
        }
    }

    /// `Gamma(x)` for `x > 0`.
    pub fn gamma(x: f64) -> Self {
        Self::from_ln(ln_gamma(x))
    }

    /// `base^exponent` for a positive base.
    pub fn pow(base: f64, exponent: f64) -> Self {
        debug_assert!(base > 0.0);
        Self::from_ln(exponent * base.ln())
    }

    /// `(-1)^k`.
    pub fn parity(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::ONE
        } else {
            -Self::ONE
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn logmag(&self) -> f64 {
        self.logmag
    }

    /// Converts back to `f64`; overflows to `±inf` and underflows to `±0`.
    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.logmag.exp()
    }

    pub fn abs(&self) -> Self {
        SignedLog {
            sign: self.sign.abs(),
            logmag: self.logmag,
        }
    }

    /// Square root of a non-negative value; NaN magnitude for negative input.
    pub fn sqrt(&self) -> Self {
        match self.sign {
            0 => Self::ZERO,
            1 => Self::from_ln(0.5 * self.logmag),
            _ => SignedLog {
                sign: 1,
                logmag: f64::NAN,
            },
        }
    }

    pub fn recip(&self) -> Self {
        SignedLog {
            sign: self.sign,
            logmag: -self.logmag,
        }
    }

    /// True when the log-magnitude is a finite number (or the value is zero).
    pub fn is_finite(&self) -> bool {
        self.sign == 0 || self.logmag.is_finite()
    }
}

impl Mul for SignedLog {
    type Output = SignedLog;

    fn mul(self, rhs: SignedLog) -> SignedLog {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        SignedLog {
            sign: self.sign * rhs.sign,
            logmag: self.logmag + rhs.logmag,
        }
    }
}

impl Div for SignedLog {
    type Output = SignedLog;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: SignedLog) -> SignedLog {
        self * rhs.recip()
    }
}

impl Neg for SignedLog {
    type Output = SignedLog;

    fn neg(self) -> SignedLog {
        SignedLog {
            sign: -self.sign,
            logmag: self.logmag,
        }
    }
}

impl fmt::Display for SignedLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            1 => "+",
            -1 => "-",
            _ => return write!(f, "0"),
        };
        write!(f, "{s}exp({})", self.logmag)
    }
}
