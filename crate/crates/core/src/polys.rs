//! Classical orthogonal polynomials: weights, recurrences, normalizations and
//! the gamma-ratio constants that appear in the barycentric weight formulas.
//!
//! Two normalizations are in play. [`evaluate`], [`leading_and_norm`] and the
//! hypergeometric data use the classical one (`P_n^{(a,b)}`, `L_n^{(a)}`,
//! `H_n`). [`recurrence_coefficients`] describes the monic polynomials `p_n`
//! that feed the eigensolver; `P_n = k_n p_n`.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use crate::barycentric::WeightKind;
use crate::dd::Dd;
use crate::eigen::SymmetricTridiagonal;
use crate::special::{ln_gamma, SignedLog};
use crate::{Error, Result};

/// A classical weight function on its natural support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFamily {
    /// `(1-x)^alpha (1+x)^beta` on `(-1, 1)`.
    Jacobi { alpha: f64, beta: f64 },
    /// `x^alpha e^{-x}` on `(0, inf)`.
    Laguerre { alpha: f64 },
    /// `e^{-x^2}` on the real line.
    Hermite,
}

impl WeightFamily {
    pub fn jacobi(alpha: f64, beta: f64) -> Result<Self> {
        let f = WeightFamily::Jacobi { alpha, beta };
        f.validate()?;
        Ok(f)
    }

    pub fn laguerre(alpha: f64) -> Result<Self> {
        let f = WeightFamily::Laguerre { alpha };
        f.validate()?;
        Ok(f)
    }

    pub fn legendre() -> Self {
        WeightFamily::Jacobi {
            alpha: 0.0,
            beta: 0.0,
        }
    }

    /// Weight `1/sqrt(1-x^2)`.
    pub fn chebyshev_first() -> Self {
        WeightFamily::Jacobi {
            alpha: -0.5,
            beta: -0.5,
        }
    }

    /// Weight `sqrt(1-x^2)`.
    pub fn chebyshev_second() -> Self {
        WeightFamily::Jacobi {
            alpha: 0.5,
            beta: 0.5,
        }
    }

    /// Weight `(1-x^2)^{lambda-1/2}`, `lambda > -1/2`.
    pub fn gegenbauer(lambda: f64) -> Result<Self> {
        Self::jacobi(lambda - 0.5, lambda - 0.5)
    }

    /// Checks that the weight is integrable.
    pub fn validate(&self) -> Result<()> {
        let ok = |name: &str, v: f64| {
            if v > -1.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::Parameter(format!(
                    "{name} must be a finite number > -1, got {v}"
                )))
            }
        };
        match *self {
            WeightFamily::Jacobi { alpha, beta } => {
                ok("alpha", alpha)?;
                ok("beta", beta)
            }
            WeightFamily::Laguerre { alpha } => ok("alpha", alpha),
            WeightFamily::Hermite => Ok(()),
        }
    }

    /// Endpoints of the support (possibly infinite).
    pub fn support(&self) -> (f64, f64) {
        match self {
            WeightFamily::Jacobi { .. } => (-1.0, 1.0),
            WeightFamily::Laguerre { .. } => (0.0, f64::INFINITY),
            WeightFamily::Hermite => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, WeightFamily::Jacobi { .. })
    }

    /// `ln` of the total mass `mu0`.
    pub fn ln_mu0(&self) -> f64 {
        match *self {
            WeightFamily::Jacobi { alpha, beta } => {
                (alpha + beta + 1.0) * LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0)
                    - ln_gamma(alpha + beta + 2.0)
            }
            WeightFamily::Laguerre { alpha } => ln_gamma(alpha + 1.0),
            WeightFamily::Hermite => 0.5 * PI.ln(),
        }
    }

    /// Total mass `mu0`, the integral of the weight over its support.
    pub fn mu0(&self) -> f64 {
        match *self {
            WeightFamily::Jacobi {
                alpha: 0.0,
                beta: 0.0,
            } => 2.0,
            WeightFamily::Jacobi {
                alpha: -0.5,
                beta: -0.5,
            } => PI,
            WeightFamily::Laguerre { alpha: 0.0 } => 1.0,
            WeightFamily::Hermite => PI.sqrt(),
            _ => self.ln_mu0().exp(),
        }
    }

    /// The weight function itself; zero outside the support.
    pub fn weight(&self, x: f64) -> f64 {
        match *self {
            WeightFamily::Jacobi { alpha, beta } => {
                if x.abs() > 1.0 {
                    0.0
                } else {
                    (1.0 - x).powf(alpha) * (1.0 + x).powf(beta)
                }
            }
            WeightFamily::Laguerre { alpha } => {
                if x < 0.0 {
                    0.0
                } else {
                    x.powf(alpha) * (-x).exp()
                }
            }
            WeightFamily::Hermite => (-x * x).exp(),
        }
    }

    pub(crate) fn name(&self) -> &'static str {
        match self {
            WeightFamily::Jacobi { .. } => "jacobi",
            WeightFamily::Laguerre { .. } => "laguerre",
            WeightFamily::Hermite => "hermite",
        }
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFamily::Jacobi { alpha, beta } => write!(f, "jacobi(alpha={alpha}, beta={beta})"),
            WeightFamily::Laguerre { alpha } => write!(f, "laguerre(alpha={alpha})"),
            WeightFamily::Hermite => write!(f, "hermite"),
        }
    }
}

/// Monic three-term recurrence `p_{k+1} = (x - a_k) p_k - b_k p_{k-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoefficients {
    /// `a_0 .. a_{n-1}`.
    pub a: Vec<f64>,
    /// `b_1 .. b_{n-1}`.
    pub b: Vec<f64>,
    pub mu0: f64,
}

impl RecurrenceCoefficients {
    /// The symmetric Jacobi matrix whose eigenvalues are the `n` Gauss nodes.
    pub fn jacobi_matrix(&self) -> Result<SymmetricTridiagonal> {
        SymmetricTridiagonal::new(self.a.clone(), self.b.iter().map(|b| b.sqrt()).collect())
    }

    /// Orthonormal polynomials `pi_0(x) .. pi_{n-1}(x)` with respect to the
    /// weight (so `int pi_j pi_k w = delta_jk`).
    pub fn orthonormal_values(&self, x: f64) -> Vec<f64> {
        let n = self.a.len();
        let mut out = Vec::with_capacity(n);
        let mut prev = 0.0;
        let mut cur = 1.0 / self.mu0.sqrt();
        out.push(cur);
        for k in 0..n.saturating_sub(1) {
            let sb_prev = if k == 0 { 0.0 } else { self.b[k - 1].sqrt() };
            let next = ((x - self.a[k]) * cur - sb_prev * prev) / self.b[k].sqrt();
            prev = cur;
            cur = next;
            out.push(cur);
        }
        out
    }
}

/// Recurrence data for building an `n`-point Gauss rule.
pub fn recurrence_coefficients(family: WeightFamily, n: usize) -> Result<RecurrenceCoefficients> {
    family.validate()?;
    if n == 0 {
        return Err(Error::Argument(
            "at least one recurrence term is required".into(),
        ));
    }
    let (a, b) = recurrence_dd(family, n);
    Ok(RecurrenceCoefficients {
        a: a.iter().map(|v| v.to_f64()).collect(),
        b: b.iter().map(|v| v.to_f64()).collect(),
        mu0: family.mu0(),
    })
}

/// `a_0..a_{n-1}` and `b_1..b_{n-1}` in double-double precision.
pub(crate) fn recurrence_dd(family: WeightFamily, n: usize) -> (Vec<Dd>, Vec<Dd>) {
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n.saturating_sub(1));
    match family {
        WeightFamily::Jacobi { alpha, beta } => {
            let (al, be) = (Dd::from(alpha), Dd::from(beta));
            let s = al + be;
            let one = Dd::ONE;
            let two = Dd::from(2.0);
            let four = Dd::from(4.0);
            for k in 0..n {
                let kk = Dd::from(k as f64);
                let t = two * kk + s;
                if k == 0 {
                    a.push((be - al) / (s + two));
                } else {
                    a.push((be - al) * (be + al) / (t * (t + two)));
                }
                if k == 1 {
                    let t = two + s;
                    b.push(four * (one + al) * (one + be) / (t * t * (t + one)));
                } else if k >= 2 {
                    let num = four * kk * (kk + al) * (kk + be) * (kk + s);
                    b.push(num / (t * t * (t + one) * (t - one)));
                }
            }
        }
        WeightFamily::Laguerre { alpha } => {
            let al = Dd::from(alpha);
            for k in 0..n {
                let kk = Dd::from(k as f64);
                a.push(Dd::from(2.0) * kk + al + Dd::ONE);
                if k >= 1 {
                    b.push(kk * (kk + al));
                }
            }
        }
        WeightFamily::Hermite => {
            for k in 0..n {
                a.push(Dd::ZERO);
                if k >= 1 {
                    b.push(Dd::from(k as f64 * 0.5));
                }
            }
        }
    }
    (a, b)
}

/// `P_n^{(a,b)}(x)`, `L_n^{(a)}(x)` or `H_n(x)` in classical normalization,
/// by forward recurrence.
pub fn evaluate(family: WeightFamily, n: usize, x: f64) -> Result<f64> {
    family.validate()?;
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = match family {
        WeightFamily::Jacobi { alpha, beta } => {
            (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
        }
        WeightFamily::Laguerre { alpha } => 1.0 + alpha - x,
        WeightFamily::Hermite => 2.0 * x,
    };
    for k in 2..=n {
        let kf = k as f64;
        let next = match family {
            WeightFamily::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                let t = 2.0 * kf + s;
                let c1 = (t - 1.0) * (t * (t - 2.0) * x + alpha * alpha - beta * beta);
                let c2 = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * t;
                (c1 * cur - c2 * prev) / (2.0 * kf * (kf + s) * (t - 2.0))
            }
            WeightFamily::Laguerre { alpha } => {
                ((2.0 * kf - 1.0 + alpha - x) * cur - (kf - 1.0 + alpha) * prev) / kf
            }
            WeightFamily::Hermite => 2.0 * x * cur - 2.0 * (kf - 1.0) * prev,
        };
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Leading coefficient `k_n` and squared norm `h_n = int P_n^2 w` of the
/// classical polynomial of degree `n`.
pub fn leading_and_norm(family: WeightFamily, n: usize) -> Result<(SignedLog, SignedLog)> {
    family.validate()?;
    let nf = n as f64;
    let lnfact = ln_gamma(nf + 1.0);
    Ok(match family {
        WeightFamily::Jacobi { alpha, beta } => {
            if n == 0 {
                (SignedLog::ONE, SignedLog::from_ln(family.ln_mu0()))
            } else {
                let s = alpha + beta;
                let k = ln_gamma(2.0 * nf + s + 1.0) - nf * LN_2 - lnfact - ln_gamma(nf + s + 1.0);
                let h = (s + 1.0) * LN_2 - (2.0 * nf + s + 1.0).ln()
                    + ln_gamma(nf + alpha + 1.0)
                    + ln_gamma(nf + beta + 1.0)
                    - lnfact
                    - ln_gamma(nf + s + 1.0);
                (SignedLog::from_ln(k), SignedLog::from_ln(h))
            }
        }
        WeightFamily::Laguerre { alpha } => (
            SignedLog::parity(n as i64) * SignedLog::from_ln(-lnfact),
            SignedLog::from_ln(ln_gamma(nf + alpha + 1.0) - lnfact),
        ),
        WeightFamily::Hermite => (
            SignedLog::from_ln(nf * LN_2),
            SignedLog::from_ln(0.5 * PI.ln() + nf * LN_2 + lnfact),
        ),
    })
}

/// Coefficients of the differential equation
/// `varphi(x) y'' + phi(x) y' + nu_n y = 0` satisfied by the degree-`n`
/// classical polynomial, together with its normalization constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricData {
    pub family: WeightFamily,
    /// `varphi(x) = c0 + c1 x + c2 x^2`.
    pub varphi: [f64; 3],
    /// `phi(x) = d0 + d1 x`.
    pub phi: [f64; 2],
}

impl HypergeometricData {
    pub fn varphi_at(&self, x: f64) -> f64 {
        let [c0, c1, c2] = self.varphi;
        c0 + x * (c1 + x * c2)
    }

    /// `varphi` from the distances `x - lower` and `upper - x` to the support
    /// endpoints. Avoids the cancellation in `1 - x^2` next to `x = +-1`.
    pub fn varphi_from_gaps(&self, lower_gap: f64, upper_gap: f64) -> f64 {
        match self.family {
            WeightFamily::Jacobi { .. } => lower_gap * upper_gap,
            WeightFamily::Laguerre { .. } => lower_gap,
            WeightFamily::Hermite => 1.0,
        }
    }

    /// `nu_n = -n phi' - n(n-1)/2 varphi''`.
    pub fn nu(&self, n: f64) -> f64 {
        -n * self.phi[1] - n * (n - 1.0) * self.varphi[2]
    }

    pub fn leading(&self, n: usize) -> SignedLog {
        leading_and_norm(self.family, n)
            .map(|p| p.0)
            .unwrap_or(SignedLog::ZERO)
    }

    pub fn norm(&self, n: usize) -> SignedLog {
        leading_and_norm(self.family, n)
            .map(|p| p.1)
            .unwrap_or(SignedLog::ZERO)
    }
}

pub fn hypergeometric_data(family: WeightFamily) -> Result<HypergeometricData> {
    family.validate()?;
    let (varphi, phi) = match family {
        WeightFamily::Jacobi { alpha, beta } => {
            ([1.0, 0.0, -1.0], [beta - alpha, -(alpha + beta + 2.0)])
        }
        WeightFamily::Laguerre { alpha } => ([0.0, 1.0, 0.0], [1.0 + alpha, -1.0]),
        WeightFamily::Hermite => ([1.0, 0.0, 0.0], [0.0, -2.0]),
    };
    Ok(HypergeometricData {
        family,
        varphi,
        phi,
    })
}

/// Common factor turning the simplified barycentric weights of the `n+1`
/// roots of the degree-`n+1` polynomial into the full weights `1/l'(x_j)`.
///
/// `Simplified` returns exactly one.
pub fn constant_c(family: WeightFamily, n: usize, kind: WeightKind) -> Result<SignedLog> {
    family.validate()?;
    Ok(match kind {
        WeightKind::Simplified => SignedLog::ONE,
        WeightKind::Full => c_factor(family, n as i64),
    })
}

/// The full-weight constant, also for `n = -1` (a single node), which the
/// Radau and Lobatto formulas reach for their smallest sizes.
pub(crate) fn c_factor(family: WeightFamily, n: i64) -> SignedLog {
    let sigma = SignedLog::parity(n);
    let nf = n as f64;
    match family {
        WeightFamily::Jacobi { alpha, beta } => {
            let s = alpha + beta;
            let ln = ln_gamma(2.0 * nf + s + 3.0)
                - (nf + 1.0 + (s + 1.0) / 2.0) * LN_2
                - 0.5
                    * (ln_gamma(nf + 2.0)
                        + ln_gamma(nf + s + 2.0)
                        + ln_gamma(nf + alpha + 2.0)
                        + ln_gamma(nf + beta + 2.0));
            sigma * SignedLog::from_ln(ln)
        }
        WeightFamily::Laguerre { alpha } => {
            sigma * SignedLog::from_ln(-0.5 * (ln_gamma(nf + alpha + 2.0) + ln_gamma(nf + 2.0)))
        }
        WeightFamily::Hermite => {
            sigma * SignedLog::from_ln(0.5 * (nf * LN_2 - ln_gamma(nf + 2.0) - 0.5 * PI.ln()))
        }
    }
}
