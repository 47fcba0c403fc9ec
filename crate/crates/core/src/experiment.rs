//! Convergence studies: interpolate a test function at the points of a rule
//! for a range of sizes and measure the error.

use std::f64::consts::FRAC_2_PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::barycentric::{bary_weights, Interpolant, WeightKind};
use crate::polys::WeightFamily;
use crate::quadrature::{gauss_rule, rule, QuadratureRule, RuleVariant};
use crate::special::airy_ai_scaled;
use crate::{Error, Result};

/// Points in the equispaced grid of the max-norm.
pub const MAXGRID_POINTS: usize = 10_000;
/// Size of the Gauss rules behind the weighted norms.
pub const NORM_RULE_POINTS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `1 / (1 + 25 x^2)`.
    Runge,
    /// `exp(-1/x^2)`, zero at the origin.
    ExpInv,
    /// `J_{1/2}(x) / sqrt(x) = sqrt(2/pi) sin(x) / x`.
    Bessel,
    /// `Ai((3(x+1)/2)^{2/3}) e^x`.
    Airy,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [
        Builtin::Runge,
        Builtin::ExpInv,
        Builtin::Bessel,
        Builtin::Airy,
    ];

    pub fn eval(self, x: f64) -> f64 {
        match self {
            Builtin::Runge => 1.0 / (1.0 + 25.0 * x * x),
            Builtin::ExpInv => {
                if x == 0.0 {
                    0.0
                } else {
                    // 1/x^2 overflows to inf for tiny x, and exp(-inf) = 0.
                    (-1.0 / (x * x)).exp()
                }
            }
            Builtin::Bessel => {
                if x == 0.0 {
                    FRAC_2_PI.sqrt()
                } else {
                    FRAC_2_PI.sqrt() * x.sin() / x
                }
            }
            Builtin::Airy => {
                // Ai(t) = scaled(t) e^{-zeta}, zeta = (2/3) t^{3/2} = x + 1 up to rounding.
                let t = (1.5 * (x + 1.0)).powf(2.0 / 3.0);
                let zeta = 2.0 / 3.0 * t * t.sqrt();
                airy_ai_scaled(t) * (x - zeta).exp()
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Runge => "runge",
            Builtin::ExpInv => "expinv",
            Builtin::Bessel => "bessel",
            Builtin::Airy => "airy",
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| {
                Error::Argument(format!(
                    "unknown function '{s}' (runge, expinv, bessel, airy)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorNorm {
    /// Maximum over an equispaced grid of the interval.
    MaxGrid,
    /// `(int_a^b sqrt(x - a) |f - p|^2 dx)^{1/2}`.
    WeightedL2,
    /// `int_0^inf e^{-x} |f - p| dx`.
    WeightedL1,
}

impl ErrorNorm {
    pub fn name(self) -> &'static str {
        match self {
            ErrorNorm::MaxGrid => "maxgrid",
            ErrorNorm::WeightedL2 => "weighted-l2",
            ErrorNorm::WeightedL1 => "weighted-l1",
        }
    }
}

impl fmt::Display for ErrorNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ErrorNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maxgrid" => Ok(ErrorNorm::MaxGrid),
            "weighted-l2" => Ok(ErrorNorm::WeightedL2),
            "weighted-l1" => Ok(ErrorNorm::WeightedL1),
            _ => Err(Error::Argument(format!(
                "unknown norm '{s}' (maxgrid, weighted-l2, weighted-l1)"
            ))),
        }
    }
}

/// One convergence study. `n` counts interpolation points.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub function: Builtin,
    pub family: WeightFamily,
    pub variant: RuleVariant,
    /// Interval for Jacobi-type rules; `None` keeps `[-1, 1]`.
    pub domain: Option<(f64, f64)>,
    pub start: usize,
    pub stop: usize,
    pub step: usize,
    pub norm: ErrorNorm,
}

impl ExperimentSpec {
    /// The standard setup for each test function.
    pub fn preset(function: Builtin) -> Self {
        match function {
            Builtin::Runge | Builtin::ExpInv => ExperimentSpec {
                function,
                family: WeightFamily::Jacobi {
                    alpha: -0.5,
                    beta: -0.25,
                },
                variant: RuleVariant::Gauss,
                domain: None,
                start: 10,
                stop: 500,
                step: 10,
                norm: ErrorNorm::MaxGrid,
            },
            Builtin::Bessel => ExperimentSpec {
                function,
                family: WeightFamily::Jacobi {
                    alpha: 0.0,
                    beta: 0.5,
                },
                variant: RuleVariant::Gauss,
                domain: Some((0.0, 1.0)),
                start: 2,
                stop: 20,
                step: 1,
                norm: ErrorNorm::WeightedL2,
            },
            Builtin::Airy => ExperimentSpec {
                function,
                family: WeightFamily::Laguerre { alpha: 0.0 },
                variant: RuleVariant::Gauss,
                domain: None,
                start: 2,
                stop: 100,
                step: 2,
                norm: ErrorNorm::WeightedL1,
            },
        }
    }

    pub fn sizes(&self) -> Vec<usize> {
        (self.start..=self.stop).step_by(self.step.max(1)).collect()
    }

    pub fn validate(&self) -> Result<()> {
        self.family.validate()?;
        if self.step == 0 || self.start == 0 || self.start > self.stop {
            return Err(Error::Argument(format!(
                "empty size range {}..={} step {}",
                self.start, self.stop, self.step
            )));
        }
        let min_points = match self.variant {
            RuleVariant::Lobatto => 2,
            _ => 1,
        };
        if self.start < min_points {
            return Err(Error::Argument(format!(
                "{} rules need at least {min_points} points",
                self.variant
            )));
        }
        // Surfaces unsupported family/variant pairs before any work is done.
        rule(self.family, self.variant, min_points)?;
        if let Some((a, b)) = self.domain {
            if !self.family.is_bounded() {
                return Err(Error::Argument(
                    "a domain can only be given for jacobi rules".into(),
                ));
            }
            if !(a < b && a.is_finite() && b.is_finite()) {
                return Err(Error::Argument(format!(
                    "domain [{a}, {b}] must be finite with a < b"
                )));
            }
        }
        let fits = match self.norm {
            ErrorNorm::MaxGrid | ErrorNorm::WeightedL2 => self.family.is_bounded(),
            ErrorNorm::WeightedL1 => matches!(self.family, WeightFamily::Laguerre { .. }),
        };
        if !fits {
            return Err(Error::Argument(format!(
                "norm {} does not apply to {}",
                self.norm, self.family
            )));
        }
        Ok(())
    }

    fn interval(&self) -> (f64, f64) {
        self.domain.unwrap_or((-1.0, 1.0))
    }
}

/// Interpolant of the experiment's function at the `n` points of its rule.
pub fn build_interpolant(spec: &ExperimentSpec, n: usize) -> Result<Interpolant> {
    let r = rule(spec.family, spec.variant, n)?;
    let bary = bary_weights(&r, WeightKind::Simplified)?;
    let p = Interpolant::new(bary, vec![0.0; r.len()])?;
    let p = match spec.domain {
        Some((a, b)) => p.map_to_domain(a, b)?,
        None => p,
    };
    Ok(p.resample(|x| spec.function.eval(x)))
}

/// Error of the `n`-point interpolant in the experiment's norm.
pub fn interpolation_error(spec: &ExperimentSpec, n: usize) -> Result<f64> {
    let p = build_interpolant(spec, n)?;
    let f = |x: f64| spec.function.eval(x);
    let (a, b) = spec.interval();
    Ok(match spec.norm {
        ErrorNorm::MaxGrid => (0..MAXGRID_POINTS)
            .map(|i| {
                let x = a + (b - a) * i as f64 / (MAXGRID_POINTS - 1) as f64;
                (f(x) - p.eval_second_form(x)).abs()
            })
            .fold(0.0, f64::max),
        ErrorNorm::WeightedL2 => {
            // x = a + (b-a)(t+1)/2 turns sqrt(x-a) dx into
            // ((b-a)/2)^{3/2} sqrt(1+t) dt.
            let rule = l2_rule()?;
            let half = 0.5 * (b - a);
            let sum: f64 = rule
                .nodes()
                .iter()
                .zip(rule.weights())
                .map(|(&t, &w)| {
                    let x = a + half * (t + 1.0);
                    let e = f(x) - p.eval_second_form(x);
                    w * e * e
                })
                .sum();
            (sum * half * half.sqrt()).sqrt()
        }
        ErrorNorm::WeightedL1 => {
            let rule = l1_rule()?;
            rule.nodes()
                .iter()
                .zip(rule.weights())
                .filter(|(_, &w)| w > 0.0)
                .map(|(&x, &w)| w * (f(x) - p.eval_second_form(x)).abs())
                .sum()
        }
    })
}

fn cached(
    cell: &'static OnceLock<Result<QuadratureRule>>,
    family: WeightFamily,
) -> Result<&'static QuadratureRule> {
    cell.get_or_init(|| gauss_rule(family, NORM_RULE_POINTS))
        .as_ref()
        .map_err(Clone::clone)
}

fn l2_rule() -> Result<&'static QuadratureRule> {
    static RULE: OnceLock<Result<QuadratureRule>> = OnceLock::new();
    cached(
        &RULE,
        WeightFamily::Jacobi {
            alpha: 0.0,
            beta: 0.5,
        },
    )
}

fn l1_rule() -> Result<&'static QuadratureRule> {
    static RULE: OnceLock<Result<QuadratureRule>> = OnceLock::new();
    cached(&RULE, WeightFamily::Laguerre { alpha: 0.0 })
}

/// `(n, error)` for every size in the spec, in ascending `n`. Sizes are
/// computed in parallel.
pub fn run_convergence(spec: &ExperimentSpec) -> Result<Vec<(usize, f64)>> {
    spec.validate()?;
    spec.sizes()
        .into_par_iter()
        .map(|n| interpolation_error(spec, n).map(|e| (n, e)))
        .collect()
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn builtin_values() {
        assert_eq!(Builtin::Runge.eval(0.0), 1.0);
        assert_eq!(Builtin::Runge.eval(0.2), 0.5);
        assert_eq!(Builtin::ExpInv.eval(0.0), 0.0);
        assert_eq!(Builtin::ExpInv.eval(1e-300), 0.0);
        assert_eq!(Builtin::ExpInv.eval(-1e-300), 0.0);
        assert_relative_eq!(
            Builtin::ExpInv.eval(1.0),
            (-1f64).exp(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            Builtin::Bessel.eval(0.0),
            FRAC_2_PI.sqrt(),
            max_relative = 1e-15
        );
        assert!((Builtin::Bessel.eval(1e-9) - FRAC_2_PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn airy_builtin_against_reference() {
        // mpmath: airyai((3(x+1)/2)^(2/3)) * exp(x)
        let table = [
            (0.0, 0.092_233_242_619_256_515),
            (0.37, 0.088_494_221_760_733_553),
            (1.0, 0.083_968_791_367_095_663),
            (10.0, 0.064_648_617_577_706_443),
            (100.0, 0.044_916_027_265_968_109),
        ];
        for (x, want) in table {
            assert_relative_eq!(Builtin::Airy.eval(x), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn parse_names() {
        for b in Builtin::ALL {
            assert_eq!(b.name().parse::<Builtin>().unwrap(), b);
        }
        assert!("sinc".parse::<Builtin>().is_err());
        assert_eq!(
            "weighted-l1".parse::<ErrorNorm>().unwrap(),
            ErrorNorm::WeightedL1
        );
    }

    #[test]
    fn presets_validate() {
        for b in Builtin::ALL {
            ExperimentSpec::preset(b).validate().unwrap();
        }
    }

    #[test]
    fn incompatible_specs_rejected() {
        let mut s = ExperimentSpec::preset(Builtin::Airy);
        s.norm = ErrorNorm::MaxGrid;
        assert!(s.validate().is_err());
        let mut s = ExperimentSpec::preset(Builtin::Airy);
        s.variant = RuleVariant::Lobatto;
        assert!(matches!(
            s.validate(),
            Err(Error::UnsupportedVariant { .. })
        ));
        let mut s = ExperimentSpec::preset(Builtin::Runge);
        s.start = 600;
        assert!(s.validate().is_err());
        let mut s = ExperimentSpec::preset(Builtin::Runge);
        s.step = 0;
        assert!(s.validate().is_err());
    }

    #[test]
    fn weighted_l2_of_a_known_error() {
        // With p = 0 the norm is (int_0^1 sqrt(x) f^2)^{1/2}; f = 1 gives sqrt(2/3).
        let rule = l2_rule().unwrap();
        let half = 0.5;
        let sum: f64 = rule.weights().iter().sum();
        assert_relative_eq!(
            (sum * half * f64::sqrt(half)).sqrt(),
            (2.0f64 / 3.0).sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn bessel_and_airy_errors_decrease() {
        let spec = ExperimentSpec {
            stop: 12,
            ..ExperimentSpec::preset(Builtin::Bessel)
        };
        let errs = run_convergence(&spec).unwrap();
        assert!(errs.last().unwrap().1 < 1e-13);
        assert!(errs[0].1 > 1e-4);
        let spec = ExperimentSpec {
            stop: 40,
            ..ExperimentSpec::preset(Builtin::Airy)
        };
        let errs = run_convergence(&spec).unwrap();
        assert!(errs.last().unwrap().1 < errs[0].1 * 1e-3);
    }
}
