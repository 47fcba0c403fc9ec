//! Gauss, Gauss-Radau and Gauss-Lobatto rules for the classical weights.
//!
//! Gauss rules come from the Golub-Welsch eigenproblem. The eigenvalues are
//! then polished by Newton's method on the monic recurrence in double-double
//! arithmetic, and the weights are taken from the Christoffel-Darboux form
//! `w_j = mu0 b_1...b_{n-1} / (p_{n-1}(x_j) p_n'(x_j))` at the polished nodes.
//! Polishing makes every node correct to the last bit and also yields the
//! distances `x_j + 1`, `1 - x_j` (or `x_j` for Laguerre) to full relative
//! accuracy, which the barycentric formulas need near the endpoints.
//!
//! Radau and Lobatto rules reuse a Gauss rule for a modified weight: the
//! interior weights are `w_j / r(x_j)` with `r` the polynomial vanishing at
//! the preassigned endpoints, and the endpoint weights are closed-form gamma
//! ratios evaluated in log space.

use std::f64::consts::LN_2;
use std::fmt;

use crate::dd::{exponent, Dd, Scaled};
use crate::eigen::eigen_tridiagonal;
use crate::polys::{recurrence_coefficients, recurrence_dd, WeightFamily};
use crate::special::{ln_gamma, ln_gamma_ratio, SignedLog};
use crate::{Error, Result};

/// Eigenvalues may leave the open support by this much through rounding
/// before they are treated as an error rather than clamped.
const CLAMP_TOLERANCE: f64 = 1e-14;
const NEWTON_STEPS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleVariant {
    Gauss,
    RadauLeft,
    RadauRight,
    Lobatto,
}

impl fmt::Display for RuleVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleVariant::Gauss => "gauss",
            RuleVariant::RadauLeft => "radau-left",
            RuleVariant::RadauRight => "radau-right",
            RuleVariant::Lobatto => "lobatto",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Left,
    Right,
}

/// Nodes and positive weights of a rule `sum w_j f(x_j) ~ int f w`.
///
/// Alongside each node the rule keeps `x_j - lower` and `upper - x_j`, its
/// distances to the ends of the support (infinite for unbounded sides).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    family: WeightFamily,
    variant: RuleVariant,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    lower_gaps: Vec<f64>,
    upper_gaps: Vec<f64>,
}

impl QuadratureRule {
    /// Assembles a rule from raw nodes and weights, checking every invariant.
    /// The endpoint distances are recomputed from the nodes.
    pub fn from_parts(
        family: WeightFamily,
        variant: RuleVariant,
        nodes: Vec<f64>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        let (lo, hi) = family.support();
        let lower_gaps = nodes.iter().map(|&x| x - lo).collect();
        let upper_gaps = nodes.iter().map(|&x| hi - x).collect();
        Self::checked(family, variant, nodes, weights, lower_gaps, upper_gaps)
    }

    fn checked(
        family: WeightFamily,
        variant: RuleVariant,
        nodes: Vec<f64>,
        weights: Vec<f64>,
        lower_gaps: Vec<f64>,
        upper_gaps: Vec<f64>,
    ) -> Result<Self> {
        family.validate()?;
        check_variant(family, variant)?;
        let n = nodes.len();
        if n == 0 || weights.len() != n || lower_gaps.len() != n || upper_gaps.len() != n {
            return Err(Error::Contract(
                "rule arrays must be nonempty and of equal length".into(),
            ));
        }
        if !nodes.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Contract(
                "rule nodes must be strictly increasing".into(),
            ));
        }
        // Weights can underflow to zero for large Laguerre and Hermite rules.
        if weights.iter().any(|&w| !(w >= 0.0 && w.is_finite())) {
            return Err(Error::Contract(
                "rule weights must be finite and non-negative".into(),
            ));
        }
        let rule = QuadratureRule {
            family,
            variant,
            nodes,
            weights,
            lower_gaps,
            upper_gaps,
        };
        let (lo, hi) = family.support();
        let (left, right) = rule.preassigned();
        for (j, &x) in rule.nodes.iter().enumerate() {
            let on_left = left && j == 0;
            let on_right = right && j + 1 == n;
            let ok = if on_left {
                x == lo
            } else if on_right {
                x == hi
            } else {
                x > lo && x < hi
            };
            if !ok {
                return Err(Error::NodeOutOfSupport {
                    node: x,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        Ok(rule)
    }

    pub fn family(&self) -> WeightFamily {
        self.family
    }

    pub fn variant(&self) -> RuleVariant {
        self.variant
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `x_j - lower` for each node, to full relative accuracy.
    pub fn lower_gaps(&self) -> &[f64] {
        &self.lower_gaps
    }

    /// `upper - x_j` for each node, to full relative accuracy.
    pub fn upper_gaps(&self) -> &[f64] {
        &self.upper_gaps
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn preassigned(&self) -> (bool, bool) {
        match self.variant {
            RuleVariant::Gauss => (false, false),
            RuleVariant::RadauLeft => (true, false),
            RuleVariant::RadauRight => (false, true),
            RuleVariant::Lobatto => (true, true),
        }
    }

    pub fn npreassigned_left(&self) -> usize {
        self.preassigned().0 as usize
    }

    pub fn npreassigned_right(&self) -> usize {
        self.preassigned().1 as usize
    }

    /// Highest polynomial degree integrated exactly.
    pub fn exactness_degree(&self) -> usize {
        let n = self.len();
        (2 * n).saturating_sub(1 + self.npreassigned_left() + self.npreassigned_right())
    }
}

fn check_variant(family: WeightFamily, variant: RuleVariant) -> Result<()> {
    let ok = match family {
        WeightFamily::Jacobi { .. } => true,
        WeightFamily::Laguerre { .. } => {
            matches!(variant, RuleVariant::Gauss | RuleVariant::RadauLeft)
        }
        WeightFamily::Hermite => variant == RuleVariant::Gauss,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedVariant {
            family: family.name().into(),
            variant: variant.to_string(),
        })
    }
}

/// Source of Gauss rules. Every other rule in this module is derived from one.
pub trait GaussBackend {
    fn gauss(&self, family: WeightFamily, npoints: usize) -> Result<QuadratureRule>;
}

/// Golub-Welsch eigenvalues, refined as described in the module docs.
#[derive(Debug, Clone, Copy, Default)]
pub struct GolubWelsch;

impl GaussBackend for GolubWelsch {
    fn gauss(&self, family: WeightFamily, npoints: usize) -> Result<QuadratureRule> {
        family.validate()?;
        if npoints == 0 {
            return Err(Error::Argument(
                "a Gauss rule needs at least one point".into(),
            ));
        }
        let rec = recurrence_coefficients(family, npoints)?;
        let eig = eigen_tridiagonal(&rec.jacobi_matrix()?)?;
        let (a, b) = recurrence_dd(family, npoints);
        let (lo, hi) = family.support();

        // mu0 * b_1 ... b_{n-1}
        let mut numerator = Scaled::new(Dd::from(family.mu0()));
        for &bk in &b {
            numerator = numerator.mul(Scaled::new(bk));
        }

        let mut nodes = Vec::with_capacity(npoints);
        let mut weights = Vec::with_capacity(npoints);
        let mut lower_gaps = Vec::with_capacity(npoints);
        let mut upper_gaps = Vec::with_capacity(npoints);
        for &x0 in &eig.values {
            let x0 = clamp_into(x0, lo, hi)?;
            let x = polish(&a, &b, Dd::from(x0));
            let node = x.to_f64();
            if !(node > lo && node < hi) {
                return Err(Error::NodeOutOfSupport {
                    node,
                    lower: lo,
                    upper: hi,
                });
            }
            let ev = monic_eval(&a, &b, x);
            let denom = Scaled {
                m: ev.prev * ev.deriv,
                e: 2 * ev.exp,
            }
            .normalized();
            weights.push(numerator.div(denom).to_f64());
            nodes.push(node);
            lower_gaps.push(if lo.is_finite() {
                (x - Dd::from(lo)).to_f64()
            } else {
                f64::INFINITY
            });
            upper_gaps.push(if hi.is_finite() {
                (Dd::from(hi) - x).to_f64()
            } else {
                f64::INFINITY
            });
        }
        QuadratureRule::checked(
            family,
            RuleVariant::Gauss,
            nodes,
            weights,
            lower_gaps,
            upper_gaps,
        )
    }
}

fn clamp_into(x: f64, lo: f64, hi: f64) -> Result<f64> {
    if x > lo && x < hi {
        return Ok(x);
    }
    if lo.is_finite() && x <= lo && lo - x <= CLAMP_TOLERANCE {
        return Ok(lo + CLAMP_TOLERANCE.min(f64::EPSILON * lo.abs().max(1.0)));
    }
    if hi.is_finite() && x >= hi && x - hi <= CLAMP_TOLERANCE {
        return Ok(hi - CLAMP_TOLERANCE.min(f64::EPSILON * hi.abs().max(1.0)));
    }
    Err(Error::NodeOutOfSupport {
        node: x,
        lower: lo,
        upper: hi,
    })
}

/// `p_n(x)`, `p_n'(x)` and `p_{n-1}(x)`, all multiplied by `2^-exp`.
struct MonicValues {
    value: Dd,
    deriv: Dd,
    prev: Dd,
    exp: i64,
}

fn monic_eval(a: &[Dd], b: &[Dd], x: Dd) -> MonicValues {
    let (mut p0, mut p1) = (Dd::ZERO, Dd::ONE);
    let (mut d0, mut d1) = (Dd::ZERO, Dd::ZERO);
    let mut exp = 0i64;
    for k in 0..a.len() {
        let t = x - a[k];
        let (p2, d2) = if k == 0 {
            (t * p1, p1 + t * d1)
        } else {
            (t * p1 - b[k - 1] * p0, p1 + t * d1 - b[k - 1] * d0)
        };
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        let big = p1
            .hi
            .abs()
            .max(d1.hi.abs())
            .max(p0.hi.abs())
            .max(d0.hi.abs());
        if big > 1e150 || (big < 1e-150 && big > 0.0) {
            let k = -exponent(big);
            p0 = p0.scale_pow2(k);
            p1 = p1.scale_pow2(k);
            d0 = d0.scale_pow2(k);
            d1 = d1.scale_pow2(k);
            exp -= k as i64;
        }
    }
    MonicValues {
        value: p1,
        deriv: d1,
        prev: p0,
        exp,
    }
}

fn polish(a: &[Dd], b: &[Dd], mut x: Dd) -> Dd {
    for _ in 0..NEWTON_STEPS {
        let ev = monic_eval(a, b, x);
        if ev.deriv.hi == 0.0 {
            break;
        }
        let step = ev.value / ev.deriv;
        x = x - step;
        if step.hi.abs() <= 1e-31 * x.hi.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    x
}

fn backend() -> GolubWelsch {
    GolubWelsch
}

/// The `npoints`-point Gauss rule, exact to degree `2 npoints - 1`.
pub fn gauss_rule(family: WeightFamily, npoints: usize) -> Result<QuadratureRule> {
    backend().gauss(family, npoints)
}

/// Any supported rule by variant. `RadauLeft` is the only Radau rule for
/// Laguerre; Hermite admits only `Gauss`.
pub fn rule(family: WeightFamily, variant: RuleVariant, npoints: usize) -> Result<QuadratureRule> {
    family.validate()?;
    check_variant(family, variant)?;
    match (family, variant) {
        (_, RuleVariant::Gauss) => gauss_rule(family, npoints),
        (WeightFamily::Jacobi { alpha, beta }, RuleVariant::Lobatto) => {
            lobatto_rule_jacobi(alpha, beta, npoints)
        }
        (WeightFamily::Jacobi { alpha, beta }, RuleVariant::RadauLeft) => {
            radau_rule_jacobi(alpha, beta, npoints, Endpoint::Left)
        }
        (WeightFamily::Jacobi { alpha, beta }, RuleVariant::RadauRight) => {
            radau_rule_jacobi(alpha, beta, npoints, Endpoint::Right)
        }
        (WeightFamily::Laguerre { alpha }, RuleVariant::RadauLeft) => {
            radau_rule_laguerre(alpha, npoints)
        }
        _ => unreachable!("rejected by check_variant"),
    }
}

/// Endpoint weights `(w(-1), w(+1))` of the `npoints`-point Gauss-Jacobi-Lobatto rule.
pub fn lobatto_boundary_weights(
    alpha: f64,
    beta: f64,
    npoints: usize,
) -> Result<(SignedLog, SignedLog)> {
    WeightFamily::jacobi(alpha, beta)?;
    if npoints < 2 {
        return Err(Error::Argument(
            "a Lobatto rule needs at least two points".into(),
        ));
    }
    let n = npoints as f64 - 3.0;
    let one_end = |a: f64, b: f64| {
        (a + b + 1.0) * LN_2
            + ln_gamma(b + 1.0)
            + ln_gamma(b + 2.0)
            + ln_gamma_ratio(n + a + b + 4.0, -(b + 1.0))
            - ln_gamma_ratio(n + 2.0, b + 1.0)
    };
    Ok((
        SignedLog::from_ln(one_end(alpha, beta)),
        SignedLog::from_ln(one_end(beta, alpha)),
    ))
}

/// Weight at `x = -1` of the `npoints`-point left Gauss-Jacobi-Radau rule.
pub fn radau_boundary_weight_jacobi(alpha: f64, beta: f64, npoints: usize) -> Result<SignedLog> {
    WeightFamily::jacobi(alpha, beta)?;
    if npoints < 1 {
        return Err(Error::Argument(
            "a Radau rule needs at least one point".into(),
        ));
    }
    let n = npoints as f64 - 2.0;
    let ln = (alpha + beta + 1.0) * LN_2
        + ln_gamma(beta + 1.0)
        + ln_gamma(beta + 2.0)
        + ln_gamma_ratio(n + alpha + beta + 3.0, -(beta + 1.0))
        - ln_gamma_ratio(n + 2.0, beta + 1.0);
    Ok(SignedLog::from_ln(ln))
}

/// Weight at `x = 0` of the `npoints`-point Gauss-Laguerre-Radau rule.
pub fn radau_boundary_weight_laguerre(alpha: f64, npoints: usize) -> Result<SignedLog> {
    WeightFamily::laguerre(alpha)?;
    if npoints < 1 {
        return Err(Error::Argument(
            "a Radau rule needs at least one point".into(),
        ));
    }
    let n = npoints as f64 - 2.0;
    let ln = ln_gamma(alpha + 1.0) + ln_gamma(alpha + 2.0) - ln_gamma_ratio(n + 2.0, alpha + 1.0);
    Ok(SignedLog::from_ln(ln))
}

/// Gauss-Jacobi-Lobatto rule with both endpoints, exact to degree `2 npoints - 3`.
pub fn lobatto_rule_jacobi(alpha: f64, beta: f64, npoints: usize) -> Result<QuadratureRule> {
    let family = WeightFamily::jacobi(alpha, beta)?;
    if npoints < 2 {
        return Err(Error::Argument(
            "a Lobatto rule needs at least two points".into(),
        ));
    }
    let (left, right) = lobatto_boundary_weights(alpha, beta, npoints)?;
    let mut nodes = vec![-1.0];
    let mut weights = vec![left.value()];
    let mut lower = vec![0.0];
    let mut upper = vec![2.0];
    if npoints > 2 {
        let inner = gauss_rule(
            WeightFamily::Jacobi {
                alpha: alpha + 1.0,
                beta: beta + 1.0,
            },
            npoints - 2,
        )?;
        for j in 0..inner.len() {
            let (l, u) = (inner.lower_gaps[j], inner.upper_gaps[j]);
            nodes.push(inner.nodes[j]);
            weights.push(inner.weights[j] / (l * u));
            lower.push(l);
            upper.push(u);
        }
    }
    nodes.push(1.0);
    weights.push(right.value());
    lower.push(2.0);
    upper.push(0.0);
    QuadratureRule::checked(family, RuleVariant::Lobatto, nodes, weights, lower, upper)
}

/// Gauss-Jacobi-Radau rule with one endpoint preassigned, exact to degree
/// `2 npoints - 2`. The right rule is the mirror image of the left rule for
/// the swapped parameters.
pub fn radau_rule_jacobi(
    alpha: f64,
    beta: f64,
    npoints: usize,
    endpoint: Endpoint,
) -> Result<QuadratureRule> {
    let family = WeightFamily::jacobi(alpha, beta)?;
    if npoints < 1 {
        return Err(Error::Argument(
            "a Radau rule needs at least one point".into(),
        ));
    }
    match endpoint {
        Endpoint::Left => {
            let w0 = radau_boundary_weight_jacobi(alpha, beta, npoints)?;
            let mut nodes = vec![-1.0];
            let mut weights = vec![w0.value()];
            let mut lower = vec![0.0];
            let mut upper = vec![2.0];
            if npoints > 1 {
                let inner = gauss_rule(
                    WeightFamily::Jacobi {
                        alpha,
                        beta: beta + 1.0,
                    },
                    npoints - 1,
                )?;
                for j in 0..inner.len() {
                    nodes.push(inner.nodes[j]);
                    weights.push(inner.weights[j] / inner.lower_gaps[j]);
                    lower.push(inner.lower_gaps[j]);
                    upper.push(inner.upper_gaps[j]);
                }
            }
            QuadratureRule::checked(family, RuleVariant::RadauLeft, nodes, weights, lower, upper)
        }
        Endpoint::Right => {
            let left = radau_rule_jacobi(beta, alpha, npoints, Endpoint::Left)?;
            let nodes = left.nodes.iter().rev().map(|x| -x).collect();
            let weights = left.weights.iter().rev().copied().collect();
            let lower = left.upper_gaps.iter().rev().copied().collect();
            let upper = left.lower_gaps.iter().rev().copied().collect();
            QuadratureRule::checked(
                family,
                RuleVariant::RadauRight,
                nodes,
                weights,
                lower,
                upper,
            )
        }
    }
}

/// Gauss-Laguerre-Radau rule with a node at `x = 0`, exact to degree `2 npoints - 2`.
pub fn radau_rule_laguerre(alpha: f64, npoints: usize) -> Result<QuadratureRule> {
    let family = WeightFamily::laguerre(alpha)?;
    if npoints < 1 {
        return Err(Error::Argument(
            "a Radau rule needs at least one point".into(),
        ));
    }
    let w0 = radau_boundary_weight_laguerre(alpha, npoints)?;
    let mut nodes = vec![0.0];
    let mut weights = vec![w0.value()];
    let mut lower = vec![0.0];
    let mut upper = vec![f64::INFINITY];
    if npoints > 1 {
        let inner = gauss_rule(WeightFamily::Laguerre { alpha: alpha + 1.0 }, npoints - 1)?;
        for j in 0..inner.len() {
            nodes.push(inner.nodes[j]);
            weights.push(inner.weights[j] / inner.lower_gaps[j]);
            lower.push(inner.lower_gaps[j]);
            upper.push(f64::INFINITY);
        }
    }
    QuadratureRule::checked(family, RuleVariant::RadauLeft, nodes, weights, lower, upper)
}

/// `sum_j w_j f(x_j)`.
pub fn integrate(rule: &QuadratureRule, f: impl Fn(f64) -> f64) -> f64 {
    rule.nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&x, &w)| w * f(x))
        .sum()
}
