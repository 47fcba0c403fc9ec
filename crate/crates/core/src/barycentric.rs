//! Barycentric weights and the two barycentric forms of the interpolant.
//!
//! For nodes `x_0 < ... < x_n` the weights are `lambda_j = 1 / prod_{k != j}
//! (x_j - x_k)`. [`direct_weights`] computes them from that definition in
//! O(n^2). When the nodes come from a classical quadrature rule, the weights
//! follow in O(n) from the quadrature weights; those routines are the
//! `*_bary_weights*` functions here.
//!
//! `Full` weights are the exact `lambda_j`. `Simplified` weights differ from
//! them by one common factor, which the second (quotient) form cancels.

use std::fmt;

use crate::polys::{c_factor, HypergeometricData, WeightFamily};
use crate::quadrature::{QuadratureRule, RuleVariant};
use crate::special::SignedLog;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// Exactly `1 / l'(x_j)`, usable in either barycentric form.
    Full,
    /// Correct up to a common factor; second form only.
    Simplified,
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightKind::Full => "full",
            WeightKind::Simplified => "simplified",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalization {
    Raw,
    /// Divided by the entry of largest magnitude, keeping signs.
    MaxOne,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricWeights {
    nodes: Vec<f64>,
    values: Vec<f64>,
    kind: WeightKind,
    normalization: Normalization,
}

impl BarycentricWeights {
    /// Nodes must be strictly increasing and match `values` in length.
    pub fn new(
        nodes: Vec<f64>,
        values: Vec<f64>,
        kind: WeightKind,
        normalization: Normalization,
    ) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != values.len() {
            return Err(Error::Argument(format!(
                "need matching nonempty nodes and weights, got {} and {}",
                nodes.len(),
                values.len()
            )));
        }
        check_increasing(&nodes)?;
        let w = BarycentricWeights {
            nodes,
            values,
            kind,
            normalization,
        };
        Ok(match normalization {
            Normalization::Raw => w,
            Normalization::MaxOne => w.normalized(),
        })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Rescaled so that the largest magnitude is one. The result is a
    /// simplified weight set unless it already was exactly that.
    pub fn normalized(mut self) -> Self {
        let max = self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if max > 0.0 && max.is_finite() {
            for v in &mut self.values {
                *v /= max;
            }
        }
        if max != 1.0 {
            self.kind = WeightKind::Simplified;
        }
        self.normalization = Normalization::MaxOne;
        self
    }

    /// Every value multiplied by `factor`; the result is `Simplified`, `Raw`.
    pub fn scaled(&self, factor: f64) -> Self {
        BarycentricWeights {
            nodes: self.nodes.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
            kind: WeightKind::Simplified,
            normalization: Normalization::Raw,
        }
    }

    /// True when consecutive values have opposite signs and none is zero.
    pub fn alternates(&self) -> bool {
        self.values.iter().all(|&v| v != 0.0)
            && self.values.windows(2).all(|w| (w[0] < 0.0) != (w[1] < 0.0))
    }

    /// Largest elementwise relative difference `|a_j - b_j| / |b_j|`, with no
    /// rescaling.
    pub fn max_relative_deviation(&self, reference: &BarycentricWeights) -> f64 {
        if self.len() != reference.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&reference.values)
            .map(|(&a, &b)| relative_difference(a, b))
            .fold(0.0, f64::max)
    }

    /// Deviation after normalizing both sets to max one and allowing a single
    /// global sign flip.
    pub fn deviation_up_to_scalar(&self, reference: &BarycentricWeights) -> f64 {
        let a = self.clone().normalized();
        let b = reference.clone().normalized();
        let flipped = a.scaled(-1.0);
        a.max_relative_deviation(&b)
            .min(flipped.max_relative_deviation(&b))
    }
}

fn relative_difference(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else if b == 0.0 {
        f64::INFINITY
    } else {
        ((a - b) / b).abs()
    }
}

fn check_increasing(nodes: &[f64]) -> Result<()> {
    if nodes.iter().any(|x| !x.is_finite()) {
        return Err(Error::Argument("nodes must be finite".into()));
    }
    if let Some(w) = nodes.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::Argument(format!(
            "nodes must be distinct and increasing ({} followed by {})",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// `lambda_j = 1 / prod_{k != j} (x_j - x_k)` accumulated as a sum of
/// logarithms. `Raw` output is the full weights (which may over- or
/// underflow for large sets); `MaxOne` is normalized before exponentiation.
pub fn direct_weights(nodes: &[f64], normalization: Normalization) -> Result<BarycentricWeights> {
    if nodes.is_empty() {
        return Err(Error::Argument("need at least one node".into()));
    }
    check_increasing(nodes)?;
    let n = nodes.len();
    let ln_products: Vec<f64> = (0..n)
        .map(|j| {
            nodes
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, &xk)| (nodes[j] - xk).abs().ln())
                .sum()
        })
        .collect();
    let shift = match normalization {
        Normalization::Raw => 0.0,
        Normalization::MaxOne => ln_products.iter().copied().fold(f64::INFINITY, f64::min),
    };
    let values = ln_products
        .iter()
        .enumerate()
        .map(|(j, &l)| {
            // sign of prod (x_j - x_k) is (-1)^(number of nodes right of j)
            let sign = if (n - 1 - j).is_multiple_of(2) {
                1.0
            } else {
                -1.0
            };
            sign * (shift - l).exp()
        })
        .collect();
    let kind = match normalization {
        Normalization::Raw => WeightKind::Full,
        Normalization::MaxOne => WeightKind::Simplified,
    };
    Ok(BarycentricWeights {
        nodes: nodes.to_vec(),
        values,
        kind,
        normalization,
    })
}

/// `factor * (-1)^j * sqrt(m_j)` for each node, with the factor applied in
/// log space so that huge constants do not overflow on their own.
fn assemble(
    rule: &QuadratureRule,
    factor: SignedLog,
    magnitudes: impl Iterator<Item = f64>,
    kind: WeightKind,
) -> BarycentricWeights {
    let values = magnitudes
        .enumerate()
        .map(|(j, m)| {
            let v = factor * SignedLog::parity(j as i64) * SignedLog::from_f64(m.sqrt());
            v.value()
        })
        .collect();
    BarycentricWeights {
        nodes: rule.nodes().to_vec(),
        values,
        kind,
        normalization: Normalization::Raw,
    }
}

fn kind_factor(kind: WeightKind, full: impl FnOnce() -> SignedLog) -> SignedLog {
    match kind {
        WeightKind::Full => full(),
        WeightKind::Simplified => SignedLog::ONE,
    }
}

fn require_variant(rule: &QuadratureRule, allowed: &[RuleVariant]) -> Result<()> {
    if allowed.contains(&rule.variant()) {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "expected a {} rule, got {}",
            allowed
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" or "),
            rule.variant()
        )))
    }
}

fn require_jacobi(rule: &QuadratureRule, alpha: f64, beta: f64) -> Result<()> {
    if rule.family() == (WeightFamily::Jacobi { alpha, beta }) {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "rule was built for {}, not jacobi(alpha={alpha}, beta={beta})",
            rule.family()
        )))
    }
}

/// Weights at the roots of a classical polynomial:
/// `C (-1)^j sqrt(varphi(x_j) w_j)` with `varphi` = `1-x^2`, `x` or `1`.
pub fn gauss_bary_weights(rule: &QuadratureRule, kind: WeightKind) -> Result<BarycentricWeights> {
    require_variant(rule, &[RuleVariant::Gauss])?;
    let family = rule.family();
    let n = rule.len() as i64 - 1;
    let factor = kind_factor(kind, || c_factor(family, n));
    let (lo, hi, w) = (rule.lower_gaps(), rule.upper_gaps(), rule.weights());
    let mags = (0..rule.len()).map(|j| match family {
        WeightFamily::Jacobi { .. } => lo[j] * hi[j] * w[j],
        WeightFamily::Laguerre { .. } => lo[j] * w[j],
        WeightFamily::Hermite => w[j],
    });
    Ok(assemble(rule, factor, mags, kind))
}

/// The same weights from the hypergeometric data alone:
/// `sigma (-1)^j sqrt(k_{n+1}^2 (2n+2) varphi(x_j) w_j / (nu_{2n+2} h_{n+1}))`.
pub fn general_bary_weights(
    data: &HypergeometricData,
    rule: &QuadratureRule,
    kind: WeightKind,
) -> Result<BarycentricWeights> {
    require_variant(rule, &[RuleVariant::Gauss])?;
    if data.family != rule.family() {
        return Err(Error::Argument(format!(
            "data for {} cannot be used with a rule for {}",
            data.family,
            rule.family()
        )));
    }
    let n = rule.len() - 1;
    let factor = kind_factor(kind, || {
        let k = data.leading(n + 1);
        let m = 2.0 * n as f64 + 2.0;
        let ratio =
            k * k * SignedLog::from_f64(m) / (SignedLog::from_f64(data.nu(m)) * data.norm(n + 1));
        SignedLog::parity(n as i64) * ratio.sqrt()
    });
    let mags = (0..rule.len()).map(|j| {
        data.varphi_from_gaps(rule.lower_gaps()[j], rule.upper_gaps()[j]) * rule.weights()[j]
    });
    Ok(assemble(rule, factor, mags, kind))
}

/// Weights at the Gauss-Jacobi-Lobatto points: `C (-1)^j sqrt(delta_j w_j)`
/// with `delta` equal to `beta + 1` at `-1`, `alpha + 1` at `+1`, else one.
pub fn lobatto_bary_weights_jacobi(
    alpha: f64,
    beta: f64,
    rule: &QuadratureRule,
    kind: WeightKind,
) -> Result<BarycentricWeights> {
    require_variant(rule, &[RuleVariant::Lobatto])?;
    require_jacobi(rule, alpha, beta)?;
    let last = rule.len() - 1;
    let factor = kind_factor(kind, || {
        c_factor(
            WeightFamily::Jacobi {
                alpha: alpha + 1.0,
                beta: beta + 1.0,
            },
            last as i64 - 2,
        )
    });
    let mags = rule.weights().iter().enumerate().map(|(j, &w)| {
        let delta = if j == 0 {
            beta + 1.0
        } else if j == last {
            alpha + 1.0
        } else {
            1.0
        };
        delta * w
    });
    Ok(assemble(rule, factor, mags, kind))
}

/// Weights at the Gauss-Jacobi-Radau points. With `-1` preassigned:
/// `(-1)^j sqrt((1 - x_j) delta_j w_j)`, `delta_0 = beta + 1`; with `+1`
/// preassigned the mirror image with `(1 + x_j)` and `delta_n = alpha + 1`.
pub fn radau_bary_weights_jacobi(
    alpha: f64,
    beta: f64,
    rule: &QuadratureRule,
    kind: WeightKind,
) -> Result<BarycentricWeights> {
    require_variant(rule, &[RuleVariant::RadauLeft, RuleVariant::RadauRight])?;
    require_jacobi(rule, alpha, beta)?;
    let p = rule.len();
    let n = p as i64 - 2;
    let left = rule.variant() == RuleVariant::RadauLeft;
    let factor = kind_factor(kind, || {
        let inner = if left {
            WeightFamily::Jacobi {
                alpha,
                beta: beta + 1.0,
            }
        } else {
            WeightFamily::Jacobi {
                alpha: beta,
                beta: alpha + 1.0,
            }
        };
        -c_factor(inner, n)
    });
    let (lo, hi, w) = (rule.lower_gaps(), rule.upper_gaps(), rule.weights());
    let mags = (0..p).map(|j| {
        if left {
            let delta = if j == 0 { beta + 1.0 } else { 1.0 };
            hi[j] * delta * w[j]
        } else {
            let delta = if j == p - 1 { alpha + 1.0 } else { 1.0 };
            lo[j] * delta * w[j]
        }
    });
    Ok(assemble(rule, factor, mags, kind))
}

/// Weights at the Gauss-Laguerre-Radau points: `-C (-1)^j sqrt(delta_j w_j)`
/// with `delta_0 = alpha + 1` at the origin.
pub fn radau_bary_weights_laguerre(
    alpha: f64,
    rule: &QuadratureRule,
    kind: WeightKind,
) -> Result<BarycentricWeights> {
    require_variant(rule, &[RuleVariant::RadauLeft])?;
    if rule.family() != (WeightFamily::Laguerre { alpha }) {
        return Err(Error::Argument(format!(
            "rule was built for {}, not laguerre(alpha={alpha})",
            rule.family()
        )));
    }
    let n = rule.len() as i64 - 2;
    let factor = -kind_factor(kind, || {
        c_factor(WeightFamily::Laguerre { alpha: alpha + 1.0 }, n)
    });
    let mags = rule
        .weights()
        .iter()
        .enumerate()
        .map(|(j, &w)| if j == 0 { (alpha + 1.0) * w } else { w });
    Ok(assemble(rule, factor, mags, kind))
}

/// Formula weights for any supported rule.
pub fn bary_weights(rule: &QuadratureRule, kind: WeightKind) -> Result<BarycentricWeights> {
    match (rule.family(), rule.variant()) {
        (_, RuleVariant::Gauss) => gauss_bary_weights(rule, kind),
        (WeightFamily::Jacobi { alpha, beta }, RuleVariant::Lobatto) => {
            lobatto_bary_weights_jacobi(alpha, beta, rule, kind)
        }
        (WeightFamily::Jacobi { alpha, beta }, _) => {
            radau_bary_weights_jacobi(alpha, beta, rule, kind)
        }
        (WeightFamily::Laguerre { alpha }, _) => radau_bary_weights_laguerre(alpha, rule, kind),
        (WeightFamily::Hermite, v) => Err(Error::UnsupportedVariant {
            family: "hermite".into(),
            variant: v.to_string(),
        }),
    }
}

/// A barycentric interpolant: weights, samples, and an optional affine map
/// from the reference interval `[-1, 1]` to `[a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolant {
    nodes: Vec<f64>,
    bary: BarycentricWeights,
    samples: Vec<f64>,
    map: Option<(f64, f64)>,
}

impl Interpolant {
    pub fn new(bary: BarycentricWeights, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != bary.len() {
            return Err(Error::Argument(format!(
                "{} samples supplied for {} nodes",
                samples.len(),
                bary.len()
            )));
        }
        Ok(Interpolant {
            nodes: bary.nodes.clone(),
            bary,
            samples,
            map: None,
        })
    }

    /// Samples `f` at the weights' nodes.
    pub fn from_fn(bary: BarycentricWeights, f: impl Fn(f64) -> f64) -> Result<Self> {
        let samples = bary.nodes.iter().map(|&x| f(x)).collect();
        Self::new(bary, samples)
    }

    /// The same nodes and weights with samples of `f` at the (mapped) nodes.
    pub fn resample(mut self, f: impl Fn(f64) -> f64) -> Self {
        self.samples = self.nodes.iter().map(|&x| f(x)).collect();
        self
    }

    /// Interpolation nodes, after the affine map if one is set.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn bary(&self) -> &BarycentricWeights {
        &self.bary
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn map(&self) -> Option<(f64, f64)> {
        self.map
    }

    /// `sum(lambda_j f_j / (x - x_j)) / sum(lambda_j / (x - x_j))`.
    pub fn eval_second_form(&self, x: f64) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&xj, &lj), &fj) in self.nodes.iter().zip(&self.bary.values).zip(&self.samples) {
            if x == xj {
                return fj;
            }
            let t = lj / (x - xj);
            num += t * fj;
            den += t;
        }
        num / den
    }

    /// `l(x) sum(lambda_j f_j / (x - x_j))` with `l(x) = prod (x - x_j)`.
    /// Requires full, unnormalized weights on the unmapped nodes.
    pub fn eval_first_form(&self, x: f64) -> Result<f64> {
        if self.bary.kind != WeightKind::Full || self.bary.normalization != Normalization::Raw {
            return Err(Error::Contract(
                "the first barycentric form needs full, unnormalized weights".into(),
            ));
        }
        let mut ell = SignedLog::ONE;
        let mut sum = 0.0;
        for ((&xj, &lj), &fj) in self.nodes.iter().zip(&self.bary.values).zip(&self.samples) {
            if x == xj {
                return Ok(fj);
            }
            ell = ell * SignedLog::from_f64(x - xj);
            sum += lj * fj / (x - xj);
        }
        Ok((ell * SignedLog::from_f64(sum)).value())
    }

    /// Moves the interpolant from `[-1, 1]` to `[a, b]`. Every node difference
    /// scales by `(b - a) / 2`, a common factor, so the weights carry over for
    /// the second form; they are no longer full weights.
    pub fn map_to_domain(mut self, a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::Argument(format!(
                "domain [{a}, {b}] must be finite with a < b"
            )));
        }
        let reference = &self.bary.nodes;
        if reference.iter().any(|t| t.abs() > 1.0) {
            return Err(Error::Contract(
                "only nodes in [-1, 1] can be mapped to an interval".into(),
            ));
        }
        if (a, b) == (-1.0, 1.0) {
            self.nodes = reference.clone();
            self.map = None;
            return Ok(self);
        }
        let half = 0.5 * (b - a);
        self.nodes = reference
            .iter()
            .map(|&t| {
                if t == -1.0 {
                    a
                } else if t == 1.0 {
                    b
                } else {
                    a + half * (t + 1.0)
                }
            })
            .collect();
        if !self.nodes.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!(
                "nodes collide after mapping to [{a}, {b}]"
            )));
        }
        self.bary.kind = WeightKind::Simplified;
        self.map = Some((a, b));
        Ok(self)
    }
}
