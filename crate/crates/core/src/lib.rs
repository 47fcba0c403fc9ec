//! Gaussian quadrature for the classical weight functions and the barycentric
//! interpolation weights that follow from it.
//!
//! The barycentric weights of the roots of a classical orthogonal polynomial
//! are, up to a common factor, `(-1)^j sqrt(varphi(x_j) w_j)` where `w_j` are
//! the Gauss weights and `varphi` is the leading coefficient function of the
//! polynomial's differential equation. The same holds, with small endpoint
//! corrections, for Gauss-Radau and Gauss-Lobatto point sets. Given a rule,
//! the weights therefore cost O(n) instead of the O(n^2) of the product
//! formula.
//!
//! ```
//! use baryquad::{gauss_rule, gauss_bary_weights, Interpolant, WeightFamily, WeightKind};
//!
//! let rule = gauss_rule(WeightFamily::legendre(), 20)?;
//! let bary = gauss_bary_weights(&rule, WeightKind::Simplified)?;
//! let p = Interpolant::from_fn(bary, |x| x.exp())?;
//! assert!((p.eval_second_form(0.3) - 0.3f64.exp()).abs() < 1e-14);
//! # Ok::<(), baryquad::Error>(())
//! ```

mod dd;
mod error;

pub mod barycentric;
pub mod eigen;
pub mod experiment;
pub mod polys;
pub mod quadrature;
pub mod special;

pub use barycentric::{
    bary_weights, direct_weights, gauss_bary_weights, general_bary_weights,
    lobatto_bary_weights_jacobi, radau_bary_weights_jacobi, radau_bary_weights_laguerre,
    BarycentricWeights, Interpolant, Normalization, WeightKind,
};
pub use eigen::{eigen_tridiagonal, EigenResult, SymmetricTridiagonal};
pub use error::{Error, Result};
pub use polys::{
    constant_c, evaluate, hypergeometric_data, leading_and_norm, recurrence_coefficients,
    HypergeometricData, RecurrenceCoefficients, WeightFamily,
};
pub use quadrature::{
    gauss_rule, integrate, lobatto_rule_jacobi, radau_rule_jacobi, radau_rule_laguerre, Endpoint,
    QuadratureRule, RuleVariant,
};
pub use special::SignedLog;
