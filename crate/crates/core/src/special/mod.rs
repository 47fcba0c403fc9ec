//! Scalar special functions used by the rule constructors and the experiments.

mod airy;
mod gamma;
mod signed_log;

pub use airy::{airy_ai, airy_ai_scaled};
pub use gamma::{ln_gamma, ln_gamma_ratio};
pub use signed_log::SignedLog;
