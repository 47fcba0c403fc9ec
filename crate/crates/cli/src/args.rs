use std::path::PathBuf;

use baryquad::experiment::{Builtin, ErrorNorm};
use baryquad::{Normalization, RuleVariant, WeightFamily, WeightKind};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

/// Gauss, Radau and Lobatto rules for the classical weights, their
/// barycentric interpolation weights, and interpolation convergence studies.
#[derive(Debug, Parser)]
#[command(name = "baryquad", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print nodes, quadrature weights and barycentric weights of a rule.
    Rule(RuleCommand),
    /// Interpolate samples at the nodes of a rule and evaluate at given points.
    Interp(InterpCommand),
    /// Interpolation error of a built-in function over a range of sizes.
    Convergence(ConvergenceCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Jacobi,
    Legendre,
    /// First kind, alpha = beta = -1/2.
    Chebyshev,
    Laguerre,
    Hermite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantName {
    Gauss,
    /// Same as radau-left.
    Radau,
    RadauLeft,
    RadauRight,
    Lobatto,
}

impl From<VariantName> for RuleVariant {
    fn from(v: VariantName) -> Self {
        match v {
            VariantName::Gauss => RuleVariant::Gauss,
            VariantName::Radau | VariantName::RadauLeft => RuleVariant::RadauLeft,
            VariantName::RadauRight => RuleVariant::RadauRight,
            VariantName::Lobatto => RuleVariant::Lobatto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindName {
    Simplified,
    Full,
}

impl From<KindName> for WeightKind {
    fn from(k: KindName) -> Self {
        match k {
            KindName::Simplified => WeightKind::Simplified,
            KindName::Full => WeightKind::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizeName {
    Raw,
    MaxOne,
}

impl From<NormalizeName> for Normalization {
    fn from(n: NormalizeName) -> Self {
        match n {
            NormalizeName::Raw => Normalization::Raw,
            NormalizeName::MaxOne => Normalization::MaxOne,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    First,
    Second,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Exponent of (1 - x) for jacobi, of x for laguerre. Defaults to 0.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Exponent of (1 + x) for jacobi. Defaults to 0.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
}

impl FamilyArgs {
    pub fn family(&self) -> Result<WeightFamily, CliError> {
        build_family(self.family, self.alpha, self.beta)
    }
}

pub fn build_family(
    name: FamilyName,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> Result<WeightFamily, CliError> {
    let reject =
        |flag: &str| CliError::Usage(format!("--{flag} does not apply to the {name:?} family"));
    match name {
        FamilyName::Jacobi => Ok(WeightFamily::jacobi(
            alpha.unwrap_or(0.0),
            beta.unwrap_or(0.0),
        )?),
        FamilyName::Laguerre => {
            if beta.is_some() {
                return Err(reject("beta"));
            }
            Ok(WeightFamily::laguerre(alpha.unwrap_or(0.0))?)
        }
        FamilyName::Legendre | FamilyName::Chebyshev | FamilyName::Hermite => {
            if alpha.is_some() {
                return Err(reject("alpha"));
            }
            if beta.is_some() {
                return Err(reject("beta"));
            }
            Ok(match name {
                FamilyName::Legendre => WeightFamily::legendre(),
                FamilyName::Chebyshev => WeightFamily::chebyshev_first(),
                _ => WeightFamily::Hermite,
            })
        }
    }
}

#[derive(Debug, Args)]
pub struct RuleArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value = "gauss")]
    pub variant: VariantName,
    /// Number of points, preassigned endpoints included.
    #[arg(long)]
    pub n: usize,
    /// Barycentric weight kind. Defaults to full for the first form and
    /// simplified otherwise.
    #[arg(long, value_enum)]
    pub kind: Option<KindName>,
    #[arg(long, value_enum, default_value = "raw")]
    pub normalize: NormalizeName,
}

#[derive(Debug, Args)]
pub struct RuleCommand {
    #[command(flatten)]
    pub rule: RuleArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["samples", "function"])))]
pub struct InterpCommand {
    #[command(flatten)]
    pub rule: RuleArgs,
    /// File of sample values, one per node in ascending node order.
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// Built-in function to sample: runge, expinv, bessel or airy.
    #[arg(long)]
    pub function: Option<Builtin>,
    /// File of evaluation points; `-` reads standard input.
    #[arg(long)]
    pub points: PathBuf,
    #[arg(long, value_enum, default_value = "second")]
    pub form: Form,
    /// Interval `a,b` to map [-1, 1] onto (jacobi-type rules only).
    #[arg(long, value_parser = parse_domain, allow_hyphen_values = true)]
    pub domain: Option<(f64, f64)>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConvergenceCommand {
    /// runge, expinv, bessel or airy.
    #[arg(long)]
    pub experiment: Builtin,
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, value_enum)]
    pub variant: Option<VariantName>,
    #[arg(long)]
    pub start: Option<usize>,
    #[arg(long)]
    pub stop: Option<usize>,
    #[arg(long)]
    pub step: Option<usize>,
    /// maxgrid, weighted-l2 or weighted-l1.
    #[arg(long)]
    pub norm: Option<ErrorNorm>,
    #[arg(long, value_parser = parse_domain, allow_hyphen_values = true)]
    pub domain: Option<(f64, f64)>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

fn parse_domain(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a,b but got '{s}'"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("'{}': {e}", t.trim()))
    };
    Ok((parse(a)?, parse(b)?))
}
