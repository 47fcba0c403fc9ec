mod args;
mod output;

use std::fmt;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use baryquad::experiment::{run_convergence, ExperimentSpec};
use baryquad::quadrature::rule;
use baryquad::{
    bary_weights, BarycentricWeights, Interpolant, Normalization, QuadratureRule, WeightFamily,
    WeightKind,
};
use clap::Parser;

use args::{
    build_family, Cli, Command, ConvergenceCommand, Form, InterpCommand, RuleArgs, RuleCommand,
};
use output::{write_rows, ErrorRow, PointRow, RuleRow};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or input files.
    Usage(String),
    Library(baryquad::Error),
    Output(io::Error),
}

impl CliError {
    /// 1 for numerical failures and failed writes, 2 for usage and contract
    /// errors.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Library(e) if e.is_numerical() => 1,
            CliError::Library(_) => 2,
            CliError::Output(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Library(e) => write!(f, "{e}"),
            CliError::Output(e) => write!(f, "writing output: {e}"),
        }
    }
}

impl From<baryquad::Error> for CliError {
    fn from(e: baryquad::Error) -> Self {
        CliError::Library(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Output(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rule(c) => cmd_rule(c),
        Command::Interp(c) => cmd_interp(c),
        Command::Convergence(c) => cmd_convergence(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("baryquad: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn build(
    args: &RuleArgs,
    default_kind: WeightKind,
) -> Result<(QuadratureRule, BarycentricWeights), CliError> {
    let family = args.family.family()?;
    let r = rule(family, args.variant.into(), args.n)?;
    let kind = args.kind.map_or(default_kind, Into::into);
    let mut w = bary_weights(&r, kind)?;
    if Normalization::from(args.normalize) == Normalization::MaxOne {
        w = w.normalized();
    }
    Ok((r, w))
}

fn cmd_rule(c: RuleCommand) -> Result<(), CliError> {
    let (r, w) = build(&c.rule, WeightKind::Simplified)?;
    let rows: Vec<RuleRow> = (0..r.len())
        .map(|j| RuleRow {
            index: j,
            node: r.nodes()[j],
            quad_weight: r.weights()[j],
            bary_weight: w.values()[j],
        })
        .collect();
    write_rows(io::stdout().lock(), c.format, &rows)?;
    Ok(())
}

fn cmd_interp(c: InterpCommand) -> Result<(), CliError> {
    let default_kind = match c.form {
        Form::First => WeightKind::Full,
        Form::Second => WeightKind::Simplified,
    };
    let (r, w) = build(&c.rule, default_kind)?;
    let samples = match &c.samples {
        Some(path) => {
            let s = read_numbers(path)?;
            if s.len() != r.len() {
                return Err(CliError::Usage(format!(
                    "{} has {} samples but the rule has {} nodes",
                    path.display(),
                    s.len(),
                    r.len()
                )));
            }
            s
        }
        None => vec![0.0; r.len()],
    };
    let mut p = Interpolant::new(w, samples)?;
    if let Some((a, b)) = c.domain {
        if !r.family().is_bounded() {
            return Err(CliError::Usage(
                "--domain applies only to jacobi-type rules".into(),
            ));
        }
        p = p.map_to_domain(a, b)?;
    }
    if let Some(f) = c.function {
        p = p.resample(|x| f.eval(x));
    }
    if c.form == Form::First
        && (p.bary().kind() != WeightKind::Full || p.bary().normalization() != Normalization::Raw)
    {
        return Err(baryquad::Error::Contract(
            "the first form needs --kind full, --normalize raw and no --domain".into(),
        )
        .into());
    }
    let points = read_numbers(&c.points)?;
    let rows = points
        .into_iter()
        .map(|x| {
            let value = match c.form {
                Form::First => p.eval_first_form(x)?,
                Form::Second => p.eval_second_form(x),
            };
            Ok(PointRow { x, value })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    write_rows(io::stdout().lock(), c.format, &rows)?;
    Ok(())
}

fn cmd_convergence(c: ConvergenceCommand) -> Result<(), CliError> {
    let mut spec = ExperimentSpec::preset(c.experiment);
    spec.family = match (c.family, spec.family) {
        (Some(name), _) => build_family(name, c.alpha, c.beta)?,
        (None, WeightFamily::Jacobi { alpha, beta }) => {
            WeightFamily::jacobi(c.alpha.unwrap_or(alpha), c.beta.unwrap_or(beta))?
        }
        (None, WeightFamily::Laguerre { alpha }) => {
            if c.beta.is_some() {
                return Err(CliError::Usage(
                    "--beta does not apply to the Laguerre family".into(),
                ));
            }
            WeightFamily::laguerre(c.alpha.unwrap_or(alpha))?
        }
        (None, family) => family,
    };
    if c.family.is_some() && c.domain.is_none() && !spec.family.is_bounded() {
        spec.domain = None;
    }
    if let Some(v) = c.variant {
        spec.variant = v.into();
    }
    if let Some(d) = c.domain {
        spec.domain = Some(d);
    }
    spec.start = c.start.unwrap_or(spec.start);
    spec.stop = c.stop.unwrap_or(spec.stop);
    spec.step = c.step.unwrap_or(spec.step);
    spec.norm = c.norm.unwrap_or(spec.norm);
    let rows: Vec<ErrorRow> = run_convergence(&spec)?
        .into_iter()
        .map(|(n, error)| ErrorRow { n, error })
        .collect();
    write_rows(io::stdout().lock(), c.format, &rows)?;
    Ok(())
}

/// Reals separated by whitespace or commas; `#` starts a comment.
fn read_numbers(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))?
    };
    parse_numbers(&text).map_err(|msg| CliError::Usage(format!("{}: {msg}", path.display())))
}

fn parse_numbers(text: &str) -> Result<Vec<f64>, String> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for token in line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let v = token
                .parse::<f64>()
                .map_err(|_| format!("line {}: not a number: '{token}'", i + 1))?;
            values.push(v);
        }
    }
    Ok(values)
}
