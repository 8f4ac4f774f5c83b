//! Command line surface and its validated form.

use crate::error::CliError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use crr_core::analysis::Branch;
use crr_core::{parse_grid, CrrError, FamilyParams, ParamB, SolverOptions};
use std::path::PathBuf;

/// Environment variable overriding the bisection tolerance of the zero solver.
pub const ZEROS_TOL_ENV: &str = "CRR_ZEROS_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Crr,
    Hermite,
    Laguerre,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchName {
    Lambda,
    Eta,
}

#[derive(Debug, Parser)]
#[command(name = "crr", version, about = "Evaluate, locate and verify zeros of complementary Romanovski-Routh polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Relative bisection tolerance of the zero solver (overrides CRR_ZEROS_TOL).
    #[arg(long, global = true)]
    zeros_tol: Option<f64>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value_t = FamilyName::Crr)]
    family: FamilyName,
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    eta: f64,
    /// Laguerre parameter.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Polynomial value (and derivatives for the CRR family) at points.
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "x_grid")]
        x: Option<f64>,
        /// Comma-separated evaluation points.
        #[arg(long, allow_hyphen_values = true)]
        x_grid: Option<String>,
    },
    /// All zeros of one polynomial.
    Zeros {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Closed-form extreme bounds next to the extreme zeros, over a parameter sweep.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "lambda_grid")]
        lambda: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        lambda_grid: Option<String>,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "eta_grid")]
        eta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        eta_grid: Option<String>,
    },
    /// Recompute a reference table next to its printed values.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        id: u8,
    },
    /// Unit-circle data of the orthogonality measure.
    Measure {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
        eta: f64,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Large-parameter errors of the zeros and the fitted decay rate.
    Asymp {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        branch: BranchName,
        /// Fixed η of the λ branch.
        #[arg(long, allow_negative_numbers = true)]
        eta: Option<f64>,
        /// Fixed λ of the η branch.
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        /// Comma-separated values of the growing parameter.
        #[arg(long)]
        grid: String,
    },
    /// Run every verification suite; exits 1 when any check fails.
    CheckAll,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Eval {
        n: usize,
        k: usize,
        params: FamilyParams,
        xs: Vec<f64>,
    },
    Zeros {
        n: usize,
        k: usize,
        params: FamilyParams,
    },
    Bounds {
        n: usize,
        points: Vec<ParamB>,
    },
    Table {
        id: u8,
    },
    Measure {
        b: ParamB,
        k: usize,
        n_max: usize,
    },
    Asymp {
        n: usize,
        branch: Branch,
        grid: Vec<f64>,
    },
    CheckAll,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub solver: SolverOptions,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn family_params(f: &FamilyArgs, k: usize) -> Result<FamilyParams, CliError> {
    let stray = |name: &str| usage(format!("--{name} does not apply to --family {:?}", f.family).to_lowercase());
    match f.family {
        FamilyName::Crr => {
            if f.alpha.is_some() {
                return Err(stray("alpha"));
            }
            let lambda = f.lambda.ok_or_else(|| usage("--lambda is required for the crr family"))?;
            Ok(FamilyParams::Crr(ParamB::new(lambda, f.eta)?))
        }
        FamilyName::Hermite | FamilyName::Laguerre if k != 0 => Err(stray("k")),
        FamilyName::Hermite => {
            if f.lambda.is_some() || f.alpha.is_some() || f.eta != 0.0 {
                return Err(usage("hermite takes no parameters"));
            }
            Ok(FamilyParams::Hermite)
        }
        FamilyName::Laguerre => {
            if f.lambda.is_some() || f.eta != 0.0 {
                return Err(usage("laguerre takes only --alpha"));
            }
            let alpha = f.alpha.ok_or_else(|| usage("--alpha is required for the laguerre family"))?;
            Ok(FamilyParams::laguerre(alpha)?)
        }
    }
}

fn one_or_grid(name: &str, single: Option<f64>, grid: Option<&str>) -> Result<Vec<f64>, CliError> {
    match (single, grid) {
        (Some(v), None) => Ok(vec![v]),
        (None, Some(g)) => Ok(parse_grid(g)?),
        _ => Err(usage(format!("give exactly one of --{name} and --{name}-grid"))),
    }
}

fn tolerance(flag: Option<f64>, env: Option<&str>) -> Result<SolverOptions, CliError> {
    let mut opts = SolverOptions::default();
    let tol = match (flag, env) {
        (Some(t), _) => Some(t),
        (None, Some(text)) => Some(
            text.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("{ZEROS_TOL_ENV}={text:?} is not a number")))?,
        ),
        (None, None) => None,
    };
    if let Some(t) = tol {
        if !(t.is_finite() && t > 0.0 && t <= 1e-3) {
            return Err(usage(format!("zero tolerance {t} must lie in (0, 1e-3]")));
        }
        opts.rel_tol = t;
    }
    Ok(opts)
}

impl RunConfig {
    /// Parses `args` (including the program name) and validates every
    /// parameter. `env_tol` is the value of [`ZEROS_TOL_ENV`], if set.
    pub fn parse<I, T>(args: I, env_tol: Option<&str>) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let solver = tolerance(cli.zeros_tol, env_tol)?;
        let command = match cli.command {
            Cmd::Eval {
                n,
                k,
                family,
                x,
                x_grid,
            } => {
                let params = family_params(&family, k)?;
                let xs = one_or_grid("x", x, x_grid.as_deref())?;
                Command::Eval { n, k, params, xs }
            }
            Cmd::Zeros { n, k, family } => {
                if n == 0 {
                    return Err(usage("--n must be at least 1"));
                }
                Command::Zeros {
                    n,
                    k,
                    params: family_params(&family, k)?,
                }
            }
            Cmd::Bounds {
                n,
                lambda,
                lambda_grid,
                eta,
                eta_grid,
            } => {
                if n < 4 {
                    return Err(CrrError::Hypothesis(format!("extreme bounds need n >= 4, got {n}")).into());
                }
                let lambdas = one_or_grid("lambda", lambda, lambda_grid.as_deref())?;
                let etas = one_or_grid("eta", eta, eta_grid.as_deref())?;
                let mut points = Vec::with_capacity(lambdas.len() * etas.len());
                for &l in &lambdas {
                    for &e in &etas {
                        points.push(ParamB::new(l, e)?);
                    }
                }
                Command::Bounds { n, points }
            }
            Cmd::Table { id } => Command::Table { id },
            Cmd::Measure { lambda, eta, k, n_max } => {
                let b = ParamB::new(lambda, eta)?;
                if k == 0 && lambda <= 0.5 {
                    return Err(CrrError::Hypothesis(format!("k = 0 needs lambda > 1/2, got {lambda}")).into());
                }
                if n_max == 0 {
                    return Err(usage("--n-max must be at least 1"));
                }
                Command::Measure { b, k, n_max }
            }
            Cmd::Asymp {
                n,
                branch,
                eta,
                lambda,
                grid,
            } => {
                let branch = match (branch, eta, lambda) {
                    (BranchName::Lambda, Some(eta), None) => {
                        ParamB::new(1.0, eta)?;
                        Branch::Lambda { eta }
                    }
                    (BranchName::Eta, None, Some(lambda)) => {
                        ParamB::new(lambda, 0.0)?;
                        Branch::Eta { lambda }
                    }
                    (BranchName::Lambda, ..) => return Err(usage("the lambda branch fixes --eta only")),
                    (BranchName::Eta, ..) => return Err(usage("the eta branch fixes --lambda only")),
                };
                if n == 0 {
                    return Err(usage("--n must be at least 1"));
                }
                let grid = parse_grid(&grid)?;
                if grid.iter().any(|&v| v <= 0.0) {
                    return Err(usage("asymptotic grid values must be positive"));
                }
                Command::Asymp { n, branch, grid }
            }
            Cmd::CheckAll => Command::CheckAll,
        };
        Ok(Self {
            command,
            format: cli.format,
            out: cli.out,
            solver,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &str) -> Result<RunConfig, CliError> {
        RunConfig::parse(std::iter::once("crr").chain(args.split_whitespace()), None)
    }

    #[test]
    fn accepts_documented_invocations() {
        let c = parse("zeros --n 30 --lambda 5 --eta 2 --format json").unwrap();
        assert_eq!(c.format, OutputFormat::Json);
        assert!(matches!(c.command, Command::Zeros { n: 30, k: 0, .. }));
        let c = parse("bounds --n 4 --lambda 1.5 --eta-grid -1,0,2").unwrap();
        assert!(matches!(c.command, Command::Bounds { ref points, .. } if points.len() == 3));
        let c = parse("eval --n 3 --family laguerre --alpha -0.5 --x-grid -1,2").unwrap();
        assert!(matches!(c.command, Command::Eval { ref xs, .. } if xs == &[-1.0, 2.0]));
        let c = parse("asymp --n 6 --branch lambda --eta 1 --grid 1e2,1e3,1e4,1e5").unwrap();
        assert_eq!(
            c.command,
            Command::Asymp {
                n: 6,
                branch: Branch::Lambda { eta: 1.0 },
                grid: vec![1e2, 1e3, 1e4, 1e5]
            }
        );
        assert!(parse("check-all").is_ok());
        assert!(parse("table --id 2").is_ok());
    }

    #[test]
    fn invalid_parameters_are_usage_errors() {
        for bad in [
            "zeros --n 4 --lambda -1",
            "zeros --n 0 --lambda 1",
            "zeros --n 4",
            "zeros --n 4 --family hermite --lambda 2",
            "zeros --n 4 --family laguerre --alpha -1",
            "eval --n 3 --lambda 1",
            "eval --n 3 --lambda 1 --x-grid 1,,2",
            "bounds --n 3 --lambda 1 --eta 0",
            "table --id 3",
            "measure --lambda 0.5",
            "asymp --n 6 --branch eta --eta 1 --grid 1,2,3,4",
            "zeros --n 4 --lambda 1 --zeros-tol 0",
            "frobnicate",
        ] {
            let e = parse(bad).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{bad}: {e}");
        }
    }

    #[test]
    fn tolerance_flag_beats_environment() {
        let args = ["crr", "zeros", "--n", "3", "--lambda", "1"];
        let c = RunConfig::parse(args, Some("1e-9")).unwrap();
        assert_eq!(c.solver.rel_tol, 1e-9);
        let c = RunConfig::parse(args.iter().copied().chain(["--zeros-tol", "1e-11"]), Some("1e-9")).unwrap();
        assert_eq!(c.solver.rel_tol, 1e-11);
        assert_eq!(RunConfig::parse(args, Some("fast")).unwrap_err().exit_code(), 2);
        assert_eq!(RunConfig::parse(args, None).unwrap().solver, SolverOptions::default());
    }

    #[test]
    fn help_is_not_an_error() {
        let e = parse("--help").unwrap_err();
        assert_eq!(e.exit_code(), 0);
    }
}
