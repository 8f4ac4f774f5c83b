//! Dispatch of a validated [`RunConfig`] to the numerical library.

use crate::artifact::{Artifact, Cell};
use crate::config::{Command, RunConfig};
use crate::error::CliError;
use crate::par::par_map;
use crate::table::table_artifact;
use crate::verify;
use crr_core::analysis::{asymptotics_report, Branch};
use crr_core::classical::{classical_eval, Classical};
use crr_core::measure::{chain_params, integrate, verblunsky_seq, WeightK0};
use crr_core::{eval_crr, extreme_bounds, zeros_with, FamilyParams, ParamB, SolverOptions};

/// An artifact plus whether every check it reports passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub artifact: Artifact,
    pub ok: bool,
}

impl From<Artifact> for Outcome {
    fn from(artifact: Artifact) -> Self {
        Self { artifact, ok: true }
    }
}

fn family_meta(a: &mut Artifact, params: &FamilyParams) {
    match params {
        FamilyParams::Crr(b) => {
            a.meta("family", "crr").meta("lambda", b.lambda()).meta("eta", b.eta());
        }
        FamilyParams::Hermite => {
            a.meta("family", "hermite");
        }
        FamilyParams::Laguerre { alpha } => {
            a.meta("family", "laguerre").meta("alpha", *alpha);
        }
    }
}

fn eval(n: usize, k: usize, params: &FamilyParams, xs: &[f64]) -> Result<Artifact, CliError> {
    let mut a = match params {
        FamilyParams::Crr(_) => Artifact::new(["x", "p", "log2_abs_p", "dp", "d2p"]),
        _ => Artifact::new(["x", "p", "log2_abs_p"]),
    };
    family_meta(&mut a, params);
    a.meta("n", n).meta("k", k);
    for &x in xs {
        match params {
            FamilyParams::Crr(b) => {
                let r = eval_crr(n, k, b, x, true);
                a.push(vec![
                    x.into(),
                    r.p.to_f64().into(),
                    r.p.log2_abs().into(),
                    r.dp.to_f64().into(),
                    r.d2p.to_f64().into(),
                ]);
            }
            FamilyParams::Hermite | FamilyParams::Laguerre { .. } => {
                let family = match *params {
                    FamilyParams::Laguerre { alpha } => Classical::Laguerre { alpha },
                    _ => Classical::Hermite,
                };
                let p = classical_eval(family, n, x)?;
                a.push(vec![x.into(), p.to_f64().into(), p.log2_abs().into()]);
            }
        }
    }
    Ok(a)
}

fn zeros(n: usize, k: usize, params: FamilyParams, opts: &SolverOptions) -> Result<Artifact, CliError> {
    let zs = zeros_with(params, n, k, opts)?;
    let mut a = Artifact::new(["index", "x", "theta"]);
    family_meta(&mut a, &params);
    a.meta("n", n).meta("k", k).meta("rel_tol", opts.rel_tol);
    for (i, &x) in zs.zeros.iter().enumerate() {
        a.push(vec![(i + 1).into(), x.into(), x.atan().into()]);
    }
    Ok(a)
}

fn bounds(n: usize, points: &[ParamB], opts: &SolverOptions) -> Result<Artifact, CliError> {
    let rows = par_map(points, |b| -> Result<Vec<Cell>, CliError> {
        let eb = extreme_bounds(n, b)?;
        let z = zeros_with(FamilyParams::Crr(*b), n, 0, opts)?.zeros;
        let (lo, hi) = (z[0], z[n - 1]);
        Ok(vec![
            b.lambda().into(),
            b.eta().into(),
            eb.lower.into(),
            eb.upper.into(),
            lo.into(),
            hi.into(),
            (eb.lower < lo && hi < eb.upper).into(),
        ])
    });
    let mut a = Artifact::new(["lambda", "eta", "lower", "upper", "x_min", "x_max", "contained"]);
    a.meta("n", n).meta("rel_tol", opts.rel_tol);
    for r in rows {
        a.push(r?);
    }
    Ok(a)
}

fn measure(b: ParamB, k: usize, n_max: usize) -> Result<Artifact, CliError> {
    let v = verblunsky_seq(b, k, n_max)?;
    let chain = chain_params(b.lambda(), k, n_max)?;
    let mut a = Artifact::new([
        "n", "tau_re", "tau_im", "tau_abs", "beta_re", "beta_im", "beta_abs", "gamma", "chain_max", "chain_min",
    ]);
    a.meta("lambda", b.lambda()).meta("eta", b.eta()).meta("k", k);
    if k == 0 {
        let w = WeightK0::new(b)?;
        a.meta("weight_mass", integrate(&w, |_| 1.0)?);
    }
    for n in 1..=n_max {
        let (t, be) = (v.tau[n], v.beta[n - 1]);
        a.push(vec![
            n.into(),
            t.re.into(),
            t.im.into(),
            t.norm().into(),
            be.re.into(),
            be.im.into(),
            be.norm().into(),
            v.gamma[n].into(),
            chain.max_at(n).into(),
            chain.minimal.as_ref().map(|m| m[n - 1]).into(),
        ]);
    }
    Ok(a)
}

fn asymp(n: usize, branch: Branch, grid: &[f64]) -> Result<Artifact, CliError> {
    let r = asymptotics_report(n, branch, grid)?;
    let mut a = Artifact::new([
        "param",
        "zero_error",
        "scaled_zero_error",
        "function_error",
        "scaled_function_error",
    ]);
    a.meta("n", n);
    match branch {
        Branch::Lambda { eta } => a.meta("branch", "lambda").meta("eta", eta),
        Branch::Eta { lambda } => a.meta("branch", "eta").meta("lambda", lambda),
    };
    a.meta("slope", r.slope)
        .meta("expected_slope", r.expected_slope)
        .meta("zero_ratio_max", r.zero_ratio_max)
        .meta("function_ratio_max", r.function_ratio_max);
    for p in &r.points {
        a.push(vec![
            p.param.into(),
            p.zero_error.into(),
            p.scaled_zero_error.into(),
            p.function_error.into(),
            p.scaled_function_error.into(),
        ]);
    }
    Ok(a)
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let opts = &config.solver;
    Ok(match &config.command {
        Command::Eval { n, k, params, xs } => eval(*n, *k, params, xs)?.into(),
        Command::Zeros { n, k, params } => zeros(*n, *k, *params, opts)?.into(),
        Command::Bounds { n, points } => bounds(*n, points, opts)?.into(),
        Command::Table { id } => table_artifact(*id, opts)?.into(),
        Command::Measure { b, k, n_max } => measure(*b, *k, *n_max)?.into(),
        Command::Asymp { n, branch, grid } => asymp(*n, *branch, grid)?.into(),
        Command::CheckAll => {
            let checks = verify::run_all(opts);
            let ok = checks.iter().all(|c| c.pass);
            Outcome {
                artifact: verify::artifact(&checks),
                ok,
            }
        }
    })
}
