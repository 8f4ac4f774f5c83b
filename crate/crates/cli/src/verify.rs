//! The invariant suites behind `check-all`.
//!
//! Every suite returns one [`Check`] per invariant, carrying the worst value
//! seen over its sweep and the limit it was held to.

use crate::artifact::Artifact;
use crate::par::par_map;
use crr_core::analysis::{asymptotics_report, convexity_report, spacing_check, Branch};
use crr_core::classical::{electrostatic_psd, stieltjes_residual, ElectrostaticKind, ElectrostaticMatrix};
use crr_core::crr::{ode_residual, wronskian_check};
use crr_core::measure::{
    associated_integral_check, chain_params, integrate, orthogonality_check, verblunsky_seq, weight_density, WeightK0,
};
use crr_core::{
    char_poly_det, coeff_d, eval_crr, extreme_bounds, CrrError, FamilyParams, ParamB, SolverOptions,
};
use crr_core::zeros::walk_ladder;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// Worst observed value of the checked quantity.
    pub worst: f64,
    pub limit: f64,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    /// Passes when `worst < limit`; NaN fails.
    fn below(suite: &'static str, name: impl Into<String>, worst: f64, limit: f64) -> Self {
        Self {
            suite,
            name: name.into(),
            worst,
            limit,
            pass: worst < limit,
            detail: String::new(),
        }
    }

    /// Passes when no failures were counted.
    fn none_failed(suite: &'static str, name: impl Into<String>, failures: &[String], cases: usize) -> Self {
        Self {
            suite,
            name: name.into(),
            worst: failures.len() as f64,
            limit: 0.0,
            pass: failures.is_empty(),
            detail: match failures.first() {
                None => format!("{cases} cases"),
                Some(f) => format!("{} of {cases} failed; first: {f}", failures.len()),
            },
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    fn failed(suite: &'static str, name: impl Into<String>, err: &CrrError) -> Self {
        Self {
            suite,
            name: name.into(),
            worst: f64::NAN,
            limit: f64::NAN,
            pass: false,
            detail: err.to_string(),
        }
    }
}

fn pb(l: f64, e: f64) -> ParamB {
    ParamB::new(l, e).expect("suite parameters are valid")
}

fn fold_max(vals: impl IntoIterator<Item = f64>) -> f64 {
    vals.into_iter().fold(0.0, |a, v| if v.is_nan() || a.is_nan() { f64::NAN } else { a.max(v) })
}

pub const LADDER_DEGREE: usize = 200;
pub const ZERO_GRID_LAMBDA: [f64; 5] = [0.75, 1.0, 1.5, 5.0, 25.0];
pub const ZERO_GRID_ETA: [f64; 4] = [-5.0, 0.0, 2.0, 15.0];

/// Strict interlacing between consecutive degrees and containment in the
/// closed-form bounds, re-checked here independently of the solver.
pub fn interlacing(opts: &SolverOptions) -> Vec<Check> {
    const S: &str = "interlacing";
    let grid: Vec<ParamB> = ZERO_GRID_LAMBDA
        .iter()
        .flat_map(|&l| ZERO_GRID_ETA.iter().map(move |&e| pb(l, e)))
        .collect();
    let per_point = par_map(&grid, |b| {
        let mut interlace = Vec::new();
        let mut contain = Vec::new();
        let mut prev: Vec<f64> = Vec::new();
        let tag = |deg: usize| format!("lambda={} eta={} n={deg}", b.lambda(), b.eta());
        let res = walk_ladder(&FamilyParams::Crr(*b), LADDER_DEGREE, 0, opts, |deg, z| {
            let ordered = z.len() == deg && z.windows(2).all(|w| w[0] < w[1]);
            let nested = prev.is_empty() || prev.iter().enumerate().all(|(i, &p)| z[i] < p && p < z[i + 1]);
            if !(ordered && nested) {
                interlace.push(tag(deg));
            }
            if deg >= 4 {
                let eb = extreme_bounds(deg, b)?;
                // no sign change beyond the bounds: P has its limiting signs there
                let hi = eval_crr(deg, 0, b, eb.upper, false).p.signum();
                let lo = eval_crr(deg, 0, b, eb.lower, false).p.signum();
                let lo_expected = if deg % 2 == 0 { 1.0 } else { -1.0 };
                let inside = eb.lower < z[0] && z[deg - 1] < eb.upper;
                if !(inside && hi == 1.0 && lo == lo_expected) {
                    contain.push(tag(deg));
                }
            }
            prev = z.to_vec();
            Ok(())
        });
        if let Err(e) = res {
            interlace.push(format!("{}: {e}", tag(prev.len() + 1)));
        }
        (interlace, contain)
    });
    let interlace: Vec<String> = per_point.iter().flat_map(|p| p.0.clone()).collect();
    let contain: Vec<String> = per_point.iter().flat_map(|p| p.1.clone()).collect();
    let cases = grid.len() * LADDER_DEGREE;
    vec![
        Check::none_failed(S, format!("strict interlacing, degrees 1..={LADDER_DEGREE}"), &interlace, cases),
        Check::none_failed(S, "zeros inside extreme bounds, degree >= 4", &contain, grid.len() * (LADDER_DEGREE - 3)),
    ]
}

type Q = BigRational;

fn q(v: f64) -> Q {
    Q::from_float(v).expect("finite")
}

/// `P_n(b; x)` in exact rational arithmetic for dyadic `λ`, `η`, `x`, with
/// the recurrence run on absolute values (with `|x|` floored at 1) as the
/// scale for vanishing values.
fn exact_value(n: usize, lambda: f64, eta: f64, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 1.0);
    }
    let (l, e, xq) = (q(lambda), q(eta), q(x));
    let int = |v: i64| Q::from_integer(BigInt::from(v));
    let c = |j: usize| &e / (&l + int(j as i64 - 1));
    let d = |jp: usize| {
        let m = int(jp as i64 - 1);
        (&m * (&m + int(2) * &l - int(1))) / (int(4) * (&m + &l - int(1)) * (&m + &l))
    };
    let x2 = &xq * &xq + int(1);
    let (mut prev, mut cur) = (int(1), &xq - c(1));
    let ax = x.abs().max(1.0);
    let (mut aprev, mut acur) = (1.0, ax + c(1).to_f64().unwrap().abs());
    for m in 1..n {
        let next = (&xq - c(m + 1)) * &cur - d(m + 1) * &x2 * &prev;
        let anext = (ax + c(m + 1).to_f64().unwrap().abs()) * acur + d(m + 1).to_f64().unwrap() * (ax * ax + 1.0) * aprev;
        prev = std::mem::replace(&mut cur, next);
        aprev = std::mem::replace(&mut acur, anext);
    }
    let v = cur.to_f64().unwrap();
    (v, if cur.is_zero() { acur } else { v.abs() })
}

pub const RANDOM_SEED: u64 = 0x5eed_c0de;

/// Determinant against recurrence on random points, and the recurrence
/// against exact rational evaluation.
pub fn oracles() -> Vec<Check> {
    const S: &str = "oracles";
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut worst_det = 0.0f64;
    for _ in 0..100 {
        let n = rng.gen_range(1..=12usize);
        let lambda = 10f64.powf(rng.gen_range(-1.3..1.7));
        let eta = rng.gen_range(-20.0..20.0);
        let x = rng.gen_range(-25.0..25.0);
        let b = pb(lambda, eta);
        let det = char_poly_det(n, &b, x);
        let rec = eval_crr(n, 0, &b, x, false).p;
        worst_det = fold_max([worst_det, det.rel_diff(&rec)]);
    }
    let params = [(0.75, -2.0), (1.0, 0.0), (1.5, 0.5), (2.25, 1.25), (5.0, 2.0), (0.125, 3.0), (12.5, -0.75)];
    let points = [-3.0, -1.25, -0.5, 0.0, 0.7, 2.0, 9.5];
    let mut worst_exact = 0.0f64;
    for &(l, e) in &params {
        let b = pb(l, e);
        for n in 0..=8 {
            for &x in &points {
                let (exact, scale) = exact_value(n, l, e, x);
                let float = eval_crr(n, 0, &b, x, false).p.to_f64();
                worst_exact = fold_max([worst_exact, (float - exact).abs() / scale]);
            }
        }
    }
    vec![
        Check::below(S, "determinant vs recurrence, 100 random points, n <= 12", worst_det, 1e-10),
        Check::below(S, "recurrence vs exact rational value, n <= 8", worst_exact, 1e-12),
    ]
}

const IDENTITY_PARAMS: [(f64, f64); 8] = [
    (0.3, 0.0),
    (0.75, -2.0),
    (1.0, 0.0),
    (1.5, 0.5),
    (3.0, 4.0),
    (7.5, -1.0),
    (20.0, 10.0),
    (0.6, 0.2),
];
const IDENTITY_POINTS: [f64; 7] = [-6.0, -1.5, -0.3, 0.0, 0.8, 2.5, 12.0];

pub fn identities() -> Vec<Check> {
    const S: &str = "identities";
    let mut wr = 0.0f64;
    let mut ode = 0.0f64;
    for &(l, e) in &IDENTITY_PARAMS {
        let b = pb(l, e);
        for &x in &IDENTITY_POINTS {
            for n in 1..=20 {
                for k in 0..=5 {
                    wr = fold_max([wr, wronskian_check(n, k, &b, x)]);
                }
                ode = fold_max([ode, ode_residual(n, &b, x)]);
            }
        }
    }
    let mut chain = 0.0f64;
    for &l in &[0.1, 0.3, 0.5, 0.75, 1.0, 1.5, 3.0, 10.0, 50.0] {
        for k in 0..=5 {
            let c = chain_params(l, k, 101).expect("positive lambda");
            for n in 1..=100 {
                let d = coeff_d(k + n + 1, l);
                chain = fold_max([chain, ((1.0 - c.max_at(n)) * c.max_at(n + 1) - d).abs() / d]);
                if let Some(min) = &c.minimal {
                    chain = fold_max([chain, ((1.0 - min[n - 1]) * min[n] - d).abs() / d]);
                }
            }
        }
    }
    let mut tau = 0.0f64;
    let mut beta = 0.0f64;
    for &(l, e) in &IDENTITY_PARAMS {
        for k in 0..=5 {
            let Ok(v) = verblunsky_seq(pb(l, e), k, 100) else {
                continue;
            };
            tau = fold_max(v.tau.iter().map(|t| (t.norm() - 1.0).abs()).chain([tau]));
            beta = fold_max(v.beta.iter().map(|b| b.norm()).chain([beta]));
        }
    }
    vec![
        Check::below(S, "associated product identity, n <= 20, k <= 5", wr, 1e-10),
        Check::below(S, "chain sequence parameters generate d, n <= 100, k <= 5", chain, 1e-14),
        Check::below(S, "||tau_n| - 1|, n <= 100", tau, 1e-12),
        Check::below(S, "|beta_n|, n <= 100", beta, 1.0),
        Check::below(S, "differential equation residual, n <= 20", ode, 1e-9),
    ]
}

pub const MEASURE_LAMBDA: [f64; 4] = [0.75, 1.0, 1.5, 3.0];
pub const MEASURE_ETA: [f64; 4] = [-2.0, 0.0, 0.5, 2.0];

pub fn measure() -> Vec<Check> {
    const S: &str = "measure";
    let grid: Vec<ParamB> = MEASURE_LAMBDA
        .iter()
        .flat_map(|&l| MEASURE_ETA.iter().map(move |&e| pb(l, e)))
        .collect();
    let per_point = par_map(&grid, |b| -> Result<[f64; 3], CrrError> {
        let w = WeightK0::new(*b)?;
        let mass = (integrate(&w, |_| 1.0)? - 1.0).abs();
        let mut orth = 0.0f64;
        for n in 1..=6 {
            orth = fold_max([orth, orthogonality_check(n, b)?]);
        }
        let mut assoc = 0.0f64;
        for n in 1..=4 {
            assoc = fold_max([assoc, associated_integral_check(n, b)?]);
        }
        Ok([mass, orth, assoc])
    });
    let mut worst = [0.0f64; 3];
    for r in per_point {
        match r {
            Ok(v) => worst = std::array::from_fn(|i| fold_max([worst[i], v[i]])),
            Err(e) => return vec![Check::failed(S, "weight integrals", &e)],
        }
    }
    let cauchy = WeightK0::new(pb(1.0, 0.0)).expect("lambda > 1/2");
    let pointwise = fold_max((-400..=400).map(|i| {
        let x = f64::from(i) * 0.05;
        let want = 1.0 / (PI * (1.0 + x * x));
        (weight_density(&cauchy, x) - want).abs() / want
    }));
    vec![
        Check::below(S, "|mass - 1|", worst[0], 1e-8),
        Check::below(S, "orthogonality residual, n <= 6", worst[1], 1e-6),
        Check::below(S, "associated-integral residual, n <= 4, k = 0", worst[2], 1e-6),
        Check::below(S, "weight at lambda=1, eta=0 vs Cauchy density", pointwise, 1e-12),
    ]
}

pub fn asymptotics() -> Vec<Check> {
    const S: &str = "asymptotics";
    let grid = [1e2, 1e3, 1e4, 1e5];
    let mut out = Vec::new();
    match asymptotics_report(6, Branch::Lambda { eta: 1.0 }, &grid) {
        Ok(r) => out.push(
            Check::below(S, "lambda-branch slope, n=6, eta=1", (r.slope + 1.5).abs(), 0.1)
                .with_detail(format!("slope {:.6}", r.slope)),
        ),
        Err(e) => out.push(Check::failed(S, "lambda-branch slope", &e)),
    }
    match asymptotics_report(6, Branch::Eta { lambda: 1.5 }, &grid) {
        Ok(r) => out.push(
            Check::below(S, "eta-branch slope, n=6, lambda=1.5", (r.slope + 1.0).abs(), 0.15)
                .with_detail(format!("slope {:.6}", r.slope)),
        ),
        Err(e) => out.push(Check::failed(S, "eta-branch slope", &e)),
    }
    match asymptotics_report(2, Branch::Lambda { eta: 0.0 }, &[1e2, 4e2, 1.6e3, 6.4e3]) {
        Ok(r) => {
            let dev = fold_max(
                r.points
                    .windows(2)
                    .map(|w| (w[0].zero_error / w[1].zero_error / 8.0 - 1.0).abs()),
            );
            out.push(Check::below(S, "n=2, eta=0 error ratio under lambda x4, relative to 8", dev, 0.05));
        }
        Err(e) => out.push(Check::failed(S, "n=2 error ratio", &e)),
    }
    out
}

pub const ELECTROSTATIC_LAMBDA: [f64; 4] = [0.75, 1.0, 1.5, 3.0];

pub fn electrostatics() -> Vec<Check> {
    const S: &str = "electrostatics";
    let run = || -> Result<[f64; 4], CrrError> {
        let mut res = [0.0f64; 2];
        let mut psd = [0.0f64; 2];
        for n in 2..=20 {
            res[0] = fold_max([res[0], stieltjes_residual(ElectrostaticKind::Hermite, n, 1.0)?]);
            for &l in &ELECTROSTATIC_LAMBDA {
                res[1] = fold_max([res[1], stieltjes_residual(ElectrostaticKind::Laguerre, n, l)?]);
            }
        }
        for n in 2..=12 {
            for (i, kind) in [ElectrostaticKind::Hermite, ElectrostaticKind::Laguerre].into_iter().enumerate() {
                for &l in &ELECTROSTATIC_LAMBDA {
                    let norm = ElectrostaticMatrix::build(kind, n, l)?.norm();
                    psd[i] = fold_max([psd[i], -electrostatic_psd(kind, n, l)? / norm]);
                }
            }
        }
        Ok([res[0], res[1], psd[0], psd[1]])
    };
    match run() {
        Ok(w) => vec![
            Check::below(S, "Hermite Stieltjes residual, n <= 20", w[0], 1e-8),
            Check::below(S, "Laguerre Stieltjes residual, n <= 20", w[1], 1e-8),
            Check::below(S, "Hermite matrix: -min eigenvalue / norm, n <= 12", w[2], 1e-10),
            Check::below(S, "Laguerre matrix: -min eigenvalue / norm, n <= 12", w[3], 1e-10),
        ],
        Err(e) => vec![Check::failed(S, "electrostatic systems", &e)],
    }
}

/// Convexity and spacing claims for the zeros in the angle variable.
pub fn analysis() -> Vec<Check> {
    const S: &str = "analysis";
    let mut conv = Vec::new();
    let mut conv_cases = 0;
    for l in [0.5, 1.0, 2.0, 5.0] {
        for e in [-3.0, 0.0, 1.0, 4.0] {
            for n in [6, 12, 24] {
                conv_cases += 1;
                match convexity_report(n, &pb(l, e)) {
                    Ok(r) if r.holds() => {}
                    Ok(_) => conv.push(format!("lambda={l} eta={e} n={n}")),
                    Err(err) => conv.push(format!("lambda={l} eta={e} n={n}: {err}")),
                }
            }
        }
    }
    let mut spacing = Vec::new();
    let mut spacing_cases = 0;
    for n in [4, 7, 15, 30] {
        for (l, e) in [(0.3, 0.0), (0.3, -0.4), (0.7, 0.2), (1.0, -3.0), (1.0, 5.0), (1.2, 0.0), (3.0, -2.0), (10.0, 8.0)] {
            match spacing_check(n, &pb(l, e)) {
                Ok(r) => {
                    if let Some(ok) = r.passes() {
                        spacing_cases += 1;
                        if !ok {
                            spacing.push(format!("lambda={l} eta={e} n={n}: margin {:?}", r.min_margin));
                        }
                    }
                }
                Err(err) => spacing.push(format!("lambda={l} eta={e} n={n}: {err}")),
            }
        }
    }
    vec![
        Check::none_failed(S, "convexity claims of the angle zeros", &conv, conv_cases),
        Check::none_failed(S, "strict spacing inequalities where applicable", &spacing, spacing_cases),
    ]
}

/// Every suite, run concurrently and reported in a fixed order.
pub fn run_all(opts: &SolverOptions) -> Vec<Check> {
    let suites: [&(dyn Fn() -> Vec<Check> + Sync); 7] = [
        &|| interlacing(opts),
        &oracles,
        &identities,
        &measure,
        &asymptotics,
        &electrostatics,
        &analysis,
    ];
    par_map(&suites, |s| s()).into_iter().flatten().collect()
}

pub fn artifact(checks: &[Check]) -> Artifact {
    let mut a = Artifact::new(["suite", "check", "worst", "limit", "pass", "detail"]);
    let failed = checks.iter().filter(|c| !c.pass).count();
    a.meta("checks", checks.len()).meta("failed", failed).meta("ok", failed == 0);
    for c in checks {
        a.push(vec![
            c.suite.into(),
            c.name.clone().into(),
            c.worst.into(),
            c.limit.into(),
            c.pass.into(),
            c.detail.clone().into(),
        ]);
    }
    a
}
