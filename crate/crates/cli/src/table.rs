//! Recomputation of the reference tables of extreme zeros and bounds.

use crate::artifact::{Artifact, Cell};
use crate::error::CliError;
use crate::par::par_map;
use crr_core::fixtures::{self, FixtureRow, RowStatus, TableSweep};
use crr_core::{extreme_bounds, zeros_with, FamilyParams, ParamB, Result, SolverOptions};

/// Printed values carry five decimals.
pub const MATCH_TOL: f64 = 5e-5;

pub const SUSPECT_STATUS: &str = "suspect (see docs)";
pub const SUSPECT_NOTE: &str =
    "printed values duplicate table 1 row lambda=15 and contradict the closed-form bound; recomputed values shown, not compared";

/// Smallest zero, lower bound, largest zero, upper bound.
pub type Quad = [f64; 4];

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub lambda: f64,
    pub eta: f64,
    pub computed: Quad,
    pub fixture: FixtureRow,
}

impl TableRow {
    pub fn printed(&self) -> Quad {
        let f = &self.fixture;
        [f.x_min, f.bound_min, f.x_max, f.bound_max]
    }

    /// Per-cell `|computed − printed|`, or `None` for suspect rows.
    pub fn deltas(&self) -> Option<Quad> {
        if self.fixture.status == RowStatus::Suspect {
            return None;
        }
        let p = self.printed();
        Some(std::array::from_fn(|i| (self.computed[i] - p[i]).abs()))
    }
}

pub fn compute_row(table: u8, fixture: &FixtureRow, opts: &SolverOptions) -> Result<TableRow> {
    let sweep = TableSweep::of(table).expect("fixture tables are validated");
    let n = sweep.degree();
    let (lambda, eta) = sweep.lambda_eta(fixture.param);
    let b = ParamB::new(lambda, eta)?;
    let z = zeros_with(FamilyParams::Crr(b), n, 0, opts)?.zeros;
    let eb = extreme_bounds(n, &b)?;
    Ok(TableRow {
        n,
        lambda,
        eta,
        computed: [z[0], eb.lower, z[n - 1], eb.upper],
        fixture: fixture.clone(),
    })
}

pub fn table_rows(id: u8, opts: &SolverOptions) -> Result<Vec<TableRow>> {
    let fx = fixtures::embedded();
    let rows: Vec<&FixtureRow> = fx.table(id).collect();
    par_map(&rows, |r| compute_row(id, r, opts)).into_iter().collect()
}

const COLUMNS: [&str; 21] = [
    "lambda",
    "eta",
    "n",
    "x_min",
    "x_min_printed",
    "x_min_delta",
    "bound_min",
    "bound_min_printed",
    "bound_min_delta",
    "x_max",
    "x_max_printed",
    "x_max_delta",
    "bound_max",
    "bound_max_printed",
    "bound_max_delta",
    "para_orth_min_printed",
    "pseudo_jacobi_min_printed",
    "para_orth_max_printed",
    "pseudo_jacobi_max_printed",
    "status",
    "note",
];

pub fn table_artifact(id: u8, opts: &SolverOptions) -> std::result::Result<Artifact, CliError> {
    let sweep = TableSweep::of(id).ok_or_else(|| CliError::Usage(format!("no table {id}")))?;
    let rows = table_rows(id, opts)?;
    let mut a = Artifact::new(COLUMNS);
    a.meta("table", id as usize)
        .meta("n", sweep.degree())
        .meta("row_parameter", if sweep == TableSweep::Lambda { "lambda" } else { "eta" })
        .meta("fixture_version", fixtures::FORMAT_VERSION as usize)
        .meta("match_tolerance", MATCH_TOL);
    let mut worst = 0.0f64;
    for r in &rows {
        let deltas = r.deltas();
        if let Some(d) = deltas {
            worst = d.iter().copied().fold(worst, f64::max);
        }
        let f = &r.fixture;
        let mut cells: Vec<Cell> = vec![r.lambda.into(), r.eta.into(), r.n.into()];
        for (i, (c, p)) in r.computed.iter().zip(r.printed()).enumerate() {
            cells.push((*c).into());
            cells.push(p.into());
            cells.push(deltas.map(|d| d[i]).into());
        }
        cells.extend([
            f.para_orth_min.into(),
            f.pseudo_jacobi_min.into(),
            f.para_orth_max.into(),
            f.pseudo_jacobi_max.into(),
        ]);
        match f.status {
            RowStatus::Ok => cells.extend(["ok".into(), Cell::Null]),
            RowStatus::Suspect => cells.extend([SUSPECT_STATUS.into(), SUSPECT_NOTE.into()]),
        }
        a.push(cells);
    }
    a.meta("max_delta", worst);
    Ok(a)
}
