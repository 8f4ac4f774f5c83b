//! Printed reference values for the two extreme-zero tables.
//!
//! The data file is CSV with `#` comment lines. One comment must read
//! `# version: N`; only version 1 is understood.

use crate::error::{CrrError, Result};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

const EMBEDDED: &str = include_str!("../data/tables.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    Suspect,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub table: u8,
    pub param: f64,
    pub x_min: f64,
    pub bound_min: f64,
    pub para_orth_min: f64,
    pub pseudo_jacobi_min: f64,
    pub x_max: f64,
    pub bound_max: f64,
    pub para_orth_max: f64,
    pub pseudo_jacobi_max: f64,
    pub status: RowStatus,
}

/// Fixed `(n, λ, η)` setting of a table; the row parameter fills the free slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableSweep {
    /// `η = 2`, `n = 30`, rows vary `λ`.
    Lambda,
    /// `λ = 1.5`, `n = 4`, rows vary `η`.
    Eta,
}

impl TableSweep {
    pub fn of(table: u8) -> Option<Self> {
        match table {
            1 => Some(Self::Lambda),
            2 => Some(Self::Eta),
            _ => None,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Self::Lambda => 30,
            Self::Eta => 4,
        }
    }

    /// `(λ, η)` for a row parameter.
    pub fn lambda_eta(self, param: f64) -> (f64, f64) {
        match self {
            Self::Lambda => (param, 2.0),
            Self::Eta => (1.5, param),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fixtures {
    pub version: u32,
    pub rows: Vec<FixtureRow>,
}

impl Fixtures {
    pub fn table(&self, id: u8) -> impl Iterator<Item = &FixtureRow> {
        self.rows.iter().filter(move |r| r.table == id)
    }
}

fn fixture_err(line: usize, reason: impl Into<String>) -> CrrError {
    CrrError::Fixture {
        line,
        reason: reason.into(),
    }
}

fn parse_version(text: &str) -> Result<u32> {
    let mut found = None;
    for (i, line) in text.lines().enumerate() {
        let Some(rest) = line.trim_start().strip_prefix('#') else {
            continue;
        };
        let Some(v) = rest.trim().strip_prefix("version:") else {
            continue;
        };
        if found.is_some() {
            return Err(fixture_err(i + 1, "duplicate version line"));
        }
        let v: u32 = v
            .trim()
            .parse()
            .map_err(|_| fixture_err(i + 1, format!("bad version {:?}", v.trim())))?;
        if v != FORMAT_VERSION {
            return Err(fixture_err(i + 1, format!("unsupported version {v}")));
        }
        found = Some(v);
    }
    found.ok_or_else(|| fixture_err(0, "missing `# version:` line"))
}

fn validate(row: &FixtureRow, line: usize) -> Result<()> {
    let sweep = TableSweep::of(row.table)
        .ok_or_else(|| fixture_err(line, format!("unknown table {}", row.table)))?;
    let values = [
        row.param,
        row.x_min,
        row.bound_min,
        row.para_orth_min,
        row.pseudo_jacobi_min,
        row.x_max,
        row.bound_max,
        row.para_orth_max,
        row.pseudo_jacobi_max,
    ];
    if values.iter().any(|v| !v.is_finite()) {
        return Err(fixture_err(line, "non-finite value"));
    }
    if sweep == TableSweep::Lambda && row.param <= 0.0 {
        return Err(fixture_err(line, "lambda must be positive"));
    }
    if row.x_min > row.x_max {
        return Err(fixture_err(line, "x_min exceeds x_max"));
    }
    Ok(())
}

pub fn parse(text: &str) -> Result<Fixtures> {
    let version = parse_version(text)?;
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| fixture_err(0, e.to_string()))?
        .clone();
    let mut rows = Vec::new();
    let mut rec = csv::StringRecord::new();
    loop {
        match reader.read_record(&mut rec) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line() as usize);
                return Err(fixture_err(line, e.to_string()));
            }
        }
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let row: FixtureRow = rec
            .deserialize(Some(&headers))
            .map_err(|e| fixture_err(line, e.to_string()))?;
        validate(&row, line)?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(fixture_err(0, "no rows"));
    }
    Ok(Fixtures { version, rows })
}

/// The reference tables shipped with the crate.
pub fn embedded() -> Fixtures {
    parse(EMBEDDED).expect("embedded fixture file is well-formed")
}
