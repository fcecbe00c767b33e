//! Transcriptions of published data for `SL_4`, `SL_6` and `SL_12`, embedded
//! at compile time, with comparison helpers.
//!
//! The `SL_6` table identifies local systems by character order only, so
//! comparisons treat characters of equal order as interchangeable.

use std::fmt;

use crate::correspondence::CorrespondenceTable;
use crate::partitions::{Partition, StandardTableau};

pub const TABLE_SL6: &str = include_str!("../golden/table_sl6.txt");
pub const LUSZTIG_SL4: &str = include_str!("../golden/lusztig_sl4.txt");
pub const WEIGHTS_SL12: &str = include_str!("../golden/weights_sl12.txt");
pub const STEINBERG_SL6_ORDER2: &str = include_str!("../golden/steinberg_sl6_order2.txt");

fn data_lines(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(str::trim).collect())
}

fn numbers(field: &str) -> Vec<usize> {
    field
        .split_whitespace()
        .map(|t| t.parse().expect("golden number"))
        .collect()
}

/// One line of the `SL_6` table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FigureRow {
    pub orbit: Partition,
    /// Order of the character; 1 for the trivial local system.
    pub order: usize,
    pub dim: u64,
    /// `λ̄`, absent in the `L = T` and `L = G` columns.
    pub label: Option<Partition>,
}

impl fmt::Display for FigureRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let system = match self.order {
            1 => "triv".to_string(),
            d => format!("order {d}"),
        };
        write!(f, "{} {} dim {}", self.orbit, system, self.dim)?;
        if let Some(label) = &self.label {
            write!(f, " {label}")?;
        }
        Ok(())
    }
}

pub fn sl6_table_rows() -> Vec<FigureRow> {
    data_lines(TABLE_SL6)
        .map(|f| FigureRow {
            orbit: f[0].parse().expect("golden orbit"),
            order: match f[1] {
                "triv" => 1,
                s => s
                    .strip_prefix("order ")
                    .and_then(|d| d.parse().ok())
                    .expect("golden local system"),
            },
            dim: f[2].parse().expect("golden dim"),
            label: (!f[3].is_empty()).then(|| f[3].parse().expect("golden label")),
        })
        .collect()
}

/// Projects a table onto the published columns: order instead of exponent,
/// and no `λ̄` label when `d = 1` or `d = n`.
pub fn figure_rows_of(table: &CorrespondenceTable) -> Vec<FigureRow> {
    let n = table.n();
    table
        .figure_order()
        .into_iter()
        .map(|s| {
            let d = s.character().order();
            FigureRow {
                orbit: s.orbit().clone(),
                order: d,
                dim: u64::try_from(s.multiplicity()).expect("small multiplicity"),
                label: (d != 1 && d != n).then(|| s.multiplicity_partition().clone()),
            }
        })
        .collect()
}

/// Multiset comparison of two row lists; on mismatch, reports the first row
/// missing from either side.
pub fn compare_rows(expected: &[FigureRow], actual: &[FigureRow]) -> Result<(), String> {
    let mut e = expected.to_vec();
    let mut a = actual.to_vec();
    e.sort();
    a.sort();
    if e == a {
        return Ok(());
    }
    if let Some(row) = e.iter().find(|r| !a.contains(r)) {
        return Err(format!("expected row missing: {row}"));
    }
    if let Some(row) = a.iter().find(|r| !e.contains(r)) {
        return Err(format!("unexpected row: {row}"));
    }
    Err(format!(
        "row multiplicities differ: expected {} rows, got {}",
        e.len(),
        a.len()
    ))
}

pub fn compare_with_sl6_table(table: &CorrespondenceTable) -> Result<(), String> {
    if table.n() != 6 {
        return Err(format!("table is for n = {}, not 6", table.n()));
    }
    compare_rows(&sl6_table_rows(), &figure_rows_of(table))
}

/// `(character exponent, orbit, λ̄)` for every summand of every `SL_4`
/// Lusztig sheaf.
pub fn lusztig_sl4() -> Vec<(usize, Partition, Partition)> {
    data_lines(LUSZTIG_SL4)
        .map(|f| {
            (
                f[0].parse().expect("golden exponent"),
                f[1].parse().expect("golden orbit"),
                f[2].parse().expect("golden label"),
            )
        })
        .collect()
}

/// The `SL_12` weight example.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightsSl12 {
    /// `(k, numerators over 12)`
    pub lambdas: Vec<(usize, Vec<usize>)>,
    /// `(k, denominator, numerators)`
    pub mus: Vec<(usize, usize, Vec<usize>)>,
    /// `(k, degree, exponents)`
    pub relations: Vec<(usize, usize, Vec<usize>)>,
    /// `(c, k with α_c absent from μ_k)`
    pub absent: Vec<(usize, Vec<usize>)>,
}

pub fn weights_sl12() -> WeightsSl12 {
    let mut out = WeightsSl12::default();
    for f in data_lines(WEIGHTS_SL12) {
        let (kind, index) = f[0].split_once(' ').expect("golden tag");
        let index: usize = index.trim().parse().expect("golden index");
        match kind {
            "lambda" => out.lambdas.push((index, numbers(f[1]))),
            "mu" => out
                .mus
                .push((index, f[1].parse().expect("golden den"), numbers(f[2]))),
            "relation" => out
                .relations
                .push((index, f[1].parse().expect("golden degree"), numbers(f[2]))),
            "absent" => out.absent.push((index, numbers(f[1]))),
            other => panic!("unknown golden tag {other}"),
        }
    }
    out
}

/// Tableaux whose Steinberg cells lie in the order-2 stratum for `SL_6`.
/// No general rule is known here; this is stored data only.
pub fn steinberg_sl6_order2() -> Vec<StandardTableau> {
    STEINBERG_SL6_ORDER2
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let rows = l.split('/').map(numbers).collect();
            StandardTableau::new(rows).expect("golden tableau")
        })
        .collect()
}
