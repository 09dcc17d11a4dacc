// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Carnot-efficiency sweeps of the high-temperature optima.
//!
//! Rows at η_C = 0 and η_C = 1 use exact limiting values; interior rows
//! evaluate the closed forms at τ = 1 − η_C.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::high_temp::{
    emef, eta_ab, fractional_power_loss, power_ratio_eco_vs_maxpower, Asymmetry, FixedFrequency, ObjectiveKind,
    ReducedParams,
};
use crate::par::Execution;

/// Finite asymmetries sampled next to the limiting curves.
pub const SAMPLE_GAMMAS: [(f64, &str); 2] = [(0.1, "g0.1"), (10.0, "g10")];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepKind {
    /// Efficiency at maximum EF with its bounds.
    EfficiencyBounds,
    /// Fractional power loss 1 − E/P at the optima.
    PowerLoss,
    /// Power at maximum EF relative to maximum power.
    PowerRatio,
}

impl FromStr for SweepKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fig2" => Ok(SweepKind::EfficiencyBounds),
            "fig3" => Ok(SweepKind::PowerLoss),
            "fig4" => Ok(SweepKind::PowerRatio),
            other => Err(format!("unknown sweep kind {other:?} (expected fig2, fig3 or fig4)")),
        }
    }
}

impl fmt::Display for SweepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepKind::EfficiencyBounds => "fig2",
            SweepKind::PowerLoss => "fig3",
            SweepKind::PowerRatio => "fig4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

type Curve = Box<dyn Fn(f64) -> Result<f64> + Send + Sync>;

struct Column {
    name: String,
    curve: Curve,
    /// Values at η_C = 0 and η_C = 1.
    ends: (f64, f64),
}

fn col(name: impl Into<String>, ends: (f64, f64), curve: Curve) -> Column {
    Column { name: name.into(), curve, ends }
}

fn fix_tag(fix: FixedFrequency) -> &'static str {
    match fix {
        FixedFrequency::FixWh => "wh",
        FixedFrequency::FixWc => "wc",
    }
}

fn limit_tag(a: Asymmetry) -> &'static str {
    match a {
        Asymmetry::ZeroLimit => "0",
        _ => "inf",
    }
}

fn efficiency_columns() -> Vec<Column> {
    use FixedFrequency::*;
    let emef_at =
        |fix, a: Asymmetry| -> Curve { Box::new(move |tau| Ok(emef(fix, &ReducedParams::with_asymmetry(tau, a)?))) };
    let mut cols = vec![
        col("emef_wh_lo", (0.0, 0.75), emef_at(FixWh, Asymmetry::ZeroLimit)),
        col("eta_AB", (0.0, 1.0), Box::new(|tau| eta_ab(1.0 - tau))),
        col("emef_wc_hi", (0.0, 1.0), emef_at(FixWc, Asymmetry::ZeroLimit)),
    ];
    for fix in [FixWh, FixWc] {
        for (g, tag) in SAMPLE_GAMMAS {
            cols.push(col(format!("emef_{}_{tag}", fix_tag(fix)), (0.0, 1.0), emef_at(fix, Asymmetry::Finite(g))));
        }
    }
    cols
}

fn power_loss_columns() -> Vec<Column> {
    use FixedFrequency::*;
    use ObjectiveKind::*;
    let loss = |obj, fix, a: Asymmetry| -> Curve {
        Box::new(move |tau| fractional_power_loss(obj, fix, &ReducedParams::with_asymmetry(tau, a)?))
    };
    let near_equilibrium = |obj| if obj == EcologicalFunction { 1.0 / 3.0 } else { 1.0 };
    let obj_tag = |obj| if obj == EcologicalFunction { "eco" } else { "pow" };
    let mut cols = Vec::new();
    for obj in [EcologicalFunction, Power] {
        for fix in [FixWh, FixWc] {
            for a in [Asymmetry::ZeroLimit, Asymmetry::InfiniteLimit] {
                let far = if fix == FixWh && a == Asymmetry::ZeroLimit { near_equilibrium(obj) } else { 0.0 };
                let name = format!("rp_{}_{}_{}", obj_tag(obj), fix_tag(fix), limit_tag(a));
                cols.push(col(name, (near_equilibrium(obj), far), loss(obj, fix, a)));
            }
        }
    }
    for obj in [EcologicalFunction, Power] {
        for fix in [FixWh, FixWc] {
            for (g, tag) in SAMPLE_GAMMAS {
                let name = format!("rp_{}_{}_{tag}", obj_tag(obj), fix_tag(fix));
                cols.push(col(name, (near_equilibrium(obj), 0.0), loss(obj, fix, Asymmetry::Finite(g))));
            }
        }
    }
    cols
}

fn power_ratio_columns() -> Vec<Column> {
    use FixedFrequency::*;
    let ratio = |fix, a: Asymmetry| -> Curve {
        Box::new(move |tau| power_ratio_eco_vs_maxpower(fix, &ReducedParams::with_asymmetry(tau, a)?))
    };
    let mut cols = Vec::new();
    for fix in [FixWh, FixWc] {
        for a in [Asymmetry::ZeroLimit, Asymmetry::InfiniteLimit] {
            let far = if fix == FixWh && a == Asymmetry::ZeroLimit { 0.75 } else { 1.0 };
            cols.push(col(format!("rbar_{}_{}", fix_tag(fix), limit_tag(a)), (0.75, far), ratio(fix, a)));
        }
    }
    for fix in [FixWh, FixWc] {
        for (g, tag) in SAMPLE_GAMMAS {
            cols.push(col(format!("rbar_{}_{tag}", fix_tag(fix)), (0.75, 1.0), ratio(fix, Asymmetry::Finite(g))));
        }
    }
    cols
}

fn columns(kind: SweepKind) -> Vec<Column> {
    match kind {
        SweepKind::EfficiencyBounds => efficiency_columns(),
        SweepKind::PowerLoss => power_loss_columns(),
        SweepKind::PowerRatio => power_ratio_columns(),
    }
}

/// Column names of a sweep, `eta_C` first.
pub fn column_names(kind: SweepKind) -> Vec<String> {
    std::iter::once("eta_C".to_string()).chain(columns(kind).into_iter().map(|c| c.name)).collect()
}

fn row_at(cols: &[Column], eta: f64) -> Result<Vec<f64>> {
    let mut row = Vec::with_capacity(cols.len() + 1);
    row.push(eta);
    for c in cols {
        row.push(if eta == 0.0 {
            c.ends.0
        } else if eta == 1.0 {
            c.ends.1
        } else {
            (c.curve)(1.0 - eta)?
        });
    }
    Ok(row)
}

/// One row of `kind` at Carnot efficiency `eta_c` ∈ [0, 1].
pub fn sweep_row(kind: SweepKind, eta_c: f64) -> Result<Vec<f64>> {
    if !(0.0..=1.0).contains(&eta_c) {
        return Err(Error::Domain { field: "eta_C", value: eta_c, domain: "[0, 1]" });
    }
    row_at(&columns(kind), eta_c)
}

/// Tabulate `kind` on `count` evenly spaced η_C values from `lo` to `hi` inclusive.
pub fn sweep(kind: SweepKind, lo: f64, hi: f64, count: usize, exec: Execution) -> Result<SweepTable> {
    if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo >= hi {
        return Err(Error::Domain {
            field: "sweep_range",
            value: if lo >= hi { hi } else { lo },
            domain: "0 <= lo < hi <= 1",
        });
    }
    if count < 2 {
        return Err(Error::Domain { field: "count", value: count as f64, domain: "at least 2" });
    }
    let cols = columns(kind);
    let rows = exec.map_range(count, |i| {
        let eta = if i + 1 == count { hi } else { lo + (hi - lo) * i as f64 / (count - 1) as f64 };
        row_at(&cols, eta)
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { columns: column_names(kind), rows })
}
