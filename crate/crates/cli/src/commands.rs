// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! The four subcommands. Each prints its report to `stdout` and returns it.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use ssd_core::engine::{eco_exact, evaluate, EngineParams, Observables};
use ssd_core::high_temp::{
    optimum, reduced_eco, reduced_power, Asymmetry, FixedFrequency, ObjectiveKind, OptimumPoint, ReducedParams,
};
use ssd_core::numeric::{
    maximize_scalar, maximize_surface_from_grid, scan_grid, ScalarBracket, SurfaceBounds, SurfaceOptions,
    SurfaceResult, DEFAULT_COARSE_N, DEFAULT_REFINE_TOL, DEFAULT_SCALAR_TOL,
};
use ssd_core::sweep::{sweep, SweepTable};
use ssd_core::Execution;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{sidecar_path, to_csv, to_json, write_file};

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub params: EngineParams,
    #[serde(flatten)]
    pub observables: Observables,
    pub tau: f64,
    pub gamma: f64,
    pub eta_carnot: f64,
    pub n_h: f64,
    pub n_c: f64,
    pub first_law_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OptimizeReport {
    /// "ef" or "power".
    pub objective: String,
    /// "wh" or "wc".
    pub fix: String,
    pub tau: f64,
    /// A number, or "zero" / "infinite" for the limiting branches.
    pub gamma: Value,
    pub fixed_value: f64,
    pub rate: f64,
    pub closed_form: OptimumPoint,
    pub numeric: OptimumPoint,
    /// |numeric − closed form| / closed form, for the free frequency.
    pub relative_difference: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceReport {
    /// Engine parameters at the located maximum.
    pub params: EngineParams,
    pub bounds: SurfaceBounds,
    #[serde(flatten)]
    pub result: SurfaceResult,
}

#[derive(Serialize)]
struct Metadata<'a, S: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    data: String,
    columns: &'a [String],
    rows: usize,
    precision: usize,
    config: &'a RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    summary: Option<S>,
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    stdout.write_all(text.as_bytes()).map_err(|e| CliError::Validation(format!("cannot write to standard output: {e}")))
}

/// Write a CSV file and its metadata sidecar.
fn write_table<S: Serialize>(
    path: &Path,
    command: &'static str,
    columns: &[String],
    rows: &[Vec<f64>],
    cfg: &RunConfig,
    summary: Option<S>,
) -> Result<(), CliError> {
    let precision = cfg.precision()?;
    write_file(path, &to_csv(columns, rows, precision)?)?;
    let meta = Metadata {
        tool: "ssd-engine",
        version: env!("CARGO_PKG_VERSION"),
        command,
        data: path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default(),
        columns,
        rows: rows.len(),
        precision,
        config: cfg,
        summary,
    };
    write_file(&sidecar_path(path), &to_json(&meta))
}

/// Evaluate the exact engine at one operating point.
pub fn cmd_eval(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<EvalReport, CliError> {
    let p = cfg.engine_params()?;
    let ev = evaluate(&p)?;
    let report = EvalReport {
        params: p,
        observables: ev.observables,
        tau: p.tau(),
        gamma: p.gamma(),
        eta_carnot: p.carnot(),
        n_h: ev.occupations.0,
        n_c: ev.occupations.1,
        first_law_residual: ev.first_law_residual,
    };
    let text = to_json(&report);
    if let Some(path) = &cfg.output_path {
        write_file(path, &text)?;
    }
    emit(stdout, &text)?;
    Ok(report)
}

fn gamma_value(a: Asymmetry) -> Value {
    match a {
        Asymmetry::Finite(g) => json!(g),
        Asymmetry::ZeroLimit => json!("zero"),
        Asymmetry::InfiniteLimit => json!("infinite"),
    }
}

fn point_at(obj: ObjectiveKind, w_h: f64, w_c: f64, r: &ReducedParams, rate: f64, free: f64) -> OptimumPoint {
    let power = reduced_power(w_h, w_c, r, rate);
    let eco = reduced_eco(w_h, w_c, r, rate);
    OptimumPoint {
        free_frequency: free,
        objective_value: match obj {
            ObjectiveKind::EcologicalFunction => eco,
            ObjectiveKind::Power => power,
        },
        efficiency: 1.0 - w_c / w_h,
        companion_power: power,
        companion_eco: eco,
    }
}

/// One-frequency optimum of the high-temperature objectives, closed form
/// next to a numeric maximization of the same reduced objective.
pub fn cmd_optimize(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<OptimizeReport, CliError> {
    let obj = cfg.objective()?;
    let fix = cfg.fix()?;
    let r = cfg.reduced_params()?;
    let rate = cfg.rate.unwrap_or(1.0);
    let fixed_value = cfg
        .fixed_value
        .or(match fix {
            Some(FixedFrequency::FixWh) => cfg.w_h,
            Some(FixedFrequency::FixWc) => cfg.w_c,
            None => None,
        })
        .unwrap_or(1.0);
    let closed = optimum(obj, fix, fixed_value, &r, rate)?;
    let fix = fix.expect("joint optimization is refused above");

    let place = |x: f64| match fix {
        FixedFrequency::FixWh => (fixed_value, x),
        FixedFrequency::FixWc => (x, fixed_value),
    };
    let bracket = match fix {
        FixedFrequency::FixWh => ScalarBracket::new(r.tau * fixed_value, fixed_value)?,
        FixedFrequency::FixWc => ScalarBracket::new(fixed_value, fixed_value / r.tau)?,
    };
    let found = maximize_scalar(
        |x| {
            let (w_h, w_c) = place(x);
            point_at(obj, w_h, w_c, &r, rate, x).objective_value
        },
        bracket,
        DEFAULT_SCALAR_TOL,
    )?;
    let (w_h, w_c) = place(found.argmax);
    let numeric = point_at(obj, w_h, w_c, &r, rate, found.argmax);

    let report = OptimizeReport {
        objective: obj.to_string(),
        fix: fix.to_string(),
        tau: r.tau,
        gamma: gamma_value(r.gamma),
        fixed_value,
        rate,
        closed_form: closed,
        numeric,
        relative_difference: (numeric.free_frequency - closed.free_frequency).abs() / closed.free_frequency.abs(),
    };
    let text = to_json(&report);
    if let Some(path) = &cfg.output_path {
        write_file(path, &text)?;
    }
    emit(stdout, &text)?;
    Ok(report)
}

/// Tabulate one of the efficiency / power-ratio families against η_C.
///
/// Writes the CSV to `output_path` (with a metadata sidecar) or, without
/// one, to `stdout`.
pub fn cmd_sweep(cfg: &RunConfig, exec: Execution, stdout: &mut dyn Write) -> Result<SweepTable, CliError> {
    let kind = cfg.sweep_kind()?;
    let (lo, hi, count) = cfg.sweep_range();
    let precision = cfg.precision()?;
    let table = sweep(kind, lo, hi, count, exec)?;
    match &cfg.output_path {
        Some(path) => write_table::<()>(path, "sweep", &table.columns, &table.rows, cfg, None)?,
        None => emit(stdout, &to_csv(&table.columns, &table.rows, precision)?)?,
    }
    Ok(table)
}

pub const SURFACE_COLUMNS: [&str; 3] = ["w_h", "w_c", "eco"];

/// Exact EF on a frequency grid and its located maximum.
///
/// The summary goes to `stdout`; the grid goes to `output_path` when set.
pub fn cmd_surface(cfg: &RunConfig, exec: Execution, stdout: &mut dyn Write) -> Result<SurfaceReport, CliError> {
    let p = cfg.engine_params_without_frequencies()?;
    let bounds = cfg.surface_bounds()?;
    cfg.precision()?;
    let opts = SurfaceOptions {
        coarse_n: cfg.grid.unwrap_or(DEFAULT_COARSE_N),
        refine_tol: cfg.refine_tol.unwrap_or(DEFAULT_REFINE_TOL),
        execution: exec,
    };
    let f = |w_h: f64, w_c: f64| eco_exact(&p.with_frequencies(w_h, w_c)).unwrap_or(f64::NAN);
    let grid = scan_grid(&f, &bounds, opts.coarse_n, exec)?;
    let result = maximize_surface_from_grid(&f, &bounds, &opts, &grid)?;
    let report = SurfaceReport { params: p.with_frequencies(result.w_h_star, result.w_c_star), bounds, result };
    if let Some(path) = &cfg.output_path {
        let columns: Vec<String> = SURFACE_COLUMNS.iter().map(|c| c.to_string()).collect();
        let rows: Vec<Vec<f64>> = grid.iter().map(|s| vec![s.w_h, s.w_c, s.value]).collect();
        write_table(path, "surface", &columns, &rows, cfg, Some(&report))?;
    }
    emit(stdout, &to_json(&report))?;
    Ok(report)
}
