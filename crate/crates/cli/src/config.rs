// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Run configuration: a flat JSON document, overridden field by field by
//! command-line flags.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use ssd_core::engine::EngineParams;
use ssd_core::high_temp::{Asymmetry, FixedFrequency, ObjectiveKind, ReducedParams};
use ssd_core::numeric::SurfaceBounds;
use ssd_core::sweep::SweepKind;

use crate::error::CliError;

pub const DEFAULT_PRECISION: usize = 12;
pub const PRECISION_RANGE: (usize, usize) = (6, 17);
pub const DEFAULT_SWEEP_RANGE: (f64, f64, usize) = (0.0, 1.0, 101);
pub const DEFAULT_W_H_RANGE: (f64, f64) = (0.1, 60.0);
pub const DEFAULT_W_C_RANGE: (f64, f64) = (0.1, 30.0);

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_h: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_h: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_h: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_c: Option<f64>,

    /// T_c / T_h for the high-temperature commands.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    /// Γ_h / Γ_c for the high-temperature commands.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    /// "zero" or "infinite": use a limiting branch instead of a finite γ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_limit: Option<String>,
    /// "ef" or "power".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<String>,
    /// "wh" or "wc".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_value: Option<f64>,
    /// Overall rate factor of the reduced objectives.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rate: Option<f64>,

    /// "fig2", "fig3" or "fig4".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep_variable: Option<String>,
    /// (lo, hi, count) of the swept variable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep_range: Option<(f64, f64, usize)>,

    /// Points per axis of the coarse surface grid.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_h_range: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_c_range: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refine_tol: Option<f64>,

    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    /// Significant digits of floats in CSV output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<usize>,
}

macro_rules! overlay {
    ($base:ident, $top:ident; $($field:ident),* $(,)?) => {
        $( if $top.$field.is_some() { $base.$field = $top.$field; } )*
    };
}

fn required<T: Clone>(value: &Option<T>, field: &str) -> Result<T, CliError> {
    value.clone().ok_or_else(|| CliError::missing(field))
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Validation(format!("invalid config: {e}")))
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io("read config", path, e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("invalid config {}: {e}", path.display())))
    }

    /// `self` with every field that `top` sets replaced by `top`'s value.
    pub fn overlay(mut self, top: RunConfig) -> Self {
        overlay!(self, top;
            gamma_h, gamma_c, lambda, t_h, t_c, w_h, w_c,
            tau, gamma, gamma_limit, objective, fix, fixed_value, rate,
            kind, sweep_variable, sweep_range,
            grid, w_h_range, w_c_range, refine_tol,
            output_path, precision,
        );
        self
    }

    pub fn precision(&self) -> Result<usize, CliError> {
        let p = self.precision.unwrap_or(DEFAULT_PRECISION);
        let (lo, hi) = PRECISION_RANGE;
        if !(lo..=hi).contains(&p) {
            return Err(CliError::Validation(format!("precision must be in [{lo}, {hi}] (got {p})")));
        }
        Ok(p)
    }

    /// Full engine parameters; every field is required.
    pub fn engine_params(&self) -> Result<EngineParams, CliError> {
        let p = EngineParams {
            gamma_h: required(&self.gamma_h, "gamma_h")?,
            gamma_c: required(&self.gamma_c, "gamma_c")?,
            lam: required(&self.lambda, "lambda")?,
            t_h: required(&self.t_h, "t_h")?,
            t_c: required(&self.t_c, "t_c")?,
            w_h: required(&self.w_h, "w_h")?,
            w_c: required(&self.w_c, "w_c")?,
        };
        p.validate()?;
        Ok(p)
    }

    /// Engine parameters for a frequency scan; `w_h` and `w_c` are ignored.
    pub fn engine_params_without_frequencies(&self) -> Result<EngineParams, CliError> {
        RunConfig { w_h: Some(1.0), w_c: Some(1.0), ..self.clone() }.engine_params()
    }

    /// τ and γ, taken from `tau`/`gamma`/`gamma_limit` or derived from the
    /// temperatures and rates.
    pub fn reduced_params(&self) -> Result<ReducedParams, CliError> {
        let tau = match (self.tau, self.t_h, self.t_c) {
            (Some(tau), _, _) => tau,
            (None, Some(t_h), Some(t_c)) => t_c / t_h,
            _ => return Err(CliError::missing("tau")),
        };
        let gamma = match (self.gamma_limit.as_deref(), self.gamma) {
            (Some(_), Some(_)) => {
                return Err(CliError::Validation("gamma and gamma_limit are mutually exclusive".into()))
            }
            (Some("zero"), None) => Asymmetry::ZeroLimit,
            (Some("infinite"), None) => Asymmetry::InfiniteLimit,
            (Some(other), None) => {
                return Err(CliError::Validation(format!(
                    "unknown gamma_limit {other:?} (expected \"zero\" or \"infinite\")"
                )))
            }
            (None, Some(g)) => Asymmetry::Finite(g),
            (None, None) => match (self.gamma_h, self.gamma_c) {
                (Some(h), Some(c)) => Asymmetry::Finite(h / c),
                _ => return Err(CliError::missing("gamma")),
            },
        };
        Ok(ReducedParams::with_asymmetry(tau, gamma)?)
    }

    pub fn objective(&self) -> Result<ObjectiveKind, CliError> {
        required(&self.objective, "objective")?.parse().map_err(CliError::Validation)
    }

    /// `None` for "both", which asks for a joint optimization.
    pub fn fix(&self) -> Result<Option<FixedFrequency>, CliError> {
        match required(&self.fix, "fix")?.as_str() {
            "both" => Ok(None),
            s => s.parse().map(Some).map_err(CliError::Validation),
        }
    }

    pub fn sweep_kind(&self) -> Result<SweepKind, CliError> {
        if let Some(v) = self.sweep_variable.as_deref() {
            if v != "eta_C" {
                return Err(CliError::Validation(format!("unknown sweep_variable {v:?} (only \"eta_C\" is swept)")));
            }
        }
        required(&self.kind, "kind")?.parse().map_err(CliError::Validation)
    }

    pub fn sweep_range(&self) -> (f64, f64, usize) {
        self.sweep_range.unwrap_or(DEFAULT_SWEEP_RANGE)
    }

    pub fn surface_bounds(&self) -> Result<SurfaceBounds, CliError> {
        Ok(SurfaceBounds::new(
            self.w_h_range.unwrap_or(DEFAULT_W_H_RANGE),
            self.w_c_range.unwrap_or(DEFAULT_W_C_RANGE),
        )?)
    }
}
