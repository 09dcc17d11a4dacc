// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Power bookkeeping at the optima: E/P, the fractional power loss
//! 1 − E/P, and the power at maximum EF relative to maximum power.

use super::optimum::{optimum_values, FixedFrequency, ObjectiveKind};
use super::reduced::ReducedParams;
use crate::error::{Error, Result};

/// R = E/P at the optimum of `obj`. Independent of the fixed frequency and Γ_h.
pub fn ratio_eco_over_power(obj: ObjectiveKind, fix: FixedFrequency, r: &ReducedParams) -> Result<f64> {
    let (e, p) = optimum_values(obj, fix, r, 1.0, 1.0)?;
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::UndefinedRatio { power: p });
    }
    Ok(e / p)
}

/// R′ = P_lost/P = 1 − E/P.
pub fn fractional_power_loss(obj: ObjectiveKind, fix: FixedFrequency, r: &ReducedParams) -> Result<f64> {
    Ok(1.0 - ratio_eco_over_power(obj, fix, r)?)
}

/// R̄ = P at maximum EF over maximum power, at the same fixed frequency.
pub fn power_ratio_eco_vs_maxpower(fix: FixedFrequency, r: &ReducedParams) -> Result<f64> {
    let (_, p_eco) = optimum_values(ObjectiveKind::EcologicalFunction, fix, r, 1.0, 1.0)?;
    let (_, p_max) = optimum_values(ObjectiveKind::Power, fix, r, 1.0, 1.0)?;
    if !(p_max > 0.0 && p_max.is_finite()) {
        return Err(Error::UndefinedRatio { power: p_max });
    }
    Ok(p_eco / p_max)
}
