// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! One-parameter optima of the reduced power and ecological function.
//!
//! Each optimal frequency is written as a ratio of the free to the fixed
//! frequency. The finite-γ expressions are rationalized so that no
//! difference of nearly equal square roots appears; the γ → 0 and γ → ∞
//! cases have their own branches.
//!
//! Values at an optimum are always obtained by substituting the optimal
//! frequency back into [`reduced_power`] and [`reduced_eco`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::reduced::{reduced_eco, reduced_power, Asymmetry, ReducedParams};
use crate::error::{positive, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ObjectiveKind {
    EcologicalFunction,
    Power,
}

/// Which transition frequency is held fixed while the other is optimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FixedFrequency {
    FixWh,
    FixWc,
}

impl FromStr for ObjectiveKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ef" => Ok(ObjectiveKind::EcologicalFunction),
            "power" => Ok(ObjectiveKind::Power),
            other => Err(format!("unknown objective {other:?} (expected \"ef\" or \"power\")")),
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectiveKind::EcologicalFunction => "ef",
            ObjectiveKind::Power => "power",
        })
    }
}

impl FromStr for FixedFrequency {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "wh" => Ok(FixedFrequency::FixWh),
            "wc" => Ok(FixedFrequency::FixWc),
            other => Err(format!("unknown fixed frequency {other:?} (expected \"wh\" or \"wc\")")),
        }
    }
}

impl fmt::Display for FixedFrequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixedFrequency::FixWh => "wh",
            FixedFrequency::FixWc => "wc",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimumPoint {
    /// Optimal value of the frequency that is not held fixed.
    pub free_frequency: f64,
    pub objective_value: f64,
    pub efficiency: f64,
    pub companion_power: f64,
    pub companion_eco: f64,
}

/// Optimal free/fixed frequency ratio: ω_c*/ω_h for `FixWh`, ω_h*/ω_c for `FixWc`.
pub fn optimal_ratio(obj: ObjectiveKind, fix: FixedFrequency, r: &ReducedParams) -> f64 {
    use Asymmetry::*;
    use FixedFrequency::*;
    use ObjectiveKind::*;

    let t = r.tau;
    match (obj, fix, r.gamma) {
        (EcologicalFunction, FixWh, Finite(g)) => {
            let s = (2.0 * t * (1.0 + g) * (g + (2.0 + g) * t)).sqrt();
            t * (1.0 + 3.0 * t + g * (1.0 + t)) / (s + 2.0 * t)
        }
        (EcologicalFunction, FixWh, ZeroLimit) => (1.0 + 3.0 * t) / 4.0,
        (EcologicalFunction, FixWh, InfiniteLimit) => (t * (1.0 + t) / 2.0).sqrt(),

        (EcologicalFunction, FixWc, Finite(g)) => {
            let s = ((1.0 + g) * (1.0 + t) * (g + (2.0 + g) * t)).sqrt();
            (g + 2.0 * t + 3.0 * g * t) / (t * (s + g * (1.0 + t)))
        }
        (EcologicalFunction, FixWc, ZeroLimit) => (2.0 / (t * (1.0 + t))).sqrt(),
        (EcologicalFunction, FixWc, InfiniteLimit) => (1.0 + 3.0 * t) / (2.0 * t * (1.0 + t)),

        (Power, FixWh, Finite(g)) => {
            let c = (t * (1.0 + g) * (t + g)).sqrt();
            t * (1.0 + t + g) / (t + c)
        }
        (Power, FixWh, ZeroLimit) => (1.0 + t) / 2.0,
        (Power, FixWh, InfiniteLimit) => t.sqrt(),

        (Power, FixWc, Finite(g)) => {
            let d = ((1.0 + g) * (t + g)).sqrt();
            (t + g + g * t) / (t * (g + d))
        }
        (Power, FixWc, ZeroLimit) => 1.0 / t.sqrt(),
        (Power, FixWc, InfiniteLimit) => (1.0 + t) / (2.0 * t),
    }
}

/// Closed-form optimal value of the free frequency.
pub fn optimal_frequency(obj: ObjectiveKind, fix: FixedFrequency, fixed_value: f64, r: &ReducedParams) -> Result<f64> {
    positive("fixed_value", fixed_value)?;
    Ok(fixed_value * optimal_ratio(obj, fix, r))
}

/// (ω_h, ω_c) at the optimum.
pub fn optimal_frequencies(
    obj: ObjectiveKind,
    fix: FixedFrequency,
    fixed_value: f64,
    r: &ReducedParams,
) -> Result<(f64, f64)> {
    let free = optimal_frequency(obj, fix, fixed_value, r)?;
    Ok(match fix {
        FixedFrequency::FixWh => (fixed_value, free),
        FixedFrequency::FixWc => (free, fixed_value),
    })
}

/// Optimize `obj` over one frequency with the other fixed at `fixed_value`.
///
/// `fix = None` asks for a joint optimization of both frequencies, which in
/// the reduced model only has the trivial solution ω_c = ω_h = 0 and is
/// refused.
pub fn optimum(
    obj: ObjectiveKind,
    fix: Option<FixedFrequency>,
    fixed_value: f64,
    r: &ReducedParams,
    rate: f64,
) -> Result<OptimumPoint> {
    let fix = fix.ok_or(Error::TrivialJointOptimum)?;
    positive("rate", rate)?;
    let (w_h, w_c) = optimal_frequencies(obj, fix, fixed_value, r)?;
    let power = reduced_power(w_h, w_c, r, rate);
    let eco = reduced_eco(w_h, w_c, r, rate);
    Ok(OptimumPoint {
        free_frequency: match fix {
            FixedFrequency::FixWh => w_c,
            FixedFrequency::FixWc => w_h,
        },
        objective_value: match obj {
            ObjectiveKind::EcologicalFunction => eco,
            ObjectiveKind::Power => power,
        },
        efficiency: 1.0 - w_c / w_h,
        companion_power: power,
        companion_eco: eco,
    })
}

/// (E, P) at the optimum of `obj`.
pub fn optimum_values(
    obj: ObjectiveKind,
    fix: FixedFrequency,
    r: &ReducedParams,
    fixed_value: f64,
    rate: f64,
) -> Result<(f64, f64)> {
    let o = optimum(obj, Some(fix), fixed_value, r, rate)?;
    Ok((o.companion_eco, o.companion_power))
}

fn efficiency_from_ratio(fix: FixedFrequency, ratio: f64) -> f64 {
    match fix {
        FixedFrequency::FixWh => 1.0 - ratio,
        FixedFrequency::FixWc => 1.0 - 1.0 / ratio,
    }
}

/// Efficiency at maximum ecological function.
pub fn emef(fix: FixedFrequency, r: &ReducedParams) -> f64 {
    efficiency_from_ratio(fix, optimal_ratio(ObjectiveKind::EcologicalFunction, fix, r))
}

/// Efficiency at maximum power. For γ → ∞ with ω_h fixed this is 1 − √τ.
pub fn efficiency_at_max_power(fix: FixedFrequency, r: &ReducedParams) -> f64 {
    efficiency_from_ratio(fix, optimal_ratio(ObjectiveKind::Power, fix, r))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use FixedFrequency::*;
    use ObjectiveKind::*;

    const ALL: [(ObjectiveKind, FixedFrequency); 4] =
        [(EcologicalFunction, FixWh), (EcologicalFunction, FixWc), (Power, FixWh), (Power, FixWc)];

    #[test]
    fn ef_fix_wh_hand_value() {
        let r = ReducedParams::new(0.5, 1.0).unwrap();
        let w = optimal_frequency(EcologicalFunction, FixWh, 1.0, &r).unwrap();
        assert_relative_eq!(w, (5f64.sqrt() - 1.0) / 2.0, max_relative = 1e-15);
        assert_relative_eq!(emef(FixWh, &r), 1.5 - 2.5f64.sqrt() / 2f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn ef_fix_wc_value() {
        // mpmath evaluation of the (γ + 2τ + 3γτ) form at τ = 0.5, γ = 1
        let r = ReducedParams::new(0.5, 1.0).unwrap();
        assert_relative_eq!(emef(FixWc, &r), 0.39448388749630991896, max_relative = 1e-14);
    }

    #[test]
    fn curzon_ahlborn_limit() {
        let r = ReducedParams::infinite_limit(0.25).unwrap();
        assert_eq!(optimal_frequency(Power, FixWh, 1.0, &r).unwrap(), 0.5);
        assert_eq!(efficiency_at_max_power(FixWh, &r), 0.5);
        let big = ReducedParams::new(0.25, 1e12).unwrap();
        assert_relative_eq!(optimal_ratio(Power, FixWh, &big), 0.5, max_relative = 1e-6);
    }

    #[test]
    fn near_equilibrium_all_optima_collapse() {
        let r = ReducedParams::new(1.0 - 1e-9, 1.0).unwrap();
        for (o, f) in ALL {
            assert_relative_eq!(optimal_ratio(o, f, &r), 1.0, max_relative = 1e-8);
        }
    }

    #[test]
    fn optima_lie_in_the_engine_window() {
        for &t in &[0.05, 0.3, 0.7, 0.95] {
            for g in [
                Asymmetry::ZeroLimit,
                Asymmetry::Finite(0.01),
                Asymmetry::Finite(1.0),
                Asymmetry::Finite(100.0),
                Asymmetry::InfiniteLimit,
            ] {
                let r = ReducedParams::with_asymmetry(t, g).unwrap();
                for (o, f) in ALL {
                    let x = optimal_ratio(o, f, &r);
                    match f {
                        FixWh => assert!(x > t && x < 1.0, "{o:?} {f:?} {g:?} {t} {x}"),
                        FixWc => assert!(x > 1.0 && x < 1.0 / t, "{o:?} {f:?} {g:?} {t} {x}"),
                    }
                }
            }
        }
    }

    #[test]
    fn limit_branches_match_extreme_finite_gamma() {
        for &t in &[0.1, 0.5, 0.9] {
            let z = ReducedParams::zero_limit(t).unwrap();
            let i = ReducedParams::infinite_limit(t).unwrap();
            let small = ReducedParams::new(t, 1e-10).unwrap();
            let big = ReducedParams::new(t, 1e10).unwrap();
            for (o, f) in ALL {
                assert_relative_eq!(optimal_ratio(o, f, &z), optimal_ratio(o, f, &small), max_relative = 1e-8);
                assert_relative_eq!(optimal_ratio(o, f, &i), optimal_ratio(o, f, &big), max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn values_scale_linearly() {
        let r = ReducedParams::new(0.4, 3.0).unwrap();
        for (o, f) in ALL {
            let (e1, p1) = optimum_values(o, f, &r, 1.0, 1.0).unwrap();
            let (e2, p2) = optimum_values(o, f, &r, 2.5, 3.0).unwrap();
            assert_relative_eq!(e2, 7.5 * e1, max_relative = 1e-13);
            assert_relative_eq!(p2, 7.5 * p1, max_relative = 1e-13);
        }
    }

    #[test]
    fn ef_fix_wh_substitution_value() {
        // ω_c* = (√5 − 1)/2 substituted into the reduced objectives by hand
        let r = ReducedParams::new(0.5, 1.0).unwrap();
        let x = (5f64.sqrt() - 1.0) / 2.0;
        let (e, p) = optimum_values(EcologicalFunction, FixWh, &r, 1.0, 1.0).unwrap();
        assert_relative_eq!(p, 2.0 * (1.0 - x) * (x - 0.5) / (3.0 * (x + 0.5)), max_relative = 1e-14);
        assert_relative_eq!(e, 2.0 * (x - 0.5) * (2.0 * (1.0 - x) - 0.5) / (3.0 * (x + 0.5)), max_relative = 1e-14);
        assert_relative_eq!(p, 0.026883483166820894, max_relative = 1e-12);
        assert_relative_eq!(e, 0.018576030000280404, max_relative = 1e-12);
    }

    #[test]
    fn power_fix_wh_zero_gamma_has_zero_eco() {
        let r = ReducedParams::zero_limit(0.3).unwrap();
        let (e, p) = optimum_values(Power, FixWh, &r, 1.0, 1.0).unwrap();
        assert!(p > 0.0);
        assert!(e.abs() < 1e-16);
    }

    #[test]
    fn joint_optimization_refused() {
        let r = ReducedParams::new(0.5, 1.0).unwrap();
        let err = optimum(EcologicalFunction, None, 1.0, &r, 1.0).unwrap_err();
        assert_eq!(err, Error::TrivialJointOptimum);
        assert!(err.to_string().contains("trivial solution"));
    }

    #[test]
    fn parse_names() {
        assert_eq!("ef".parse::<ObjectiveKind>().unwrap(), EcologicalFunction);
        assert_eq!("power".parse::<ObjectiveKind>().unwrap(), Power);
        assert_eq!("wc".parse::<FixedFrequency>().unwrap(), FixWc);
        assert!("both".parse::<FixedFrequency>().is_err());
        assert_eq!(FixWh.to_string(), "wh");
    }
}
