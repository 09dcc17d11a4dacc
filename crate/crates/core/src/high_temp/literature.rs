// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Closed forms in their published shape, misprints included.
//!
//! Nothing in the computation pipeline calls into this module. It exists so
//! that tests and the acceptance suite can compare each published expression
//! against the substitution pipeline and show which ones hold.
//!
//! Known misprints, each confirmed against a direct numeric maximization:
//! * ω_h* for the EF at fixed ω_c has the bracket `γ + 2(1+γ)τ`; the
//!   stationary point has `γ + (2+γ)τ`.
//! * ω_c at maximum power for fixed ω_h has `+τ` in front of the root; the
//!   stationary point has `−τ`.
//! * The shorthands A, B (and D) carry `(2+τ)γ` where `(2+γ)τ` is needed.
//! * The γ → 0 power ratio at fixed ω_h is printed as a non-constant
//!   expression that exceeds 1; the substitution pipeline gives exactly 3/4.

use super::optimum::{FixedFrequency, ObjectiveKind};
use super::reduced::Asymmetry;

/// η at maximum EF, fixed ω_h: 1 + τ/γ − √((1+γ)τ[γ+(2+γ)τ])/(√2 γ).
pub fn emef_fixed_wh(tau: f64, gamma: f64) -> f64 {
    let root = ((1.0 + gamma) * tau * (gamma + (2.0 + gamma) * tau)).sqrt();
    1.0 + tau / gamma - root / (2f64.sqrt() * gamma)
}

/// η at maximum EF, fixed ω_c: [γ(1−τ²) + 2(1+γ)τ − √((1+γ)τ²(1+τ)[γ+(2+γ)τ])] / (γ + 2τ + 3γτ).
pub fn emef_fixed_wc(tau: f64, gamma: f64) -> f64 {
    let root = ((1.0 + gamma) * tau * tau * (1.0 + tau) * (gamma + (2.0 + gamma) * tau)).sqrt();
    (gamma * (1.0 - tau * tau) + 2.0 * (1.0 + gamma) * tau - root) / (gamma + 2.0 * tau + 3.0 * gamma * tau)
}

/// ω_c*/ω_h at maximum EF: (√(2τ(1+γ)[γ+(2+γ)τ]) − 2τ)/(2γ).
pub fn ef_ratio_fixed_wh(tau: f64, gamma: f64) -> f64 {
    ((2.0 * tau * (1.0 + gamma) * (gamma + (2.0 + gamma) * tau)).sqrt() - 2.0 * tau) / (2.0 * gamma)
}

/// ω_h*/ω_c at maximum EF as printed, bracket `γ + 2(1+γ)τ` (misprint).
pub fn ef_ratio_fixed_wc_misprint(tau: f64, gamma: f64) -> f64 {
    let root = ((1.0 + gamma) * (1.0 + tau) * (gamma + 2.0 * (1.0 + gamma) * tau)).sqrt();
    (root - gamma * (1.0 + tau)) / (tau * (1.0 + tau))
}

/// ω_c/ω_h at maximum power as printed, `[τ + √(τ(1+γ)(τ+γ))]/γ` (misprint).
pub fn power_ratio_fixed_wh_misprint(tau: f64, gamma: f64) -> f64 {
    (tau + (tau * (1.0 + gamma) * (tau + gamma)).sqrt()) / gamma
}

/// ω_h/ω_c at maximum power: [−γ + √((1+γ)(τ+γ))]/τ.
pub fn power_ratio_fixed_wc(tau: f64, gamma: f64) -> f64 {
    (-gamma + ((1.0 + gamma) * (tau + gamma)).sqrt()) / tau
}

/// Shorthand A as printed: √(2(1+γ)τ[γ+(2+τ)γ]).
pub fn a_misprint(tau: f64, gamma: f64) -> f64 {
    (2.0 * (1.0 + gamma) * tau * (gamma + (2.0 + tau) * gamma)).sqrt()
}

/// Shorthand A with the bracket of ω_c*: √(2(1+γ)τ[γ+(2+γ)τ]).
pub fn a_corrected(tau: f64, gamma: f64) -> f64 {
    (2.0 * (1.0 + gamma) * tau * (gamma + (2.0 + gamma) * tau)).sqrt()
}

/// Optimal EF at fixed ω_h, per unit ω_hΓ_h: 2(γ + 4τ + 3γτ − 2A)/(3γ²).
pub fn eco_star_fixed_wh(tau: f64, gamma: f64, a: f64) -> f64 {
    2.0 * (gamma + 4.0 * tau + 3.0 * gamma * tau - 2.0 * a) / (3.0 * gamma * gamma)
}

/// E/P at maximum EF, fixed ω_h: A/((1+γ)τ + A).
pub fn eco_ratio_fixed_wh(tau: f64, gamma: f64, a: f64) -> f64 {
    a / ((1.0 + gamma) * tau + a)
}

/// Shorthand B as printed: √((1+γ)(1+τ)[γ+(2+τ)γ]).
pub fn b_misprint(tau: f64, gamma: f64) -> f64 {
    ((1.0 + gamma) * (1.0 + tau) * (gamma + (2.0 + tau) * gamma)).sqrt()
}

/// Shorthand B with the bracket of ω_h*: √((1+γ)(1+τ)[γ+(2+γ)τ]).
pub fn b_corrected(tau: f64, gamma: f64) -> f64 {
    ((1.0 + gamma) * (1.0 + tau) * (gamma + (2.0 + gamma) * tau)).sqrt()
}

/// Optimal EF at fixed ω_c, per unit ω_cΓ_h: 2(1 + 3τ + 2γ(1+τ) − 2B)/(3τ).
pub fn eco_star_fixed_wc(tau: f64, gamma: f64, b: f64) -> f64 {
    2.0 * (1.0 + 3.0 * tau + 2.0 * gamma * (1.0 + tau) - 2.0 * b) / (3.0 * tau)
}

/// E/P at maximum EF, fixed ω_c: B/((1+γ)τ + B).
pub fn eco_ratio_fixed_wc(tau: f64, gamma: f64, b: f64) -> f64 {
    b / ((1.0 + gamma) * tau + b)
}

/// E/P at maximum power, fixed ω_h: 1 − C/(τ+γ), C = √(τ(1+γ)(τ+γ)).
pub fn power_point_ratio_fixed_wh(tau: f64, gamma: f64) -> f64 {
    1.0 - (tau * (1.0 + gamma) * (tau + gamma)).sqrt() / (tau + gamma)
}

/// Published γ-limit of E/P at the optimum of `obj`.
///
/// # Panics
/// If `limit` is `Asymmetry::Finite`.
pub fn eco_power_ratio_limit(obj: ObjectiveKind, fix: FixedFrequency, limit: Asymmetry, tau: f64) -> f64 {
    use Asymmetry::*;
    use FixedFrequency::*;
    use ObjectiveKind::*;

    let ab = (2.0 * (1.0 + tau)).sqrt() / (tau.sqrt() + (2.0 * (1.0 + tau)).sqrt());
    match (obj, fix, limit) {
        (EcologicalFunction, FixWh, ZeroLimit) => 2.0 / 3.0,
        (EcologicalFunction, FixWh, InfiniteLimit) => ab,
        (EcologicalFunction, FixWc, ZeroLimit) => ab,
        (EcologicalFunction, FixWc, InfiniteLimit) => (1.0 + tau) / (1.0 + 2.0 * tau),
        (Power, FixWh, ZeroLimit) => 0.0,
        (Power, FixWh, InfiniteLimit) => 1.0 - tau.sqrt(),
        (Power, FixWc, ZeroLimit) => 1.0 - tau.sqrt(),
        (Power, FixWc, InfiniteLimit) => 1.0 - tau,
        (_, _, Finite(_)) => panic!("eco_power_ratio_limit needs a limit, got {limit:?}"),
    }
}

/// Published γ-limit of the fractional power loss R′ = 1 − E/P.
///
/// # Panics
/// If `limit` is `Asymmetry::Finite`.
pub fn fractional_loss_limit(obj: ObjectiveKind, fix: FixedFrequency, limit: Asymmetry, tau: f64) -> f64 {
    use Asymmetry::*;
    use FixedFrequency::*;
    use ObjectiveKind::*;

    let ab = tau.sqrt() / (tau.sqrt() + (2.0 * (1.0 + tau)).sqrt());
    match (obj, fix, limit) {
        (EcologicalFunction, FixWh, ZeroLimit) => 1.0 / 3.0,
        (EcologicalFunction, FixWh, InfiniteLimit) => ab,
        (EcologicalFunction, FixWc, ZeroLimit) => ab,
        (EcologicalFunction, FixWc, InfiniteLimit) => tau / (1.0 + 2.0 * tau),
        (Power, FixWh, ZeroLimit) => 1.0,
        (Power, FixWh, InfiniteLimit) => tau.sqrt(),
        (Power, FixWc, ZeroLimit) => tau.sqrt(),
        (Power, FixWc, InfiniteLimit) => tau,
        (_, _, Finite(_)) => panic!("fractional_loss_limit needs a limit, got {limit:?}"),
    }
}

/// Published γ-limit of P at maximum EF over maximum power. The fixed-ω_h,
/// γ → 0 entry is the misprinted expression.
///
/// # Panics
/// If `limit` is `Asymmetry::Finite`.
pub fn power_ratio_limit(fix: FixedFrequency, limit: Asymmetry, tau: f64) -> f64 {
    use Asymmetry::*;
    use FixedFrequency::*;

    let wh_inf = (1.0 + tau - tau * (3.0 + tau) / (2.0 * tau * (1.0 + tau)).sqrt()) / (1.0 - tau.sqrt()).powi(2);
    match (fix, limit) {
        (FixWh, ZeroLimit) => {
            (1.0 + 3.0 * tau - tau * (3.0 + 5.0 * tau) / (1.0 + 3.0 * tau).sqrt())
                / (1.0 + 3.0 * tau - 2.0 * (2.0 * tau * (1.0 + tau)).sqrt())
        }
        (FixWh, InfiniteLimit) => wh_inf,
        (FixWc, ZeroLimit) => wh_inf,
        (FixWc, InfiniteLimit) => (1.0 + 2.0 * tau) / (1.0 + tau).powi(2),
        (_, Finite(_)) => panic!("power_ratio_limit needs a limit, got {limit:?}"),
    }
}
