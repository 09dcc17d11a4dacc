// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form results in the tight-coupling, high-temperature regime
//! (λ ≫ Γ n, n ≈ k_B T / ħω), expressed through τ = T_c/T_h and γ = Γ_h/Γ_c.

mod bounds;
pub mod literature;
mod optimum;
mod ratios;
mod reduced;

pub use bounds::{emef_bounds, eta_ab, EfficiencyBounds};
pub use optimum::{
    efficiency_at_max_power, emef, optimal_frequencies, optimal_frequency, optimal_ratio, optimum, optimum_values,
    FixedFrequency, ObjectiveKind, OptimumPoint,
};
pub use ratios::{fractional_power_loss, power_ratio_eco_vs_maxpower, ratio_eco_over_power};
pub use reduced::{reduced_eco, reduced_heat, reduced_power, Asymmetry, ReducedParams};
