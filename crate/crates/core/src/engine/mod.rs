// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact steady state and thermodynamic observables of the three-level
//! (Scovil–Schulz-DuBois) laser heat engine.

mod observables;
mod params;
mod steady;

pub use observables::{eco_exact, evaluate, observables, power_exact, Evaluation, Observables};
pub use params::{bose_occupation, EngineParams, OccupationPair};
pub use steady::{
    relative_residuals, residuals, steady_state_closed_form, steady_state_numeric, Coherence, SteadyState,
};
