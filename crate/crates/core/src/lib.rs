// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Steady-state thermodynamics of a three-level quantum heat engine driven
//! by a resonant classical field between two thermal baths.
//!
//! - [`engine`]: exact steady state and heat/power fluxes.
//! - [`high_temp`]: reduced objectives and closed-form optima in the
//!   high-temperature, strong-field regime.
//! - [`numeric`]: scalar and two-frequency maximizers, finite differences.
//! - [`sweep`]: Carnot-efficiency tables of the closed-form results.

pub mod engine;
pub mod error;
pub mod high_temp;
pub mod linalg;
pub mod numeric;
pub mod par;
pub mod sweep;

pub use error::{Error, Result};
pub use par::Execution;
