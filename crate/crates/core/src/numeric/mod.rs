// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Numeric maximization and finite differences.

pub mod gradient;
pub mod scalar;
pub mod surface;

pub use gradient::{default_step, finite_diff_gradient, gradient, second_derivative};
pub use scalar::{maximize_scalar, ScalarBracket, ScalarMax, DEFAULT_SCALAR_TOL};
pub use surface::{
    grid_argmax, maximize_surface, maximize_surface_from_grid, scan_grid, GridSample, SurfaceBounds, SurfaceOptions,
    SurfaceResult, DEFAULT_COARSE_N, DEFAULT_REFINE_TOL, MIN_RESOLVED_N,
};
