// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{field} must be positive (got {value})")]
    NonPositive { field: &'static str, value: f64 },

    #[error("{field} must be finite (got {value})")]
    NonFinite { field: &'static str, value: f64 },

    #[error("{field} = {value} is outside {domain}")]
    Domain { field: &'static str, value: f64, domain: &'static str },

    #[error("occupation number underflows to zero at hbar*w/kT = {ratio}")]
    OccupationUnderflow { ratio: f64 },

    #[error("singular linear system at pivot column {column}")]
    Singular { column: usize },

    #[error("ratio undefined: power at the optimum is {power}")]
    UndefinedRatio { power: f64 },

    #[error(
        "simultaneous optimization of both frequencies in the high-temperature limit has only the \
         trivial solution w_c = w_h = 0; fix one frequency, or maximize the exact surface instead"
    )]
    TrivialJointOptimum,

    #[error("invalid bracket: need 0 < lo < hi (got lo = {lo}, hi = {hi})")]
    InvalidBracket { lo: f64, hi: f64 },

    #[error("objective is not finite at {at:?}")]
    NonFiniteObjective { at: Vec<f64> },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },
}

impl Error {
    /// Input problems (as opposed to numeric failures).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NonPositive { .. }
                | Error::NonFinite { .. }
                | Error::Domain { .. }
                | Error::OccupationUnderflow { .. }
                | Error::TrivialJointOptimum
                | Error::InvalidBracket { .. }
        )
    }
}

pub(crate) fn positive(field: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFinite { field, value });
    }
    if value <= 0.0 {
        return Err(Error::NonPositive { field, value });
    }
    Ok(value)
}
