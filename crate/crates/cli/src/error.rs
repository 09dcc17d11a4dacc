// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use thiserror::Error;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for bad input: parameters, config files, output paths.
pub const EXIT_VALIDATION: i32 = 2;
/// Exit status for a failed computation.
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }

    pub(crate) fn missing(field: &str) -> Self {
        CliError::Validation(format!("missing parameter {field}"))
    }

    pub(crate) fn io(action: &str, path: &Path, err: std::io::Error) -> Self {
        CliError::Validation(format!("cannot {action} {}: {err}", path.display()))
    }
}

impl From<ssd_core::Error> for CliError {
    fn from(e: ssd_core::Error) -> Self {
        if e.is_validation() {
            CliError::Validation(e.to_string())
        } else {
            CliError::Numeric(e.to_string())
        }
    }
}
