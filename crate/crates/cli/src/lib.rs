// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for `ssd-core`: single-point evaluation,
//! high-temperature optimization, η_C sweeps and exact EF surfaces.
//!
//! Exit status: 0 on success, 2 for invalid input, 3 for numeric failure.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::io::Write;

use ssd_core::Execution;

pub use args::{Cli, Command};
pub use config::RunConfig;
pub use error::{CliError, EXIT_NUMERIC, EXIT_OK, EXIT_VALIDATION};

/// Resolve the configuration of `cmd`: file values, then flags.
pub fn resolve(cmd: &Command) -> Result<RunConfig, CliError> {
    let base = match &cmd.common().config {
        Some(path) => RunConfig::from_path(path)?,
        None => RunConfig::default(),
    };
    let flags = cmd.overrides(&base);
    let cfg = base.overlay(flags);
    cfg.precision()?;
    Ok(cfg)
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let cfg = resolve(&cli.command)?;
    let exec = if cli.command.common().sequential { Execution::Sequential } else { Execution::Parallel };
    match &cli.command {
        Command::Eval { .. } => commands::cmd_eval(&cfg, stdout).map(drop),
        Command::Optimize { .. } => commands::cmd_optimize(&cfg, stdout).map(drop),
        Command::Sweep { .. } => commands::cmd_sweep(&cfg, exec, stdout).map(drop),
        Command::Surface { .. } => commands::cmd_surface(&cfg, exec, stdout).map(drop),
    }
}
