// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::RunConfig;

#[derive(Debug, Parser)]
#[command(name = "ssd-engine", version, about = "Three-level maser heat engine: evaluation, optimization, sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the exact engine at one operating point (JSON on stdout).
    Eval {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        engine: EngineFlags,
    },
    /// Optimize one frequency in the high-temperature limit.
    Optimize {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        engine: EngineFlags,
        #[command(flatten)]
        opt: OptimizeFlags,
    },
    /// Tabulate efficiency or power-ratio curves against the Carnot efficiency.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sweep: SweepFlags,
    },
    /// Scan the exact ecological function over (w_h, w_c) and locate its maximum.
    Surface {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        engine: EngineFlags,
        #[command(flatten)]
        surface: SurfaceFlags,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Flat JSON configuration; flags override its values.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output file. Sweeps and surfaces also get a `.meta.json` sidecar.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Significant digits in CSV output, 6 to 17.
    #[arg(long, value_name = "N")]
    pub precision: Option<usize>,
    /// Evaluate on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct EngineFlags {
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_h: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t_h: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t_c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub w_h: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub w_c: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OptimizeFlags {
    /// Objective: ef | power.
    #[arg(long)]
    pub objective: Option<String>,
    /// Frequency held fixed: wh | wc.
    #[arg(long)]
    pub fix: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    /// Limiting branch instead of a finite gamma: zero | infinite.
    #[arg(long)]
    pub gamma_limit: Option<String>,
    /// Value of the fixed frequency (default: w_h or w_c, else 1).
    #[arg(long, allow_hyphen_values = true)]
    pub fixed_value: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub rate: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SweepFlags {
    /// fig2 | fig3 | fig4.
    #[arg(long)]
    pub kind: Option<String>,
    /// Lower end of the Carnot-efficiency range.
    #[arg(long, allow_hyphen_values = true)]
    pub lo: Option<f64>,
    /// Upper end of the Carnot-efficiency range.
    #[arg(long, allow_hyphen_values = true)]
    pub hi: Option<f64>,
    /// Number of rows, ends included.
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SurfaceFlags {
    /// Points per axis of the coarse grid.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    pub w_h_range: Option<Vec<f64>>,
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    pub w_c_range: Option<Vec<f64>>,
    /// Gradient-norm tolerance of the refinement.
    #[arg(long)]
    pub refine_tol: Option<f64>,
}

fn pair(v: Option<Vec<f64>>) -> Option<(f64, f64)> {
    v.map(|v| (v[0], v[1]))
}

impl Common {
    fn overrides(&self) -> RunConfig {
        RunConfig { output_path: self.out.clone(), precision: self.precision, ..Default::default() }
    }
}

impl EngineFlags {
    fn apply(&self, c: RunConfig) -> RunConfig {
        RunConfig {
            gamma_h: self.gamma_h,
            gamma_c: self.gamma_c,
            lambda: self.lambda,
            t_h: self.t_h,
            t_c: self.t_c,
            w_h: self.w_h,
            w_c: self.w_c,
            ..c
        }
    }
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Eval { common, .. }
            | Command::Optimize { common, .. }
            | Command::Sweep { common, .. }
            | Command::Surface { common, .. } => common,
        }
    }

    /// Flag values as a partial config; `base` supplies the sweep range
    /// components that were not given on the command line.
    pub fn overrides(&self, base: &RunConfig) -> RunConfig {
        let c = self.common().overrides();
        match self {
            Command::Eval { engine, .. } => engine.apply(c),
            Command::Optimize { engine, opt, .. } => RunConfig {
                objective: opt.objective.clone(),
                fix: opt.fix.clone(),
                tau: opt.tau,
                gamma: opt.gamma,
                gamma_limit: opt.gamma_limit.clone(),
                fixed_value: opt.fixed_value,
                rate: opt.rate,
                ..engine.apply(c)
            },
            Command::Sweep { sweep, .. } => {
                let given = sweep.lo.is_some() || sweep.hi.is_some() || sweep.count.is_some();
                let (lo, hi, count) = base.sweep_range();
                RunConfig {
                    kind: sweep.kind.clone(),
                    sweep_range: given
                        .then(|| (sweep.lo.unwrap_or(lo), sweep.hi.unwrap_or(hi), sweep.count.unwrap_or(count))),
                    ..c
                }
            }
            Command::Surface { engine, surface, .. } => RunConfig {
                grid: surface.grid,
                w_h_range: pair(surface.w_h_range.clone()),
                w_c_range: pair(surface.w_c_range.clone()),
                refine_tol: surface.refine_tol,
                ..engine.apply(c)
            },
        }
    }
}
