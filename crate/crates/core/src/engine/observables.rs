// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::params::{EngineParams, OccupationPair};
use super::steady::{closed_form_denominator, steady_state_numeric, SteadyState};
use crate::error::Result;

/// Thermodynamic fluxes at one operating point.
///
/// `qdot_c` is positive when heat flows into the cold bath.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Observables {
    pub power: f64,
    pub qdot_h: f64,
    pub qdot_c: f64,
    pub efficiency: f64,
    pub entropy_rate: f64,
    pub eco: f64,
}

/// Everything computed on the way to [`Observables`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Evaluation {
    pub occupations: (f64, f64),
    pub steady: SteadyState,
    pub observables: Observables,
    /// |P − Q̇_h + Q̇_c| over the gross size of the terms in the balance.
    pub first_law_residual: f64,
}

/// Solve the steady state and evaluate every flux.
///
/// Power and Q̇_h come from the coherence; Q̇_c comes from the cold
/// dissipator acting on the populations, so the first law is a check.
pub fn evaluate(p: &EngineParams) -> Result<Evaluation> {
    let n = p.occupations()?;
    let s = steady_state_numeric(p)?;
    let (obs, gross_c) = fluxes(p, &n, &s);
    let residual = (obs.power - obs.qdot_h + obs.qdot_c).abs();
    let scale = obs.power.abs() + obs.qdot_h.abs() + gross_c;
    Ok(Evaluation {
        occupations: (n.n_h, n.n_c),
        steady: s,
        observables: obs,
        first_law_residual: if scale == 0.0 { 0.0 } else { residual / scale },
    })
}

pub fn observables(p: &EngineParams) -> Result<Observables> {
    Ok(evaluate(p)?.observables)
}

fn fluxes(p: &EngineParams, n: &OccupationPair, s: &SteadyState) -> (Observables, f64) {
    // i(ρ01 − ρ10) = 2 Im ρ10
    let flow = 2.0 * p.lam * s.rho_10_im;
    let power = (p.w_h - p.w_c) * flow;
    let qdot_h = p.w_h * flow;

    // −Tr(L_c[ρ] H_0): only the |0⟩ and |g⟩ populations change under L_c
    let down = (n.n_c + 1.0) * s.rho_00;
    let up = n.n_c * s.rho_gg;
    let qdot_c = 2.0 * p.gamma_c * p.w_c * (down - up);
    let gross_c = 2.0 * p.gamma_c * p.w_c * (down + up);

    let entropy_rate = qdot_c / p.t_c - qdot_h / p.t_h;
    let eco = 2.0 * power - (1.0 - p.tau()) * qdot_h;
    let obs = Observables { power, qdot_h, qdot_c, efficiency: 1.0 - p.w_c / p.w_h, entropy_rate, eco };
    (obs, gross_c)
}

/// Closed-form power, 2λ²Γ_cΓ_h(n_h − n_c)(ω_h − ω_c) / D.
pub fn power_exact(p: &EngineParams) -> Result<f64> {
    let n = p.occupations()?;
    let lead = 2.0 * p.lam * p.lam * p.gamma_c * p.gamma_h * (n.n_h - n.n_c);
    Ok(lead * (p.w_h - p.w_c) / closed_form_denominator(p, &n))
}

/// Closed-form ecological function with bracket 2(ω_h − ω_c) − η_C ω_h.
pub fn eco_exact(p: &EngineParams) -> Result<f64> {
    let n = p.occupations()?;
    let lead = 2.0 * p.lam * p.lam * p.gamma_c * p.gamma_h * (n.n_h - n.n_c);
    let bracket = 2.0 * (p.w_h - p.w_c) - p.carnot() * p.w_h;
    Ok(lead * bracket / closed_form_denominator(p, &n))
}
