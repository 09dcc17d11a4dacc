// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Rotating-frame steady state of the driven three-level system.
//!
//! Unknowns, in order: ρ_11, ρ_00, ρ_gg, Re ρ_10, Im ρ_10. The equations are
//! the stationarity conditions for ρ_11, ρ_00 and both parts of ρ_10 (field
//! on resonance), plus unit trace. The ρ_gg equation is the negative sum of
//! the two population equations and is dropped.

use serde::Serialize;

use super::params::{EngineParams, OccupationPair};
use crate::error::Result;
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteadyState {
    pub rho_11: f64,
    pub rho_00: f64,
    pub rho_gg: f64,
    pub rho_10_re: f64,
    pub rho_10_im: f64,
}

impl SteadyState {
    pub fn trace(&self) -> f64 {
        self.rho_11 + self.rho_00 + self.rho_gg
    }

    fn as_vector(&self) -> [f64; 5] {
        [self.rho_11, self.rho_00, self.rho_gg, self.rho_10_re, self.rho_10_im]
    }
}

/// The coherence ⟨1|ρ_R|0⟩ as a (re, im) pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Coherence {
    pub re: f64,
    pub im: f64,
}

/// Total dephasing rate of the 1-0 coherence, Γ_h(n_h+1) + Γ_c(n_c+1).
fn dephasing(p: &EngineParams, n: &OccupationPair) -> f64 {
    p.gamma_h * (n.n_h + 1.0) + p.gamma_c * (n.n_c + 1.0)
}

fn system(p: &EngineParams, n: &OccupationPair) -> ([[f64; 5]; 5], [f64; 5]) {
    let (gh, gc, lam) = (p.gamma_h, p.gamma_c, p.lam);
    let k = dephasing(p, n);
    // iλ(ρ10 − ρ01) = −2λ Im ρ10
    let a = [
        [-2.0 * gh * (n.n_h + 1.0), 0.0, 2.0 * gh * n.n_h, 0.0, -2.0 * lam],
        [0.0, -2.0 * gc * (n.n_c + 1.0), 2.0 * gc * n.n_c, 0.0, 2.0 * lam],
        [0.0, 0.0, 0.0, -k, 0.0],
        [lam, -lam, 0.0, 0.0, -k],
        [1.0, 1.0, 1.0, 0.0, 0.0],
    ];
    (a, [0.0, 0.0, 0.0, 0.0, 1.0])
}

/// The four rate equations with ρ_gg fixed to 1, each population equation
/// divided by its decay constant; unknowns (ρ_11, ρ_00, Re ρ_10, Im ρ_10).
///
/// Returns the matrix as an exact sum `hi + lo`, so that n + 1 keeps the
/// digits that distinguish it from n.
fn rate_system(p: &EngineParams, n: &OccupationPair) -> ([[f64; 4]; 4], [[f64; 4]; 4], [f64; 4]) {
    let (nh1, nh1_err) = linalg::two_sum(n.n_h, 1.0);
    let (nc1, nc1_err) = linalg::two_sum(n.n_c, 1.0);
    let k = dephasing(p, n);
    let lam = p.lam;
    let hi = [
        [-nh1, 0.0, 0.0, -lam / p.gamma_h],
        [0.0, -nc1, 0.0, lam / p.gamma_c],
        [0.0, 0.0, -k, 0.0],
        [lam, -lam, 0.0, -k],
    ];
    let mut lo = [[0.0; 4]; 4];
    lo[0][0] = -nh1_err;
    lo[1][1] = -nc1_err;
    (hi, lo, [-n.n_h, -n.n_c, 0.0, 0.0])
}

/// Solve the steady-state equations by Gaussian elimination.
///
/// The trace condition is applied last: the rate equations are solved
/// relative to ρ_gg and the result is normalized. Eliminating with the
/// trace row early would mix populations many orders of magnitude apart.
pub fn steady_state_numeric(p: &EngineParams) -> Result<SteadyState> {
    let n = p.occupations()?;
    let (hi, lo, b) = rate_system(p, &n);
    let v = linalg::solve_split(hi, lo, b)?;
    let norm = 1.0 + v[0] + v[1];
    Ok(SteadyState {
        rho_11: v[0] / norm,
        rho_00: v[1] / norm,
        rho_gg: 1.0 / norm,
        rho_10_re: v[2] / norm,
        rho_10_im: v[3] / norm,
    })
}

/// Denominator shared by the closed-form coherence, power and EF.
pub(crate) fn closed_form_denominator(p: &EngineParams, n: &OccupationPair) -> f64 {
    let (gh, gc, lam) = (p.gamma_h, p.gamma_c, p.lam);
    let (nh, nc) = (n.n_h, n.n_c);
    lam * lam * ((1.0 + 3.0 * nh) * gh + (1.0 + 3.0 * nc) * gc)
        + gc * gh * (1.0 + 2.0 * nh + nc * (2.0 + 3.0 * nh)) * ((1.0 + nc) * gc + (1.0 + nh) * gh)
}

/// Closed-form coherence ρ_10 = iλ(n_h − n_c)Γ_cΓ_h / D.
pub fn steady_state_closed_form(p: &EngineParams) -> Result<Coherence> {
    let n = p.occupations()?;
    let im = p.lam * (n.n_h - n.n_c) * p.gamma_c * p.gamma_h / closed_form_denominator(p, &n);
    Ok(Coherence { re: 0.0, im })
}

/// Residuals of the five steady-state equations at `s`, each divided by the
/// gross magnitude of its terms (Σ|a_ij x_j| + |b_i|).
pub fn relative_residuals(p: &EngineParams, s: &SteadyState) -> Result<[f64; 5]> {
    let n = p.occupations()?;
    let (a, b) = system(p, &n);
    let x = s.as_vector();
    let mut out = [0.0; 5];
    for i in 0..5 {
        let r: f64 = (0..5).map(|j| a[i][j] * x[j]).sum::<f64>() - b[i];
        let gross: f64 = (0..5).map(|j| (a[i][j] * x[j]).abs()).sum::<f64>() + b[i].abs();
        out[i] = if gross == 0.0 { 0.0 } else { r.abs() / gross };
    }
    Ok(out)
}

/// Absolute residuals of the five steady-state equations at `s`.
pub fn residuals(p: &EngineParams, s: &SteadyState) -> Result<[f64; 5]> {
    let n = p.occupations()?;
    let (a, b) = system(p, &n);
    let x = s.as_vector();
    let mut out = [0.0; 5];
    for i in 0..5 {
        out[i] = (0..5).map(|j| a[i][j] * x[j]).sum::<f64>() - b[i];
    }
    Ok(out)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn reference(w_h: f64, w_c: f64) -> EngineParams {
        EngineParams::new(1.0, 1.0, 1.0, 20.0, 5.0, w_h, w_c).unwrap()
    }

    #[test]
    fn regression_vector_at_reference_point() {
        // 40-digit LU solve of the same system (mpmath), rounded to 20 digits.
        let s = steady_state_numeric(&reference(4.0, 2.0)).unwrap();
        assert_relative_eq!(s.rho_11, 0.3274203031357076629, max_relative = 1e-13);
        assert_relative_eq!(s.rho_00, 0.27121210391259795372, max_relative = 1e-13);
        assert_relative_eq!(s.rho_gg, 0.40136759295169438339, max_relative = 1e-13);
        assert_eq!(s.rho_10_re, 0.0);
        assert_relative_eq!(s.rho_10_im, 0.0065741350116747956298, max_relative = 1e-13);
        for r in residuals(&reference(4.0, 2.0), &s).unwrap() {
            assert!(r.abs() <= 1e-12);
        }
    }

    #[test]
    fn closed_form_matches_solve_at_reference_point() {
        let p = reference(4.0, 2.0);
        let c = steady_state_closed_form(&p).unwrap();
        let s = steady_state_numeric(&p).unwrap();
        assert_eq!(c.re, 0.0);
        assert_relative_eq!(c.im, s.rho_10_im, max_relative = 1e-12);
    }

    #[test]
    fn equal_occupations_kill_coherence() {
        // w_h/t_h = w_c/t_c  =>  n_h = n_c
        let p = reference(4.0, 1.0);
        let s = steady_state_numeric(&p).unwrap();
        assert!(s.rho_10_im.abs() < 1e-15);
        assert_eq!(steady_state_closed_form(&p).unwrap().im, 0.0);
        assert_relative_eq!(s.trace(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn invalid_params_rejected() {
        let mut p = reference(4.0, 2.0);
        p.gamma_c = 0.0;
        assert!(steady_state_numeric(&p).is_err());
        assert!(steady_state_closed_form(&p).is_err());
    }
}
