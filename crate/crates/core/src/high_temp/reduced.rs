// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Tight-coupling, high-temperature forms of power, heat flux and EF.

use serde::Serialize;

use crate::error::{Error, Result};

/// Dissipation asymmetry γ = Γ_h/Γ_c, with its two limits as explicit cases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Asymmetry {
    Finite(f64),
    /// γ → 0 at fixed Γ_h.
    ZeroLimit,
    /// γ → ∞ at fixed Γ_c.
    InfiniteLimit,
}

impl Asymmetry {
    /// The finite value, if any.
    pub fn value(self) -> Option<f64> {
        match self {
            Asymmetry::Finite(g) => Some(g),
            _ => None,
        }
    }
}

/// The (τ, γ) pair that governs every high-temperature result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedParams {
    pub tau: f64,
    pub gamma: Asymmetry,
}

impl ReducedParams {
    /// Finite γ; requires τ ∈ (0, 1) and γ > 0.
    pub fn new(tau: f64, gamma: f64) -> Result<Self> {
        if !gamma.is_finite() {
            return Err(Error::NonFinite { field: "gamma", value: gamma });
        }
        if gamma <= 0.0 {
            return Err(Error::NonPositive { field: "gamma", value: gamma });
        }
        Self::with_asymmetry(tau, Asymmetry::Finite(gamma))
    }

    pub fn with_asymmetry(tau: f64, gamma: Asymmetry) -> Result<Self> {
        if !(tau > 0.0 && tau < 1.0) {
            return Err(Error::Domain { field: "tau", value: tau, domain: "(0, 1)" });
        }
        if let Asymmetry::Finite(g) = gamma {
            if !(g.is_finite() && g > 0.0) {
                return Err(Error::Domain { field: "gamma", value: g, domain: "(0, inf)" });
            }
        }
        Ok(ReducedParams { tau, gamma })
    }

    pub fn zero_limit(tau: f64) -> Result<Self> {
        Self::with_asymmetry(tau, Asymmetry::ZeroLimit)
    }

    pub fn infinite_limit(tau: f64) -> Result<Self> {
        Self::with_asymmetry(tau, Asymmetry::InfiniteLimit)
    }

    pub fn carnot(&self) -> f64 {
        1.0 - self.tau
    }

    /// rate / (3 (γω_c + τω_h)), or its finite limit.
    ///
    /// For γ → ∞ the objectives vanish at fixed Γ_h, so there `rate` is read
    /// as Γ_c and the factor is Γ_c / (3 ω_c).
    fn prefactor(&self, w_h: f64, w_c: f64, rate: f64) -> f64 {
        let den = match self.gamma {
            Asymmetry::Finite(g) => g * w_c + self.tau * w_h,
            Asymmetry::ZeroLimit => self.tau * w_h,
            Asymmetry::InfiniteLimit => w_c,
        };
        rate / (3.0 * den)
    }
}

/// P ≈ 2Γ_h(ω_h − ω_c)(ω_c − τω_h) / [3(γω_c + τω_h)].
pub fn reduced_power(w_h: f64, w_c: f64, r: &ReducedParams, rate: f64) -> f64 {
    2.0 * (w_h - w_c) * (w_c - r.tau * w_h) * r.prefactor(w_h, w_c, rate)
}

/// Q̇_h ≈ 2Γ_h ω_h(ω_c − τω_h) / [3(γω_c + τω_h)], well defined at ω_c = ω_h.
pub fn reduced_heat(w_h: f64, w_c: f64, r: &ReducedParams, rate: f64) -> f64 {
    2.0 * w_h * (w_c - r.tau * w_h) * r.prefactor(w_h, w_c, rate)
}

/// E ≈ 2Γ_h(ω_c − τω_h)[2(ω_h − ω_c) − (1 − τ)ω_h] / [3(γω_c + τω_h)].
pub fn reduced_eco(w_h: f64, w_c: f64, r: &ReducedParams, rate: f64) -> f64 {
    let bracket = 2.0 * (w_h - w_c) - r.carnot() * w_h;
    2.0 * (w_c - r.tau * w_h) * bracket * r.prefactor(w_h, w_c, rate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn hand_evaluated_point() {
        let r = ReducedParams::new(0.5, 1.0).unwrap();
        assert_relative_eq!(reduced_power(1.0, 0.7, &r, 1.0), 1.0 / 30.0, max_relative = 1e-14);
        assert_relative_eq!(reduced_eco(1.0, 0.7, &r, 1.0), 0.04 / 3.6, max_relative = 1e-14);
    }

    #[test]
    fn zeros() {
        let r = ReducedParams::new(0.3, 2.0).unwrap();
        assert_eq!(reduced_power(2.0, 0.6, &r, 1.0), 0.0);
        assert_eq!(reduced_power(2.0, 2.0, &r, 1.0), 0.0);
        assert_eq!(reduced_eco(2.0, 0.6, &r, 1.0), 0.0);
        // 2(ω_h − ω_c) = (1 − τ)ω_h
        assert!(reduced_eco(2.0, 1.3, &r, 1.0).abs() < 1e-16);
        // heat stays finite and positive where power vanishes at ω_c = ω_h
        assert!(reduced_heat(2.0, 2.0, &r, 1.0) > 0.0);
    }

    #[test]
    fn domain_checks() {
        assert!(matches!(ReducedParams::new(1.2, 1.0), Err(Error::Domain { field: "tau", .. })));
        assert!(ReducedParams::new(1.0, 1.0).is_err());
        assert!(ReducedParams::new(0.5, 0.0).is_err());
        assert!(ReducedParams::new(0.5, f64::INFINITY).is_err());
        assert!(ReducedParams::with_asymmetry(0.5, Asymmetry::Finite(-1.0)).is_err());
    }

    #[test]
    fn limit_prefactors_are_limits_of_finite_ones() {
        let (w_h, w_c) = (1.3, 0.9);
        let z = ReducedParams::zero_limit(0.4).unwrap();
        let small = ReducedParams::new(0.4, 1e-9).unwrap();
        assert_relative_eq!(
            reduced_power(w_h, w_c, &small, 1.0),
            reduced_power(w_h, w_c, &z, 1.0),
            max_relative = 1e-8
        );
        // γ → ∞ at fixed Γ_c: Γ_h = γΓ_c
        let inf = ReducedParams::infinite_limit(0.4).unwrap();
        let big = ReducedParams::new(0.4, 1e9).unwrap();
        assert_relative_eq!(reduced_eco(w_h, w_c, &big, 1e9), reduced_eco(w_h, w_c, &inf, 1.0), max_relative = 1e-8);
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            rng_seed: proptest::test_runner::RngSeed::Fixed(17),
            failure_persistence: None,
            ..ProptestConfig::default()
        })]

        #[test]
        fn eco_identity(tau in 0.01f64..0.99, g in 1e-3f64..1e3, w_h in 0.1f64..10.0, f in 0.01f64..0.99) {
            let r = ReducedParams::new(tau, g).unwrap();
            let w_c = f * w_h;
            let e = reduced_eco(w_h, w_c, &r, 1.7);
            let via = 2.0 * reduced_power(w_h, w_c, &r, 1.7) - (1.0 - tau) * reduced_heat(w_h, w_c, &r, 1.7);
            prop_assert!((e - via).abs() <= 1e-13 * (e.abs() + via.abs() + reduced_heat(w_h, w_c, &r, 1.7).abs()));
            // heat = P ω_h / (ω_h − ω_c)
            let p = reduced_power(w_h, w_c, &r, 1.7);
            prop_assert!((p * w_h / (w_h - w_c) - reduced_heat(w_h, w_c, &r, 1.7)).abs() <= 1e-12 * p.abs().max(1e-300) * w_h / (w_h - w_c));
        }
    }
}
