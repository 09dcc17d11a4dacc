// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::error::{positive, Error, Result};

/// Physical parameters of the engine in natural units (hbar = k_B = 1).
///
/// Rates are in inverse time, temperatures and frequencies in energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EngineParams {
    /// Hot-bath decay constant Γ_h.
    pub gamma_h: f64,
    /// Cold-bath decay constant Γ_c.
    pub gamma_c: f64,
    /// Matter-field coupling λ.
    #[serde(rename = "lambda")]
    pub lam: f64,
    pub t_h: f64,
    pub t_c: f64,
    /// Hot transition frequency ω_h (|g⟩ ↔ |1⟩).
    pub w_h: f64,
    /// Cold transition frequency ω_c (|g⟩ ↔ |0⟩).
    pub w_c: f64,
}

impl EngineParams {
    pub fn new(gamma_h: f64, gamma_c: f64, lam: f64, t_h: f64, t_c: f64, w_h: f64, w_c: f64) -> Result<Self> {
        let p = EngineParams { gamma_h, gamma_c, lam, t_h, t_c, w_h, w_c };
        p.validate()?;
        Ok(p)
    }

    /// Every field must be finite and strictly positive. The engine regime
    /// (t_c < t_h) is not required here.
    pub fn validate(&self) -> Result<()> {
        positive("gamma_h", self.gamma_h)?;
        positive("gamma_c", self.gamma_c)?;
        positive("lambda", self.lam)?;
        positive("t_h", self.t_h)?;
        positive("t_c", self.t_c)?;
        positive("w_h", self.w_h)?;
        positive("w_c", self.w_c)?;
        Ok(())
    }

    /// Same parameters at a different pair of transition frequencies.
    pub fn with_frequencies(&self, w_h: f64, w_c: f64) -> Self {
        EngineParams { w_h, w_c, ..*self }
    }

    /// τ = T_c / T_h.
    pub fn tau(&self) -> f64 {
        self.t_c / self.t_h
    }

    /// γ = Γ_h / Γ_c.
    pub fn gamma(&self) -> f64 {
        self.gamma_h / self.gamma_c
    }

    pub fn carnot(&self) -> f64 {
        1.0 - self.tau()
    }

    pub fn occupations(&self) -> Result<OccupationPair> {
        self.validate()?;
        Ok(OccupationPair { n_h: bose_occupation(self.w_h, self.t_h)?, n_c: bose_occupation(self.w_c, self.t_c)? })
    }
}

/// Mean thermal photon numbers at the hot and cold contacts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OccupationPair {
    pub n_h: f64,
    pub n_c: f64,
}

/// Bose-Einstein occupation 1 / (exp(w/t) - 1).
pub fn bose_occupation(w: f64, t: f64) -> Result<f64> {
    positive("w", w)?;
    positive("t", t)?;
    let ratio = w / t;
    let n = 1.0 / ratio.exp_m1();
    if n == 0.0 || !n.is_finite() {
        return Err(Error::OccupationUnderflow { ratio });
    }
    Ok(n)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn bose_at_ln2_is_one() {
        assert_relative_eq!(bose_occupation(2f64.ln(), 1.0).unwrap(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn bose_high_temperature_limit() {
        let n = bose_occupation(1.0, 1e6).unwrap();
        assert!(((n - 1e6) / 1e6).abs() < 1e-5);
    }

    #[test]
    fn bose_low_temperature_value() {
        // 1/(e^2 - 1), 20 digits from an arbitrary-precision evaluation
        assert_relative_eq!(bose_occupation(1.0, 0.5).unwrap(), 0.15651764274966565182, max_relative = 1e-15);
    }

    #[test]
    fn bose_monotone() {
        let a = bose_occupation(1.0, 2.0).unwrap();
        assert!(bose_occupation(1.0, 3.0).unwrap() > a);
        assert!(bose_occupation(1.5, 2.0).unwrap() < a);
    }

    #[test]
    fn bose_rejects_bad_input() {
        assert!(matches!(bose_occupation(0.0, 1.0), Err(Error::NonPositive { field: "w", .. })));
        assert!(matches!(bose_occupation(1.0, -1.0), Err(Error::NonPositive { field: "t", .. })));
        assert!(matches!(bose_occupation(1.0, f64::NAN), Err(Error::NonFinite { .. })));
        assert!(matches!(bose_occupation(1000.0, 1.0), Err(Error::OccupationUnderflow { .. })));
    }

    #[test]
    fn validation_names_the_field() {
        let err = EngineParams::new(1.0, 1.0, 1.0, 20.0, 0.0, 4.0, 2.0).unwrap_err();
        assert_eq!(err, Error::NonPositive { field: "t_c", value: 0.0 });
        assert!(err.to_string().starts_with("t_c must be positive"));
        let err = EngineParams::new(1.0, 1.0, -2.0, 20.0, 5.0, 4.0, 2.0).unwrap_err();
        assert!(err.to_string().starts_with("lambda must be positive"));
    }

    #[test]
    fn derived_ratios() {
        let p = EngineParams::new(2.0, 1.0, 1.0, 20.0, 5.0, 4.0, 2.0).unwrap();
        assert_eq!(p.tau(), 0.25);
        assert_eq!(p.gamma(), 2.0);
        assert_eq!(p.carnot(), 0.75);
        // the engine regime is not enforced at evaluation
        assert!(EngineParams::new(1.0, 1.0, 1.0, 5.0, 20.0, 4.0, 2.0).is_ok());
    }
}
