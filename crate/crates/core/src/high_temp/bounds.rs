// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::optimum::FixedFrequency;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EfficiencyBounds {
    pub lower: f64,
    pub upper: f64,
}

/// Angulo-Brown efficiency 1 − √((1 − η_C)(2 − η_C)/2), defined on [0, 1].
pub fn eta_ab(eta_c: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eta_c) {
        return Err(Error::Domain { field: "eta_c", value: eta_c, domain: "[0, 1]" });
    }
    // 1 − s = (1 − s²)/(1 + s), with 1 − s² = η_C(3 − η_C)/2
    let s = ((1.0 - eta_c) * (2.0 - eta_c) / 2.0).sqrt();
    Ok(eta_c * (3.0 - eta_c) / (2.0 * (1.0 + s)))
}

/// Bounds on the efficiency at maximum EF as γ runs from 0 to ∞.
///
/// Fixed ω_h: [3η_C/4, η_AB]. Fixed ω_c: [η_AB, (3 − 2η_C)η_C/(4 − 3η_C)].
pub fn emef_bounds(fix: FixedFrequency, eta_c: f64) -> Result<EfficiencyBounds> {
    if !(eta_c > 0.0 && eta_c < 1.0) {
        return Err(Error::Domain { field: "eta_c", value: eta_c, domain: "(0, 1)" });
    }
    let ab = eta_ab(eta_c)?;
    Ok(match fix {
        FixedFrequency::FixWh => EfficiencyBounds { lower: 0.75 * eta_c, upper: ab },
        FixedFrequency::FixWc => {
            EfficiencyBounds { lower: ab, upper: (3.0 - 2.0 * eta_c) * eta_c / (4.0 - 3.0 * eta_c) }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eta_ab_values() {
        assert_eq!(eta_ab(0.0).unwrap(), 0.0);
        assert_eq!(eta_ab(1.0).unwrap(), 1.0);
        assert_relative_eq!(eta_ab(0.5).unwrap(), 1.0 - 0.375f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(eta_ab(0.5).unwrap(), 0.387628, epsilon = 1e-6);
        assert!(eta_ab(-0.1).is_err());
        assert!(eta_ab(1.1).is_err());
    }

    #[test]
    fn eta_ab_between_three_quarters_and_carnot() {
        for i in 0..=1000 {
            let e = i as f64 / 1000.0;
            let ab = eta_ab(e).unwrap();
            assert!(ab >= 0.75 * e - 1e-16 && ab <= e + 1e-16, "{e} {ab}");
        }
    }

    #[test]
    fn bounds_at_half() {
        let wh = emef_bounds(FixedFrequency::FixWh, 0.5).unwrap();
        assert_eq!(wh.lower, 0.375);
        assert_relative_eq!(wh.upper, 0.387628, epsilon = 1e-6);
        let wc = emef_bounds(FixedFrequency::FixWc, 0.5).unwrap();
        assert_eq!(wc.lower, wh.upper);
        assert_relative_eq!(wc.upper, 0.4, max_relative = 1e-15);
    }

    #[test]
    fn near_equilibrium_all_bounds_are_three_quarters_carnot() {
        let e = 1e-4;
        for fix in [FixedFrequency::FixWh, FixedFrequency::FixWc] {
            let b = emef_bounds(fix, e).unwrap();
            for v in [b.lower, b.upper] {
                assert_relative_eq!(v, 0.75 * e, max_relative = 1e-3);
            }
        }
    }

    #[test]
    fn bounds_domain() {
        assert!(emef_bounds(FixedFrequency::FixWh, 0.0).is_err());
        assert!(emef_bounds(FixedFrequency::FixWc, 1.0).is_err());
        for i in 1..100 {
            let e = i as f64 / 100.0;
            for fix in [FixedFrequency::FixWh, FixedFrequency::FixWc] {
                let b = emef_bounds(fix, e).unwrap();
                assert!(0.0 <= b.lower && b.lower <= b.upper && b.upper <= 1.0);
            }
        }
    }
}
