// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_SCALAR_TOL: f64 = 1e-10;

/// Golden-section iterations stop once the bracket is this narrow
/// (relative). Below it, comparing function values no longer resolves the
/// maximum of a smooth function.
const GOLDEN_STOP: f64 = 1e-6;
const MAX_ITER: usize = 500;

/// Search interval 0 < lo < hi.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalarBracket {
    pub lo: f64,
    pub hi: f64,
}

impl ScalarBracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi) {
            return Err(Error::InvalidBracket { lo, hi });
        }
        Ok(ScalarBracket { lo, hi })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalarMax {
    pub argmax: f64,
    pub value: f64,
    pub evaluations: usize,
}

struct Counted<F> {
    f: F,
    calls: usize,
}

impl<F: Fn(f64) -> f64> Counted<F> {
    fn eval(&mut self, x: f64) -> Result<f64> {
        self.calls += 1;
        let v = (self.f)(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteObjective { at: vec![x] })
        }
    }
}

/// Maximize a unimodal `f` on `bracket` to relative tolerance `tol` in the argument.
///
/// Golden-section search narrows the bracket to about 1e-6 relative; the
/// rest is bisection on the sign of a central-difference slope, which keeps
/// resolving the maximum after function values stop doing so. On a flat
/// stretch both phases move left, so ties resolve to the smallest argmax.
pub fn maximize_scalar<F>(f: F, bracket: ScalarBracket, tol: f64) -> Result<ScalarMax>
where
    F: Fn(f64) -> f64,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::NonPositive { field: "tol", value: tol });
    }
    let mut f = Counted { f, calls: 0 };
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (bracket.lo, bracket.hi);

    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f.eval(c)?;
    let mut fd = f.eval(d)?;
    let golden_stop = GOLDEN_STOP.max(tol);
    let mut iter = 0;
    while b - a > golden_stop * 0.5 * (a + b) {
        iter += 1;
        if iter > MAX_ITER {
            return Err(Error::NoConvergence { what: "golden-section search", iterations: iter });
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f.eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f.eval(d)?;
        }
    }

    // slope-sign bisection; step ~ ε^(1/3) balances truncation and rounding
    while b - a > tol * 0.5 * (a + b) {
        iter += 1;
        if iter > MAX_ITER {
            return Err(Error::NoConvergence { what: "slope bisection", iterations: iter });
        }
        let x = 0.5 * (a + b);
        let h = (5e-6 * x).min(x - bracket.lo).min(bracket.hi - x);
        if h <= 0.0 {
            break;
        }
        if f.eval(x + h)? > f.eval(x - h)? {
            a = x;
        } else {
            b = x;
        }
    }

    let argmax = 0.5 * (a + b);
    let value = f.eval(argmax)?;
    Ok(ScalarMax { argmax, value, evaluations: f.calls })
}
