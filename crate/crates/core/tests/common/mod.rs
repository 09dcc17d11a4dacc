// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ssd_core::engine::EngineParams;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..hi.ln()).exp()
}

/// Rates and temperatures over 6 decades; each frequency is its bath
/// temperature times a factor spanning 6 decades, so occupations stay
/// representable.
pub fn random_params(rng: &mut impl Rng) -> EngineParams {
    let mut d = || log_uniform(rng, 1e-3, 1e3);
    let (gamma_h, gamma_c, lam, t_h, t_c) = (d(), d(), d(), d(), d());
    let w_h = t_h * log_uniform(rng, 1e-4, 1e2);
    let w_c = t_c * log_uniform(rng, 1e-4, 1e2);
    EngineParams::new(gamma_h, gamma_c, lam, t_h, t_c, w_h, w_c).unwrap()
}

pub fn sample(seed: u64, count: usize) -> Vec<EngineParams> {
    let mut r = rng(seed);
    (0..count).map(|_| random_params(&mut r)).collect()
}

pub fn reference(w_h: f64, w_c: f64) -> EngineParams {
    EngineParams::new(1.0, 1.0, 1.0, 20.0, 5.0, w_h, w_c).unwrap()
}
