// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Two-frequency maximization: coarse grid scan, then local refinement.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::gradient::{gradient, hessian2};
use crate::numeric::scalar::{maximize_scalar, ScalarBracket, DEFAULT_SCALAR_TOL};
use crate::par::Execution;

pub const DEFAULT_REFINE_TOL: f64 = 1e-8;
pub const DEFAULT_COARSE_N: usize = 200;
/// Grids with fewer points per axis than this are flagged as coarse.
pub const MIN_RESOLVED_N: usize = 10;

const MAX_REFINE_ITER: usize = 200;
const MAX_HALVINGS: usize = 40;
const POLISH_STEPS: usize = 3;
const EDGE_FRACTION: f64 = 1e-8;

/// Rectangle of positive frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceBounds {
    pub w_h: (f64, f64),
    pub w_c: (f64, f64),
}

impl SurfaceBounds {
    pub fn new(w_h: (f64, f64), w_c: (f64, f64)) -> Result<Self> {
        ScalarBracket::new(w_h.0, w_h.1)?;
        ScalarBracket::new(w_c.0, w_c.1)?;
        Ok(SurfaceBounds { w_h, w_c })
    }

    fn axis(&self, k: usize) -> (f64, f64) {
        if k == 0 {
            self.w_h
        } else {
            self.w_c
        }
    }

    fn clamp(&self, p: [f64; 2]) -> [f64; 2] {
        [p[0].clamp(self.w_h.0, self.w_h.1), p[1].clamp(self.w_c.0, self.w_c.1)]
    }

    fn on_edge(&self, p: [f64; 2]) -> bool {
        (0..2).any(|k| {
            let (lo, hi) = self.axis(k);
            let tol = EDGE_FRACTION * (hi - lo);
            p[k] - lo <= tol || hi - p[k] <= tol
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceOptions {
    pub coarse_n: usize,
    pub refine_tol: f64,
    pub execution: Execution,
}

impl Default for SurfaceOptions {
    fn default() -> Self {
        SurfaceOptions { coarse_n: DEFAULT_COARSE_N, refine_tol: DEFAULT_REFINE_TOL, execution: Execution::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSample {
    pub w_h: f64,
    pub w_c: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceResult {
    pub w_h_star: f64,
    pub w_c_star: f64,
    pub value: f64,
    pub gradient_norm: f64,
    pub grid_resolution: usize,
    /// Interior point with gradient norm below the requested tolerance.
    pub refined: bool,
    pub on_boundary: bool,
    pub coarse_grid: bool,
}

fn axis_point(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

/// Evaluate `f` on an `n × n` grid including the edges.
///
/// Samples are ordered by `w_h` index, then `w_c` index.
pub fn scan_grid<F>(f: &F, bounds: &SurfaceBounds, n: usize, exec: Execution) -> Result<Vec<GridSample>>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    if n < 2 {
        return Err(Error::Domain { field: "coarse_n", value: n as f64, domain: "at least 2" });
    }
    let samples = exec.map_range(n * n, |k| {
        let w_h = axis_point(bounds.w_h.0, bounds.w_h.1, n, k / n);
        let w_c = axis_point(bounds.w_c.0, bounds.w_c.1, n, k % n);
        GridSample { w_h, w_c, value: f(w_h, w_c) }
    });
    if let Some(bad) = samples.iter().find(|s| !s.value.is_finite()) {
        return Err(Error::NonFiniteObjective { at: vec![bad.w_h, bad.w_c] });
    }
    Ok(samples)
}

/// Largest value; ties go to the lexicographically smallest `(w_h, w_c)`.
pub fn grid_argmax(samples: &[GridSample]) -> Option<GridSample> {
    samples.iter().copied().reduce(|best, s| {
        let better = s.value > best.value || (s.value == best.value && (s.w_h, s.w_c) < (best.w_h, best.w_c));
        if better {
            s
        } else {
            best
        }
    })
}

/// Maximize `f(w_h, w_c)` over `bounds`.
pub fn maximize_surface<F>(f: F, bounds: &SurfaceBounds, opts: &SurfaceOptions) -> Result<SurfaceResult>
where
    F: Fn(f64, f64) -> f64 + Sync + Send,
{
    let grid = scan_grid(&f, bounds, opts.coarse_n, opts.execution)?;
    maximize_surface_from_grid(&f, bounds, opts, &grid)
}

/// Refine the best point of an already scanned grid.
pub fn maximize_surface_from_grid<F>(
    f: &F,
    bounds: &SurfaceBounds,
    opts: &SurfaceOptions,
    grid: &[GridSample],
) -> Result<SurfaceResult>
where
    F: Fn(f64, f64) -> f64,
{
    if opts.refine_tol.is_nan() || opts.refine_tol <= 0.0 {
        return Err(Error::NonPositive { field: "refine_tol", value: opts.refine_tol });
    }
    let start = grid_argmax(grid).ok_or(Error::Domain { field: "grid", value: 0.0, domain: "non-empty" })?;
    let n = opts.coarse_n.max(2);
    let cell = [(bounds.w_h.1 - bounds.w_h.0) / (n - 1) as f64, (bounds.w_c.1 - bounds.w_c.0) / (n - 1) as f64];
    let refiner = Refiner { f, bounds, cell };
    let (p, value, gnorm) = refiner.run([start.w_h, start.w_c], start.value, opts.refine_tol)?;
    let on_boundary = bounds.on_edge(p);
    Ok(SurfaceResult {
        w_h_star: p[0],
        w_c_star: p[1],
        value,
        gradient_norm: gnorm,
        grid_resolution: opts.coarse_n,
        refined: !on_boundary && gnorm < opts.refine_tol,
        on_boundary,
        coarse_grid: opts.coarse_n < MIN_RESOLVED_N,
    })
}

struct Refiner<'a, F> {
    f: &'a F,
    bounds: &'a SurfaceBounds,
    cell: [f64; 2],
}

impl<F: Fn(f64, f64) -> f64> Refiner<'_, F> {
    fn eval(&self, p: [f64; 2]) -> Result<f64> {
        let v = (self.f)(p[0], p[1]);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteObjective { at: p.to_vec() })
        }
    }

    fn grad(&self, p: [f64; 2]) -> Result<([f64; 2], f64)> {
        let g = gradient(|x| (self.f)(x[0], x[1]), &p)?;
        Ok(([g[0], g[1]], g[0].hypot(g[1])))
    }

    /// Newton direction when the Hessian is negative definite.
    fn newton_direction(&self, p: [f64; 2], g: [f64; 2]) -> Result<Option<[f64; 2]>> {
        let h = [1e-4 * p[0].abs().max(1.0), 1e-4 * p[1].abs().max(1.0)];
        let hs = hessian2(&|x: &[f64]| (self.f)(x[0], x[1]), p, h)?;
        let det = hs[0][0] * hs[1][1] - hs[0][1] * hs[1][0];
        if !(hs[0][0] < 0.0 && det > 0.0) {
            return Ok(None);
        }
        let dx = -(hs[1][1] * g[0] - hs[0][1] * g[1]) / det;
        let dy = -(hs[0][0] * g[1] - hs[1][0] * g[0]) / det;
        Ok(Some([dx, dy]))
    }

    fn line_search(&self, p: [f64; 2], fp: f64, d: [f64; 2]) -> Result<Option<([f64; 2], f64)>> {
        let mut t = 1.0;
        for _ in 0..MAX_HALVINGS {
            let q = self.bounds.clamp([p[0] + t * d[0], p[1] + t * d[1]]);
            if q != p {
                let fq = self.eval(q)?;
                if fq > fp {
                    return Ok(Some((q, fq)));
                }
            }
            t *= 0.5;
        }
        Ok(None)
    }

    fn coordinate_sweep(&self, mut p: [f64; 2], mut fp: f64) -> Result<([f64; 2], f64)> {
        for k in 0..2 {
            let (lo, hi) = self.bounds.axis(k);
            let a = (p[k] - 2.0 * self.cell[k]).max(lo);
            let b = (p[k] + 2.0 * self.cell[k]).min(hi);
            let line = |x: f64| {
                let mut q = p;
                q[k] = x;
                (self.f)(q[0], q[1])
            };
            let m = maximize_scalar(line, ScalarBracket::new(a, b)?, DEFAULT_SCALAR_TOL)?;
            if m.value > fp {
                p[k] = m.argmax;
                fp = m.value;
            }
        }
        Ok((p, fp))
    }

    fn run(&self, mut p: [f64; 2], mut fp: f64, tol: f64) -> Result<([f64; 2], f64, f64)> {
        let (mut g, mut gn) = self.grad(p)?;
        for _ in 0..MAX_REFINE_ITER {
            if gn < tol {
                break;
            }
            let mut step = None;
            if let Some(d) = self.newton_direction(p, g)? {
                step = self.line_search(p, fp, d)?;
            }
            if step.is_none() {
                let scale = self.cell[0].hypot(self.cell[1]) / gn;
                step = self.line_search(p, fp, [g[0] * scale, g[1] * scale])?;
            }
            let (q, fq) = match step {
                Some(s) => s,
                None => {
                    let (q, fq) = self.coordinate_sweep(p, fp)?;
                    if fq <= fp {
                        break;
                    }
                    (q, fq)
                }
            };
            p = q;
            fp = fq;
            (g, gn) = self.grad(p)?;
        }
        // a few pure Newton steps past the tolerance, kept only if they help
        if gn < tol {
            for _ in 0..POLISH_STEPS {
                let Some(d) = self.newton_direction(p, g)? else { break };
                let q = self.bounds.clamp([p[0] + d[0], p[1] + d[1]]);
                let fq = self.eval(q)?;
                let (gq, gqn) = self.grad(q)?;
                if fq < fp || gqn >= gn {
                    break;
                }
                (p, fp, g, gn) = (q, fq, gq, gqn);
            }
        }
        Ok((p, fp, gn))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowl(w_h: f64, w_c: f64) -> f64 {
        -((w_h - 3.0).powi(2) + (w_c - 1.0).powi(2))
    }

    #[test]
    fn paraboloid() {
        let b = SurfaceBounds::new((0.1, 10.0), (0.1, 5.0)).unwrap();
        let r = maximize_surface(bowl, &b, &SurfaceOptions { coarse_n: 31, ..Default::default() }).unwrap();
        assert!((r.w_h_star - 3.0).abs() < 1e-9 && (r.w_c_star - 1.0).abs() < 1e-9, "{r:?}");
        assert!(r.refined && !r.on_boundary && !r.coarse_grid);
        assert!(r.gradient_norm < 1e-8);
    }

    #[test]
    fn rotated_narrow_valley() {
        let f = |x: f64, y: f64| {
            let u = x + y - 5.0;
            let v = x - y - 1.0;
            -(u * u) - 100.0 * v * v
        };
        let b = SurfaceBounds::new((0.5, 8.0), (0.5, 8.0)).unwrap();
        let r = maximize_surface(f, &b, &SurfaceOptions { coarse_n: 7, ..Default::default() }).unwrap();
        assert!(r.refined, "{r:?}");
        assert!((r.w_h_star - 3.0).abs() < 1e-8 && (r.w_c_star - 2.0).abs() < 1e-8);
    }

    #[test]
    fn boundary_maximum_is_flagged() {
        let b = SurfaceBounds::new((1.0, 2.0), (1.0, 2.0)).unwrap();
        let r =
            maximize_surface(|x, y| x + 0.1 * y, &b, &SurfaceOptions { coarse_n: 5, ..Default::default() }).unwrap();
        assert!(r.on_boundary && !r.refined);
        assert_eq!((r.w_h_star, r.w_c_star), (2.0, 2.0));
    }

    #[test]
    fn two_point_grid_is_accepted_and_flagged() {
        let b = SurfaceBounds::new((0.1, 10.0), (0.1, 5.0)).unwrap();
        let r = maximize_surface(bowl, &b, &SurfaceOptions { coarse_n: 2, ..Default::default() }).unwrap();
        assert!(r.coarse_grid);
        assert_eq!(r.grid_resolution, 2);
    }

    #[test]
    fn modes_agree() {
        let b = SurfaceBounds::new((0.1, 10.0), (0.1, 5.0)).unwrap();
        let f = |x: f64, y: f64| (x * y).sin() - 0.01 * x * x;
        let s = scan_grid(&f, &b, 40, Execution::Sequential).unwrap();
        let p = scan_grid(&f, &b, 40, Execution::Parallel).unwrap();
        assert_eq!(s, p);
    }

    #[test]
    fn ties_go_to_smallest_coordinates() {
        let b = SurfaceBounds::new((1.0, 3.0), (1.0, 3.0)).unwrap();
        let g = scan_grid(&|_, _| 0.0, &b, 3, Execution::Parallel).unwrap();
        let best = grid_argmax(&g).unwrap();
        assert_eq!((best.w_h, best.w_c), (1.0, 1.0));
    }

    #[test]
    fn invalid_inputs() {
        assert!(SurfaceBounds::new((0.0, 1.0), (0.1, 1.0)).is_err());
        let b = SurfaceBounds::new((1.0, 2.0), (1.0, 2.0)).unwrap();
        assert!(scan_grid(&bowl, &b, 1, Execution::Sequential).is_err());
        let e = maximize_surface(|x, _| if x > 1.5 { f64::NAN } else { x }, &b, &SurfaceOptions::default());
        assert!(matches!(e, Err(Error::NonFiniteObjective { .. })));
    }
}
