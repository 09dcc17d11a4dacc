// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

use crate::error::{positive, Error, Result};

/// Step used when none is given: 1e-5 × max(|x|, 1).
pub fn default_step(x: f64) -> f64 {
    1e-5 * x.abs().max(1.0)
}

fn finite(v: f64, at: &[f64]) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteObjective { at: at.to_vec() })
    }
}

/// Central-difference gradient with the same `step` on every coordinate.
pub fn finite_diff_gradient<F>(f: F, point: &[f64], step: f64) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> f64,
{
    positive("step", step)?;
    gradient_with_steps(f, point, &vec![step; point.len()])
}

/// Central-difference gradient with [`default_step`] per coordinate.
pub fn gradient<F>(f: F, point: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> f64,
{
    let steps: Vec<f64> = point.iter().map(|&x| default_step(x)).collect();
    gradient_with_steps(f, point, &steps)
}

fn gradient_with_steps<F>(f: F, point: &[f64], steps: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(&[f64]) -> f64,
{
    let mut x = point.to_vec();
    let mut g = Vec::with_capacity(point.len());
    for (i, &h) in steps.iter().enumerate() {
        x[i] = point[i] + h;
        let up = finite(f(&x), &x)?;
        x[i] = point[i] - h;
        let down = finite(f(&x), &x)?;
        x[i] = point[i];
        g.push((up - down) / (2.0 * h));
    }
    Ok(g)
}

/// Central second difference of a scalar function.
pub fn second_derivative<F>(f: F, x: f64, step: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    positive("step", step)?;
    let at = |y: f64| finite(f(y), &[y]);
    Ok((at(x + step)? - 2.0 * at(x)? + at(x - step)?) / (step * step))
}

/// Central-difference Hessian of a function of two variables.
pub(crate) fn hessian2<F>(f: &F, p: [f64; 2], h: [f64; 2]) -> Result<[[f64; 2]; 2]>
where
    F: Fn(&[f64]) -> f64,
{
    let e = |x: f64, y: f64| finite(f(&[x, y]), &[x, y]);
    let f0 = e(p[0], p[1])?;
    let xx = (e(p[0] + h[0], p[1])? - 2.0 * f0 + e(p[0] - h[0], p[1])?) / (h[0] * h[0]);
    let yy = (e(p[0], p[1] + h[1])? - 2.0 * f0 + e(p[0], p[1] - h[1])?) / (h[1] * h[1]);
    let xy = (e(p[0] + h[0], p[1] + h[1])? - e(p[0] + h[0], p[1] - h[1])? - e(p[0] - h[0], p[1] + h[1])?
        + e(p[0] - h[0], p[1] - h[1])?)
        / (4.0 * h[0] * h[1]);
    Ok([[xx, xy], [xy, yy]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn linear_is_exact() {
        let g = finite_diff_gradient(|x| 3.0 * x[0] - 0.5 * x[1] + 7.0, &[1.3, -2.0], 1e-3).unwrap();
        assert_relative_eq!(g[0], 3.0, max_relative = 1e-12);
        assert_relative_eq!(g[1], -0.5, max_relative = 1e-11);
    }

    #[test]
    fn product() {
        let g = finite_diff_gradient(|x| x[0] * x[1], &[2.0, 3.0], 1e-4).unwrap();
        assert!((g[0] - 3.0).abs() < 1e-8 && (g[1] - 2.0).abs() < 1e-8);
    }

    #[test]
    fn second_order_convergence() {
        let f = |x: &[f64]| x[0].sin() * x[1].exp();
        let p = [0.7, 0.3];
        let exact = [0.7f64.cos() * 0.3f64.exp(), 0.7f64.sin() * 0.3f64.exp()];
        let err = |h: f64| {
            let g = finite_diff_gradient(f, &p, h).unwrap();
            ((g[0] - exact[0]).powi(2) + (g[1] - exact[1]).powi(2)).sqrt()
        };
        for h in [1e-2, 5e-3, 2.5e-3] {
            let ratio = err(h) / err(h / 2.0);
            assert!((ratio - 4.0).abs() < 0.1, "h = {h}: ratio {ratio}");
        }
    }

    #[test]
    fn hessian_of_quadratic() {
        let f = |x: &[f64]| -(x[0] * x[0]) - 3.0 * x[0] * x[1] - 2.0 * x[1] * x[1];
        let h = hessian2(&f, [0.4, -1.0], [1e-3, 1e-3]).unwrap();
        assert_relative_eq!(h[0][0], -2.0, max_relative = 1e-6);
        assert_relative_eq!(h[0][1], -3.0, max_relative = 1e-6);
        assert_relative_eq!(h[1][1], -4.0, max_relative = 1e-6);
    }

    #[test]
    fn errors() {
        assert!(finite_diff_gradient(|x| x[0], &[1.0], 0.0).is_err());
        assert!(matches!(finite_diff_gradient(|x| x[0].ln(), &[0.0], 1e-3), Err(Error::NonFiniteObjective { .. })));
        assert_relative_eq!(second_derivative(|x| x * x * x, 2.0, 1e-3).unwrap(), 12.0, max_relative = 1e-6);
    }
}
