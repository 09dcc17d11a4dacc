// Copyright 2026 The ssd-engine Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense Gaussian elimination for the small steady-state systems.

use crate::error::{Error, Result};

const REFINE_STEPS: usize = 4;

/// Solve `a x = b` by Gaussian elimination with partial pivoting, followed
/// by iterative refinement.
///
/// Rows are equilibrated (scaled by their largest entry) before pivoting, so
/// the pivot choice does not depend on the units of each equation. The
/// refinement residual is accumulated in doubled precision, which recovers
/// small solution components that elimination alone leaves with only an
/// absolute error of order ε‖x‖.
pub fn solve<const N: usize>(a: [[f64; N]; N], b: [f64; N]) -> Result<[f64; N]> {
    solve_split(a, [[0.0; N]; N], b)
}

/// As [`solve`] for the matrix `hi + lo`, taken as an exact unevaluated sum.
///
/// Entries such as n + 1 with large n are not representable; passing the
/// rounding error in `lo` lets the refinement converge to the solution of
/// the exact system.
pub fn solve_split<const N: usize>(hi: [[f64; N]; N], lo: [[f64; N]; N], b: [f64; N]) -> Result<[f64; N]> {
    let lu = Lu::factor(std::array::from_fn(|i| std::array::from_fn(|j| hi[i][j] + lo[i][j])))?;
    let mut x = lu.solve(b);
    for _ in 0..REFINE_STEPS {
        let r: [f64; N] = std::array::from_fn(|i| -residual2(&hi[i], &lo[i], &x, b[i]));
        let d = lu.solve(r);
        let mut changed = false;
        for i in 0..N {
            let next = x[i] + d[i];
            changed |= next != x[i];
            x[i] = next;
        }
        if !changed {
            break;
        }
    }
    if x.iter().all(|v| v.is_finite()) {
        Ok(x)
    } else {
        Err(Error::Singular { column: N })
    }
}

/// Σ (hi_j + lo_j) x_j − b with error-free products and compensated summation.
fn residual2<const N: usize>(hi: &[f64; N], lo: &[f64; N], x: &[f64; N], b: f64) -> f64 {
    let (mut s, mut comp) = (-b, 0.0);
    let mut add = |p: f64, pe: f64| {
        let t = s + p;
        let z = t - s;
        comp += (s - (t - z)) + (p - z) + pe;
        s = t;
    };
    for j in 0..N {
        for a in [hi[j], lo[j]] {
            let p = a * x[j];
            add(p, a.mul_add(x[j], -p));
        }
    }
    s + comp
}

/// `a + b` as a rounded sum and its exact rounding error.
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let z = s - a;
    (s, (a - (s - z)) + (b - z))
}

/// Row-equilibrated LU factors with the row permutation folded in.
struct Lu<const N: usize> {
    lu: [[f64; N]; N],
    scale: [f64; N],
    perm: [usize; N],
}

impl<const N: usize> Lu<N> {
    #[allow(clippy::needless_range_loop)]
    fn factor(mut a: [[f64; N]; N]) -> Result<Self> {
        let mut scale = [1.0; N];
        for row in 0..N {
            let s = a[row].iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            if s == 0.0 {
                return Err(Error::Singular { column: row });
            }
            a[row].iter_mut().for_each(|v| *v /= s);
            scale[row] = s;
        }
        let mut perm: [usize; N] = std::array::from_fn(|i| i);

        for col in 0..N {
            let pivot = (col..N).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap_or(col);
            if a[pivot][col] == 0.0 || !a[pivot][col].is_finite() {
                return Err(Error::Singular { column: col });
            }
            a.swap(col, pivot);
            perm.swap(col, pivot);

            for row in col + 1..N {
                let factor = a[row][col] / a[col][col];
                a[row][col] = factor;
                if factor == 0.0 {
                    continue;
                }
                for k in col + 1..N {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
        Ok(Lu { lu: a, scale, perm })
    }

    fn solve(&self, b: [f64; N]) -> [f64; N] {
        let mut y: [f64; N] = std::array::from_fn(|i| b[self.perm[i]] / self.scale[self.perm[i]]);
        for row in 0..N {
            for k in 0..row {
                y[row] -= self.lu[row][k] * y[k];
            }
        }
        let mut x = [0.0; N];
        for row in (0..N).rev() {
            let tail: f64 = (row + 1..N).map(|k| self.lu[row][k] * x[k]).sum();
            x[row] = (y[row] - tail) / self.lu[row][row];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn solves_known_system() {
        // 2x + y - z = 8, -3x - y + 2z = -11, -2x + y + 2z = -3  =>  (2, 3, -1)
        let a = [[2.0, 1.0, -1.0], [-3.0, -1.0, 2.0], [-2.0, 1.0, 2.0]];
        let x = solve(a, [8.0, -11.0, -3.0]).unwrap();
        for (got, want) in x.iter().zip([2.0, 3.0, -1.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn refinement_recovers_tiny_components() {
        // the trace-like row wins the first pivot and buries the 1e-12 balance
        let e = 1e-12;
        let a = [[-1.0, 0.0, e], [1.0, 1.0, 1.0], [0.0, -1.0, 2.0 * e]];
        let x = solve(a, [0.0, 1.0, 0.0]).unwrap();
        let x2 = 1.0 / (1.0 + 3.0 * e);
        assert!((x[0] / (e * x2) - 1.0).abs() < 1e-14, "{x:?}");
        assert!((x[1] / (2.0 * e * x2) - 1.0).abs() < 1e-14, "{x:?}");
    }

    #[test]
    fn split_entries_are_honoured() {
        // (1 + 2^-60) x = 1 has x = 1 − 2^-60 + …, not representable from the rounded entry alone
        let t = 2f64.powi(-60);
        let x = solve_split([[1.0]], [[t]], [1.0]).unwrap();
        assert_eq!(x[0], 1.0 - t);
        let (s, e) = two_sum(1e16, 1.0);
        assert_eq!((s, e), (1e16, 1.0));
    }

    #[test]
    fn needs_pivoting() {
        let a = [[0.0, 1.0], [1.0, 0.0]];
        assert_eq!(solve(a, [2.0, 3.0]).unwrap(), [3.0, 2.0]);
    }

    #[test]
    fn singular_is_reported() {
        let a = [[1.0, 2.0], [2.0, 4.0]];
        assert!(matches!(solve(a, [1.0, 2.0]), Err(Error::Singular { .. })));
        let z = [[0.0, 0.0], [1.0, 1.0]];
        assert!(matches!(solve(z, [0.0, 1.0]), Err(Error::Singular { column: 0 })));
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            rng_seed: proptest::test_runner::RngSeed::Fixed(17),
            failure_persistence: None,
            ..ProptestConfig::default()
        })]

        #[test]
        fn residual_small_for_diagonally_dominant(
            off in proptest::collection::vec(-1.0f64..1.0, 16),
            b in proptest::collection::vec(-10.0f64..10.0, 4),
        ) {
            let mut a = [[0.0; 4]; 4];
            for i in 0..4 {
                for j in 0..4 {
                    a[i][j] = off[4 * i + j];
                }
                a[i][i] += 5.0;
            }
            let rhs = [b[0], b[1], b[2], b[3]];
            let x = solve(a, rhs).unwrap();
            for i in 0..4 {
                let r: f64 = (0..4).map(|j| a[i][j] * x[j]).sum::<f64>() - rhs[i];
                prop_assert!(r.abs() < 1e-12);
            }
        }
    }
}
