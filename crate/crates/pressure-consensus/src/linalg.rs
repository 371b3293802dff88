//! Dense row-major matrices sized for desk-scale systems, plus the few
//! numerical kernels the crate needs: left-to-right dot products,
//! compensated summation, an LU solver with partial pivoting, and largest
//! symmetric eigenvalues (power iteration with a cyclic-Jacobi fallback).
//!
//! Summation order is part of this module's contract: `dot` and every sum
//! derived from it accumulate strictly left to right in index order, so
//! repeated runs on one platform reproduce values bit for bit.

use crate::error::Error;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Builds from a flat row-major buffer. Panics on length mismatch.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat buffer length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Matrix-vector product with left-to-right row dots.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    /// Gram matrix `selfᵀ · self` (symmetric, positive semidefinite).
    pub fn gram(&self) -> Matrix {
        let n = self.cols;
        let mut g = Matrix::zeros(n, n);
        for j in 0..n {
            for l in j..n {
                let mut acc = 0.0;
                for i in 0..self.rows {
                    acc += self.get(i, j) * self.get(i, l);
                }
                g.set(j, l, acc);
                g.set(l, j, acc);
            }
        }
        g
    }

    /// Solves `self · x = rhs` by LU factorization with partial pivoting.
    ///
    /// An exactly zero pivot column reports `SingularSystem`; the systems
    /// this crate builds are strictly diagonally dominant, so that signals
    /// numerical breakdown rather than an expected input class.
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>, Error> {
        assert_eq!(self.rows, self.cols, "solve requires a square matrix");
        assert_eq!(rhs.len(), self.rows);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut b = rhs.to_vec();

        for col in 0..n {
            let mut pivot_row = col;
            let mut pivot_mag = a[col * n + col].abs();
            for r in col + 1..n {
                let mag = a[r * n + col].abs();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = r;
                }
            }
            if pivot_mag == 0.0 {
                return Err(Error::SingularSystem { index: col });
            }
            if pivot_row != col {
                for c in 0..n {
                    a.swap(col * n + c, pivot_row * n + c);
                }
                b.swap(col, pivot_row);
            }
            let pivot = a[col * n + col];
            for r in col + 1..n {
                let f = a[r * n + col] / pivot;
                if f != 0.0 {
                    a[r * n + col] = 0.0;
                    for c in col + 1..n {
                        a[r * n + c] -= f * a[col * n + c];
                    }
                    b[r] -= f * b[col];
                }
            }
        }

        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            for j in i + 1..n {
                s -= a[i * n + j] * x[j];
            }
            x[i] = s / a[i * n + i];
        }
        Ok(x)
    }
}

/// Strict left-to-right dot product. The accumulation order is load-bearing:
/// row sums and neighbor sums elsewhere rely on it agreeing bit for bit.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for i in 0..a.len() {
        acc += a[i] * b[i];
    }
    acc
}

/// Euclidean norm, left-to-right accumulation.
pub fn norm2(v: &[f64]) -> f64 {
    let mut acc = 0.0;
    for x in v {
        acc += x * x;
    }
    acc.sqrt()
}

/// Euclidean distance between equal-length slices.
pub fn dist2(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for i in 0..a.len() {
        let d = a[i] - b[i];
        acc += d * d;
    }
    acc.sqrt()
}

/// Chebyshev distance between equal-length slices.
pub fn dist_inf(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut m = 0.0f64;
    for i in 0..a.len() {
        m = m.max((a[i] - b[i]).abs());
    }
    m
}

/// Neumaier-compensated accumulator for long sums of small terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if !t.is_finite() {
            self.sum = t;
            self.comp = 0.0;
            return;
        }
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Largest eigenvalue of a symmetric nonnegative matrix by power iteration.
///
/// Starts from the positive uniform vector, which has nonzero overlap with
/// the dominant eigenspace of any nonnegative symmetric matrix. Returns
/// `None` when the residual criterion is not met within `max_iter` sweeps.
pub(crate) fn power_iteration_max_eig(g: &Matrix, tol: f64, max_iter: usize) -> Option<f64> {
    let n = g.rows();
    let scale = g.max_abs();
    if scale == 0.0 {
        return Some(0.0);
    }
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..max_iter {
        let w = g.matvec(&v);
        let norm = norm2(&w);
        if norm == 0.0 {
            return Some(0.0);
        }
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / norm;
        }
        let gv = g.matvec(&v);
        let lambda = dot(&v, &gv);
        let mut res = 0.0;
        for i in 0..n {
            let d = gv[i] - lambda * v[i];
            res += d * d;
        }
        if res.sqrt() <= tol * scale.max(lambda) {
            return Some(lambda);
        }
    }
    None
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi sweeps.
///
/// Deterministic fallback for small matrices when power iteration stalls
/// (nearly degenerate leading eigenvalues).
pub(crate) fn jacobi_max_eig(g: &Matrix) -> f64 {
    let n = g.rows();
    let mut a = g.clone();
    let frob = {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                s += a.get(i, j) * a.get(i, j);
            }
        }
        s.sqrt()
    };
    if frob == 0.0 {
        return 0.0;
    }

    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a.get(i, j) * a.get(i, j);
            }
        }
        if off.sqrt() <= 1e-14 * frob {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let tau = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
            }
        }
    }

    let mut max = f64::NEG_INFINITY;
    for i in 0..n {
        max = max.max(a.get(i, i));
    }
    max
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_small_system() {
        let m = Matrix::from_vec(2, 2, vec![2.0, -1.0, -1.0, 2.0]);
        let x = m.solve(&[-0.2, 0.2]).unwrap();
        assert!((x[0] - (-0.2 / 3.0)).abs() < 1e-15);
        assert!((x[1] - (0.2 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn solve_reports_singular() {
        let m = Matrix::from_vec(2, 2, vec![1.0, 1.0, 1.0, 1.0]);
        assert_eq!(m.solve(&[1.0, 2.0]), Err(Error::SingularSystem { index: 1 }));
    }

    #[test]
    fn solve_uses_pivoting() {
        // Zero leading entry requires a row swap.
        let m = Matrix::from_vec(2, 2, vec![0.0, 1.0, 1.0, 0.0]);
        let x = m.solve(&[3.0, 4.0]).unwrap();
        assert_eq!(x, vec![4.0, 3.0]);
    }

    #[test]
    fn dot_is_left_to_right() {
        // Assert the exact fold order, not just the value.
        let a = [1e16, 1.0, -1e16];
        let b = [1.0, 1.0, 1.0];
        let expected = ((0.0 + 1e16 * 1.0) + 1.0) + (-1e16);
        assert_eq!(dot(&a, &b), expected);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::default();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-16);
        }
        s.add(-1.0);
        assert!((s.value() - 1e-15).abs() < 1e-30);
    }

    #[test]
    fn compensated_sum_tolerates_infinities() {
        let mut s = CompensatedSum::default();
        s.add(f64::NEG_INFINITY);
        s.add(-1.0);
        assert_eq!(s.value(), f64::NEG_INFINITY);
    }

    #[test]
    fn power_iteration_matches_hand_values() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let g = Matrix::from_vec(2, 2, vec![2.0, 1.0, 1.0, 2.0]);
        let lam = power_iteration_max_eig(&g, 1e-12, 100_000).unwrap();
        assert!((lam - 3.0).abs() < 1e-10);
    }

    #[test]
    fn jacobi_matches_power_iteration() {
        let g = Matrix::from_vec(3, 3, vec![4.0, 1.0, 0.5, 1.0, 3.0, 0.2, 0.5, 0.2, 1.0]);
        let a = power_iteration_max_eig(&g, 1e-12, 100_000).unwrap();
        let b = jacobi_max_eig(&g);
        assert!((a - b).abs() < 1e-9, "power {a} vs jacobi {b}");
    }

    #[test]
    fn jacobi_handles_degenerate_spectrum() {
        let g = Matrix::from_vec(2, 2, vec![0.25, 0.0, 0.0, 0.25]);
        assert!((jacobi_max_eig(&g) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn power_iteration_stalls_on_near_degenerate_pairs() {
        // Gap of 1e-5 needs ~10^6 iterations at tolerance 1e-12; the cap
        // kicks in and the Jacobi fallback must pick up the exact value.
        let g = Matrix::from_vec(
            3,
            3,
            vec![1.0, 0.0, 0.0, 0.0, 1.0 - 1e-5, 0.0, 0.0, 0.0, 0.5],
        );
        assert_eq!(power_iteration_max_eig(&g, 1e-12, 100_000), None);
        assert!((jacobi_max_eig(&g) - 1.0).abs() < 1e-12);
    }
}
