//! Matrices of normal-ordered operators in the eigenbasis of the harmonic
//! oscillator `-d^2 + omega^2 x^2` on `R` (n = 1).
//!
//! With `a = (omega x + d)/sqrt(2 omega)`, `adag = (omega x - d)/sqrt(2 omega)`
//! the ladder matrices are
//!
//! ```text
//! <k-1| x |k> = sqrt(k/(2 omega))        <k+1| x |k> = sqrt((k+1)/(2 omega))
//! <k-1| d |k> = sqrt(omega k / 2)        <k+1| d |k> = -sqrt(omega (k+1)/2)
//! ```
//!
//! `hermite_matrix` builds each term at an extended size `K + order` before
//! cropping, so every returned entry `<m|W|k>`, `m, k < K`, is the exact
//! matrix element (no truncation error inside the block). Products of
//! truncations still differ from truncated products in the last `d` rows and
//! columns, `d` = band width of the right factor; callers compare top-left
//! `(K-d) x (K-d)` blocks.

use crate::error::DomainError;
use crate::scalar::C64;
use crate::weyl::WeylOperator;
use nalgebra::DMatrix;
use num_complex::Complex;
use serde_json::json;

pub type CMat = DMatrix<C64>;

/// A `K x K` operator truncation in the frequency-`omega` oscillator basis.
#[derive(Debug, Clone)]
pub struct HermiteMatrix {
    pub k: usize,
    pub omega: f64,
    pub mat: CMat,
}

impl HermiteMatrix {
    pub fn trace(&self) -> C64 {
        let mut s = Complex::new(0.0, 0.0);
        for i in 0..self.k {
            s += self.mat[(i, i)];
        }
        s
    }

    /// Hilbert-Schmidt (Frobenius) norm.
    pub fn hs_norm(&self) -> f64 {
        self.mat.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn singular_values(&self) -> Vec<f64> {
        let svd = self.mat.clone().svd(false, false);
        let mut s: Vec<f64> = svd.singular_values.iter().copied().collect();
        s.sort_by(|a, b| b.partial_cmp(a).unwrap());
        s
    }

    pub fn op_norm(&self) -> f64 {
        self.singular_values().first().copied().unwrap_or(0.0)
    }

    /// Trace norm (sum of singular values).
    pub fn trace_norm(&self) -> f64 {
        self.singular_values().iter().sum()
    }

    /// Rows interleaved as `re,im,re,im,...`, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.k {
            let mut cells = Vec::with_capacity(2 * self.k);
            for j in 0..self.k {
                let c = self.mat[(i, j)];
                cells.push(format!("{}", c.re));
                cells.push(format!("{}", c.im));
            }
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.k)
            .map(|i| {
                (0..self.k)
                    .map(|j| {
                        let c = self.mat[(i, j)];
                        [c.re, c.im]
                    })
                    .collect()
            })
            .collect();
        json!({ "k": self.k, "omega": self.omega, "entries": rows })
    }
}

/// Exact ladder matrix of multiplication by `x`.
pub fn ladder_x(size: usize, omega: f64) -> CMat {
    let mut m = CMat::zeros(size, size);
    for k in 1..size {
        let v = (k as f64 / (2.0 * omega)).sqrt();
        m[(k - 1, k)] = Complex::new(v, 0.0);
        m[(k, k - 1)] = Complex::new(v, 0.0);
    }
    m
}

/// Exact ladder matrix of `d/dx`.
pub fn ladder_d(size: usize, omega: f64) -> CMat {
    let mut m = CMat::zeros(size, size);
    for k in 1..size {
        let v = (omega * k as f64 / 2.0).sqrt();
        m[(k - 1, k)] = Complex::new(v, 0.0);
        m[(k, k - 1)] = Complex::new(-v, 0.0);
    }
    m
}

/// Matrix of a normal-ordered operator in the first `K` oscillator
/// eigenfunctions; every entry of the returned block is exact.
pub fn hermite_matrix(w: &WeylOperator, k: usize, omega: f64) -> Result<HermiteMatrix, DomainError> {
    if w.n() != 1 {
        return Err(DomainError::RankOneOnly { n: w.n() });
    }
    if k < 1 {
        return Err(DomainError::InvalidTruncation);
    }
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(DomainError::InvalidFrequency { omega });
    }
    let ext = k + w.total_order() as usize;
    let max_p = w.terms().keys().map(|(p, _)| p[0]).max().unwrap_or(0) as usize;
    let max_q = w.terms().keys().map(|(_, q)| q[0]).max().unwrap_or(0) as usize;
    let x = ladder_x(ext, omega);
    let d = ladder_d(ext, omega);
    let mut x_pows = Vec::with_capacity(max_p + 1);
    x_pows.push(CMat::identity(ext, ext));
    for i in 1..=max_p {
        let next = &x_pows[i - 1] * &x;
        x_pows.push(next);
    }
    let mut d_pows = Vec::with_capacity(max_q + 1);
    d_pows.push(CMat::identity(ext, ext));
    for i in 1..=max_q {
        let next = &d_pows[i - 1] * &d;
        d_pows.push(next);
    }
    let mut acc = CMat::zeros(ext, ext);
    for ((p, q), c) in w.terms() {
        let prod = &x_pows[p[0] as usize] * &d_pows[q[0] as usize];
        acc += prod * *c;
    }
    let mat = acc.view((0, 0), (k, k)).into_owned();
    Ok(HermiteMatrix { k, omega, mat })
}

/// Values of the first `K` orthonormal oscillator eigenfunctions on a grid;
/// row `k` holds `h_k` (three-term recurrence, stable downward in amplitude).
pub fn hermite_functions(k: usize, omega: f64, grid: &[f64]) -> Vec<Vec<f64>> {
    let m = grid.len();
    let mut rows = vec![vec![0.0; m]; k];
    let norm0 = (omega / std::f64::consts::PI).powf(0.25);
    for (i, &u) in grid.iter().enumerate() {
        rows[0][i] = norm0 * (-omega * u * u / 2.0).exp();
    }
    if k > 1 {
        for i in 0..m {
            rows[1][i] = (2.0 * omega).sqrt() * grid[i] * rows[0][i];
        }
    }
    for j in 1..k.saturating_sub(1) {
        let jf = j as f64;
        for i in 0..m {
            rows[j + 1][i] = ((2.0 * omega).sqrt() * grid[i] * rows[j][i]
                - jf.sqrt() * rows[j - 1][i])
                / (jf + 1.0).sqrt();
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra;
    use crate::weyl::{represent, Convention, RepParameter};

    fn lam(v: f64) -> RepParameter {
        RepParameter::new(v).unwrap()
    }

    #[test]
    fn identity_maps_to_identity() {
        let w = WeylOperator::identity(1);
        let h = hermite_matrix(&w, 8, 3.0).unwrap();
        assert_eq!(h.mat, CMat::identity(8, 8));
    }

    #[test]
    fn x_is_tridiagonal_sqrt_half() {
        // omega = 1: entries sqrt((k+1)/2) on the two off-diagonals
        let w = WeylOperator::monomial(1, &[1], &[0], Complex::new(1.0, 0.0));
        let h = hermite_matrix(&w, 6, 1.0).unwrap();
        for k in 0..5 {
            let expect = ((k as f64 + 1.0) / 2.0).sqrt();
            assert!((h.mat[(k, k + 1)].re - expect).abs() < 1e-15);
            assert!((h.mat[(k + 1, k)].re - expect).abs() < 1e-15);
        }
        assert!(h.mat[(0, 0)].norm() == 0.0);
    }

    #[test]
    fn oscillator_spectrum_is_exact() {
        // pi_1(L_0) at omega = 4 is diagonal with entries -(2k+1)
        let l0 = algebra::sublaplacian(1, &crate::scalar::crat_zero());
        let w = represent(&l0, lam(1.0), Convention::Homomorphic);
        let h = hermite_matrix(&w, 64, 4.0).unwrap();
        for i in 0..64 {
            for j in 0..64 {
                let v = h.mat[(i, j)];
                if i == j {
                    let expect = -(2.0 * i as f64 + 1.0);
                    assert!((v.re - expect).abs() < 1e-12, "diag {i}: {v}");
                    assert!(v.im.abs() < 1e-12);
                } else {
                    assert!(v.norm() < 1e-12, "offdiag {i},{j}: {v}");
                }
            }
        }
    }

    #[test]
    fn truncated_product_block_rule() {
        // hermite(W1 . W2) agrees with hermite(W1) * hermite(W2) on the
        // top-left (K - d) block, d = band of W2
        let w1 = represent(&algebra::factor_a(), lam(1.0), Convention::Homomorphic);
        let w2 = represent(
            &algebra::heisenberg_laplacian(1),
            lam(1.0),
            Convention::Homomorphic,
        );
        let k = 24;
        let d = w2.total_order() as usize;
        let exact = hermite_matrix(&w1.compose(&w2), k, 4.0).unwrap();
        let prod = &hermite_matrix(&w1, k, 4.0).unwrap().mat * &hermite_matrix(&w2, k, 4.0).unwrap().mat;
        let kb = k - d;
        let lhs = exact.mat.view((0, 0), (kb, kb)).into_owned();
        let rhs = prod.view((0, 0), (kb, kb)).into_owned();
        let dev = (&lhs - &rhs).iter().map(|c| c.norm()).fold(0.0, f64::max);
        assert!(dev < 1e-12, "block deviation {dev}");
    }

    #[test]
    fn hermite_functions_orthonormal_on_grid() {
        let omega = 2.5;
        let kk = 12;
        let m = 1501;
        let half = (2.0 * (2 * kk) as f64 / omega).sqrt() + 4.0;
        let grid: Vec<f64> = (0..m)
            .map(|i| -half + 2.0 * half * i as f64 / (m as f64 - 1.0))
            .collect();
        let du = grid[1] - grid[0];
        let rows = hermite_functions(kk, omega, &grid);
        for a in 0..kk {
            for b in 0..kk {
                let dot: f64 = rows[a].iter().zip(&rows[b]).map(|(x, y)| x * y).sum::<f64>() * du;
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-9, "({a},{b}): {dot}");
            }
        }
    }

    #[test]
    fn svd_and_norms_behave() {
        let w = represent(&algebra::t(1), lam(2.0), Convention::Homomorphic);
        let h = hermite_matrix(&w, 10, 4.0).unwrap();
        // i*2*I: all singular values 2
        let sv = h.singular_values();
        assert!(sv.iter().all(|s| (s - 2.0).abs() < 1e-13));
        assert!((h.trace() - Complex::new(0.0, 20.0)).norm() < 1e-12);
        assert!((h.hs_norm() - (40.0f64).sqrt()).abs() < 1e-12);
        assert!((h.trace_norm() - 20.0).abs() < 1e-12);
    }

    #[test]
    fn bad_arguments_rejected() {
        let w = WeylOperator::identity(1);
        assert!(hermite_matrix(&w, 0, 1.0).is_err());
        assert!(hermite_matrix(&w, 4, 0.0).is_err());
        assert!(hermite_matrix(&w, 4, -1.0).is_err());
        let w2 = WeylOperator::identity(2);
        assert!(hermite_matrix(&w2, 4, 1.0).is_err());
    }
}
