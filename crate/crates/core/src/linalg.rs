//! Dense complex linear algebra helpers on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type CMat = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn inverse(m: &CMat) -> Option<CMat> {
    if m.nrows() != m.ncols() || m.determinant().norm() <= 1e-12 {
        return None;
    }
    m.clone().try_inverse()
}

pub fn frobenius(m: &CMat) -> f64 {
    m.norm()
}

/// `‖a − b‖_F`.
pub fn distance(a: &CMat, b: &CMat) -> f64 {
    (a - b).norm()
}

pub fn trace(m: &CMat) -> Complex64 {
    m.trace()
}

/// Column-major vectorization, so that `vec(A X B) = (Bᵀ ⊗ A) vec(X)`.
pub fn vectorize(m: &CMat) -> Vec<Complex64> {
    m.as_slice().to_vec()
}

pub fn devectorize(n: usize, v: &[Complex64]) -> CMat {
    CMat::from_column_slice(n, n, v)
}

/// Singular values in decreasing order.
pub fn singular_values(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return vec![];
    }
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Numerical rank with a relative threshold and the spectral gap around it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankEstimate {
    pub rank: usize,
    /// Relative threshold `τ`: singular values above `τ·σ_max` count.
    pub threshold: f64,
    pub sigma_max: f64,
    /// Smallest retained singular value divided by `σ_max`.
    pub smallest_kept: Option<f64>,
    /// Largest discarded singular value divided by `σ_max`.
    pub largest_dropped: Option<f64>,
    /// False when some normalized singular value lies in `(τ/10, 10τ)`.
    pub conclusive: bool,
}

/// Below this largest singular value a matrix counts as zero.
pub const ZERO_FLOOR: f64 = 1e-12;

impl RankEstimate {
    pub fn from_singular_values(sv: &[f64], threshold: f64) -> RankEstimate {
        let sigma_max = sv.iter().copied().fold(0.0, f64::max);
        if sigma_max <= ZERO_FLOOR {
            return RankEstimate {
                rank: 0,
                threshold,
                sigma_max,
                smallest_kept: None,
                largest_dropped: if sv.is_empty() { None } else { Some(0.0) },
                conclusive: true,
            };
        }
        let rel: Vec<f64> = sv.iter().map(|s| s / sigma_max).collect();
        let rank = rel.iter().filter(|&&r| r > threshold).count();
        let smallest_kept = rel.iter().copied().filter(|&r| r > threshold).reduce(f64::min);
        let largest_dropped = rel.iter().copied().filter(|&r| r <= threshold).reduce(f64::max);
        let conclusive = rel.iter().all(|&r| r <= threshold / 10.0 || r >= threshold * 10.0);
        RankEstimate { rank, threshold, sigma_max, smallest_kept, largest_dropped, conclusive }
    }

    pub fn of(m: &CMat, threshold: f64) -> RankEstimate {
        RankEstimate::from_singular_values(&singular_values(m), threshold)
    }

    /// Ratio of the smallest kept to the largest dropped singular value.
    pub fn gap(&self) -> Option<f64> {
        match (self.smallest_kept, self.largest_dropped) {
            (Some(k), Some(d)) if d > 0.0 => Some(k / d),
            (Some(_), _) => Some(f64::INFINITY),
            _ => None,
        }
    }
}

/// Orthonormal basis of the trace-zero matrices under the Frobenius inner
/// product, as the columns of an `n² × (n²−1)` matrix in column-major vec form.
///
/// Off-diagonal units `E_ij` come first, then the diagonal vectors
/// `(e_1 + ⋯ + e_k − k e_{k+1}) / √(k(k+1))`.
pub fn sl_basis(n: usize) -> CMat {
    let dim = n * n;
    let mut q = CMat::zeros(dim, dim.saturating_sub(1));
    let mut col = 0;
    for j in 0..n {
        for i in 0..n {
            if i != j {
                q[(j * n + i, col)] = ONE;
                col += 1;
            }
        }
    }
    for k in 1..n {
        let norm = ((k * (k + 1)) as f64).sqrt();
        for d in 0..k {
            q[(d * n + d, col)] = Complex64::new(1.0 / norm, 0.0);
        }
        q[(k * n + k, col)] = Complex64::new(-(k as f64) / norm, 0.0);
        col += 1;
    }
    q
}

/// The matrix of `X ↦ g X g⁻¹` on trace-zero matrices in the basis of [`sl_basis`].
pub fn adjoint_action(g: &CMat, g_inv: &CMat, basis: &CMat) -> CMat {
    let n = g.nrows();
    let mut images = CMat::zeros(n * n, basis.ncols());
    for k in 0..basis.ncols() {
        let x = devectorize(n, basis.column(k).as_slice());
        let y = g * x * g_inv;
        images.column_mut(k).copy_from_slice(y.as_slice());
    }
    basis.adjoint() * images
}

/// `exp(X)` by scaling and squaring with a truncated Taylor series.
pub fn expm(x: &CMat) -> CMat {
    let n = x.nrows();
    let norm = x.norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = x / Complex64::new(2f64.powi(squarings as i32), 0.0);
    let mut result = identity(n);
    let mut term = identity(n);
    for k in 1..=20 {
        term = &term * &scaled / Complex64::new(k as f64, 0.0);
        result += &term;
        if term.norm() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Block-diagonal matrix from square blocks.
pub fn block_diag(blocks: &[CMat]) -> CMat {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = CMat::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        out.view_mut((off, off), (b.nrows(), b.ncols())).copy_from(b);
        off += b.nrows();
    }
    out
}

/// Principal `m`-th root.
pub fn principal_root(z: Complex64, m: usize) -> Complex64 {
    Complex64::from_polar(z.norm().powf(1.0 / m as f64), z.arg() / m as f64)
}
