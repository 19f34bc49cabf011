//! Small dense helpers on top of nalgebra.

use alloc::vec::Vec;

pub use nalgebra::{DMatrix, DVector};

/// `(A + Aᵀ) / 2` in place.
pub fn symmetrize(a: &mut DMatrix<f64>) {
    let n = a.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
}

/// Eigenvalues of a symmetric matrix in descending order.
pub fn sym_eigenvalues_desc(a: &DMatrix<f64>) -> Vec<f64> {
    if a.nrows() == 0 {
        return Vec::new();
    }
    let mut s = a.clone();
    symmetrize(&mut s);
    let mut ev: Vec<f64> = s.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

pub fn min_eigenvalue(a: &DMatrix<f64>) -> f64 {
    sym_eigenvalues_desc(a).last().copied().unwrap_or(0.0)
}

/// Frobenius inner product `⟨A, B⟩ = trace(AᵀB)`.
pub fn frob(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

pub fn trace(a: &DMatrix<f64>) -> f64 {
    a.diagonal().sum()
}

/// Lower Cholesky factor, or `None` if `a` is not numerically positive definite.
pub fn cholesky_lower(a: &DMatrix<f64>) -> Option<DMatrix<f64>> {
    nalgebra::Cholesky::new(a.clone()).map(|c| c.l())
}

/// Largest `α` (possibly `+∞`) with `X + α ΔX ⪰ 0`, given `X = L Lᵀ`.
pub fn max_psd_step(l: &DMatrix<f64>, dx: &DMatrix<f64>) -> f64 {
    let Some(y) = l.solve_lower_triangular(dx) else {
        return 0.0;
    };
    // L⁻¹ ΔX L⁻ᵀ = L⁻¹ (L⁻¹ ΔX)ᵀ
    let Some(m) = l.solve_lower_triangular(&y.transpose()) else {
        return 0.0;
    };
    let lmin = min_eigenvalue(&m);
    if lmin >= 0.0 {
        f64::INFINITY
    } else {
        -1.0 / lmin
    }
}

/// Largest `α` with `x + α Δx >= 0` componentwise.
pub fn max_nonneg_step(x: &[f64], dx: &[f64]) -> f64 {
    let mut alpha = f64::INFINITY;
    for (&xi, &di) in x.iter().zip(dx) {
        if di < 0.0 {
            alpha = alpha.min(-xi / di);
        }
    }
    alpha
}

pub fn norm_inf(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(libm::fabs(*x)))
}

pub fn norm2(v: &[f64]) -> f64 {
    libm::sqrt(v.iter().map(|x| x * x).sum())
}
