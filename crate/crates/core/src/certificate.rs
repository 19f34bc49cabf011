//! Optimality certificate from the dual weights.
//!
//! The multipliers `θ` of the point-evaluation constraints define the moment
//! vector `y_α = Σ_p θ_p (x_p)^α`. If the moment matrix `M_s(y)` has numerical
//! rank one, `x* = (y_{e_1}, …, y_{e_n})` is a global minimizer; more generally
//! a flat extension `rank M_s(y) = rank M_{s−r}(y)` with PSD localizing
//! matrices certifies that the bound is the global minimum.

use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{min_eigenvalue, sym_eigenvalues_desc};
use crate::polynomial::{MonomialBasis, Polynomial};
use crate::relaxation::{SdpInstance, SemialgebraicProblem};
use crate::sdp_solver::SolveResult;

pub const DEFAULT_RANK_RATIO: f64 = 1e4;
pub const FEASIBILITY_TOL: f64 = 1e-6;
/// Relative (to `1 + trace`) tolerance for the PSD tests.
pub const PSD_TOL: f64 = 1e-6;

/// Truncated moment vector indexed by `N^n_{order}` in graded lex order.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentData {
    pub order: u32,
    pub basis: MonomialBasis,
    pub y: Vec<f64>,
    pub source_points: Vec<Vec<f64>>,
    pub theta: Vec<f64>,
}

impl MomentData {
    pub fn num_vars(&self) -> usize {
        self.basis.num_vars()
    }

    /// `y_α`, or `None` when `|α|` exceeds the order.
    pub fn get(&self, alpha: &[u32]) -> Option<f64> {
        self.basis.index_of(alpha).map(|i| self.y[i])
    }
}

/// `y_α = Σ_p θ_p (x_p)^α` for every `|α| <= order`.
pub fn build_moment_vector(theta: &[f64], points: &[Vec<f64>], order: u32) -> Result<MomentData> {
    if theta.len() != points.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            found: theta.len(),
        });
    }
    let n = points.first().map_or(0, Vec::len);
    if n == 0 {
        return Err(Error::NoVariables);
    }
    let basis = MonomialBasis::new(n, order);
    let mut y = alloc::vec![0.0; basis.len()];
    for (x, &th) in points.iter().zip(theta) {
        let v = basis.evaluate(x)?;
        for (yi, vi) in y.iter_mut().zip(v) {
            *yi += th * vi;
        }
    }
    Ok(MomentData {
        order,
        basis,
        y,
        source_points: points.to_vec(),
        theta: theta.to_vec(),
    })
}

/// `M_ℓ(y)(α, β) = y_{α+β}` over `monomial_basis(n, ℓ)`.
pub fn moment_matrix(y: &MomentData, ell: u32) -> Result<DMatrix<f64>> {
    localizing_matrix(y, &Polynomial::constant(y.num_vars(), 1.0), ell)
}

/// `M_ℓ(g y)(α, β) = Σ_γ g_γ y_{α+β+γ}`.
pub fn localizing_matrix(y: &MomentData, g: &Polynomial, ell: u32) -> Result<DMatrix<f64>> {
    let g = g.canonicalize();
    let needed = 2 * ell + g.degree();
    if needed > y.order {
        return Err(Error::MomentOrder {
            needed,
            available: y.order,
        });
    }
    if g.num_vars() != y.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: y.num_vars(),
            found: g.num_vars(),
        });
    }
    let rows = MonomialBasis::new(y.num_vars(), ell);
    let k = rows.len();
    let mut m = DMatrix::zeros(k, k);
    let mut idx = alloc::vec![0u32; y.num_vars()];
    for i in 0..k {
        for j in i..k {
            let mut acc = 0.0;
            for t in g.terms() {
                for (v, ((a, b), c)) in idx
                    .iter_mut()
                    .zip(rows.get(i).iter().zip(rows.get(j)).zip(&t.exponents))
                {
                    *v = a + b + c;
                }
                acc += t.coeff * y.get(&idx).expect("order checked above");
            }
            m[(i, j)] = acc;
            m[(j, i)] = acc;
        }
    }
    Ok(m)
}

/// Number of eigenvalues `>= λ₁ / ratio` after clipping negatives to zero.
pub fn numerical_rank(m: &DMatrix<f64>, ratio: f64) -> usize {
    let ev = sym_eigenvalues_desc(m);
    let top = ev.first().copied().unwrap_or(0.0).max(0.0);
    if top == 0.0 {
        return 0;
    }
    ev.iter().filter(|&&l| l.max(0.0) >= top / ratio).count()
}

fn is_psd(m: &DMatrix<f64>) -> bool {
    m.nrows() == 0 || min_eigenvalue(m) >= -PSD_TOL * (1.0 + m.trace().max(0.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    /// False when the solve result carries no usable dual weights.
    pub available: bool,
    pub s: u32,
    pub r: u32,
    pub moment_matrix: DMatrix<f64>,
    pub localizing_matrices: Vec<DMatrix<f64>>,
    pub rank_ms: usize,
    pub rank_ms_minus_r: usize,
    pub moment_psd: bool,
    pub localizing_psd: Vec<bool>,
    pub rank_one: bool,
    pub flat_extension: bool,
    pub candidate: Option<Vec<f64>>,
    pub candidate_feasible: bool,
    pub candidate_value: Option<f64>,
}

impl CertificateReport {
    /// Rank-one with a feasible candidate, or a flat extension.
    pub fn certified(&self) -> bool {
        self.available && ((self.rank_one && self.candidate_feasible) || self.flat_extension)
    }

    fn unavailable(s: u32, r: u32) -> Self {
        Self {
            available: false,
            s,
            r,
            moment_matrix: DMatrix::zeros(0, 0),
            localizing_matrices: Vec::new(),
            rank_ms: 0,
            rank_ms_minus_r: 0,
            moment_psd: false,
            localizing_psd: Vec::new(),
            rank_one: false,
            flat_extension: false,
            candidate: None,
            candidate_feasible: false,
            candidate_value: None,
        }
    }
}

/// `(s, r)`: `s` smallest with `2s >= max(deg f, deg g_j)`, `r = max ⌈deg g_j / 2⌉`.
pub fn certificate_orders(problem: &SemialgebraicProblem) -> (u32, u32) {
    let max_deg = problem
        .objective()
        .degree()
        .max(problem.max_generator_degree());
    let s = max_deg.div_ceil(2);
    let r = problem
        .generators()
        .iter()
        .map(|g| g.degree().div_ceil(2))
        .max()
        .unwrap_or(0);
    (s, r)
}

pub fn verify(
    problem: &SemialgebraicProblem,
    result: &SolveResult,
    instance: &SdpInstance,
) -> CertificateReport {
    verify_with_ratio(problem, result, instance, DEFAULT_RANK_RATIO)
}

pub fn verify_with_ratio(
    problem: &SemialgebraicProblem,
    result: &SolveResult,
    instance: &SdpInstance,
    ratio: f64,
) -> CertificateReport {
    let (s, r) = certificate_orders(problem);
    if result.theta.is_empty() || result.theta.len() != instance.kept_rows.len() {
        return CertificateReport::unavailable(s, r);
    }
    let points: Vec<Vec<f64>> = instance
        .kept_rows
        .iter()
        .map(|&p| instance.points[p].clone())
        .collect();
    let Ok(y) = build_moment_vector(&result.theta, &points, 2 * s) else {
        return CertificateReport::unavailable(s, r);
    };
    certify_moments(problem, &y, s, r, ratio)
}

/// Rank tests on a moment vector of order at least `2s`.
pub fn certify_moments(
    problem: &SemialgebraicProblem,
    y: &MomentData,
    s: u32,
    r: u32,
    ratio: f64,
) -> CertificateReport {
    let (Ok(ms), Ok(ms_r)) = (moment_matrix(y, s), moment_matrix(y, s - r)) else {
        return CertificateReport::unavailable(s, r);
    };
    let localizing_matrices: Vec<DMatrix<f64>> = problem
        .generators()
        .iter()
        .filter_map(|g| localizing_matrix(y, g, s - r).ok())
        .collect();
    let localizing_psd: Vec<bool> = localizing_matrices.iter().map(is_psd).collect();
    let rank_ms = numerical_rank(&ms, ratio);
    let rank_ms_minus_r = numerical_rank(&ms_r, ratio);
    let moment_psd = is_psd(&ms);
    let rank_one = rank_ms == 1;
    let flat_extension = moment_psd
        && localizing_psd.iter().all(|&b| b)
        && rank_ms == rank_ms_minus_r
        && rank_ms > 0;

    let (candidate, candidate_feasible, candidate_value) = if rank_one {
        let n = y.num_vars();
        let x: Vec<f64> = (0..n)
            .map(|i| {
                let mut e = alloc::vec![0u32; n];
                e[i] = 1;
                y.get(&e).unwrap_or(0.0)
            })
            .collect();
        let feasible = problem.is_feasible(&x, FEASIBILITY_TOL);
        let value = problem.objective().evaluate(&x).ok();
        (Some(x), feasible, value)
    } else {
        (None, false, None)
    };

    CertificateReport {
        available: true,
        s,
        r,
        moment_matrix: ms,
        localizing_matrices,
        rank_ms,
        rank_ms_minus_r,
        moment_psd,
        localizing_psd,
        rank_one,
        flat_extension,
        candidate,
        candidate_feasible,
        candidate_value,
    }
}
