//! Primal-dual interior-point method for the relaxation.
//!
//! Primal: `max t` s.t. `t c_p + H_p λ + ⟨A_p, Q⟩ = b_p`, `λ >= 0`, `Q ⪰ 0`.
//! Dual:   `min bᵀθ` s.t. `cᵀθ = 1`, `z = Hᵀθ >= 0`, `Z = Σ θ_p A_p ⪰ 0`.
//!
//! Infeasible path following with Mehrotra predictor-corrector, Nesterov-Todd
//! scaling on the PSD block and `λ/z` scaling on the nonnegative block. Each
//! iteration solves the Schur system
//!
//! ```text
//! M Δθ - c Δt = g,   cᵀ Δθ = r₁,   M = H diag(λ/z) Hᵀ + [⟨A_p, W A_q W⟩]
//! ```
//!
//! by bordered elimination of the free variable. For rank-one `A_p = v_p v_pᵀ`
//! the PSD part is `(Vᵀ W V)∘²` and no `A_p` is ever formed.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

use crate::linalg::{
    cholesky_lower, frob, max_nonneg_step, max_psd_step, min_eigenvalue, sym_eigenvalues_desc,
    symmetrize,
};
use crate::relaxation::{Mode, SdpInstance};

#[derive(Debug, Clone, PartialEq)]
pub struct SolverOptions {
    pub tol_gap: f64,
    pub tol_feas: f64,
    pub max_iter: usize,
    pub step_fraction: f64,
    pub infeasibility_ratio: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol_gap: 1e-8,
            tol_feas: 1e-8,
            max_iter: 100,
            step_fraction: 0.98,
            infeasibility_ratio: 1e8,
        }
    }
}

impl SolverOptions {
    pub fn is_valid(&self) -> bool {
        self.tol_gap > 0.0
            && self.tol_feas > 0.0
            && self.max_iter > 0
            && self.step_fraction > 0.0
            && self.step_fraction < 1.0
            && self.infeasibility_ratio > 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    MaxIter,
    NumericalFailure,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unbounded => "unbounded",
            SolveStatus::MaxIter => "max_iter",
            SolveStatus::NumericalFailure => "numerical_failure",
        }
    }

    /// Whether the result carries a usable bound.
    pub fn has_bound(self) -> bool {
        matches!(self, SolveStatus::Optimal | SolveStatus::MaxIter)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Primal objective `t`.
    pub bound: f64,
    /// Dual objective `bᵀθ`.
    pub dual_bound: f64,
    pub lambda: Vec<f64>,
    pub q_matrix: Option<DMatrix<f64>>,
    /// Equality multipliers, one per kept row.
    pub theta: Vec<f64>,
    /// `‖b − tc − Hλ − A(Q)‖∞ / (1 + ‖b‖∞)`.
    pub primal_residual: f64,
    /// Largest of `‖Hᵀθ − z‖∞`, `max |Σθ_p A_p − Z|`, `|1 − cᵀθ|`.
    pub dual_residual: f64,
    /// `max(|bᵀθ − t|, λᵀz + ⟨Q, Z⟩) / (1 + |t| + |bᵀθ|)`.
    pub gap: f64,
    pub iterations: usize,
    /// Condition estimate of the Schur matrix when it could not be factored.
    pub condition_estimate: Option<f64>,
}

/// The PSD part of the constraints, `Q ↦ (⟨A_p, Q⟩)_p`.
#[derive(Debug, Clone, PartialEq)]
pub enum PsdOperator {
    /// `A_p = v_p v_pᵀ`; the matrix is `s × rows` with column `p` equal to `v_p`.
    RankOne(DMatrix<f64>),
    /// Explicit symmetric `A_p`.
    Dense(Vec<DMatrix<f64>>),
}

impl PsdOperator {
    pub fn size(&self) -> usize {
        match self {
            PsdOperator::RankOne(v) => v.nrows(),
            PsdOperator::Dense(a) => a.first().map_or(0, DMatrix::nrows),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            PsdOperator::RankOne(v) => v.ncols(),
            PsdOperator::Dense(a) => a.len(),
        }
    }

    /// `(⟨A_p, Q⟩)_p`.
    pub fn apply(&self, q: &DMatrix<f64>) -> DVector<f64> {
        match self {
            PsdOperator::RankOne(v) => {
                let qv = q * v;
                DVector::from_iterator(
                    v.ncols(),
                    (0..v.ncols()).map(|p| v.column(p).dot(&qv.column(p))),
                )
            }
            PsdOperator::Dense(a) => {
                DVector::from_iterator(a.len(), a.iter().map(|ap| frob(ap, q)))
            }
        }
    }

    /// `Σ θ_p A_p`.
    pub fn adjoint(&self, theta: &DVector<f64>) -> DMatrix<f64> {
        match self {
            PsdOperator::RankOne(v) => {
                let mut vt = v.clone();
                for (p, mut col) in vt.column_iter_mut().enumerate() {
                    col *= theta[p];
                }
                let mut out = &vt * v.transpose();
                symmetrize(&mut out);
                out
            }
            PsdOperator::Dense(a) => {
                let s = self.size();
                let mut out = DMatrix::zeros(s, s);
                for (ap, &th) in a.iter().zip(theta.iter()) {
                    out += ap * th;
                }
                out
            }
        }
    }

    /// `S_pq = ⟨A_p, W A_q W⟩`.
    pub fn schur(&self, w: &DMatrix<f64>) -> DMatrix<f64> {
        match self {
            PsdOperator::RankOne(v) => {
                let wv = w * v;
                let mut s = v.tr_mul(&wv);
                s.apply(|x| *x *= *x);
                symmetrize(&mut s);
                s
            }
            PsdOperator::Dense(a) => {
                let n = a.len();
                let waw: Vec<DMatrix<f64>> = a.iter().map(|aq| w * aq * w).collect();
                let mut s = DMatrix::zeros(n, n);
                for p in 0..n {
                    for q in p..n {
                        let v = frob(&a[p], &waw[q]);
                        s[(p, q)] = v;
                        s[(q, p)] = v;
                    }
                }
                s
            }
        }
    }

    fn scale_rows(&mut self, r: &DVector<f64>) {
        match self {
            PsdOperator::RankOne(v) => {
                for (p, mut col) in v.column_iter_mut().enumerate() {
                    col *= libm::sqrt(r[p]);
                }
            }
            PsdOperator::Dense(a) => {
                for (ap, &rp) in a.iter_mut().zip(r.iter()) {
                    *ap *= rp;
                }
            }
        }
    }

    fn row_norm2(&self, p: usize) -> f64 {
        match self {
            // ‖v vᵀ‖_F = ‖v‖²
            PsdOperator::RankOne(v) => {
                let n = v.column(p).norm_squared();
                n * n
            }
            PsdOperator::Dense(a) => a[p].norm_squared(),
        }
    }
}

/// Generic instance: `rows` equalities `c_p t + H_p λ + ⟨A_p, Q⟩ = b_p`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicData {
    pub free_col: DVector<f64>,
    pub h: DMatrix<f64>,
    pub b: DVector<f64>,
    pub psd: Option<PsdOperator>,
}

impl ConicData {
    /// Restricts an assembled instance to its kept rows.
    pub fn from_instance(instance: &SdpInstance) -> Self {
        let rows = &instance.kept_rows;
        let h = instance.h_matrix.select_rows(rows.iter());
        let b = DVector::from_iterator(rows.len(), rows.iter().map(|&p| instance.rhs[p]));
        let psd = instance
            .basis_vectors
            .as_ref()
            .map(|bv| PsdOperator::RankOne(bv.select_rows(rows.iter()).transpose()));
        Self {
            free_col: DVector::from_element(rows.len(), 1.0),
            h,
            b,
            psd,
        }
    }

    pub fn rows(&self) -> usize {
        self.b.len()
    }
}

/// Schur matrix together with the free column eliminated by bordering.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurSystem {
    pub matrix: DMatrix<f64>,
    pub free_col: DVector<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NotPositiveDefinite;

/// `S = H diag(D) Hᵀ + (Vᵀ W V)∘²` with the free column kept for bordered
/// elimination. `V` is `s × rows`; `W` must be symmetric positive definite.
pub fn schur_assemble(
    w: &DMatrix<f64>,
    v: &DMatrix<f64>,
    d: &DVector<f64>,
    h: &DMatrix<f64>,
    free_col: &DVector<f64>,
) -> Result<SchurSystem, NotPositiveDefinite> {
    if cholesky_lower(w).is_none() {
        return Err(NotPositiveDefinite);
    }
    let mut matrix = lp_schur(h, d);
    matrix += PsdOperator::RankOne(v.clone()).schur(w);
    Ok(SchurSystem {
        matrix,
        free_col: free_col.clone(),
    })
}

fn lp_schur(h: &DMatrix<f64>, d: &DVector<f64>) -> DMatrix<f64> {
    let mut hs = h.clone();
    for (q, mut col) in hs.column_iter_mut().enumerate() {
        col *= libm::sqrt(d[q]);
    }
    let mut m = &hs * hs.transpose();
    symmetrize(&mut m);
    m
}

/// Factored Schur system; solves `M Δθ − c Δt = g`, `cᵀΔθ = r₁`.
pub struct SchurFactor {
    matrix: DMatrix<f64>,
    chol: Cholesky<f64, Dyn>,
    free_col: DVector<f64>,
    minv_c: DVector<f64>,
    c_minv_c: f64,
    pub regularization: f64,
}

impl SchurFactor {
    /// Cholesky with growing diagonal shifts; on failure returns a condition estimate.
    pub fn new(sys: SchurSystem) -> Result<Self, f64> {
        let maxdiag = sys
            .matrix
            .diagonal()
            .iter()
            .fold(0.0f64, |m, x| m.max(libm::fabs(*x)));
        let attempt = |eps: f64| -> Option<SchurFactor> {
            let mut m = sys.matrix.clone();
            if eps > 0.0 {
                for i in 0..m.nrows() {
                    m[(i, i)] += eps * maxdiag;
                }
            }
            let chol = m.cholesky()?;
            let minv_c = chol.solve(&sys.free_col);
            let c_minv_c = sys.free_col.dot(&minv_c);
            if !(c_minv_c.is_finite() && c_minv_c > 0.0) {
                return None;
            }
            let mut f = SchurFactor {
                matrix: sys.matrix.clone(),
                chol,
                free_col: sys.free_col.clone(),
                minv_c: minv_c.clone(),
                c_minv_c,
                regularization: eps * maxdiag,
            };
            f.minv_c = f.solve_m(&sys.free_col);
            f.c_minv_c = f.free_col.dot(&f.minv_c);
            Some(f)
        };
        for eps in [0.0, 1e-14, 1e-12, 1e-10, 1e-8, 1e-6] {
            if let Some(f) = attempt(eps) {
                return Ok(f);
            }
        }
        Err(condition_estimate(&sys.matrix))
    }

    /// `M⁻¹ rhs` with two steps of iterative refinement against the unshifted `M`.
    pub fn solve_m(&self, rhs: &DVector<f64>) -> DVector<f64> {
        let mut x = self.chol.solve(rhs);
        for _ in 0..2 {
            let r = rhs - &self.matrix * &x;
            x += self.chol.solve(&r);
        }
        x
    }

    /// `(Δθ, Δt)`.
    pub fn bordered(&self, g: &DVector<f64>, r1: f64) -> (DVector<f64>, f64) {
        let minv_g = self.solve_m(g);
        let dt = (r1 - self.free_col.dot(&minv_g)) / self.c_minv_c;
        (minv_g + &self.minv_c * dt, dt)
    }
}

fn condition_estimate(m: &DMatrix<f64>) -> f64 {
    let ev = sym_eigenvalues_desc(m);
    match (ev.first(), ev.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        _ => f64::INFINITY,
    }
}

/// Relative right-hand-side mismatch of dropped rows beyond which the
/// equality system is declared inconsistent.
pub const INCONSISTENCY_TOL: f64 = 1e-6;

const REFINEMENT_STEPS: usize = 2;

/// Give up after this many iterations without a better merit.
const NO_PROGRESS_ITERS: usize = 15;

/// A best iterate with merit above this is not reported as a bound after a
/// factorization breakdown.
const BREAKDOWN_MERIT: f64 = 1e-5;

/// Solves the relaxation restricted to `instance.kept_rows`.
pub fn solve(instance: &SdpInstance, opts: &SolverOptions) -> SolveResult {
    if instance.inconsistency > INCONSISTENCY_TOL {
        return inconsistent(instance);
    }
    solve_conic(&ConicData::from_instance(instance), opts)
}

/// LP relaxation: the same method with the PSD block dropped.
pub fn solve_lp(instance: &SdpInstance, opts: &SolverOptions) -> SolveResult {
    if instance.inconsistency > INCONSISTENCY_TOL {
        return inconsistent(instance);
    }
    let mut data = ConicData::from_instance(instance);
    if instance.mode == Mode::Lp {
        debug_assert!(data.psd.is_none());
    }
    data.psd = None;
    solve_conic(&data, opts)
}

/// No `(t, λ, Q)` satisfies the equalities, whatever the cone constraints.
fn inconsistent(instance: &SdpInstance) -> SolveResult {
    let s = instance.psd_size();
    SolveResult {
        status: SolveStatus::Infeasible,
        bound: f64::NEG_INFINITY,
        dual_bound: f64::NEG_INFINITY,
        lambda: vec![0.0; instance.num_pairs()],
        q_matrix: if s > 0 {
            Some(DMatrix::zeros(s, s))
        } else {
            None
        },
        theta: Vec::new(),
        primal_residual: instance.inconsistency,
        dual_residual: 0.0,
        gap: f64::INFINITY,
        iterations: 0,
        condition_estimate: None,
    }
}

/// Nesterov-Todd scaling point: `W Z W = Q`, `W = G Gᵀ`, `G⁻¹ Q G⁻ᵀ = Gᵀ Z G = diag(λ)`.
struct NtScaling {
    g: DMatrix<f64>,
    g_inv: DMatrix<f64>,
    w: DMatrix<f64>,
    lam: DVector<f64>,
    lq: DMatrix<f64>,
    lz: DMatrix<f64>,
}

fn nt_scaling(q: &DMatrix<f64>, z: &DMatrix<f64>) -> Option<NtScaling> {
    let lq = cholesky_lower(q)?;
    let lz = cholesky_lower(z)?;
    let svd = nalgebra::SVD::new(lz.tr_mul(&lq), true, true);
    let u = svd.u?;
    let v = svd.v_t?.transpose();
    let lam = svd.singular_values;
    if lam.iter().any(|&x| !(x > 0.0)) {
        return None;
    }
    let mut g = &lq * v;
    let mut g_inv = u.transpose() * lz.transpose();
    for i in 0..lam.len() {
        let r = libm::sqrt(lam[i]);
        g.column_mut(i).unscale_mut(r);
        g_inv.row_mut(i).unscale_mut(r);
    }
    let mut w = &g * g.transpose();
    symmetrize(&mut w);
    Some(NtScaling {
        g,
        g_inv,
        w,
        lam,
        lq,
        lz,
    })
}

struct Iterate {
    t: f64,
    lambda: DVector<f64>,
    q: DMatrix<f64>,
    theta: DVector<f64>,
    z: DVector<f64>,
    zm: DMatrix<f64>,
}

struct Residuals {
    rp: DVector<f64>,
    rz: DVector<f64>,
    rzm: DMatrix<f64>,
    r1: f64,
    pres: f64,
    dres: f64,
    gap: f64,
    mu: f64,
    dual_obj: f64,
}

struct Direction {
    dt: f64,
    dlambda: DVector<f64>,
    dq: DMatrix<f64>,
    dtheta: DVector<f64>,
    dz: DVector<f64>,
    dzm: DMatrix<f64>,
}

/// Solver entry point on generic conic data.
pub fn solve_conic(data: &ConicData, opts: &SolverOptions) -> SolveResult {
    let rows = data.rows();
    let np = data.h.ncols();
    let s = data.psd.as_ref().map_or(0, PsdOperator::size);

    // Row equilibration: every row of [c | H | A] gets unit norm. The dual
    // quantities Hᵀθ, Σθ_p A_p, cᵀθ, bᵀθ are invariant under θ = r∘θ̃.
    let r = DVector::from_iterator(
        rows,
        (0..rows).map(|p| {
            let mut n2 = data.free_col[p] * data.free_col[p] + data.h.row(p).norm_squared();
            if let Some(psd) = &data.psd {
                n2 += psd.row_norm2(p);
            }
            if n2 > 0.0 {
                1.0 / libm::sqrt(n2)
            } else {
                1.0
            }
        }),
    );
    let c = data.free_col.component_mul(&r);
    let mut h = data.h.clone();
    for (p, mut row) in h.row_iter_mut().enumerate() {
        row *= r[p];
    }
    let b = data.b.component_mul(&r);
    let psd = data.psd.clone().map(|mut op| {
        op.scale_rows(&r);
        op
    });
    let b_norm = data.b.amax();
    let dims = (np + s) as f64;

    let mut it = Iterate {
        t: 0.0,
        lambda: DVector::from_element(np, 1.0),
        q: DMatrix::identity(s, s),
        theta: DVector::zeros(rows),
        z: DVector::from_element(np, 1.0),
        zm: DMatrix::identity(s, s),
    };

    let residuals = |it: &Iterate| -> Residuals {
        let mut rp = &b - &c * it.t - &h * &it.lambda;
        if let Some(op) = &psd {
            rp -= op.apply(&it.q);
        }
        let rz = h.tr_mul(&it.theta) - &it.z;
        let rzm = match &psd {
            Some(op) => op.adjoint(&it.theta) - &it.zm,
            None => DMatrix::zeros(0, 0),
        };
        let r1 = 1.0 - c.dot(&it.theta);
        let compl = it.lambda.dot(&it.z) + if s > 0 { frob(&it.q, &it.zm) } else { 0.0 };
        let dual_obj = b.dot(&it.theta);
        let pres = rp
            .iter()
            .zip(r.iter())
            .fold(0.0f64, |m, (x, rr)| m.max(libm::fabs(x / rr)))
            / (1.0 + b_norm);
        let dres = rz
            .amax()
            .max(if s > 0 { rzm.amax() } else { 0.0 })
            .max(libm::fabs(r1));
        let gap = libm::fabs(dual_obj - it.t).max(compl)
            / (1.0 + libm::fabs(it.t) + libm::fabs(dual_obj));
        Residuals {
            rp,
            rz,
            rzm,
            r1,
            pres,
            dres,
            gap,
            mu: compl / dims,
            dual_obj,
        }
    };

    let finish = |it: &Iterate,
                  res: &Residuals,
                  status: SolveStatus,
                  iterations: usize,
                  cond: Option<f64>| SolveResult {
        status,
        bound: it.t,
        dual_bound: res.dual_obj,
        lambda: it.lambda.iter().copied().collect(),
        q_matrix: if s > 0 { Some(it.q.clone()) } else { None },
        theta: it.theta.component_mul(&r).iter().copied().collect(),
        primal_residual: res.pres,
        dual_residual: res.dres,
        gap: res.gap,
        iterations,
        condition_estimate: cond,
    };

    let merit = |res: &Residuals| res.pres.max(res.dres).max(res.gap);
    let mut best: Option<(f64, Iterate, usize)> = None;
    let mut stalled = 0usize;
    let mut failure: Option<f64> = None;

    for iter in 0..opts.max_iter {
        let res = residuals(&it);
        if res.pres <= opts.tol_feas && res.dres <= opts.tol_feas && res.gap <= opts.tol_gap {
            return finish(&it, &res, SolveStatus::Optimal, iter, None);
        }
        if let Some(status) = certificate_of_infeasibility(&it, &res, opts) {
            return finish(&it, &res, status, iter, None);
        }
        let m_now = merit(&res);
        if best.as_ref().map_or(true, |(m, _, _)| m_now < *m) {
            best = Some((m_now, clone_iterate(&it), iter));
        } else if best
            .as_ref()
            .is_some_and(|(_, _, at)| iter - at >= NO_PROGRESS_ITERS)
        {
            break;
        }

        let nt = match &psd {
            Some(_) => match nt_scaling(&it.q, &it.zm) {
                Some(nt) => Some(nt),
                None => break,
            },
            None => None,
        };
        let dvec = it.lambda.component_div(&it.z);
        let mut m = lp_schur(&h, &dvec);
        if let (Some(op), Some(nt)) = (&psd, &nt) {
            m += op.schur(&nt.w);
        }
        let factor = match SchurFactor::new(SchurSystem {
            matrix: m,
            free_col: c.clone(),
        }) {
            Ok(f) => f,
            Err(cond) => {
                failure = Some(cond);
                break;
            }
        };

        // Linear in (rp, rz, rZ, r1, rcl, rc); all equations but the primal
        // one hold exactly by construction.
        let raw_direction = |rp: &DVector<f64>,
                             rz: &DVector<f64>,
                             rzm: &DMatrix<f64>,
                             r1: f64,
                             rcl: &DVector<f64>,
                             rc: Option<&DMatrix<f64>>|
         -> Direction {
            // g = −rp + H(rcl/z − D rz) + A(Rc − W rZ W)
            let lp_part = rcl.component_div(&it.z) - dvec.component_mul(rz);
            let mut g = -rp + &h * &lp_part;
            if let (Some(op), Some(nt), Some(rc)) = (&psd, &nt, rc) {
                g += op.apply(&(rc - &nt.w * rzm * &nt.w));
            }
            let (dtheta, dt) = factor.bordered(&g, r1);
            let dz = h.tr_mul(&dtheta) + rz;
            let dlambda = lp_part - dvec.component_mul(&h.tr_mul(&dtheta));
            let (dq, dzm) = match (&psd, &nt, rc) {
                (Some(op), Some(nt), Some(rc)) => {
                    let dzm = op.adjoint(&dtheta) + rzm;
                    let mut dq = rc - &nt.w * &dzm * &nt.w;
                    symmetrize(&mut dq);
                    (dq, dzm)
                }
                _ => (DMatrix::zeros(0, 0), DMatrix::zeros(0, 0)),
            };
            Direction {
                dt,
                dlambda,
                dq,
                dtheta,
                dz,
                dzm,
            }
        };
        let primal_defect = |rp: &DVector<f64>, d: &Direction| -> DVector<f64> {
            let mut e = rp - &c * d.dt - &h * &d.dlambda;
            if let Some(op) = &psd {
                e -= op.apply(&d.dq);
            }
            e
        };
        let direction = |rcl: &DVector<f64>, rc: Option<&DMatrix<f64>>| -> Direction {
            let mut d = raw_direction(&res.rp, &res.rz, &res.rzm, res.r1, rcl, rc);
            let zero_z = DVector::zeros(np);
            let zero_zm = DMatrix::zeros(res.rzm.nrows(), res.rzm.ncols());
            let zero_rc = rc.map(|m| DMatrix::zeros(m.nrows(), m.ncols()));
            let mut err = primal_defect(&res.rp, &d);
            for _ in 0..REFINEMENT_STEPS {
                let fix = raw_direction(&err, &zero_z, &zero_zm, 0.0, &zero_z, zero_rc.as_ref());
                let cand = Direction {
                    dt: d.dt + fix.dt,
                    dlambda: &d.dlambda + &fix.dlambda,
                    dq: if s > 0 {
                        &d.dq + &fix.dq
                    } else {
                        DMatrix::zeros(0, 0)
                    },
                    dtheta: &d.dtheta + &fix.dtheta,
                    dz: &d.dz + &fix.dz,
                    dzm: if s > 0 {
                        &d.dzm + &fix.dzm
                    } else {
                        DMatrix::zeros(0, 0)
                    },
                };
                let cand_err = primal_defect(&res.rp, &cand);
                if !(cand_err.amax() < err.amax()) {
                    break;
                }
                d = cand;
                err = cand_err;
            }
            d
        };

        let steps = |d: &Direction, nt: Option<&NtScaling>| -> (f64, f64) {
            let mut ap = max_nonneg_step(it.lambda.as_slice(), d.dlambda.as_slice());
            let mut ad = max_nonneg_step(it.z.as_slice(), d.dz.as_slice());
            if let Some(nt) = nt {
                ap = ap.min(max_psd_step(&nt.lq, &d.dq));
                ad = ad.min(max_psd_step(&nt.lz, &d.dzm));
            }
            (ap, ad)
        };

        // Predictor.
        let rcl_aff = -it.lambda.component_mul(&it.z);
        let rc_aff = if s > 0 { Some(-&it.q) } else { None };
        let aff = direction(&rcl_aff, rc_aff.as_ref());
        let (ap_aff, ad_aff) = steps(&aff, nt.as_ref());
        let (ap_aff, ad_aff) = (ap_aff.min(1.0), ad_aff.min(1.0));
        let mu_aff = {
            let lam = &it.lambda + &aff.dlambda * ap_aff;
            let z = &it.z + &aff.dz * ad_aff;
            let mut comp = lam.dot(&z);
            if s > 0 {
                comp += frob(&(&it.q + &aff.dq * ap_aff), &(&it.zm + &aff.dzm * ad_aff));
            }
            comp / dims
        };
        let sigma = if res.mu > 0.0 {
            (mu_aff / res.mu).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let sigma = sigma * sigma * sigma;
        let target = sigma * res.mu;

        // Corrector.
        let rcl = DVector::from_element(np, target)
            - it.lambda.component_mul(&it.z)
            - aff.dlambda.component_mul(&aff.dz);
        let rc = nt.as_ref().map(|nt| {
            let dq_s = &nt.g_inv * &aff.dq * nt.g_inv.transpose();
            let dz_s = nt.g.tr_mul(&aff.dzm) * &nt.g;
            let mut prod = &dq_s * &dz_s;
            prod = (&prod + prod.transpose()) * 0.5;
            let mut x = DMatrix::zeros(s, s);
            for i in 0..s {
                for j in 0..s {
                    let mut rij = -prod[(i, j)];
                    if i == j {
                        rij += target - nt.lam[i] * nt.lam[i];
                    }
                    x[(i, j)] = 2.0 * rij / (nt.lam[i] + nt.lam[j]);
                }
            }
            let mut rc = &nt.g * x * nt.g.transpose();
            symmetrize(&mut rc);
            rc
        });
        let dir = direction(&rcl, rc.as_ref());
        let (ap, ad) = steps(&dir, nt.as_ref());
        let ap = (opts.step_fraction * ap).min(1.0);
        let ad = (opts.step_fraction * ad).min(1.0);
        if !(ap.is_finite() && ad.is_finite()) {
            return finish(&it, &res, SolveStatus::NumericalFailure, iter, None);
        }

        it.t += ap * dir.dt;
        it.lambda += &dir.dlambda * ap;
        it.theta += &dir.dtheta * ad;
        it.z += &dir.dz * ad;
        if s > 0 {
            it.q += &dir.dq * ap;
            it.zm += &dir.dzm * ad;
            symmetrize(&mut it.q);
            symmetrize(&mut it.zm);
        }

        if ap.max(ad) < 1e-10 {
            stalled += 1;
            if stalled >= 3 {
                break;
            }
        } else {
            stalled = 0;
        }
    }

    let res = residuals(&it);
    if res.pres <= opts.tol_feas && res.dres <= opts.tol_feas && res.gap <= opts.tol_gap {
        return finish(&it, &res, SolveStatus::Optimal, opts.max_iter, None);
    }
    if let Some(status) = certificate_of_infeasibility(&it, &res, opts) {
        return finish(&it, &res, status, opts.max_iter, None);
    }
    let (final_it, final_res, iters) = match best {
        Some((m, best_it, iters)) if m < merit(&res) => {
            let best_res = residuals(&best_it);
            (best_it, best_res, iters)
        }
        _ => (it, res, opts.max_iter),
    };
    let broke_down = failure.is_some() || final_res.pres.is_nan() || final_res.gap.is_nan();
    if broke_down && !(merit(&final_res) <= BREAKDOWN_MERIT) {
        return finish(
            &final_it,
            &final_res,
            SolveStatus::NumericalFailure,
            iters,
            failure,
        );
    }
    finish(&final_it, &final_res, SolveStatus::MaxIter, iters, failure)
}

fn clone_iterate(it: &Iterate) -> Iterate {
    Iterate {
        t: it.t,
        lambda: it.lambda.clone(),
        q: it.q.clone(),
        theta: it.theta.clone(),
        z: it.z.clone(),
        zm: it.zm.clone(),
    }
}

/// Ray tests on the current iterate.
///
/// Primal infeasibility: `θ/(−bᵀθ)` is nearly a dual ray (`cᵀθ ≈ 0`, dual
/// slack residuals small relative to `−bᵀθ`), or `θ` has blown up past
/// `infeasibility_ratio` with `bᵀθ < 0`. Unboundedness: `t` past the ratio.
fn certificate_of_infeasibility(
    it: &Iterate,
    res: &Residuals,
    opts: &SolverOptions,
) -> Option<SolveStatus> {
    let beta = -res.dual_obj;
    if beta > 0.0 {
        let c_theta = 1.0 - res.r1;
        let rel = libm::fabs(c_theta)
            .max(res.rz.amax())
            .max(if res.rzm.is_empty() {
                0.0
            } else {
                res.rzm.amax()
            })
            / beta;
        if rel <= opts.tol_feas {
            return Some(SolveStatus::Infeasible);
        }
        if it.theta.amax() > opts.infeasibility_ratio && res.pres > opts.tol_feas {
            return Some(SolveStatus::Infeasible);
        }
    }
    if it.t > opts.infeasibility_ratio && res.dres > opts.tol_feas {
        return Some(SolveStatus::Unbounded);
    }
    None
}

/// Residuals recomputed from the instance, independent of solver internals.
#[derive(Debug, Clone, PartialEq)]
pub struct KktReport {
    /// `max_p |b_p − t − (Hλ)_p − v_pᵀ Q v_p|` over kept rows.
    pub primal_residual: f64,
    /// `min(Hᵀθ)`; nonnegative at a dual feasible point.
    pub min_h_theta: f64,
    /// Smallest eigenvalue of `Σ θ_p v_p v_pᵀ` (0 without PSD block).
    pub min_moment_eigenvalue: f64,
    /// Trace of `Σ θ_p v_p v_pᵀ`.
    pub moment_trace: f64,
    /// `|Σθ_p − 1|`.
    pub normalization_error: f64,
    /// `|Σ θ_p b_p − t|`.
    pub gap: f64,
    pub min_lambda: f64,
    pub min_q_eigenvalue: f64,
}

impl KktReport {
    pub fn max_violation(&self) -> f64 {
        self.primal_residual
            .max(-self.min_h_theta)
            .max(-self.min_moment_eigenvalue / (1.0 + self.moment_trace))
            .max(self.normalization_error)
            .max(-self.min_lambda)
            .max(-self.min_q_eigenvalue)
    }
}

pub fn kkt_check(instance: &SdpInstance, result: &SolveResult) -> KktReport {
    let rows = &instance.kept_rows;
    let np = instance.num_pairs();
    let mut primal: f64 = 0.0;
    let mut h_theta = vec![0.0; np];
    let mut theta_sum = 0.0;
    let mut dual_obj = 0.0;
    let s = result.q_matrix.as_ref().map_or(0, DMatrix::nrows);
    let mut moment = DMatrix::zeros(s, s);
    for (i, &p) in rows.iter().enumerate() {
        let mut lhs = result.bound;
        for q in 0..np {
            lhs += instance.h_matrix[(p, q)] * result.lambda[q];
        }
        let th = result.theta.get(i).copied().unwrap_or(0.0);
        if let (Some(qm), Some(bv)) = (&result.q_matrix, &instance.basis_vectors) {
            let v = bv.row(p).transpose();
            lhs += (v.transpose() * qm * &v)[(0, 0)];
            moment += &v * v.transpose() * th;
        }
        primal = primal.max(libm::fabs(instance.rhs[p] - lhs));
        for q in 0..np {
            h_theta[q] += instance.h_matrix[(p, q)] * th;
        }
        theta_sum += th;
        dual_obj += th * instance.rhs[p];
    }
    KktReport {
        primal_residual: primal,
        min_h_theta: h_theta.iter().copied().fold(f64::INFINITY, f64::min),
        min_moment_eigenvalue: if s > 0 { min_eigenvalue(&moment) } else { 0.0 },
        moment_trace: moment.trace(),
        normalization_error: libm::fabs(theta_sum - 1.0),
        gap: libm::fabs(dual_obj - result.bound),
        min_lambda: result.lambda.iter().copied().fold(f64::INFINITY, f64::min),
        min_q_eigenvalue: result.q_matrix.as_ref().map_or(0.0, min_eigenvalue),
    }
}
