//! Assembly of the BSOS point-evaluation relaxation (and its LP special case).
//!
//! For a level `d`, SOS degree bound `k` and `τ = max(deg f, 2k, d·max_j deg g_j)`
//! the identity
//!
//! ```text
//! f(x) - t - Σ_{(α,β)} λ_{αβ} h_{αβ}(x) = ⟨Q, v_k(x) v_k(x)ᵀ⟩
//! ```
//!
//! between polynomials of degree `τ` is imposed at `L = binomial(n + τ, n)`
//! random points of `[-1, 1]^n`. Each point contributes one row
//! `t + H[p,:] λ + v_pᵀ Q v_p = f(x_p)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::polynomial::{binomial, enumerate_grlex, Exponents, MonomialBasis, Polynomial};
use crate::rng::SplitMix64;

/// `min f(x)` over `K = {x : g_j(x) >= 0}` with `0 <= g_j <= 1` on `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct SemialgebraicProblem {
    pub name: String,
    objective: Polynomial,
    generators: Vec<Polynomial>,
}

impl SemialgebraicProblem {
    pub fn new(
        name: impl Into<String>,
        objective: Polynomial,
        generators: Vec<Polynomial>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let n = objective.num_vars();
        for g in &generators {
            if g.num_vars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.num_vars(),
                });
            }
        }
        Ok(Self {
            name: name.into(),
            objective: objective.canonicalize(),
            generators: generators.iter().map(Polynomial::canonicalize).collect(),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.objective.num_vars()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn objective(&self) -> &Polynomial {
        &self.objective
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// True when every generator is `>= -tol` at `x`.
    pub fn is_feasible(&self, x: &[f64], tol: f64) -> bool {
        self.generators.iter().all(|g| g.eval_unchecked(x) >= -tol)
    }

    /// Samples the box `[-radius, radius]^n`, keeps the points of `K` and
    /// reports generators that leave `[0, 1]` there.
    pub fn scaling_diagnostic(&self, samples: usize, radius: f64, seed: u64) -> ScalingReport {
        let n = self.num_vars();
        let m = self.num_generators();
        let mut rng = SplitMix64::new(seed);
        let mut report = ScalingReport {
            feasible_samples: 0,
            above_one: vec![0; m],
            max_value: vec![f64::NEG_INFINITY; m],
        };
        let mut x = vec![0.0; n];
        let mut values = vec![0.0; m];
        for _ in 0..samples {
            for xi in x.iter_mut() {
                *xi = rng.uniform(-radius, radius);
            }
            for (v, g) in values.iter_mut().zip(&self.generators) {
                *v = g.eval_unchecked(&x);
            }
            if values.iter().any(|&v| v < 0.0) {
                continue;
            }
            report.feasible_samples += 1;
            for j in 0..m {
                report.max_value[j] = report.max_value[j].max(values[j]);
                if values[j] > 1.0 {
                    report.above_one[j] += 1;
                }
            }
        }
        report
    }
}

/// Outcome of [`SemialgebraicProblem::scaling_diagnostic`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub feasible_samples: usize,
    /// Per generator, how many feasible samples had `g_j > 1`.
    pub above_one: Vec<usize>,
    pub max_value: Vec<f64>,
}

impl ScalingReport {
    pub fn is_scaled(&self) -> bool {
        self.above_one.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Bounded-degree SOS relaxation with a PSD block of size `binomial(n+k, k)`.
    Bsos,
    /// Krivine-Stengle LP relaxation (`k = 0`, no PSD block).
    Lp,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelaxationConfig {
    pub d: u32,
    pub k: u32,
    pub seed: u64,
    pub mode: Mode,
    pub redundancy_tol: f64,
    pub min_coord: f64,
    pub max_rows: u64,
}

impl RelaxationConfig {
    pub const DEFAULT_SEED: u64 = 0x5EED_B505;

    pub fn bsos(d: u32, k: u32) -> Self {
        Self {
            d,
            k,
            seed: Self::DEFAULT_SEED,
            mode: Mode::Bsos,
            redundancy_tol: 1e-9,
            min_coord: 1e-8,
            max_rows: 200_000,
        }
    }

    pub fn lp(d: u32) -> Self {
        Self {
            mode: Mode::Lp,
            ..Self::bsos(d, 0)
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// SOS degree bound actually used (`0` in LP mode).
    pub fn effective_k(&self) -> u32 {
        match self.mode {
            Mode::Bsos => self.k,
            Mode::Lp => 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidConfig("d must be at least 1"));
        }
        if !(self.redundancy_tol >= 0.0) {
            return Err(Error::InvalidConfig("redundancy_tol must be nonnegative"));
        }
        if !(self.min_coord >= 0.0 && self.min_coord < 1.0) {
            return Err(Error::InvalidConfig("min_coord must lie in [0, 1)"));
        }
        Ok(())
    }
}

/// Index set `N^{2m}_d`: concatenated `(α, β)` with `|α| + |β| <= d`, graded lex.
pub fn enumerate_pairs(m: usize, d: u32) -> Vec<Exponents> {
    enumerate_grlex(2 * m, d)
}

/// `τ = max(deg f, 2k, d · max_j deg g_j)`.
pub fn compute_tau(problem: &SemialgebraicProblem, d: u32, k: u32) -> u32 {
    problem
        .objective
        .degree()
        .max(2 * k)
        .max(d * problem.max_generator_degree())
}

/// `L` points uniform in `[-1, 1]^n`; coordinates with `|c| < min_coord` are redrawn.
pub fn sample_points(n: usize, count: usize, seed: u64, min_coord: f64) -> Vec<Vec<f64>> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| loop {
                    let c = 2.0 * rng.next_f64() - 1.0;
                    if libm::fabs(c) >= min_coord {
                        break c;
                    }
                })
                .collect()
        })
        .collect()
}

/// `h_{αβ}(z) = Π_j g_j(z)^{α_j} (1 - g_j(z))^{β_j}`; each `g_j` is evaluated once.
pub fn eval_h(problem: &SemialgebraicProblem, pair: &[u32], z: &[f64]) -> Result<f64> {
    let m = problem.num_generators();
    if pair.len() != 2 * m {
        return Err(Error::DimensionMismatch {
            expected: 2 * m,
            found: pair.len(),
        });
    }
    let mut acc = 1.0;
    for (j, g) in problem.generators.iter().enumerate() {
        let (a, b) = (pair[j], pair[m + j]);
        if a == 0 && b == 0 {
            continue;
        }
        let gv = g.evaluate(z)?;
        acc *= crate::polynomial::powu(gv, a) * crate::polynomial::powu(1.0 - gv, b);
    }
    Ok(acc)
}

/// One assembled constraint row.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub rhs: f64,
    pub h: Vec<f64>,
    pub v: Option<Vec<f64>>,
}

/// Evaluates rows of the relaxation at arbitrary points.
///
/// Shared by the serial [`assemble`] and by parallel drivers, which must
/// produce the same rows in the same order.
pub struct RowEvaluator<'a> {
    problem: &'a SemialgebraicProblem,
    pairs: &'a [Exponents],
    basis: Option<&'a MonomialBasis>,
    d: u32,
}

impl<'a> RowEvaluator<'a> {
    pub fn row(&self, z: &[f64]) -> Row {
        let m = self.problem.num_generators();
        let dd = self.d as usize;
        let mut g_pow = vec![1.0; m * (dd + 1)];
        let mut c_pow = vec![1.0; m * (dd + 1)];
        for (j, g) in self.problem.generators.iter().enumerate() {
            let gv = g.eval_unchecked(z);
            for e in 1..=dd {
                g_pow[j * (dd + 1) + e] = g_pow[j * (dd + 1) + e - 1] * gv;
                c_pow[j * (dd + 1) + e] = c_pow[j * (dd + 1) + e - 1] * (1.0 - gv);
            }
        }
        let h = self
            .pairs
            .iter()
            .map(|pair| {
                let mut acc = 1.0;
                for j in 0..m {
                    let (a, b) = (pair[j] as usize, pair[m + j] as usize);
                    if a != 0 {
                        acc *= g_pow[j * (dd + 1) + a];
                    }
                    if b != 0 {
                        acc *= c_pow[j * (dd + 1) + b];
                    }
                }
                acc
            })
            .collect();
        Row {
            rhs: self.problem.objective.eval_unchecked(z),
            h,
            v: self.basis.map(|b| b.evaluate_unchecked(z)),
        }
    }
}

/// The assembled conic instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SdpInstance {
    pub mode: Mode,
    pub d: u32,
    pub k: u32,
    pub tau: u32,
    pub num_vars: usize,
    pub points: Vec<Vec<f64>>,
    /// Monomial basis of `v_k`; `None` in LP mode.
    pub basis: Option<MonomialBasis>,
    /// `L × s(k)` matrix whose row `p` is `v_k(x_p)`; `None` in LP mode.
    pub basis_vectors: Option<DMatrix<f64>>,
    /// `L × P` matrix `H[p, q] = h_{pair(q)}(x_p)`.
    pub h_matrix: DMatrix<f64>,
    pub pairs: Vec<Exponents>,
    /// `b_p = f(x_p)`.
    pub rhs: DVector<f64>,
    /// Rows that survive redundancy removal, ascending.
    pub kept_rows: Vec<usize>,
    /// Largest right-hand-side residual of a dropped row after eliminating
    /// the kept rows, relative to `1 + ‖b‖∞`. A value well above the
    /// elimination tolerance means the equality system itself has no solution.
    pub inconsistency: f64,
}

impl SdpInstance {
    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs.len()
    }

    /// Side of the PSD block, `s(k)`; 0 in LP mode.
    pub fn psd_size(&self) -> usize {
        self.basis.as_ref().map_or(0, MonomialBasis::len)
    }

    /// Row `p` of the stacked constraint matrix `[1 | H_p | svec(v_p v_pᵀ)]`
    /// (off-diagonal entries of `svec` carry a `√2` factor).
    pub fn stacked_row(&self, p: usize) -> Vec<f64> {
        let mut row =
            Vec::with_capacity(1 + self.num_pairs() + self.psd_size() * (self.psd_size() + 1) / 2);
        row.push(1.0);
        row.extend(self.h_matrix.row(p).iter());
        if let Some(v) = &self.basis_vectors {
            let s = v.ncols();
            for i in 0..s {
                for j in i..s {
                    let x = v[(p, i)] * v[(p, j)];
                    row.push(if i == j {
                        x
                    } else {
                        core::f64::consts::SQRT_2 * x
                    });
                }
            }
        }
        row
    }
}

/// Assembles the relaxation and removes redundant rows.
pub fn assemble(problem: &SemialgebraicProblem, config: &RelaxationConfig) -> Result<SdpInstance> {
    let raw = assemble_raw(problem, config)?;
    Ok(remove_redundant(raw, config.redundancy_tol))
}

/// Assembles every sampled row; `kept_rows` lists all of them.
pub fn assemble_raw(
    problem: &SemialgebraicProblem,
    config: &RelaxationConfig,
) -> Result<SdpInstance> {
    assemble_raw_with(problem, config, |ev, points| {
        points.iter().map(|z| ev.row(z)).collect()
    })
}

/// Like [`assemble_raw`] but lets the caller drive row evaluation, e.g. in
/// parallel. `eval_rows` must return one row per point, in point order.
pub fn assemble_raw_with<F>(
    problem: &SemialgebraicProblem,
    config: &RelaxationConfig,
    eval_rows: F,
) -> Result<SdpInstance>
where
    F: FnOnce(&RowEvaluator<'_>, &[Vec<f64>]) -> Vec<Row>,
{
    config.validate()?;
    let n = problem.num_vars();
    let k = config.effective_k();
    let tau = compute_tau(problem, config.d, k);
    let rows = binomial((n as u64) + tau as u64, n as u64);
    if rows > config.max_rows {
        return Err(Error::InstanceTooLarge {
            n,
            tau,
            rows,
            cap: config.max_rows,
        });
    }
    let count = rows as usize;
    let points = sample_points(n, count, config.seed, config.min_coord);
    let pairs = enumerate_pairs(problem.num_generators(), config.d);
    let basis = match config.mode {
        Mode::Bsos => Some(MonomialBasis::new(n, k)),
        Mode::Lp => None,
    };
    let evaluator = RowEvaluator {
        problem,
        pairs: &pairs,
        basis: basis.as_ref(),
        d: config.d,
    };
    let evaluated = eval_rows(&evaluator, &points);
    assert_eq!(
        evaluated.len(),
        count,
        "row evaluator must return one row per point"
    );

    let np = pairs.len();
    let mut h_matrix = DMatrix::zeros(count, np);
    let mut rhs = DVector::zeros(count);
    let mut basis_vectors = basis.as_ref().map(|b| DMatrix::zeros(count, b.len()));
    for (p, row) in evaluated.into_iter().enumerate() {
        rhs[p] = row.rhs;
        for (q, h) in row.h.into_iter().enumerate() {
            h_matrix[(p, q)] = h;
        }
        if let (Some(bv), Some(v)) = (basis_vectors.as_mut(), row.v) {
            for (i, x) in v.into_iter().enumerate() {
                bv[(p, i)] = x;
            }
        }
    }
    Ok(SdpInstance {
        mode: config.mode,
        d: config.d,
        k,
        tau,
        num_vars: n,
        points,
        basis,
        basis_vectors,
        h_matrix,
        pairs,
        rhs,
        kept_rows: (0..count).collect(),
        inconsistency: 0.0,
    })
}

/// Keeps a maximal subset of rows of `[1 | H_p | svec(v_p v_pᵀ)]` that is
/// linearly independent up to `tol` relative to the largest row norm.
///
/// Row-pivoted modified Gram-Schmidt: the candidate with the largest residual
/// is accepted and projected out of the remaining candidates, until every
/// residual is below the threshold. The right-hand side rides along with the
/// same eliminations, so a dropped row whose `b_p` is not reproduced by the
/// kept rows shows up in [`SdpInstance::inconsistency`].
pub fn remove_redundant(mut instance: SdpInstance, tol: f64) -> SdpInstance {
    let candidates: Vec<usize> = instance.kept_rows.clone();
    let mut rows: Vec<Vec<f64>> = candidates
        .iter()
        .map(|&p| instance.stacked_row(p))
        .collect();
    let mut rhs: Vec<f64> = candidates.iter().map(|&p| instance.rhs[p]).collect();
    let mut norms2: Vec<f64> = rows.iter().map(|r| dot(r, r)).collect();
    let max_norm = libm::sqrt(norms2.iter().fold(0.0f64, |m, &x| m.max(x)));
    let threshold2 = (tol * max_norm) * (tol * max_norm);

    let mut active: Vec<usize> = (0..rows.len()).collect();
    let mut kept = Vec::new();
    while !active.is_empty() {
        let (pos, &best) = active
            .iter()
            .enumerate()
            .max_by(|a, b| norms2[*a.1].total_cmp(&norms2[*b.1]).then(b.1.cmp(a.1)))
            .unwrap();
        if norms2[best] <= threshold2 || norms2[best] == 0.0 {
            break;
        }
        active.swap_remove(pos);
        kept.push(candidates[best]);
        let inv = 1.0 / libm::sqrt(dot(&rows[best], &rows[best]));
        let q: Vec<f64> = rows[best].iter().map(|x| x * inv).collect();
        let qb = rhs[best] * inv;
        for &j in &active {
            let r = &mut rows[j];
            let c = dot(&q, r);
            for (ri, qi) in r.iter_mut().zip(&q) {
                *ri -= c * qi;
            }
            rhs[j] -= c * qb;
            norms2[j] = dot(r, r);
        }
    }
    let b_scale = 1.0 + rhs_norm(&instance);
    instance.inconsistency = active
        .iter()
        .fold(0.0f64, |m, &j| m.max(libm::fabs(rhs[j])))
        / b_scale;
    kept.sort_unstable();
    instance.kept_rows = kept;
    instance
}

fn rhs_norm(instance: &SdpInstance) -> f64 {
    instance
        .rhs
        .iter()
        .fold(0.0f64, |m, x| m.max(libm::fabs(*x)))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
