//! Test-only oracles built independently of the library's hot paths.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bsos_core::linalg::{DMatrix, DVector};
use bsos_core::polynomial::enumerate_grlex;
use bsos_core::relaxation::{compute_tau, enumerate_pairs};
use bsos_core::rng::SplitMix64;
use bsos_core::sdp_solver::{
    schur_assemble, solve, solve_conic, ConicData, PsdOperator, SolveResult, SolverOptions,
};
use bsos_core::{assemble, Polynomial, RelaxationConfig, SemialgebraicProblem, Term};

/// `Σ c Π z_i·z_i·…` with plain repeated multiplication.
pub fn naive_eval(p: &Polynomial, z: &[f64]) -> f64 {
    let mut acc = 0.0;
    for t in p.terms() {
        let mut m = t.coeff;
        for (i, &e) in t.exponents.iter().enumerate() {
            for _ in 0..e {
                m *= z[i];
            }
        }
        acc += m;
    }
    acc
}

/// `Σ |c z^α|`, the scale for relative evaluation errors.
pub fn abs_term_sum(p: &Polynomial, z: &[f64]) -> f64 {
    p.terms()
        .iter()
        .map(|t| {
            let mut m = t.coeff.abs();
            for (i, &e) in t.exponents.iter().enumerate() {
                m *= z[i].abs().powi(e as i32);
            }
            m
        })
        .sum()
}

/// Dense coefficient map, multiplied out term by term.
#[derive(Debug, Clone, PartialEq)]
pub struct Expanded {
    pub n: usize,
    pub coeffs: BTreeMap<Vec<u32>, f64>,
}

impl Expanded {
    pub fn one(n: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![0; n], 1.0);
        Self { n, coeffs }
    }

    pub fn from_poly(p: &Polynomial) -> Self {
        let mut coeffs = BTreeMap::new();
        for t in p.terms() {
            *coeffs.entry(t.exponents.clone()).or_insert(0.0) += t.coeff;
        }
        Self {
            n: p.num_vars(),
            coeffs,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *coeffs.entry(e).or_insert(0.0) += ca * cb;
            }
        }
        Self { n: self.n, coeffs }
    }

    pub fn one_minus(&self) -> Self {
        let mut out = Self::one(self.n);
        for (e, c) in &self.coeffs {
            *out.coeffs.entry(e.clone()).or_insert(0.0) -= c;
        }
        out
    }

    pub fn coeff(&self, alpha: &[u32]) -> f64 {
        self.coeffs.get(alpha).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, z: &[f64]) -> f64 {
        self.coeffs
            .iter()
            .map(|(e, c)| {
                c * e
                    .iter()
                    .zip(z)
                    .map(|(&k, &x)| x.powi(k as i32))
                    .product::<f64>()
            })
            .sum()
    }
}

/// `h_{αβ}` multiplied out symbolically.
pub fn expand_h(problem: &SemialgebraicProblem, pair: &[u32]) -> Expanded {
    let n = problem.num_vars();
    let m = problem.num_generators();
    let mut acc = Expanded::one(n);
    for (j, g) in problem.generators().iter().enumerate() {
        let gx = Expanded::from_poly(g);
        let cx = gx.one_minus();
        for _ in 0..pair[j] {
            acc = acc.mul(&gx);
        }
        for _ in 0..pair[m + j] {
            acc = acc.mul(&cx);
        }
    }
    acc
}

/// The relaxation with one equation per monomial of degree `<= τ`:
/// coefficients of `f − t` against those of `Σλ h + v_kᵀ Q v_k`.
/// `k = None` drops the PSD block (LP mode).
pub fn coefficient_matching(problem: &SemialgebraicProblem, d: u32, k: Option<u32>) -> ConicData {
    let n = problem.num_vars();
    let kk = k.unwrap_or(0);
    let tau = compute_tau(problem, d, kk);
    let monomials = enumerate_grlex(n, tau);
    let pairs = enumerate_pairs(problem.num_generators(), d);
    let hs: Vec<Expanded> = pairs.iter().map(|p| expand_h(problem, p)).collect();
    let f = Expanded::from_poly(problem.objective());
    let rows = monomials.len();
    let free_col = DVector::from_iterator(
        rows,
        monomials
            .iter()
            .map(|a| if a.iter().all(|&e| e == 0) { 1.0 } else { 0.0 }),
    );
    let h = DMatrix::from_fn(rows, pairs.len(), |r, q| hs[q].coeff(&monomials[r]));
    let b = DVector::from_iterator(rows, monomials.iter().map(|a| f.coeff(a)));
    let psd = k.map(|k| {
        let basis = enumerate_grlex(n, k);
        let s = basis.len();
        PsdOperator::Dense(
            monomials
                .iter()
                .map(|alpha| {
                    DMatrix::from_fn(s, s, |i, j| {
                        let sum: Vec<u32> =
                            basis[i].iter().zip(&basis[j]).map(|(x, y)| x + y).collect();
                        if &sum == alpha {
                            1.0
                        } else {
                            0.0
                        }
                    })
                })
                .collect(),
        )
    });
    ConicData {
        free_col,
        h,
        b,
        psd,
    }
}

pub fn solve_coefficient_matching(
    problem: &SemialgebraicProblem,
    d: u32,
    k: Option<u32>,
) -> SolveResult {
    solve_conic(
        &coefficient_matching(problem, d, k),
        &SolverOptions::default(),
    )
}

/// Small scaled instances on the box `[0,1]^n` (`g = x_i`, `1 − x_i`) or the
/// simplex, with a random objective of degree `deg`.
pub fn small_instance(n: usize, deg: u32, simplex: bool, seed: u64) -> SemialgebraicProblem {
    let mut rng = SplitMix64::new(seed);
    let terms = enumerate_grlex(n, deg)
        .into_iter()
        .map(|e| Term::new(e, rng.uniform(-1.0, 1.0)))
        .collect();
    let objective = Polynomial::new(n, terms).unwrap();
    let mut gens = Vec::new();
    if simplex {
        let mut t = vec![Term::new(vec![0; n], 1.0)];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            t.push(Term::new(e, -1.0));
        }
        gens.push(Polynomial::new(n, t).unwrap());
    } else {
        for i in 0..n {
            gens.push(Polynomial::variable(n, i).one_minus());
        }
    }
    for i in 0..n {
        gens.push(Polynomial::variable(n, i));
    }
    SemialgebraicProblem::new(format!("small{seed}"), objective, gens).unwrap()
}

/// `S_pq = Σ_r H_pr D_r H_qr + tr(A_p W A_q W)` with `A_p = v_p v_pᵀ` formed explicitly.
pub fn naive_schur(
    w: &DMatrix<f64>,
    v: &DMatrix<f64>,
    dvec: &DVector<f64>,
    h: &DMatrix<f64>,
) -> DMatrix<f64> {
    let rows = v.ncols();
    let a: Vec<DMatrix<f64>> = (0..rows)
        .map(|p| v.column(p) * v.column(p).transpose())
        .collect();
    DMatrix::from_fn(rows, rows, |p, q| {
        let lp: f64 = (0..h.ncols())
            .map(|r| h[(p, r)] * dvec[r] * h[(q, r)])
            .sum();
        lp + (&a[p] * w * &a[q] * w).trace()
    })
}

/// Projected-gradient multistart for `min f` over `{x >= 0, Σx <= 1}`;
/// returns the best feasible value found.
pub fn simplex_local_search(f: &Polynomial, starts: usize, seed: u64) -> (f64, Vec<f64>) {
    let n = f.num_vars();
    let mut rng = SplitMix64::new(seed);
    let mut best = (f64::INFINITY, vec![0.0; n]);
    let try_point = |x: &[f64], best: &mut (f64, Vec<f64>)| {
        let v = f.evaluate(x).unwrap();
        if v < best.0 {
            *best = (v, x.to_vec());
        }
    };
    // vertices first
    try_point(&vec![0.0; n], &mut best);
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        try_point(&e, &mut best);
    }
    for _ in 0..starts {
        let raw: Vec<f64> = (0..=n).map(|_| -rng.next_f64().max(1e-300).ln()).collect();
        let total: f64 = raw.iter().sum();
        let mut x: Vec<f64> = raw[..n].iter().map(|r| r / total).collect();
        let mut step = 0.5;
        let mut fx = f.evaluate(&x).unwrap();
        for _ in 0..500 {
            let g = gradient(f, &x);
            let y = project_simplex(
                &x.iter()
                    .zip(&g)
                    .map(|(a, b)| a - step * b)
                    .collect::<Vec<_>>(),
            );
            let fy = f.evaluate(&y).unwrap();
            if fy < fx - 1e-15 {
                x = y;
                fx = fy;
                step *= 1.2;
            } else {
                step *= 0.5;
                if step < 1e-12 {
                    break;
                }
            }
        }
        try_point(&x, &mut best);
    }
    best
}

fn gradient(f: &Polynomial, x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    for t in f.terms() {
        for i in 0..x.len() {
            let e = t.exponents[i];
            if e == 0 {
                continue;
            }
            let mut m = t.coeff * e as f64;
            for (j, &ej) in t.exponents.iter().enumerate() {
                let p = if j == i { ej - 1 } else { ej };
                m *= x[j].powi(p as i32);
            }
            g[i] += m;
        }
    }
    g
}

/// Euclidean projection onto `{x >= 0, Σx <= 1}`.
pub fn project_simplex(y: &[f64]) -> Vec<f64> {
    let clipped: Vec<f64> = y.iter().map(|v| v.max(0.0)).collect();
    if clipped.iter().sum::<f64>() <= 1.0 {
        return clipped;
    }
    let mut u = y.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut acc = 0.0;
    let mut shift = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        acc += ui;
        let t = (acc - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            shift = t;
        }
    }
    y.iter().map(|v| (v - shift).max(0.0)).collect()
}

/// (n, objective degree, simplex, d, k) for the assembly equivalence check.
pub const EQUIVALENCE_CASES: [(usize, u32, bool, u32, u32); 10] = [
    (1, 2, false, 2, 1),
    (1, 4, false, 2, 2),
    (1, 3, false, 3, 1),
    (2, 2, true, 2, 1),
    (2, 2, false, 2, 1),
    (2, 3, true, 3, 1),
    (2, 4, false, 4, 2),
    (3, 2, true, 2, 1),
    (3, 2, false, 2, 1),
    (3, 3, true, 3, 1),
];

/// Largest `|bound_pe − bound_cm|` over [`EQUIVALENCE_CASES`]; `Err` when a
/// solve carries no bound.
pub fn assembly_equivalence_gap() -> Result<f64, String> {
    let mut worst: f64 = 0.0;
    for (i, &(n, deg, simplex, d, k)) in EQUIVALENCE_CASES.iter().enumerate() {
        let p = small_instance(n, deg, simplex, 100 + i as u64);
        let inst = assemble(&p, &RelaxationConfig::bsos(d, k)).map_err(|e| e.to_string())?;
        if inst.tau > 6 {
            return Err(format!("case {i}: tau {}", inst.tau));
        }
        let pe = solve(&inst, &SolverOptions::default());
        let cm = solve_coefficient_matching(&p, d, Some(k));
        if !(pe.status.has_bound() && cm.status.has_bound()) {
            return Err(format!("case {i}: {:?} / {:?}", pe.status, cm.status));
        }
        worst = worst.max((pe.bound - cm.bound).abs());
    }
    Ok(worst)
}

/// Largest relative deviation of `schur_assemble` from [`naive_schur`] over
/// 25 random cases with `s <= 4`, at most 6 rows.
pub fn schur_oracle_error(seed: u64) -> f64 {
    let mut rng = SplitMix64::new(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..25 {
        let s = 1 + (rng.next_u64() % 4) as usize;
        let rows = 1 + (rng.next_u64() % 6) as usize;
        let np = 1 + (rng.next_u64() % 5) as usize;
        let f = DMatrix::from_fn(s, s, |_, _| rng.uniform(-1.0, 1.0));
        let w = &f * f.transpose() + DMatrix::identity(s, s) * 0.1;
        let v = DMatrix::from_fn(s, rows, |_, _| rng.uniform(-1.0, 1.0));
        let h = DMatrix::from_fn(rows, np, |_, _| rng.uniform(-1.0, 1.0));
        let dvec = DVector::from_fn(np, |_, _| rng.uniform(0.01, 2.0));
        let c = DVector::from_element(rows, 1.0);
        let got = schur_assemble(&w, &v, &dvec, &h, &c)
            .expect("W is positive definite")
            .matrix;
        let want = naive_schur(&w, &v, &dvec, &h);
        worst = worst.max((&got - &want).amax() / (1.0 + want.amax()));
    }
    worst
}

pub fn random_poly(rng: &mut SplitMix64, n: usize, max_deg: u32, terms: usize) -> Polynomial {
    let all = enumerate_grlex(n, max_deg);
    let t = (0..terms)
        .map(|_| {
            let e = all[(rng.next_u64() % all.len() as u64) as usize].clone();
            Term::new(e, rng.uniform(-3.0, 3.0))
        })
        .collect();
    Polynomial::new(n, t).unwrap()
}

/// Largest `|evaluate − naive| / (1 + Σ|f_α z^α|)` over `pairs` random
/// polynomials and points without zero coordinates.
pub fn evaluation_oracle_error(pairs: usize, seed: u64) -> f64 {
    let mut rng = SplitMix64::new(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..pairs {
        let n = 1 + (rng.next_u64() % 5) as usize;
        let terms = 1 + (rng.next_u64() % 12) as usize;
        let p = random_poly(&mut rng, n, 6, terms);
        let z: Vec<f64> = (0..n)
            .map(|_| loop {
                let c = rng.uniform(-1.0, 1.0);
                if c != 0.0 {
                    break c;
                }
            })
            .collect();
        let got = p.evaluate(&z).unwrap();
        worst = worst.max((got - naive_eval(&p, &z)).abs() / (1.0 + abs_term_sum(&p, &z)));
    }
    worst
}
