//! Random instance families.
//!
//! * `QuadraticSimplex`: `min xᵀAx` on the simplex `{Σx_i <= 1, x >= 0}` where
//!   `A` has exactly `r` negative eigenvalues.
//! * `RandomBall`: a dense random polynomial of degree `ℓ` on
//!   `{Σx_i² <= 1, x >= 0}`.

use bsos_core::linalg::{symmetrize, DMatrix, DVector};
use bsos_core::polynomial::enumerate_grlex;
use bsos_core::rng::SplitMix64;
use bsos_core::{Polynomial, SemialgebraicProblem, Term};
use rand::seq::SliceRandom;
use rand_core::RngCore;
use rand_distr::{Distribution, StandardNormal};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    QuadraticSimplex,
    RandomBall,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    /// Number of negative eigenvalues (`QuadraticSimplex`).
    pub r: usize,
    /// Objective degree (`RandomBall`), 2 or 4.
    pub degree: u32,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn quadratic_simplex(n: usize, r: usize, seed: u64) -> Self {
        Self {
            family: Family::QuadraticSimplex,
            n,
            r,
            degree: 2,
            seed,
        }
    }

    pub fn random_ball(n: usize, degree: u32, seed: u64) -> Self {
        Self {
            family: Family::RandomBall,
            n,
            r: 0,
            degree,
            seed,
        }
    }

    /// Name in the `Qn<n>_r<r>_s<seed>` / `Hn<n>_l<ℓ>_s<seed>` style.
    pub fn name(&self) -> String {
        match self.family {
            Family::QuadraticSimplex => format!("Qn{}_r{}_s{}", self.n, self.r, self.seed),
            Family::RandomBall => format!("Hn{}_l{}_s{}", self.n, self.degree, self.seed),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        match self.family {
            Family::QuadraticSimplex if self.r == 0 || self.r > self.n => Err(Error::InvalidSpec(
                format!("r = {} must lie in 1..={}", self.r, self.n),
            )),
            Family::RandomBall if self.degree != 2 && self.degree != 4 => Err(Error::InvalidSpec(
                format!("degree = {} must be 2 or 4", self.degree),
            )),
            _ => Ok(()),
        }
    }
}

/// [`SplitMix64`] as a `rand` generator.
pub struct SplitMixRng(pub SplitMix64);

impl RngCore for SplitMixRng {
    fn next_u32(&mut self) -> u32 {
        (self.0.next_u64() >> 32) as u32
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        for chunk in dst.chunks_mut(8) {
            let bytes = self.0.next_u64().to_le_bytes();
            chunk.copy_from_slice(&bytes[..chunk.len()]);
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<SemialgebraicProblem, Error> {
    spec.validate()?;
    let n = spec.n;
    let objective = match spec.family {
        Family::QuadraticSimplex => quadratic_form(&indefinite_matrix(n, spec.r, spec.seed)),
        Family::RandomBall => random_dense(n, spec.degree, spec.seed),
    };
    let mut g1 = vec![Term::new(vec![0; n], 1.0)];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = if spec.family == Family::QuadraticSimplex {
            1
        } else {
            2
        };
        g1.push(Term::new(e, -1.0));
    }
    let mut generators = vec![Polynomial::new(n, g1)?];
    generators.extend((0..n).map(|i| Polynomial::variable(n, i)));
    Ok(SemialgebraicProblem::new(
        spec.name(),
        objective,
        generators,
    )?)
}

/// `A = V diag(±d) Vᵀ` from the eigendecomposition of `F Fᵀ`, `F` Gaussian,
/// with `r` eigenvalues picked by a seeded permutation negated.
pub fn indefinite_matrix(n: usize, r: usize, seed: u64) -> DMatrix<f64> {
    let mut rng = SplitMixRng(SplitMix64::new(seed));
    let f: DMatrix<f64> = DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(&mut rng));
    let mut s: DMatrix<f64> = &f * f.transpose();
    symmetrize(&mut s);
    let eig = s.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut d: DVector<f64> = eig.eigenvalues.clone();
    for &i in &order[..r] {
        d[i] = -d[i];
    }
    let mut a = &eig.eigenvectors * DMatrix::from_diagonal(&d) * eig.eigenvectors.transpose();
    symmetrize(&mut a);
    a
}

/// `xᵀAx` as a polynomial.
pub fn quadratic_form(a: &DMatrix<f64>) -> Polynomial {
    let n = a.nrows();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut e = vec![0; n];
            e[i] += 1;
            e[j] += 1;
            terms.push(Term::new(
                e,
                if i == j {
                    a[(i, i)]
                } else {
                    a[(i, j)] + a[(j, i)]
                },
            ));
        }
    }
    Polynomial::new(n, terms)
        .expect("finite coefficients")
        .canonicalize()
}

fn random_dense(n: usize, degree: u32, seed: u64) -> Polynomial {
    let mut rng = SplitMix64::new(seed);
    let terms = enumerate_grlex(n, degree)
        .into_iter()
        .map(|e| Term::new(e, rng.uniform(-1.0, 1.0)))
        .collect();
    Polynomial::new(n, terms).expect("finite coefficients")
}
