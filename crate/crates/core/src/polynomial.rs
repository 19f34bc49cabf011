//! Sparse multivariate polynomials in exponent/coefficient form.
//!
//! A polynomial is a list of `(α, f_α)` terms over `n` variables. After
//! [`Polynomial::canonicalize`] the exponent vectors are distinct, sorted in
//! graded lexicographic order (`x1 > x2 > … > xn` inside a degree) and no
//! coefficient is zero.
//!
//! Evaluation follows the sign-split scheme: for a point with no zero
//! coordinate the magnitude of every monomial is `exp(α · log|z|)`, its sign is
//! the parity of `α · s` where `s` marks the negative coordinates, and the
//! positive and negative contributions are summed separately before the final
//! subtraction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// One `f_α x^α` term.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub exponents: Exponents,
    pub coeff: f64,
}

impl Term {
    pub fn new(exponents: Exponents, coeff: f64) -> Self {
        Self { exponents, coeff }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// Graded lexicographic comparison: lower total degree first, then larger
/// exponent of the earliest variable first.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            match y.cmp(x) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

/// Sparse polynomial over `num_vars` real variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    num_vars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    /// Builds a polynomial from raw terms. Terms are kept as given; call
    /// [`canonicalize`](Self::canonicalize) to merge and sort them.
    pub fn new(num_vars: usize, terms: Vec<Term>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::NoVariables);
        }
        for t in &terms {
            if t.exponents.len() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    found: t.exponents.len(),
                });
            }
            if !t.coeff.is_finite() {
                return Err(Error::NonFiniteCoefficient);
            }
        }
        Ok(Self { num_vars, terms })
    }

    pub fn zero(num_vars: usize) -> Self {
        assert!(num_vars > 0, "polynomial needs at least one variable");
        Self {
            num_vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(num_vars: usize, c: f64) -> Self {
        let mut p = Self::zero(num_vars);
        p.terms.push(Term::new(alloc::vec![0; num_vars], c));
        p.canonicalize()
    }

    /// The coordinate polynomial `x_i` (zero-based `i`).
    pub fn variable(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut e = alloc::vec![0; num_vars];
        e[i] = 1;
        Self {
            num_vars,
            terms: alloc::vec![Term::new(e, 1.0)],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coeff == 0.0)
    }

    /// Merges duplicate monomials, drops zero coefficients and sorts the terms
    /// in graded lexicographic order.
    pub fn canonicalize(&self) -> Self {
        let mut merged: BTreeMap<GrlexKey, f64> = BTreeMap::new();
        for t in &self.terms {
            *merged.entry(GrlexKey(t.exponents.clone())).or_insert(0.0) += t.coeff;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| *c != 0.0)
            .map(|(k, c)| Term::new(k.0, c))
            .collect();
        Self {
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Maximum total degree over non-zero terms; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.canonicalize()
            .terms
            .iter()
            .map(Term::degree)
            .max()
            .unwrap_or(0)
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> Self {
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term::new(t.exponents.clone(), -t.coeff))
            .collect();
        terms.push(Term::new(alloc::vec![0; self.num_vars], 1.0));
        Self {
            num_vars: self.num_vars,
            terms,
        }
        .canonicalize()
    }

    /// Evaluates the polynomial at `z`.
    pub fn evaluate(&self, z: &[f64]) -> Result<f64> {
        self.check_dim(z.len())?;
        Ok(self.eval_unchecked(z))
    }

    /// Elementwise [`evaluate`](Self::evaluate) over a list of points.
    pub fn eval_batch<P: AsRef<[f64]>>(&self, points: &[P]) -> Result<Vec<f64>> {
        points.iter().map(|z| self.evaluate(z.as_ref())).collect()
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: len,
            });
        }
        Ok(())
    }

    pub(crate) fn eval_unchecked(&self, z: &[f64]) -> f64 {
        if z.iter().any(|&v| v == 0.0) {
            return self.eval_direct(z);
        }
        let log_abs: Vec<f64> = z.iter().map(|&v| libm::log(libm::fabs(v))).collect();
        let negative: Vec<bool> = z.iter().map(|&v| v < 0.0).collect();
        self.eval_sign_split(&log_abs, &negative)
    }

    /// Sign-split evaluation from precomputed `log|z_i|` and sign flags.
    pub(crate) fn eval_sign_split(&self, log_abs: &[f64], negative: &[bool]) -> f64 {
        let mut pos = 0.0;
        let mut neg = 0.0;
        for t in &self.terms {
            let mut log_mag = 0.0;
            let mut parity = 0u32;
            for ((&e, &la), &s) in t.exponents.iter().zip(log_abs).zip(negative) {
                if e != 0 {
                    log_mag += e as f64 * la;
                    if s {
                        parity += e;
                    }
                }
            }
            let mut c = t.coeff * libm::exp(log_mag);
            if parity % 2 == 1 {
                c = -c;
            }
            if c >= 0.0 {
                pos += c;
            } else {
                neg -= c;
            }
        }
        pos - neg
    }

    /// Per-term power evaluation with `0^0 = 1`; used when a coordinate is zero.
    fn eval_direct(&self, z: &[f64]) -> f64 {
        let mut pos = 0.0;
        let mut neg = 0.0;
        for t in &self.terms {
            let c = t.coeff * monomial_value(&t.exponents, z);
            if c >= 0.0 {
                pos += c;
            } else {
                neg -= c;
            }
        }
        pos - neg
    }
}

/// `z^α` by repeated squaring per coordinate.
pub fn monomial_value(alpha: &[u32], z: &[f64]) -> f64 {
    alpha
        .iter()
        .zip(z)
        .fold(1.0, |acc, (&e, &v)| acc * powu(v, e))
}

/// Integer power by squaring; `powu(x, 0) == 1` for every `x`.
pub fn powu(mut base: f64, mut exp: u32) -> f64 {
    let mut acc = 1.0;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct GrlexKey(Exponents);

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&self.0, &other.0)
    }
}

/// All monomials `x^α` with `|α| <= max_degree`, in graded lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialBasis {
    num_vars: usize,
    max_degree: u32,
    exponents: Vec<Exponents>,
    index: BTreeMap<Exponents, usize>,
}

impl MonomialBasis {
    pub fn new(num_vars: usize, max_degree: u32) -> Self {
        assert!(num_vars >= 1, "monomial basis needs at least one variable");
        let exponents = enumerate_grlex(num_vars, max_degree);
        let index = exponents
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Self {
            num_vars,
            max_degree,
            exponents,
            index,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[Exponents] {
        &self.exponents
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.exponents[i]
    }

    pub fn index_of(&self, alpha: &[u32]) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    /// Values `z^α` for every basis element; the constant entry is exactly 1.
    pub fn evaluate(&self, z: &[f64]) -> Result<Vec<f64>> {
        if z.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: z.len(),
            });
        }
        Ok(self.evaluate_unchecked(z))
    }

    pub(crate) fn evaluate_unchecked(&self, z: &[f64]) -> Vec<f64> {
        self.exponents
            .iter()
            .map(|a| monomial_value(a, z))
            .collect()
    }
}

/// `monomial_basis(n, k)`.
pub fn monomial_basis(num_vars: usize, max_degree: u32) -> MonomialBasis {
    MonomialBasis::new(num_vars, max_degree)
}

/// `v_k(z)` for the given basis.
pub fn eval_monomial_vector(basis: &MonomialBasis, z: &[f64]) -> Result<Vec<f64>> {
    basis.evaluate(z)
}

/// Exponent vectors of total degree `<= max_degree` in graded lex order.
pub fn enumerate_grlex(num_vars: usize, max_degree: u32) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(num_vars);
    for deg in 0..=max_degree {
        push_exact_degree(num_vars, deg, &mut prefix, &mut out);
    }
    out
}

fn push_exact_degree(vars_left: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponents>) {
    if vars_left == 1 {
        prefix.push(deg);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for e in (0..=deg).rev() {
        prefix.push(e);
        push_exact_degree(vars_left - 1, deg - e, prefix, out);
        prefix.pop();
    }
}

/// `binomial(n, k)` with saturation on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
