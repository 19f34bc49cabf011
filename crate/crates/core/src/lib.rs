//! Bounded-degree sum-of-squares (BSOS) relaxations for polynomial
//! optimization over compact basic semi-algebraic sets.
//!
//! The pipeline is
//!
//! 1. [`relaxation::assemble`] samples points, evaluates the products
//!    `h_{αβ} = Π g_j^{α_j} (1 - g_j)^{β_j}` and the monomial vectors `v_k`
//!    at those points, and drops numerically redundant rows;
//! 2. [`sdp_solver::solve`] runs a primal-dual interior-point method on
//!    `max t  s.t.  t + Σ λ_q h_q(x_p) + v_pᵀ Q v_p = f(x_p),  λ >= 0,  Q ⪰ 0`,
//!    using the rank-one structure of the PSD constraint matrices;
//! 3. [`certificate::verify`] builds the moment vector from the dual weights and
//!    checks the rank conditions that certify a global minimum.
//!
//! With `k = 0` and no PSD block the same pipeline computes the
//! Krivine-Stengle LP bound.
//!
//! The crate is `no_std` (it needs `alloc`). Enable the `std` feature for
//! faster dense kernels.

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod certificate;
mod error;
pub mod linalg;
pub mod polynomial;
pub mod relaxation;
pub mod rng;
pub mod sdp_solver;

pub use error::{Error, Result};
pub use polynomial::{monomial_basis, MonomialBasis, Polynomial, Term};
pub use relaxation::{assemble, Mode, RelaxationConfig, SdpInstance, SemialgebraicProblem};
pub use sdp_solver::{solve, SolveResult, SolveStatus, SolverOptions};
