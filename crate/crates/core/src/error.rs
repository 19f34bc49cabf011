use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a polynomial needs at least one variable")]
    NoVariables,
    #[error("coefficient is not a finite number")]
    NonFiniteCoefficient,
    #[error("a problem needs at least one constraint generator")]
    NoGenerators,
    #[error("invalid relaxation config: {0}")]
    InvalidConfig(&'static str),
    #[error("instance too large: n = {n}, tau = {tau} gives L = {rows} rows (cap {cap})")]
    InstanceTooLarge {
        n: usize,
        tau: u32,
        rows: u64,
        cap: u64,
    },
    #[error("moment vector of order {available} cannot index order {needed}")]
    MomentOrder { needed: u32, available: u32 },
}
