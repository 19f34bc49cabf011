//! Command-line companion to `bsos-core`: the built-in benchmark catalog,
//! a text problem format, random instance families and a run/sweep driver
//! producing JSON records.

pub mod catalog;
pub mod expr;
pub mod format;
pub mod generate;
pub mod run;

pub use bsos_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot parse `{input}`: {message}")]
    Parse { input: String, message: String },
    #[error("problem file line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("unknown builtin `{name}`; available: {catalog}")]
    UnknownBuiltin { name: String, catalog: String },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Core(#[from] bsos_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
