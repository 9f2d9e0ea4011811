//! Audit harness for the identities around `y6(m, n; lambda, p)`.
//!
//! The [`registry`] lists every identity with its printed form, an optional
//! corrected form and a pinned [`Verdict`]. The [`runner`] checks each one
//! over an exact parameter grid and the [`report`] renders the outcome.
//!
//! ```
//! use binomial_sums_audit::{config::Config, runner::run_audit, Verdict};
//!
//! let report = run_audit(&Config::default(), Some("dixon"), 1).unwrap();
//! let dixon = &report.entries[0];
//! assert_eq!(dixon.verdict, Verdict::HoldsPrinted);
//! assert_eq!(dixon.points, 6);
//! ```

pub mod config;
pub mod grid;
pub mod registry;
pub mod report;
pub mod runner;
pub mod seq;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/audit.md")]
struct Guide;

pub use registry::{registry, IdentityEntry, Verdict};

#[derive(Debug, thiserror::Error)]
pub enum AuditError {
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("no identity matches {0:?}")]
    UnknownId(String),

    #[error("bad filter {pattern:?}: {message}")]
    Filter { pattern: String, message: String },

    #[error("grid for {0} is empty after skipping singular points")]
    EmptyGrid(String),

    #[error("{id} failed to evaluate at {point}: {source}")]
    Evaluation {
        id: String,
        point: String,
        source: Box<binomial_sums::Error>,
    },

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl From<csv::Error> for AuditError {
    fn from(e: csv::Error) -> Self {
        AuditError::Csv(e.to_string())
    }
}
