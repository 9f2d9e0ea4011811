use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has zero constant term and no reciprocal")]
    ZeroConstantTerm,

    #[error("{0} is neither an integer nor a half-integer")]
    NotHalfInteger(Rational),

    #[error("{family} is singular at {parameter} = {value}{hint}")]
    SingularParameter {
        family: &'static str,
        parameter: &'static str,
        value: Rational,
        hint: &'static str,
    },

    #[error("hypergeometric series does not terminate (no upper parameter in 0, -1, -2, ...)")]
    NonTerminating,

    #[error("lower parameter {value} reaches a pole at index {pole} before the series terminates at {terminates_at}")]
    InvalidLowerParameter {
        value: Rational,
        pole: u64,
        terminates_at: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {input:?} as an exact fraction: {reason}")]
    Parse { input: String, reason: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
