use crate::exactalg::Var;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no value assigned to variable {0}")]
    MissingVariable(Var),
    #[error("value assigned to {0} is not the square of a rational, but {0} carries a half-integer power")]
    NotASquare(Var),
    #[error("a constant has no inverse as a truncated geometric series")]
    ConstantSeries,
    #[error("expected a monomial with coefficient 1")]
    NotUnitMonomial,
    #[error("series coefficients must have non-negative integer exponents")]
    NonSeriesExponent,
    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),
    #[error("invalid plane partition: {0}")]
    InvalidPlanePartition(&'static str),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("usage error: {0}")]
    Usage(&'static str),
}
