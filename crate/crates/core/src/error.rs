use thiserror::Error;

use crate::curve::CurveViolation;
use crate::schema::{SurfaceType, Violation};

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SchemaError {
    #[error("invalid schema: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("illegal surface type {0}")]
    IllegalType(SurfaceType),
    #[error("schema is internally inconsistent: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("curve {curve} is invalid: {}", join(.violations))]
    Invalid { curve: String, violations: Vec<CurveViolation> },
    #[error("curve {0} is not simple")]
    NotSimple(String),
    #[error("curves {a} and {b} share an endpoint position (genericity violated)")]
    Genericity { a: String, b: String },
    #[error("unknown curve id {0}")]
    UnknownCurve(String),
    #[error("duplicate curve id {0}")]
    DuplicateId(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CutError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("curves {a} and {b} cross {crossings} times; cutting needs disjoint curves")]
    Crossing { a: String, b: String, crossings: u32 },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("not enough holes: need {needed}, have {available}")]
    InsufficientHoles { needed: usize, available: usize },
    #[error("construction produced an invalid family: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("schema too large for enumeration: {0}")]
    TooLarge(String),
    #[error("enumeration budget of {0} candidate configurations exceeded")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Schema(#[from] SchemaError),
}
