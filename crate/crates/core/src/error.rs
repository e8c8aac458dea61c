//! Error types shared across the crate.

use thiserror::Error;

use crate::scalar::{Poly, Rational};

/// Errors raised by scalar and polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("denominator vanishes at {value}")]
    PoleAtValue { value: Rational },
    #[error("value {value} violates the nonzero assumption on `{assumption}`")]
    AssumptionViolated { value: Rational, assumption: Poly },
    #[error("expressions involve distinct parameters `{first}` and `{second}`")]
    ParameterClash { first: String, second: String },
}

/// Errors raised by exact linear algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix shapes are incompatible: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular or not certifiably invertible")]
    SingularMatrix,
}

/// Errors raised by algebra-level operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("operation requires parameter-free scalars (parameter `{0}` present); specialize first")]
    ParameterPresent(String),
}

/// Parse error with source position (1-based line and column).
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("multiple parameters: `{first}` and `{second}` (only one is supported)")]
    MultipleParameters { first: String, second: String },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("parameter `{0}` used but not declared")]
    UndeclaredParameter(String),
}

impl ParseError {
    pub fn new(line: usize, col: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, col, kind }
    }

    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError::new(line, col, ParseErrorKind::Syntax(msg.into()))
    }
}

/// Catalog data-file corruption.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LoadError {
    #[error("catalog entry `{id}`: {source}")]
    BadAlgebra { id: String, source: ParseError },
    #[error("claims file: {0}")]
    BadClaims(String),
    #[error("claims refer to unknown entry `{0}`")]
    UnknownEntry(String),
}
