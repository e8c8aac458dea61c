//! Exact invariants of finite-dimensional algebras presented by structure
//! constants.
//!
//! The crate computes, over the rationals or over a rational-function field
//! in one parameter, the classical linear invariants of a nonassociative
//! algebra: derivation algebras, centroids, centers, and the space of
//! central derivations (endomorphisms with central image that annihilate
//! all products). It ships a catalog of complex Zinbiel algebras of
//! dimension at most 4 together with their claimed central-derivation
//! tables, and reconciles the claimed values against what the definitions
//! actually force.
//!
//! Everything is exact: scalars are arbitrary-precision rationals or
//! reduced rational functions, and all linear algebra is fraction-exact
//! reduced row echelon form. Generic ranks over the parameter are
//! certified by the list of polynomials at which the chosen pivot
//! sequence may become invalid.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod field;
pub mod invariants;
pub mod linalg;
pub mod rng;
pub mod scalar;

pub use error::{AlgebraError, LinalgError, ParseError, ScalarError};
pub use field::{Field, NonzeroStatus};
pub use scalar::{AssumptionSet, Poly, Rational, Scalar};

/// Matrix over the full scalar field (rationals and rational functions).
pub type Mat = linalg::Matrix<Scalar>;
/// Matrix restricted to exact rationals, used by parameter-free paths
/// such as minimal polynomials and idempotent searches.
pub type QMat = linalg::Matrix<Rational>;
/// Subspace of coordinate space over the full scalar field.
pub type Subspace = linalg::SubspaceBasis<Scalar>;
/// Subspace of rational coordinate space.
pub type QSubspace = linalg::SubspaceBasis<Rational>;
