//! Exact linear algebra over the scalar field: RREF, nullspaces, ranks with
//! specialization tracking, and a subspace lattice.

mod bareiss;
mod matrix;
mod subspace;

pub use bareiss::{fraction_free_rref, fraction_free_rref_rational};
pub use matrix::{express_in_span, Matrix, RankCertificate};
pub use subspace::{subspace_equal, SubspaceBasis};
