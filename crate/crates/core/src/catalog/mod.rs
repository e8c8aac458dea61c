//! Catalog of complex Zinbiel algebras of dimension at most 4, stored
//! verbatim from the source classification, with the claimed
//! central-derivation data and the reconciliation machinery.

pub mod data;
pub mod reconcile;

pub use data::{load_catalog, CatalogEntry, ClaimCase, EntryClaims};
pub use reconcile::{reconcile, Certificate, ReconRow, ReconciliationReport};
