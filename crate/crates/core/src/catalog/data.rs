//! Embedded catalog data: one algebra file per entry plus one claims file.

use serde::{Deserialize, Serialize};

use crate::algebra::parse::parse_algebra_text;
use crate::algebra::AlgebraSpec;
use crate::error::LoadError;
use crate::scalar::parse::parse_rational_str;
use crate::scalar::Rational;

/// Claimed data for one parameter case of an entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimCase {
    pub label: String,
    /// Parameter value the case pins down, when it can be applied to the
    /// printed product (`None` for generic rows and for side conditions).
    pub binding: Option<CaseBinding>,
    pub cd_dim: usize,
    /// The claimed matrix, cell by cell, as printed.
    pub shape: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseBinding {
    pub param: String,
    pub value: String,
}

impl CaseBinding {
    pub fn value_rational(&self) -> Result<Rational, LoadError> {
        parse_rational_str(&self.value)
            .map_err(|e| LoadError::BadClaims(format!("binding value `{}`: {}", self.value, e)))
    }
}

/// Claims attached to one catalog entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryClaims {
    pub id: String,
    /// Decomposability of the centroid as claimed by the source
    /// corollaries; `None` when the source makes no claim.
    pub decomposable: Option<bool>,
    #[serde(default)]
    pub errata: Vec<String>,
    pub cases: Vec<ClaimCase>,
}

#[derive(Clone, Debug, Deserialize)]
struct ClaimsFile {
    #[allow(dead_code)]
    schema: u32,
    claims: Vec<EntryClaims>,
}

/// One catalog entry: the printed multiplication table together with the
/// claimed central-derivation data and any printing anomalies.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: AlgebraSpec,
    pub claims: EntryClaims,
}

impl CatalogEntry {
    pub fn errata(&self) -> &[String] {
        &self.claims.errata
    }
}

macro_rules! entry_sources {
    ($(($id:literal, $file:literal)),+ $(,)?) => {
        &[$(($id, include_str!(concat!("../../data/catalog/", $file)))),+]
    };
}

/// `(id, file text)` for the 24 entries, in canonical order.
const ENTRY_SOURCES: &[(&str, &str)] = entry_sources![
    ("Z2_1", "z2_1.alg"),
    ("Z3_1", "z3_1.alg"),
    ("Z3_2", "z3_2.alg"),
    ("Z3_3", "z3_3.alg"),
    ("Z3_4", "z3_4.alg"),
    ("Z3_5", "z3_5.alg"),
    ("Z3_6", "z3_6.alg"),
    ("Z3_7", "z3_7.alg"),
    ("Z4_1", "z4_1.alg"),
    ("Z4_2", "z4_2.alg"),
    ("Z4_3", "z4_3.alg"),
    ("Z4_4", "z4_4.alg"),
    ("Z4_5", "z4_5.alg"),
    ("Z4_6", "z4_6.alg"),
    ("Z4_7", "z4_7.alg"),
    ("Z4_8", "z4_8.alg"),
    ("Z4_9", "z4_9.alg"),
    ("Z4_10", "z4_10.alg"),
    ("Z4_11", "z4_11.alg"),
    ("Z4_12", "z4_12.alg"),
    ("Z4_13", "z4_13.alg"),
    ("Z4_14", "z4_14.alg"),
    ("Z4_15", "z4_15.alg"),
    ("Z4_16", "z4_16.alg"),
];

const CLAIMS_SOURCE: &str = include_str!("../../data/catalog/claims.json");

/// Loads the 24 catalog entries with their claims, in canonical id order.
pub fn load_catalog() -> Result<Vec<CatalogEntry>, LoadError> {
    let claims: ClaimsFile = serde_json::from_str(CLAIMS_SOURCE)
        .map_err(|e| LoadError::BadClaims(e.to_string()))?;
    let mut entries = Vec::with_capacity(ENTRY_SOURCES.len());
    for (id, text) in ENTRY_SOURCES {
        let algebra = parse_algebra_text(text)
            .map_err(|source| LoadError::BadAlgebra { id: (*id).into(), source })?;
        if algebra.name != *id {
            return Err(LoadError::BadAlgebra {
                id: (*id).into(),
                source: crate::error::ParseError::syntax(
                    1,
                    1,
                    format!("file names the algebra `{}`", algebra.name),
                ),
            });
        }
        let claim = claims
            .claims
            .iter()
            .find(|c| c.id == *id)
            .cloned()
            .ok_or_else(|| LoadError::UnknownEntry((*id).into()))?;
        entries.push(CatalogEntry { id: (*id).into(), algebra, claims: claim });
    }
    for c in &claims.claims {
        if !entries.iter().any(|e| e.id == c.id) {
            return Err(LoadError::UnknownEntry(c.id.clone()));
        }
    }
    Ok(entries)
}

/// Looks one entry up by its canonical id.
pub fn find_entry(entries: &[CatalogEntry], id: &str) -> Option<CatalogEntry> {
    entries.iter().find(|e| e.id == id).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Poly, Scalar};

    #[test]
    fn loads_24_entries() {
        let entries = load_catalog().unwrap();
        assert_eq!(entries.len(), 24);
        let dims: usize = entries.iter().map(|e| usize::from(e.algebra.dim == 2)).sum();
        assert_eq!(dims, 1);
        assert_eq!(entries.iter().filter(|e| e.algebra.dim == 3).count(), 7);
        assert_eq!(entries.iter().filter(|e| e.algebra.dim == 4).count(), 16);
    }

    #[test]
    fn z2_1_table() {
        let entries = load_catalog().unwrap();
        let e = find_entry(&entries, "Z2_1").unwrap();
        assert_eq!(
            e.algebra.basis_product(0, 0),
            vec![Scalar::zero(), Scalar::one()]
        );
        assert_eq!(e.claims.cases[0].cd_dim, 1);
    }

    #[test]
    fn z3_6_carries_assumption() {
        let entries = load_catalog().unwrap();
        let e = find_entry(&entries, "Z3_6").unwrap();
        assert_eq!(e.algebra.param.as_deref(), Some("lambda"));
        assert!(e
            .algebra
            .assumptions
            .contains_equivalent(&Poly::variable("lambda")));
    }

    #[test]
    fn z4_15_flags_missing_alpha() {
        let entries = load_catalog().unwrap();
        let e = find_entry(&entries, "Z4_15").unwrap();
        assert_eq!(e.claims.cases.len(), 2);
        assert_eq!(e.claims.cases[0].cd_dim, 2);
        assert_eq!(e.claims.cases[1].cd_dim, 9);
        assert!(e.algebra.param.is_none());
        assert!(e.errata().iter().any(|n| n.contains("alpha")));
    }

    #[test]
    fn unreliable_group_is_flagged() {
        let entries = load_catalog().unwrap();
        for id in ["Z4_12", "Z4_13", "Z4_14", "Z4_15", "Z4_16"] {
            let e = find_entry(&entries, id).unwrap();
            assert!(
                e.errata().iter().any(|n| n.contains("UNRELIABLE-SOURCE")),
                "{} missing the group flag",
                id
            );
        }
    }
}
