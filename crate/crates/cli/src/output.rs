//! Report rendering: text for humans, JSON/CSV for machines. All outputs
//! are deterministic for fixed inputs and seed.

use std::path::{Path, PathBuf};

use serde::Serialize;

use zinbiel_core::algebra::identities::{check_identity, IdentityKind};
use zinbiel_core::algebra::AlgebraSpec;
use zinbiel_core::catalog::{ReconRow, ReconciliationReport};
use zinbiel_core::catalog::reconcile::dimension_class_summary;
use zinbiel_core::invariants::render::{render_parametric, Convention, ParametricMatrixView};
use zinbiel_core::invariants::sums::SumDecompositionReport;
use zinbiel_core::invariants::AlgebraInvariants;

use crate::Failure;

pub fn invariants_text(algebra: &AlgebraSpec, convention: Convention) -> String {
    let inv = AlgebraInvariants::compute(algebra);
    let zinbiel = check_identity(algebra, IdentityKind::Zinbiel);
    let mut out = String::new();
    out.push_str(&format!("algebra {} (dim {})\n", algebra.name, algebra.dim));
    if let Some(p) = &algebra.param {
        out.push_str(&format!("param {}", p));
        if !algebra.assumptions.is_empty() {
            out.push_str(&format!("  assume {}", algebra.assumptions));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "zinbiel identity: {}\n",
        if zinbiel.holds { "holds" } else { "FAILS" }
    ));
    out.push_str(&format!(
        "power chain dims: {}\n",
        inv.chain_dims()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    out.push_str(&format!("center: dim {}\n", inv.center.dim()));
    for v in inv.center.rows() {
        out.push_str(&format!("  {}\n", algebra.render_element(v)));
    }
    let section = |title: &str, view: &ParametricMatrixView, dim: usize| {
        let mut s = format!("{} dim {} ({} convention)\n", title, dim, view.convention.name());
        s.push_str(&view.to_string());
        s
    };
    out.push_str(&section(
        "Der",
        &render_parametric(&inv.der, convention),
        inv.der.dim(),
    ));
    out.push_str(&section(
        "Gamma",
        &render_parametric(&inv.gamma, convention),
        inv.gamma.dim(),
    ));
    out.push_str(&section(
        "CD (equational)",
        &render_parametric(&inv.cd_eq, convention),
        inv.cd_eq.dim(),
    ));
    out.push_str(&format!(
        "CD agreement: equational dim {}, definitional dim {}, intersection dim {} -> {}\n",
        inv.cd_eq.dim(),
        inv.cd_def.dim(),
        inv.cd_int.dim(),
        if inv.cd_agreement() { "agree" } else { "DISAGREE" }
    ));
    if inv.cert.specializations.is_empty() {
        out.push_str("specializations encountered: none\n");
    } else {
        out.push_str(&format!(
            "specializations encountered: {} (rerun with --param to inspect these cases)\n",
            inv.cert
                .specializations
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    out
}

#[derive(Serialize)]
struct MatrixJson {
    dim: usize,
    symbols: Vec<String>,
    cells: Vec<Vec<String>>,
}

fn matrix_json(view: &ParametricMatrixView, dim: usize) -> MatrixJson {
    MatrixJson {
        dim,
        symbols: view.symbols.clone(),
        cells: view
            .cells
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

#[derive(Serialize)]
struct InvariantsJson {
    schema: u32,
    name: String,
    dim: usize,
    param: Option<String>,
    assumptions: Vec<String>,
    zinbiel_holds: bool,
    chain_dims: Vec<usize>,
    center_dim: usize,
    center_basis: Vec<String>,
    convention: String,
    der: MatrixJson,
    gamma: MatrixJson,
    cd: MatrixJson,
    cd_definitional_dim: usize,
    cd_intersection_dim: usize,
    cd_agreement: bool,
    specializations: Vec<String>,
}

pub fn invariants_json(algebra: &AlgebraSpec, convention: Convention) -> String {
    let inv = AlgebraInvariants::compute(algebra);
    let zinbiel = check_identity(algebra, IdentityKind::Zinbiel);
    let doc = InvariantsJson {
        schema: 1,
        name: algebra.name.clone(),
        dim: algebra.dim,
        param: algebra.param.clone(),
        assumptions: algebra.assumptions.iter().map(|p| format!("{} != 0", p)).collect(),
        zinbiel_holds: zinbiel.holds,
        chain_dims: inv.chain_dims(),
        center_dim: inv.center.dim(),
        center_basis: inv
            .center
            .rows()
            .iter()
            .map(|v| algebra.render_element(v))
            .collect(),
        convention: convention.name().into(),
        der: matrix_json(&render_parametric(&inv.der, convention), inv.der.dim()),
        gamma: matrix_json(&render_parametric(&inv.gamma, convention), inv.gamma.dim()),
        cd: matrix_json(&render_parametric(&inv.cd_eq, convention), inv.cd_eq.dim()),
        cd_definitional_dim: inv.cd_def.dim(),
        cd_intersection_dim: inv.cd_int.dim(),
        cd_agreement: inv.cd_agreement(),
        specializations: inv
            .cert
            .specializations
            .iter()
            .map(|p| p.to_string())
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Writes one certificate file per mismatch row; returns `(row index,
/// path)` pairs aligned with the report.
pub fn write_certificates(
    dir: &Path,
    report: &ReconciliationReport,
) -> Result<Vec<(usize, PathBuf)>, Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::parse(format!("{}: {}", dir.display(), e)))?;
    let mut paths = Vec::new();
    for (idx, row) in report.rows.iter().enumerate() {
        if let Some(cert) = &row.certificate {
            let slug: String = row
                .case
                .chars()
                .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
                .collect();
            let path = dir.join(format!("{}__{}.json", row.id, slug));
            let body = serde_json::to_string_pretty(cert).expect("serializable");
            std::fs::write(&path, body)
                .map_err(|e| Failure::parse(format!("{}: {}", path.display(), e)))?;
            paths.push((idx, path));
        }
    }
    Ok(paths)
}

fn cert_ref(idx: usize, row: &ReconRow, cert_paths: Option<&[(usize, PathBuf)]>) -> String {
    if row.certificate.is_none() {
        return String::new();
    }
    match cert_paths {
        Some(paths) => paths
            .iter()
            .find(|(i, _)| *i == idx)
            .map(|(_, p)| p.display().to_string())
            .unwrap_or_default(),
        None => "embedded (use --format json or --certs DIR)".into(),
    }
}

pub fn table_text(
    report: &ReconciliationReport,
    cert_paths: Option<&[(usize, PathBuf)]>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<6} {:<22} {:>3} {:>3} {:>3} {:>3} {:>6} {:<5} {:<9} {}\n",
        "id", "case", "der", "gam", "cen", "cd", "claim", "match", "shape", "decomposability"
    ));
    for (idx, row) in report.rows.iter().enumerate() {
        let shape = match (row.shape_match_column, row.shape_match_row) {
            (true, true) => "col+row",
            (true, false) => "col",
            (false, true) => "row",
            (false, false) => "none",
        };
        let decomp = format!(
            "claim={} cd0={} {}",
            row.decomposability
                .claimed
                .map(|b| b.to_string())
                .unwrap_or_else(|| "-".into()),
            row.decomposability.cd_is_zero,
            row.decomposability.structural
        );
        out.push_str(&format!(
            "{:<6} {:<22} {:>3} {:>3} {:>3} {:>3} {:>6} {:<5} {:<9} {}\n",
            row.id,
            row.case,
            row.dim_der,
            row.dim_gamma,
            row.dim_center,
            row.dim_cd,
            row.claimed_cd,
            row.matches_claim,
            shape,
            decomp
        ));
        if !row.matches_claim {
            out.push_str(&format!(
                "       mismatch: computed {} vs claimed {}; certificate: {}\n",
                row.dim_cd,
                row.claimed_cd,
                cert_ref(idx, row, cert_paths)
            ));
        }
        if !row.cd_agreement {
            out.push_str("       WARNING: central-derivation characterizations disagree\n");
        }
        if !row.zinbiel_holds {
            out.push_str("       WARNING: entry fails the zinbiel identity as printed\n");
        }
        for e in &row.errata {
            out.push_str(&format!("       errata: {}\n", e));
        }
        if !row.specializations.is_empty() {
            out.push_str(&format!(
                "       specializations: {}\n",
                row.specializations.join(", ")
            ));
        }
    }
    out.push('\n');
    for s in dimension_class_summary(report) {
        out.push_str(&format!(
            "dimension {}: computed CD dims {:?} (range {}..{})\n",
            s.dim, s.cd_dims, s.min, s.max
        ));
    }
    for note in &report.notes {
        out.push_str(&format!("note: {}\n", note));
    }
    out
}

pub fn table_csv(
    report: &ReconciliationReport,
    cert_paths: Option<&[(usize, PathBuf)]>,
) -> String {
    let mut out = String::new();
    out.push_str(
        "id,case,binding,zinbiel,dim_der,dim_gamma,dim_center,dim_cd,claimed_cd,match,\
         shape_column,shape_row,cd_agreement,chain,specializations,claimed_decomposable,\
         cd_zero_criterion,structural,certificate\n",
    );
    for (idx, row) in report.rows.iter().enumerate() {
        let fields = [
            row.id.clone(),
            row.case.clone(),
            row.binding.clone().unwrap_or_default(),
            row.zinbiel_holds.to_string(),
            row.dim_der.to_string(),
            row.dim_gamma.to_string(),
            row.dim_center.to_string(),
            row.dim_cd.to_string(),
            row.claimed_cd.to_string(),
            row.matches_claim.to_string(),
            row.shape_match_column.to_string(),
            row.shape_match_row.to_string(),
            row.cd_agreement.to_string(),
            row.chain_dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            row.specializations.join("; "),
            row.decomposability
                .claimed
                .map(|b| b.to_string())
                .unwrap_or_default(),
            row.decomposability.cd_is_zero.to_string(),
            row.decomposability.structural.clone(),
            cert_ref(idx, row, cert_paths),
        ];
        let escaped: Vec<String> = fields
            .iter()
            .map(|f| {
                if f.contains(',') || f.contains('"') || f.contains('\n') {
                    format!("\"{}\"", f.replace('"', "\"\""))
                } else {
                    f.clone()
                }
            })
            .collect();
        out.push_str(&escaped.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct TableJson<'a> {
    schema: u32,
    #[serde(flatten)]
    report: &'a ReconciliationReport,
    dimension_summary: Vec<zinbiel_core::catalog::reconcile::DimensionClassSummary>,
}

pub fn table_json(report: &ReconciliationReport) -> String {
    let doc = TableJson {
        schema: 1,
        report,
        dimension_summary: dimension_class_summary(report),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn sum_text(a: &AlgebraSpec, b: &AlgebraSpec, r: &SumDecompositionReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "A = {} (dim {}), B = {} (dim {})\n",
        a.name, a.dim, b.name, b.dim
    ));
    out.push_str(&format!("dim Gamma(A+B) = {}\n", r.dim_gamma_sum));
    out.push_str(&format!(
        "parts: Gamma(A) = {}, Gamma(B) = {}, corner A->B = {}, corner B->A = {}, total = {}\n",
        r.dim_gamma_a,
        r.dim_gamma_b,
        r.dim_corner_ab,
        r.dim_corner_ba,
        r.parts_total()
    ));
    out.push_str(&format!("decomposition formula holds: {}\n", r.formula_holds));
    out.push_str(&format!(
        "block embeddings contained: {}, independent: {}\n",
        r.embeddings_contained, r.embeddings_independent
    ));
    out
}

#[derive(Serialize)]
struct SumJson<'a> {
    schema: u32,
    a: String,
    b: String,
    #[serde(flatten)]
    report: &'a SumDecompositionReport,
}

pub fn sum_json(a: &AlgebraSpec, b: &AlgebraSpec, r: &SumDecompositionReport) -> String {
    serde_json::to_string_pretty(&SumJson {
        schema: 1,
        a: a.name.clone(),
        b: b.name.clone(),
        report: r,
    })
    .expect("serializable")
        + "\n"
}
