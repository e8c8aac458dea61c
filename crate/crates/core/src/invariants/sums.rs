//! Centroid of a direct sum.
//!
//! For a sum of ideals the centroid splits as the two block-diagonal
//! centroids plus two corner spaces of maps whose image is central in the
//! other summand and which kill the product subspace of their source. The
//! report recomputes both sides independently and also verifies the block
//! embeddings.


use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::error::AlgebraError;
use crate::linalg::{Matrix, RankCertificate, SubspaceBasis};
use crate::scalar::Scalar;

use super::{centroid_space, vectorize};

/// Basis of `{phi : src -> dst linear | phi(src) ⊆ center(dst),
/// phi(src * src) = 0}`, a subspace of the `dim(src) * dim(dst)` matrix
/// space (row convention: row `i` is the image of the `i`-th basis element
/// of `src`).
pub fn hom_restriction_space(
    src: &AlgebraSpec,
    dst: &AlgebraSpec,
) -> (SubspaceBasis<Scalar>, RankCertificate) {
    let ns = src.dim;
    let nd = dst.dim;
    let assumptions = src.assumptions.union(&dst.assumptions);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // Image inside the center of dst.
    let q = dst.centralizer_constraints(
        &(0..nd).map(|i| dst.basis_element(i)).collect::<Vec<_>>(),
    );
    for qr in 0..q.rows() {
        for i in 0..ns {
            let mut row = vec![Scalar::zero(); ns * nd];
            for t in 0..nd {
                let c = &q[(qr, t)];
                if !c.is_zero() {
                    row[i * nd + t] = c.clone();
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    // Annihilation of the product subspace of src.
    let (square, mut cert) = src.product_subspace();
    for v in square.rows() {
        for t in 0..nd {
            let mut row = vec![Scalar::zero(); ns * nd];
            for i in 0..ns {
                if !v[i].is_zero() {
                    row[i * nd + t] = v[i].clone();
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let m = if rows.is_empty() {
        Matrix::zeros(0, ns * nd)
    } else {
        Matrix::from_rows(rows)
    };
    let (space, c) = m.nullspace(&assumptions);
    cert.merge(&c);
    (space, cert)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SumDecompositionReport {
    pub dim_gamma_sum: usize,
    pub dim_gamma_a: usize,
    pub dim_gamma_b: usize,
    pub dim_corner_ab: usize,
    pub dim_corner_ba: usize,
    /// Whether the four parts add up to the centroid of the sum.
    pub formula_holds: bool,
    /// Block embeddings of all four parts lie inside the computed centroid.
    pub embeddings_contained: bool,
    /// The embedded generators are linearly independent.
    pub embeddings_independent: bool,
}

impl SumDecompositionReport {
    pub fn parts_total(&self) -> usize {
        self.dim_gamma_a + self.dim_gamma_b + self.dim_corner_ab + self.dim_corner_ba
    }
}

/// Computes the centroid of `a ⊕ b` directly and compares it with the
/// four-part decomposition.
pub fn direct_sum_centroid_report(
    a: &AlgebraSpec,
    b: &AlgebraSpec,
) -> Result<SumDecompositionReport, AlgebraError> {
    let sum = a.direct_sum(b)?;
    let n = a.dim;
    let m = b.dim;
    let total = n + m;
    let (gamma_sum, _) = centroid_space(&sum);
    let (gamma_a, _) = centroid_space(a);
    let (gamma_b, _) = centroid_space(b);
    let (corner_ab, _) = hom_restriction_space(a, b);
    let (corner_ba, _) = hom_restriction_space(b, a);

    // Block embeddings into End(a ⊕ b).
    let mut embedded: Vec<Vec<Scalar>> = Vec::new();
    let embed = |place: &dyn Fn(usize, usize, &Scalar, &mut Matrix<Scalar>), rows: usize, cols: usize, basis: &[Vec<Scalar>]| -> Vec<Vec<Scalar>> {
        basis
            .iter()
            .map(|v| {
                let mut big = Matrix::<Scalar>::zeros(total, total);
                for i in 0..rows {
                    for t in 0..cols {
                        let c = &v[i * cols + t];
                        if !c.is_zero() {
                            place(i, t, c, &mut big);
                        }
                    }
                }
                vectorize(&big)
            })
            .collect()
    };
    let top_left = |i: usize, t: usize, c: &Scalar, big: &mut Matrix<Scalar>| {
        big[(i, t)] = c.clone();
    };
    let bottom_right = |i: usize, t: usize, c: &Scalar, big: &mut Matrix<Scalar>| {
        big[(n + i, n + t)] = c.clone();
    };
    let top_right = |i: usize, t: usize, c: &Scalar, big: &mut Matrix<Scalar>| {
        big[(i, n + t)] = c.clone();
    };
    let bottom_left = |i: usize, t: usize, c: &Scalar, big: &mut Matrix<Scalar>| {
        big[(n + i, t)] = c.clone();
    };
    embedded.extend(embed(&top_left, n, n, gamma_a.space.rows()));
    embedded.extend(embed(&bottom_right, m, m, gamma_b.space.rows()));
    embedded.extend(embed(&top_right, n, m, corner_ab.rows()));
    embedded.extend(embed(&bottom_left, m, n, corner_ba.rows()));

    let embeddings_contained = embedded.iter().all(|v| gamma_sum.space.contains(v));
    let assumptions = sum.assumptions.clone();
    let (span, _) = SubspaceBasis::from_generators(total * total, embedded.clone(), &assumptions);
    let embeddings_independent = span.dim() == embedded.len();

    let report = SumDecompositionReport {
        dim_gamma_sum: gamma_sum.dim(),
        dim_gamma_a: gamma_a.dim(),
        dim_gamma_b: gamma_b.dim(),
        dim_corner_ab: corner_ab.dim(),
        dim_corner_ba: corner_ba.dim(),
        formula_holds: gamma_sum.dim()
            == gamma_a.dim() + gamma_b.dim() + corner_ab.dim() + corner_ba.dim(),
        embeddings_contained,
        embeddings_independent,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_1() -> AlgebraSpec {
        let mut a = AlgebraSpec::new("Z2_1", 2);
        a.set_product(0, 0, vec![Scalar::zero(), Scalar::one()]);
        a
    }

    fn z3_1() -> AlgebraSpec {
        AlgebraSpec::new("Z3_1", 3)
    }

    #[test]
    fn corner_space_of_z2_1_into_itself() {
        // phi(e1) in span{e2}, phi(e2) = 0: one free entry.
        let (c, _) = hom_restriction_space(&z2_1(), &z2_1());
        assert_eq!(c.dim(), 1);
        let mut v = vec![Scalar::zero(); 4];
        v[1] = Scalar::one(); // row 1 -> e2
        assert!(c.contains(&v));
    }

    #[test]
    fn corner_space_into_abelian() {
        // Everything is central in the target; only phi(e2) = 0 remains.
        let (c, _) = hom_restriction_space(&z2_1(), &z3_1());
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn corner_space_of_abelian() {
        // No product constraints on the abelian source, full center target.
        let (c, _) = hom_restriction_space(&z3_1(), &z3_1());
        assert_eq!(c.dim(), 9);
    }

    #[test]
    fn sum_formula_z2_1_twice() {
        let report = direct_sum_centroid_report(&z2_1(), &z2_1()).unwrap();
        assert_eq!(report.dim_gamma_a, 2);
        assert_eq!(report.dim_gamma_b, 2);
        assert_eq!(report.dim_corner_ab, 1);
        assert_eq!(report.dim_corner_ba, 1);
        assert_eq!(report.dim_gamma_sum, 6);
        assert!(report.formula_holds);
        assert!(report.embeddings_contained);
        assert!(report.embeddings_independent);
    }

    #[test]
    fn sum_formula_abelian_twice() {
        let report = direct_sum_centroid_report(&z3_1(), &z3_1()).unwrap();
        assert_eq!(report.dim_gamma_sum, 36);
        assert_eq!(report.parts_total(), 36);
        assert!(report.formula_holds);
    }
}
