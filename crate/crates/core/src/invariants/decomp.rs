//! Decomposability of the centroid.
//!
//! Two verdicts are produced side by side: the criterion "the
//! central-derivation space is zero", and a structural search for an
//! actual idempotent splitting of the centroid algebra. The search factors
//! minimal polynomials of candidate elements; a coprime splitting of a
//! minimal polynomial yields an idempotent through the Bezout identity.
//! Candidates are drawn first from the center of the centroid (an
//! idempotent found there is central and splits the centroid into
//! two-sided ideals), then from general basis combinations (an idempotent
//! found there still splits the centroid as a module). The search is
//! bounded; finding nothing is reported as such, not as a proof.

use num_traits::{One, Zero};

use crate::algebra::AlgebraSpec;
use crate::error::AlgebraError;
use crate::linalg::{express_in_span, Matrix, SubspaceBasis};
use crate::scalar::{AssumptionSet, Poly, Rational};

use super::{cd_equational, centroid_space};

/// Monic minimal polynomial of a square rational matrix.
pub fn minimal_polynomial(m: &Matrix<Rational>, var: &str) -> Poly {
    let n = m.rows();
    assert_eq!(n, m.cols(), "minimal polynomial of a non-square matrix");
    let empty = AssumptionSet::empty();
    let mut power = Matrix::<Rational>::identity(n);
    let mut powers: Vec<Vec<Rational>> = Vec::new();
    loop {
        let vec: Vec<Rational> = power.iter_rows().flat_map(|r| r.iter().cloned()).collect();
        if let Some(coeffs) = express_in_span(&powers, &vec, &empty) {
            // power^k = sum c_i power^i, so the minimal polynomial is
            // x^k - sum c_i x^i.
            let k = powers.len();
            let mut poly = vec![Rational::zero(); k + 1];
            poly[k] = Rational::one();
            for (i, c) in coeffs.into_iter().enumerate() {
                poly[i] = -c;
            }
            return Poly::new(var, poly);
        }
        powers.push(vec);
        power = power.mul(m).expect("square");
        assert!(powers.len() <= n * n + 1, "minimal polynomial search runaway");
    }
}

/// Evaluates a polynomial at a matrix (Horner).
pub fn eval_poly_at_matrix(p: &Poly, m: &Matrix<Rational>) -> Matrix<Rational> {
    let n = m.rows();
    let mut acc = Matrix::<Rational>::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m).expect("square");
        if !c.is_zero() {
            let scaled = Matrix::<Rational>::identity(n).scale(c);
            acc = acc.add(&scaled).expect("same shape");
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub enum StructuralVerdict {
    /// A verified idempotent splitting. `central` records whether the
    /// witness commutes with the whole centroid (two-sided split) or only
    /// witnesses a module splitting.
    Decomposable { witness: Matrix<Rational>, central: bool },
    /// Bounded search exhausted with every minimal polynomial a power of a
    /// single irreducible factor.
    NoSplitFound,
    /// Some candidate's minimal polynomial could not be fully factored and
    /// no split was found elsewhere.
    Inconclusive { minimal_poly: Poly },
}

impl StructuralVerdict {
    pub fn label(&self) -> String {
        match self {
            StructuralVerdict::Decomposable { central: true, .. } => {
                "decomposable (central idempotent)".into()
            }
            StructuralVerdict::Decomposable { central: false, .. } => {
                "decomposable (idempotent, module split)".into()
            }
            StructuralVerdict::NoSplitFound => "no split found".into(),
            StructuralVerdict::Inconclusive { minimal_poly } => {
                format!("inconclusive (unfactored minimal polynomial {})", minimal_poly)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecomposabilityReport {
    /// The zero-central-derivation criterion.
    pub cd_is_zero: bool,
    pub cd_dim: usize,
    pub gamma_dim: usize,
    pub structural: StructuralVerdict,
}

/// Bounded idempotent search over the centroid of a parameter-free algebra.
pub fn decomposability(a: &AlgebraSpec) -> Result<DecomposabilityReport, AlgebraError> {
    if !a.is_parameter_free() {
        return Err(AlgebraError::ParameterPresent(
            a.param.clone().unwrap_or_else(|| "?".into()),
        ));
    }
    let (cd, _) = cd_equational(a);
    let (gamma, _) = centroid_space(a);
    let basis: Vec<Matrix<Rational>> = gamma
        .basis_matrices()
        .iter()
        .map(|m| m.map(|s| s.as_rational().expect("parameter-free").clone()))
        .collect();
    let structural = search_idempotent(a.dim, &basis);
    Ok(DecomposabilityReport {
        cd_is_zero: cd.dim() == 0,
        cd_dim: cd.dim(),
        gamma_dim: gamma.dim(),
        structural,
    })
}

/// Basis of the center of the matrix span: elements commuting with every
/// basis element, expressed in the same ambient space.
fn centroid_center(n: usize, basis: &[Matrix<Rational>]) -> Vec<Matrix<Rational>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let empty = AssumptionSet::empty();
    let g = basis.len();
    // Unknowns: coefficients over the basis. Equations: for each basis
    // element B_r, (sum c_s B_s) B_r - B_r (sum c_s B_s) = 0 entrywise.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for br in basis {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Rational::zero(); g];
                for (s, bs) in basis.iter().enumerate() {
                    let prod1 = bs.mul(br).expect("square");
                    let prod2 = br.mul(bs).expect("square");
                    row[s] = prod1[(i, j)].clone() - prod2[(i, j)].clone();
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let coeff_space = if rows.is_empty() {
        SubspaceBasis::full(g)
    } else {
        Matrix::from_rows(rows).nullspace(&empty).0
    };
    coeff_space
        .rows()
        .iter()
        .map(|coeffs| {
            let mut acc = Matrix::<Rational>::zeros(n, n);
            for (s, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&basis[s].scale(c)).expect("same shape");
                }
            }
            acc
        })
        .collect()
}

fn search_idempotent(n: usize, gamma_basis: &[Matrix<Rational>]) -> StructuralVerdict {
    let center = centroid_center(n, gamma_basis);
    let mut inconclusive: Option<Poly> = None;
    for stage in [&center, &gamma_basis.to_vec()] {
        let candidates = candidate_elements(stage);
        for z in candidates {
            match try_split(&z, gamma_basis, &center) {
                SplitOutcome::Found(witness, central) => {
                    return StructuralVerdict::Decomposable { witness, central };
                }
                SplitOutcome::Unfactored(p) => {
                    if inconclusive.is_none() {
                        inconclusive = Some(p);
                    }
                }
                SplitOutcome::NoSplit => {}
            }
        }
    }
    match inconclusive {
        Some(minimal_poly) => StructuralVerdict::Inconclusive { minimal_poly },
        None => StructuralVerdict::NoSplitFound,
    }
}

/// Single elements, then pairwise combinations with small coefficients.
fn candidate_elements(basis: &[Matrix<Rational>]) -> Vec<Matrix<Rational>> {
    let mut out: Vec<Matrix<Rational>> = basis.to_vec();
    let coeffs: [i64; 4] = [-2, -1, 1, 2];
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            for t in coeffs {
                let scaled = basis[j].scale(&crate::scalar::rat_int(t));
                out.push(basis[i].add(&scaled).expect("same shape"));
            }
        }
    }
    out
}

enum SplitOutcome {
    Found(Matrix<Rational>, bool),
    Unfactored(Poly),
    NoSplit,
}

fn try_split(
    z: &Matrix<Rational>,
    gamma_basis: &[Matrix<Rational>],
    center: &[Matrix<Rational>],
) -> SplitOutcome {
    if z.is_zero_matrix() {
        return SplitOutcome::NoSplit;
    }
    let minpoly = minimal_polynomial(z, "x");
    let fac = minpoly.factor_partial();
    let parts: Vec<(Poly, u32)> = fac.all_parts().cloned().collect();
    if parts.len() < 2 {
        if fac.has_remainder() {
            return SplitOutcome::Unfactored(minpoly);
        }
        return SplitOutcome::NoSplit;
    }
    // Split off the first coprime part: minpoly = f * g with gcd(f, g) = 1.
    let f = parts[0].0.pow(parts[0].1);
    let mut g = Poly::one();
    for (p, m) in &parts[1..] {
        g = &g * &p.pow(*m);
    }
    let (gcd, u, _) = f.xgcd(&g);
    debug_assert!(gcd.is_one(), "parts of a factorization must be coprime");
    // eps = u*f mod minpoly is 0 mod f and 1 mod g, hence idempotent.
    let uf = &u * &f;
    let eps = eval_poly_at_matrix(&uf, z);
    let eps_sq = eps.mul(&eps).expect("square");
    let n = eps.rows();
    let identity = Matrix::<Rational>::identity(n);
    if eps_sq != eps || eps.is_zero_matrix() || eps == identity {
        return SplitOutcome::NoSplit;
    }
    let empty = AssumptionSet::empty();
    // The witness must lie in the centroid span.
    let gamma_vecs: Vec<Vec<Rational>> = gamma_basis
        .iter()
        .map(|m| m.iter_rows().flat_map(|r| r.iter().cloned()).collect())
        .collect();
    let eps_vec: Vec<Rational> = eps.iter_rows().flat_map(|r| r.iter().cloned()).collect();
    if express_in_span(&gamma_vecs, &eps_vec, &empty).is_none() {
        return SplitOutcome::NoSplit;
    }
    // Central witnesses commute with the whole centroid; all witnesses
    // commute with its center.
    let commutes_with = |mats: &[Matrix<Rational>]| {
        mats.iter().all(|b| {
            eps.mul(b).expect("square") == b.mul(&eps).expect("square")
        })
    };
    if !commutes_with(center) {
        return SplitOutcome::NoSplit;
    }
    let central = commutes_with(gamma_basis);
    SplitOutcome::Found(eps, central)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Scalar};

    fn z2_1() -> AlgebraSpec {
        let mut a = AlgebraSpec::new("Z2_1", 2);
        a.set_product(0, 0, vec![Scalar::zero(), Scalar::one()]);
        a
    }

    #[test]
    fn minpoly_of_projection() {
        let p = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(0)],
        ]);
        let mp = minimal_polynomial(&p, "x");
        // x^2 - x
        assert_eq!(mp, Poly::new("x", vec![rat_int(0), rat_int(-1), rat_int(1)]));
    }

    #[test]
    fn minpoly_of_nilpotent() {
        let m = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(0), rat_int(0)],
        ]);
        assert_eq!(
            minimal_polynomial(&m, "x"),
            Poly::new("x", vec![rat_int(0), rat_int(0), rat_int(1)])
        );
    }

    #[test]
    fn local_centroid_has_no_split() {
        // The centroid of Z2_1 is spanned by the identity and one nilpotent:
        // a local algebra, so the bounded search finds nothing.
        let report = decomposability(&z2_1()).unwrap();
        assert!(!report.cd_is_zero);
        assert_eq!(report.structural, StructuralVerdict::NoSplitFound);
    }

    #[test]
    fn full_matrix_centroid_splits() {
        // The centroid of the 3-dimensional abelian algebra is all of the
        // matrix algebra; a rank-one projection splits it as a module.
        let report = decomposability(&AlgebraSpec::new("Z3_1", 3)).unwrap();
        match report.structural {
            StructuralVerdict::Decomposable { ref witness, central } => {
                let sq = witness.mul(witness).unwrap();
                assert_eq!(&sq, witness);
                assert!(!witness.is_zero_matrix());
                assert!(!central, "the full matrix algebra has no central idempotent");
            }
            ref other => panic!("expected a split, got {:?}", other),
        }
    }

    #[test]
    fn parameter_required_absent() {
        let mut a = AlgebraSpec::new("P", 2);
        a.param = Some("t".into());
        let mut v = vec![Scalar::zero(); 2];
        v[1] = Scalar::parameter("t");
        a.set_product(0, 0, v);
        assert!(matches!(
            decomposability(&a),
            Err(AlgebraError::ParameterPresent(_))
        ));
    }

    #[test]
    fn field_like_centroid_is_inconclusive() {
        // The 3-dimensional commutative associative algebra with
        // theta^3 = theta + 1: its centroid is the cubic field itself, so
        // every candidate's minimal polynomial is linear or the
        // irreducible cubic, which the partial factorizer reports as an
        // unfactored remainder.
        let mut a = AlgebraSpec::new("cubic-field", 3);
        let e = |k: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); 3];
            v[k] = Scalar::one();
            v
        };
        a.set_product(0, 0, e(0));
        a.set_product(0, 1, e(1));
        a.set_product(1, 0, e(1));
        a.set_product(0, 2, e(2));
        a.set_product(2, 0, e(2));
        a.set_product(1, 1, e(2));
        // theta * theta^2 = theta + 1
        let theta_cubed = vec![Scalar::one(), Scalar::one(), Scalar::zero()];
        a.set_product(1, 2, theta_cubed.clone());
        a.set_product(2, 1, theta_cubed);
        // theta^2 * theta^2 = theta^2 + theta
        a.set_product(2, 2, vec![Scalar::zero(), Scalar::one(), Scalar::one()]);
        let report = decomposability(&a).unwrap();
        match report.structural {
            StructuralVerdict::Inconclusive { ref minimal_poly } => {
                assert_eq!(minimal_poly.degree(), Some(3));
            }
            ref other => panic!("expected inconclusive, got {:?}", other),
        }
    }

    #[test]
    fn block_sum_splits_via_projection() {
        // Z2_1 ⊕ Z2_1: the block projections are idempotents of the
        // centroid. They are not central there (the corner maps do not
        // commute with them), so this is a module split.
        let a = z2_1();
        let s = a.direct_sum(&a).unwrap();
        let report = decomposability(&s).unwrap();
        match report.structural {
            StructuralVerdict::Decomposable { ref witness, .. } => {
                assert_eq!(&witness.mul(witness).unwrap(), witness);
            }
            ref other => panic!("expected a split, got {:?}", other),
        }
    }
}
