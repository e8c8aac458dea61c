//! Structural relations between the invariant spaces: containments,
//! bracket closure, composition laws, transport along basis changes, and
//! an empirical probe of the composition criteria.


use crate::algebra::AlgebraSpec;
use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::rng::SplitMix64;
use crate::scalar::Scalar;

use super::{cd_equational, centroid_space, derivation_space, EndoSpace};

/// Matrix of `second . first` (apply `first`, then `second`) in row
/// convention: `M_first * M_second`.
pub fn compose(first: &Matrix<Scalar>, second: &Matrix<Scalar>) -> Matrix<Scalar> {
    first.mul(second).expect("square endomorphisms")
}

/// Commutator `[a, b] = a . b - b . a` of endomorphisms.
pub fn bracket(a: &Matrix<Scalar>, b: &Matrix<Scalar>) -> Matrix<Scalar> {
    let ab = compose(b, a); // apply b, then a
    let ba = compose(a, b);
    ab.sub(&ba).expect("same shape")
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    /// `[Gamma, Gamma] ⊆ CD` witnessed on all basis pairs.
    pub centroid_brackets_in_cd: bool,
    /// CD is closed under the bracket.
    pub cd_brackets_in_cd: bool,
    pub failures: Vec<String>,
}

/// Checks bracket containments on all pairs of basis elements.
pub fn check_bracket_closure(a: &AlgebraSpec) -> ClosureReport {
    let (gamma, _) = centroid_space(a);
    let (cd, _) = cd_equational(a);
    let mut failures = Vec::new();
    let gm = gamma.basis_matrices();
    for (i, x) in gm.iter().enumerate() {
        for (j, y) in gm.iter().enumerate() {
            if !cd.contains_matrix(&bracket(x, y)) {
                failures.push(format!("[gamma_{}, gamma_{}] not in CD", i + 1, j + 1));
            }
        }
    }
    let centroid_ok = failures.is_empty();
    let before = failures.len();
    let cm = cd.basis_matrices();
    for (i, x) in cm.iter().enumerate() {
        for (j, y) in cm.iter().enumerate() {
            if !cd.contains_matrix(&bracket(x, y)) {
                failures.push(format!("[cd_{}, cd_{}] not in CD", i + 1, j + 1));
            }
        }
    }
    ClosureReport {
        centroid_brackets_in_cd: centroid_ok,
        cd_brackets_in_cd: failures.len() == before,
        failures,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompositionReport {
    /// `phi . D` is a derivation for every centroid/derivation basis pair.
    pub compositions_are_derivations: bool,
    pub cd_in_der: bool,
    pub cd_in_gamma: bool,
    pub failures: Vec<String>,
}

/// Verifies that centroid-after-derivation compositions are derivations and
/// the two containments of the central-derivation space.
pub fn composition_checks(a: &AlgebraSpec) -> CompositionReport {
    let (der, _) = derivation_space(a);
    let (gamma, _) = centroid_space(a);
    let (cd, _) = cd_equational(a);
    let mut failures = Vec::new();
    for (i, phi) in gamma.basis_matrices().iter().enumerate() {
        for (j, d) in der.basis_matrices().iter().enumerate() {
            let comp = compose(d, phi); // apply D, then phi
            if !der.contains_matrix(&comp) {
                failures.push(format!("gamma_{} . der_{} is not a derivation", i + 1, j + 1));
            }
        }
    }
    let comp_ok = failures.is_empty();
    let cd_in_der = der.space.contains_subspace(&cd.space);
    if !cd_in_der {
        failures.push("CD not contained in Der".into());
    }
    let cd_in_gamma = gamma.space.contains_subspace(&cd.space);
    if !cd_in_gamma {
        failures.push("CD not contained in Gamma".into());
    }
    CompositionReport {
        compositions_are_derivations: comp_ok,
        cd_in_der,
        cd_in_gamma,
        failures,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransportReport {
    pub dims_preserved: bool,
    pub cd_basis_transported: bool,
    pub dims_before: (usize, usize, usize),
    pub dims_after: (usize, usize, usize),
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.dims_preserved && self.cd_basis_transported
    }
}

/// Precomputed base spaces for repeated transport checks on one algebra.
#[derive(Clone, Debug)]
pub struct BaseSpaces {
    pub der: EndoSpace,
    pub gamma: EndoSpace,
    pub cd: EndoSpace,
}

impl BaseSpaces {
    pub fn compute(a: &AlgebraSpec) -> Self {
        BaseSpaces {
            der: derivation_space(a).0,
            gamma: centroid_space(a).0,
            cd: cd_equational(a).0,
        }
    }
}

/// Rewrites the algebra in the basis given by the rows of `p`, recomputes
/// the invariant spaces, and checks that dimensions are preserved and that
/// conjugation carries the central-derivation space onto its counterpart.
pub fn transport_conjugation(
    a: &AlgebraSpec,
    p: &Matrix<Scalar>,
) -> Result<TransportReport, AlgebraError> {
    transport_conjugation_with(a, &BaseSpaces::compute(a), p)
}

/// Same check with the base spaces computed once by the caller.
pub fn transport_conjugation_with(
    a: &AlgebraSpec,
    base: &BaseSpaces,
    p: &Matrix<Scalar>,
) -> Result<TransportReport, AlgebraError> {
    let q = p.inverse(&a.assumptions).map_err(AlgebraError::from)?;
    let b = a.change_of_basis(p)?;
    let inv_b = (
        derivation_space(&b).0,
        centroid_space(&b).0,
        cd_equational(&b).0,
    );
    let dims_before = (base.der.dim(), base.gamma.dim(), base.cd.dim());
    let dims_after = (inv_b.0.dim(), inv_b.1.dim(), inv_b.2.dim());
    let dims_preserved = dims_before == dims_after;
    // An endomorphism with matrix M in the old coordinates has matrix
    // P M P^-1 in the new ones; basis members of CD(A) must land in CD(B),
    // and by dimension equality they span it.
    let mut transported = true;
    for m in base.cd.basis_matrices() {
        let conj = p.mul(&m).and_then(|pm| pm.mul(&q)).expect("square");
        if !inv_b.2.contains_matrix(&conj) {
            transported = false;
            break;
        }
    }
    Ok(TransportReport {
        dims_preserved,
        cd_basis_transported: transported && dims_preserved,
        dims_before,
        dims_after,
    })
}

/// Random unimodular integer matrix: a product of a unit lower-triangular,
/// a unit upper-triangular, and a signed permutation, all with small
/// entries.
pub fn random_unimodular(n: usize, rng: &mut SplitMix64) -> Matrix<Scalar> {
    let mut lower = Matrix::<Scalar>::identity(n);
    let mut upper = Matrix::<Scalar>::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = Scalar::from_int(rng.int_in(-2, 2));
            upper[(j, i)] = Scalar::from_int(rng.int_in(-2, 2));
        }
    }
    // Signed permutation.
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below((i + 1) as u64) as usize;
        perm.swap(i, j);
    }
    let mut sp = Matrix::<Scalar>::zeros(n, n);
    for (i, &pi) in perm.iter().enumerate() {
        sp[(i, pi)] = Scalar::from_int(if rng.below(2) == 0 { 1 } else { -1 });
    }
    lower.mul(&upper).and_then(|lu| lu.mul(&sp)).expect("square")
}

/// One sampled pair in the composition probe.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbeRow {
    pub label: String,
    pub d_phi_in_gamma: bool,
    pub phi_d_in_cd: bool,
    pub d_phi_in_der: bool,
    pub bracket_in_cd: bool,
}

/// Tabulated equivalence counts for the two composition criteria. Nothing
/// is asserted; the table reports how often each side holds.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
    /// (both, only-left, only-right, neither) for
    /// `d.phi in Gamma` vs `phi.d in CD`.
    pub gamma_vs_cd: (usize, usize, usize, usize),
    /// Same tally for `d.phi in Der` vs `[d, phi] in CD`.
    pub der_vs_bracket: (usize, usize, usize, usize),
}

/// Samples derivation/centroid pairs (all basis pairs plus random small
/// combinations) and evaluates the four membership predicates.
pub fn t2_probe(a: &AlgebraSpec, extra_samples: usize, seed: u64) -> ProbeReport {
    let (der, _) = derivation_space(a);
    let (gamma, _) = centroid_space(a);
    let (cd, _) = cd_equational(a);
    let dm = der.basis_matrices();
    let gm = gamma.basis_matrices();
    let mut pairs: Vec<(String, Matrix<Scalar>, Matrix<Scalar>)> = Vec::new();
    for (i, d) in dm.iter().enumerate() {
        for (j, phi) in gm.iter().enumerate() {
            pairs.push((format!("der_{} gamma_{}", i + 1, j + 1), d.clone(), phi.clone()));
        }
    }
    let mut rng = SplitMix64::new(seed);
    let combine = |mats: &[Matrix<Scalar>], rng: &mut SplitMix64| -> Option<Matrix<Scalar>> {
        if mats.is_empty() {
            return None;
        }
        let n = mats[0].rows();
        let mut acc = Matrix::<Scalar>::zeros(n, n);
        for m in mats {
            let c = Scalar::from_int(rng.int_in(-2, 2));
            if !c.is_zero() {
                acc = acc.add(&m.scale(&c)).expect("same shape");
            }
        }
        Some(acc)
    };
    for s in 0..extra_samples {
        if let (Some(d), Some(phi)) = (combine(&dm, &mut rng), combine(&gm, &mut rng)) {
            pairs.push((format!("sample_{}", s + 1), d, phi));
        }
    }
    let mut report = ProbeReport::default();
    for (label, d, phi) in pairs {
        let d_phi = compose(&phi, &d); // apply phi, then d
        let phi_d = compose(&d, &phi); // apply d, then phi
        let br = bracket(&d, &phi);
        let row = ProbeRow {
            label,
            d_phi_in_gamma: gamma.contains_matrix(&d_phi),
            phi_d_in_cd: cd.contains_matrix(&phi_d),
            d_phi_in_der: der.contains_matrix(&d_phi),
            bracket_in_cd: cd.contains_matrix(&br),
        };
        tally(&mut report.gamma_vs_cd, row.d_phi_in_gamma, row.phi_d_in_cd);
        tally(&mut report.der_vs_bracket, row.d_phi_in_der, row.bracket_in_cd);
        report.rows.push(row);
    }
    report
}

fn tally(t: &mut (usize, usize, usize, usize), left: bool, right: bool) {
    match (left, right) {
        (true, true) => t.0 += 1,
        (true, false) => t.1 += 1,
        (false, true) => t.2 += 1,
        (false, false) => t.3 += 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_1() -> AlgebraSpec {
        let mut a = AlgebraSpec::new("Z2_1", 2);
        a.set_product(0, 0, vec![Scalar::zero(), Scalar::one()]);
        a
    }

    #[test]
    fn closure_and_composition_on_z2_1() {
        let a = z2_1();
        let clo = check_bracket_closure(&a);
        assert!(clo.centroid_brackets_in_cd, "{:?}", clo.failures);
        assert!(clo.cd_brackets_in_cd);
        let comp = composition_checks(&a);
        assert!(comp.compositions_are_derivations, "{:?}", comp.failures);
        assert!(comp.cd_in_der);
        assert!(comp.cd_in_gamma);
    }

    #[test]
    fn transport_identity_is_trivial() {
        let a = z2_1();
        let report = transport_conjugation(&a, &Matrix::identity(2)).unwrap();
        assert!(report.passed());
        assert_eq!(report.dims_before, (2, 2, 1));
    }

    #[test]
    fn transport_shear() {
        let a = z2_1();
        let p = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::one()],
            vec![Scalar::zero(), Scalar::one()],
        ]);
        let report = transport_conjugation(&a, &p).unwrap();
        assert!(report.passed());
        assert_eq!(report.dims_after, (2, 2, 1));
    }

    #[test]
    fn random_unimodular_is_invertible() {
        use crate::scalar::AssumptionSet;
        let mut rng = SplitMix64::new(42);
        for n in 1..=4 {
            for _ in 0..5 {
                let p = random_unimodular(n, &mut rng);
                assert!(p.inverse(&AssumptionSet::empty()).is_ok());
            }
        }
    }

    #[test]
    fn probe_on_z2_1_reports_counts() {
        let report = t2_probe(&z2_1(), 5, 0);
        // der dim 2, gamma dim 2: 4 basis pairs plus 5 samples.
        assert_eq!(report.rows.len(), 9);
        let total = |t: (usize, usize, usize, usize)| t.0 + t.1 + t.2 + t.3;
        assert_eq!(total(report.gamma_vs_cd), 9);
        assert_eq!(total(report.der_vs_bracket), 9);
    }

    #[test]
    fn probe_on_abelian_all_true() {
        let a = AlgebraSpec::new("Z3_1", 3);
        let report = t2_probe(&a, 3, 0);
        assert!(report
            .rows
            .iter()
            .all(|r| r.d_phi_in_gamma && r.phi_d_in_cd && r.d_phi_in_der && r.bracket_in_cd));
        assert_eq!(report.gamma_vs_cd.1, 0);
        assert_eq!(report.gamma_vs_cd.2, 0);
    }
}
