//! Exact linear algebra properties: idempotence, rank-nullity, kernel
//! exactness, specialization soundness and the Grassmann identity.

use num_traits::Zero;

use zinbiel_core::linalg::{Matrix, SubspaceBasis};
use zinbiel_core::rng::SplitMix64;
use zinbiel_core::scalar::{rat, rat_int, AssumptionSet, Poly, Rational, Scalar};

fn random_rational_matrix(rng: &mut SplitMix64, rows: usize, cols: usize) -> Matrix<Scalar> {
    let data = (0..rows * cols)
        .map(|_| {
            if rng.below(3) == 0 {
                Scalar::zero()
            } else {
                Scalar::Rat(rat(rng.int_in(-5, 5), 1 + rng.below(3) as i64))
            }
        })
        .collect();
    Matrix::new(rows, cols, data)
}

fn random_poly_matrix(rng: &mut SplitMix64, rows: usize, cols: usize, max_deg: usize) -> Matrix<Scalar> {
    let data = (0..rows * cols)
        .map(|_| {
            if rng.below(3) == 0 {
                Scalar::zero()
            } else {
                let deg = rng.below(max_deg as u64 + 1) as usize;
                let coeffs: Vec<Rational> =
                    (0..=deg).map(|_| rat_int(rng.int_in(-3, 3))).collect();
                Scalar::from_poly(Poly::new("a", coeffs))
            }
        })
        .collect();
    Matrix::new(rows, cols, data)
}

#[test]
fn rref_is_idempotent() {
    let mut rng = SplitMix64::new(31);
    let asn = AssumptionSet::empty();
    for _ in 0..100 {
        let rows = 1 + rng.below(5) as usize;
        let cols = 1 + rng.below(5) as usize;
        let m = if rng.below(2) == 0 {
            random_rational_matrix(&mut rng, rows, cols)
        } else {
            random_poly_matrix(&mut rng, rows, cols, 2)
        };
        let (red, cert) = m.rref(&asn);
        let (red2, cert2) = red.rref(&asn);
        assert_eq!(red, red2);
        assert_eq!(cert.rank, cert2.rank);
    }
}

#[test]
fn rank_nullity_500() {
    let mut rng = SplitMix64::new(17);
    let asn = AssumptionSet::empty();
    for case in 0..500 {
        let rows = 1 + rng.below(6) as usize;
        let cols = 1 + rng.below(6) as usize;
        let m = if case % 2 == 0 {
            random_rational_matrix(&mut rng, rows, cols)
        } else {
            random_poly_matrix(&mut rng, rows, cols, 2)
        };
        let (ns, cert) = m.nullspace(&asn);
        assert_eq!(cert.rank + ns.dim(), cols, "rank-nullity failed");
        // Every returned kernel vector solves the system exactly.
        for v in ns.rows() {
            for r in 0..m.rows() {
                let mut acc = Scalar::zero();
                for c in 0..m.cols() {
                    acc = acc + m[(r, c)].clone() * v[c].clone();
                }
                assert!(acc.is_zero(), "kernel vector fails row {}", r);
            }
        }
    }
}

#[test]
fn specialization_soundness() {
    let mut rng = SplitMix64::new(23);
    let asn = AssumptionSet::empty();
    let empty = AssumptionSet::empty();
    let mut with_specializations = 0;
    for _ in 0..120 {
        let rows = 2 + rng.below(3) as usize;
        let cols = 2 + rng.below(3) as usize;
        let m = random_poly_matrix(&mut rng, rows, cols, 2);
        let (_, cert) = m.rref(&asn);
        let evaluate_rank = |v: &Rational| -> usize {
            let data: Vec<Rational> = (0..rows * cols)
                .map(|i| {
                    m[(i / cols, i % cols)]
                        .evaluate_at(v, &empty)
                        .expect("polynomial entries have no poles")
                })
                .collect();
            let q = Matrix::new(rows, cols, data);
            q.rref(&empty).1.rank
        };
        if !cert.specializations.is_empty() {
            with_specializations += 1;
            // At a rational root of a recorded polynomial the rank may only
            // drop.
            for p in &cert.specializations {
                for (factor, _) in p.factor_partial().factors {
                    if factor.degree() == Some(1) {
                        let root = -factor.coeff(0) / factor.coeff(1);
                        assert!(
                            evaluate_rank(&root) <= cert.rank,
                            "rank rose at a recorded specialization"
                        );
                    }
                }
            }
        }
        // At random values away from every recorded polynomial the generic
        // rank is attained.
        let mut tried = 0;
        let mut k: i64 = 2;
        while tried < 10 {
            let v = rat_int(k);
            k += 1;
            if cert.specializations.iter().any(|p| p.eval(&v).is_zero()) {
                continue;
            }
            assert_eq!(evaluate_rank(&v), cert.rank, "generic rank not attained at {}", v);
            tried += 1;
        }
    }
    assert!(with_specializations > 10, "sampling produced no conditional pivots");
}

#[test]
fn grassmann_identity() {
    let mut rng = SplitMix64::new(41);
    let asn = AssumptionSet::empty();
    for _ in 0..200 {
        let ambient = 2 + rng.below(5) as usize;
        let gens = |rng: &mut SplitMix64| -> Vec<Vec<Scalar>> {
            let k = 1 + rng.below(ambient as u64) as usize;
            (0..k)
                .map(|_| (0..ambient).map(|_| Scalar::from_int(rng.int_in(-3, 3))).collect())
                .collect()
        };
        let (a, _) = SubspaceBasis::from_generators(ambient, gens(&mut rng), &asn);
        let (b, _) = SubspaceBasis::from_generators(ambient, gens(&mut rng), &asn);
        let (meet, _) = a.intersect(&b, &asn).unwrap();
        let (join, _) = a.sum(&b, &asn).unwrap();
        assert_eq!(a.dim() + b.dim(), meet.dim() + join.dim());
        assert!(a.contains_subspace(&meet));
        assert!(join.contains_subspace(&a));
        assert!(join.contains_subspace(&b));
    }
}
