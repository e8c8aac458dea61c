//! Field-level properties of the scalar arithmetic.

use proptest::prelude::*;

use zinbiel_core::rng::SplitMix64;
use zinbiel_core::scalar::{rat, AssumptionSet, Poly, Rational, Scalar};

fn rational_strategy() -> impl Strategy<Value = Scalar> {
    (-2000i64..2000, 1i64..200).prop_map(|(n, d)| Scalar::Rat(rat(n, d)))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational_strategy(), b in rational_strategy(), c in rational_strategy()) {
        let assoc_l = (a.clone() + b.clone()) + c.clone();
        let assoc_r = a.clone() + (b.clone() + c.clone());
        prop_assert_eq!(assoc_l, assoc_r);
        let dist_l = a.clone() * (b.clone() + c.clone());
        let dist_r = a.clone() * b.clone() + a.clone() * c.clone();
        prop_assert_eq!(dist_l, dist_r);
        if !a.is_zero() {
            prop_assert!((a.clone() * a.try_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_display_roundtrip(a in rational_strategy()) {
        let (parsed, _) =
            zinbiel_core::scalar::parse::parse_scalar_str(&a.to_string(), None).unwrap();
        prop_assert_eq!(parsed, a);
    }
}

/// Random rational function of numerator/denominator degree at most 3.
fn random_ratfunc(rng: &mut SplitMix64) -> Scalar {
    let mut poly = |max_deg: usize, nonzero: bool| -> Poly {
        loop {
            let deg = rng.below(max_deg as u64 + 1) as usize;
            let coeffs: Vec<Rational> =
                (0..=deg).map(|_| rat(rng.int_in(-5, 5), 1 + rng.below(3) as i64)).collect();
            let p = Poly::new("t", coeffs);
            if !nonzero || !p.is_zero() {
                return p;
            }
        }
    };
    let num = poly(3, false);
    let den = poly(3, true);
    Scalar::from_fraction(num, den)
}

#[test]
fn function_field_axioms_1000() {
    let mut rng = SplitMix64::new(2024);
    for _ in 0..1000 {
        let a = random_ratfunc(&mut rng);
        let b = random_ratfunc(&mut rng);
        let c = random_ratfunc(&mut rng);
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        if !a.is_zero() {
            assert!((a.clone() * a.try_inv().unwrap()).is_one());
        }
        assert!((a.clone() - a.clone()).is_zero());
    }
}

#[test]
fn canonical_form_idempotent() {
    let mut rng = SplitMix64::new(7);
    for _ in 0..300 {
        let s = random_ratfunc(&mut rng);
        // Rebuilding from the canonical numerator/denominator is the identity.
        let (num, den) = s.as_fraction();
        assert_eq!(Scalar::from_fraction(num, den), s);
    }
}

#[test]
fn evaluation_is_a_ring_homomorphism() {
    let mut rng = SplitMix64::new(11);
    let asn = AssumptionSet::empty();
    let mut checked = 0;
    for _ in 0..400 {
        let a = random_ratfunc(&mut rng);
        let b = random_ratfunc(&mut rng);
        let v = rat(rng.int_in(-6, 6), 1 + rng.below(4) as i64);
        let (ea, eb) = match (a.evaluate_at(&v, &asn), b.evaluate_at(&v, &asn)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => continue, // pole: nothing to check
        };
        let prod = a.clone() * b.clone();
        let sum = a + b;
        if let Ok(ep) = prod.evaluate_at(&v, &asn) {
            assert_eq!(ep, ea.clone() * eb.clone());
        }
        if let Ok(es) = sum.evaluate_at(&v, &asn) {
            assert_eq!(es, ea + eb);
        }
        checked += 1;
    }
    assert!(checked > 100, "too few evaluable samples");
}

#[test]
fn factorization_reconstructs_input() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..200 {
        // Build products of random small factors so both certified and
        // unfactored parts occur.
        let mut p = Poly::constant(rat(rng.int_in(1, 4), 1));
        for _ in 0..rng.below(4) {
            let deg = 1 + rng.below(3) as usize;
            let coeffs: Vec<Rational> =
                (0..=deg).map(|_| rat(rng.int_in(-3, 3), 1)).collect();
            let f = Poly::new("x", coeffs);
            if !f.is_zero() && !f.is_constant() {
                p = &p * &f;
            }
        }
        let fac = p.factor_partial();
        assert_eq!(fac.product(), p, "factorization must reconstruct {}", p);
        for (f, _) in fac.factors.iter() {
            let d = f.degree().unwrap_or(0);
            assert!(d >= 1 && d <= 2, "certified factors are linear or quadratic");
        }
        for (u, _) in fac.unfactored.iter() {
            assert!(u.degree().unwrap_or(0) >= 3);
        }
    }
}
