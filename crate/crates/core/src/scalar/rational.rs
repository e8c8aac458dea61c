//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form we need: fully reduced, denominator positive, zero as 0/1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root if the rational is a perfect square of a rational.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    if value.is_zero() {
        return Some(Rational::zero());
    }
    let num_root = value.numer().sqrt();
    let den_root = value.denom().sqrt();
    if &(&num_root * &num_root) == value.numer() && &(&den_root * &den_root) == value.denom() {
        Some(Rational::new(num_root, den_root))
    } else {
        None
    }
}

/// Positive divisors of `n` (absolute value), ascending. `n` must be nonzero.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        let d_sq = &d * &d;
        if d_sq > n {
            break;
        }
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            if d_sq != n {
                large.push(&n / &d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_detects_squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&Rational::zero()), Some(Rational::zero()));
    }

    #[test]
    fn divisors_ascend() {
        let divs = positive_divisors(&BigInt::from(12));
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(divs, expect);
    }
}
