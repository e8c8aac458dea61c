//! Exact field arithmetic: arbitrary-precision rationals and univariate
//! rational functions over the rationals, with nonzero-assumption sets.

pub mod parse;
pub mod poly;
pub mod rational;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::ScalarError;

pub use poly::{Factorization, Poly};
pub use rational::{rat, rat_int, Rational};

/// Element of the coefficient field: either an exact rational, or a reduced
/// rational function in one parameter.
///
/// Canonical form: a `Fun` value always has a nonconstant numerator or
/// denominator (otherwise it demotes to `Rat`), the fraction is reduced,
/// and the denominator is monic with the sign carried by the numerator.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rat(Rational),
    Fun(RatFunc),
}

/// Reduced rational function. Kept canonical by [`Scalar::from_fraction`].
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Rat(r)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(rat_int(n))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar::from_fraction(p, Poly::one())
    }

    /// The parameter as a scalar.
    pub fn parameter(name: impl Into<String>) -> Self {
        Scalar::from_poly(Poly::variable(name))
    }

    /// Canonical `num/den`. Panics if `den` is the zero polynomial.
    pub fn from_fraction(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return Scalar::Rat(Rational::zero());
        }
        if den.is_one() {
            return Scalar::from_reduced_poly(num);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if num.is_constant() && den.is_constant() {
            return Scalar::Rat(num.as_constant().unwrap() / den.as_constant().unwrap());
        }
        Scalar::Fun(RatFunc { num, den })
    }

    /// Polynomial over denominator one; no reduction needed.
    fn from_reduced_poly(p: Poly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Fun(RatFunc { num: p, den: Poly::one() }),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Fun(_) => None,
        }
    }

    /// Numerator/denominator view; a rational `r` is `(r, 1)` as polynomials.
    pub fn as_fraction(&self) -> (Poly, Poly) {
        match self {
            Scalar::Rat(r) => (Poly::constant(r.clone()), Poly::one()),
            Scalar::Fun(f) => (f.num.clone(), f.den.clone()),
        }
    }

    /// Parameter name if the value actually involves one.
    pub fn parameter_name(&self) -> Option<&str> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Fun(f) => {
                let v = if f.num.is_constant() { f.den.var() } else { f.num.var() };
                if v.is_empty() {
                    None
                } else {
                    Some(v)
                }
            }
        }
    }

    pub fn try_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Fun(f) => Ok(Scalar::from_fraction(f.den.clone(), f.num.clone())),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    /// Exact substitution of the parameter.
    ///
    /// The value is first checked against the assumption set, then against
    /// the denominator.
    pub fn evaluate_at(
        &self,
        value: &Rational,
        assumptions: &AssumptionSet,
    ) -> Result<Rational, ScalarError> {
        assumptions.check_value(value)?;
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Fun(f) => {
                let den = f.den.eval(value);
                if den.is_zero() {
                    return Err(ScalarError::PoleAtValue { value: value.clone() });
                }
                Ok(f.num.eval(value) / den)
            }
        }
    }

    /// Pivot admissibility: is this scalar invertible for every admissible
    /// parameter value?
    ///
    /// `Nonzero` if the value is a nonzero rational or its numerator is a
    /// rational multiple of a product of assumption polynomials; `Zero` for
    /// the zero scalar; otherwise `Conditional(p)` with `p` the monic
    /// non-assumed factor of the numerator.
    pub fn nonzero_status(&self, assumptions: &AssumptionSet) -> NonzeroStatus {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    NonzeroStatus::Zero
                } else {
                    NonzeroStatus::Nonzero
                }
            }
            Scalar::Fun(f) => {
                let rest = assumptions.strip_factors(&f.num);
                if rest.is_constant() {
                    NonzeroStatus::Nonzero
                } else {
                    NonzeroStatus::Conditional(rest.monic())
                }
            }
        }
    }
}

/// Three-valued nonzero test used for pivot selection.
#[derive(Clone, Debug, PartialEq)]
pub enum NonzeroStatus {
    Zero,
    Nonzero,
    Conditional(Poly),
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            // Polynomial fast paths: no reduction needed when the
            // denominators are trivial or shared.
            (Scalar::Fun(f), Scalar::Fun(g)) if f.den == g.den => {
                Scalar::from_fraction(&f.num + &g.num, f.den)
            }
            (Scalar::Fun(f), Scalar::Rat(b)) if f.den.is_one() => {
                Scalar::from_reduced_poly(&f.num + &Poly::constant(b))
            }
            (Scalar::Rat(a), Scalar::Fun(g)) if g.den.is_one() => {
                Scalar::from_reduced_poly(&Poly::constant(a) + &g.num)
            }
            (a, b) => {
                let (an, ad) = a.as_fraction();
                let (bn, bd) = b.as_fraction();
                Scalar::from_fraction(&(&an * &bd) + &(&bn * &ad), &ad * &bd)
            }
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            // Scaling by a rational keeps the fraction reduced.
            (Scalar::Rat(a), Scalar::Fun(f)) | (Scalar::Fun(f), Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Fun(RatFunc { num: f.num.scale(&a), den: f.den })
                }
            }
            (Scalar::Fun(f), Scalar::Fun(g)) if f.den.is_one() && g.den.is_one() => {
                Scalar::from_reduced_poly(&f.num * &g.num)
            }
            (Scalar::Fun(f), Scalar::Fun(g)) => {
                // Cross-reduce before multiplying to keep degrees low.
                let g1 = f.num.gcd(&g.den);
                let g2 = g.num.gcd(&f.den);
                let fn_ = if g1.is_one() { f.num } else { f.num.div_rem(&g1).0 };
                let gd = if g1.is_one() { g.den } else { g.den.div_rem(&g1).0 };
                let gn = if g2.is_one() { g.num } else { g.num.div_rem(&g2).0 };
                let fd = if g2.is_one() { f.den } else { f.den.div_rem(&g2).0 };
                Scalar::from_fraction(&fn_ * &gn, &fd * &gd)
            }
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    /// Panics on a zero divisor; use [`Scalar::checked_div`] for the fallible form.
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("scalar division by zero")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fun(f) => Scalar::Fun(RatFunc { num: -&f.num, den: f.den }),
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Fun(rf) => {
                if rf.den.is_one() {
                    write!(f, "{}", rf.num)
                } else {
                    write!(f, "({})/({})", rf.num, rf.den)
                }
            }
        }
    }
}

/// Set of polynomials asserted nonzero, deduplicated up to scalar multiple.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AssumptionSet {
    polys: Vec<Poly>,
}

impl AssumptionSet {
    pub fn empty() -> Self {
        AssumptionSet::default()
    }

    pub fn singleton(p: Poly) -> Self {
        let mut s = AssumptionSet::empty();
        s.insert(p);
        s
    }

    /// Adds an assumption. Nonzero constants are vacuous and dropped;
    /// asserting the zero polynomial nonzero is a contradiction and panics.
    pub fn insert(&mut self, p: Poly) {
        assert!(!p.is_zero(), "cannot assume the zero polynomial nonzero");
        if p.is_constant() {
            return;
        }
        let monic = p.monic();
        if !self.polys.contains(&monic) {
            self.polys.push(monic);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Poly> {
        self.polys.iter()
    }

    pub fn union(&self, other: &AssumptionSet) -> AssumptionSet {
        let mut out = self.clone();
        for p in &other.polys {
            out.insert(p.clone());
        }
        out
    }

    /// Errors if the value zeroes any assumed-nonzero polynomial.
    pub fn check_value(&self, value: &Rational) -> Result<(), ScalarError> {
        for p in &self.polys {
            if p.eval(value).is_zero() {
                return Err(ScalarError::AssumptionViolated {
                    value: value.clone(),
                    assumption: p.clone(),
                });
            }
        }
        Ok(())
    }

    /// Divides out every assumption factor (with multiplicity) from `p`.
    pub fn strip_factors(&self, p: &Poly) -> Poly {
        let mut rest = p.clone();
        let mut changed = true;
        while changed && !rest.is_constant() {
            changed = false;
            for a in &self.polys {
                while a.divides(&rest) && !rest.is_constant() {
                    rest = rest.div_rem(a).0;
                    changed = true;
                }
            }
        }
        rest
    }

    pub fn contains_equivalent(&self, p: &Poly) -> bool {
        !p.is_zero() && self.polys.contains(&p.monic())
    }
}

impl fmt::Display for AssumptionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.polys {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{} != 0", p)?;
            first = false;
        }
        Ok(())
    }
}
