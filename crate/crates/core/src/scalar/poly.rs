//! Dense univariate polynomials over the rationals.
//!
//! A polynomial carries the name of its variable. Constants are compatible
//! with any variable; binary operations on two nonconstant polynomials with
//! different names panic, because the single-parameter restriction is
//! enforced at parse time and such a mix indicates a bug upstream.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{positive_divisors, rational_sqrt, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    /// Shared variable name; cloning a polynomial must not allocate for it.
    var: Arc<str>,
    /// Coefficients by ascending degree; no trailing zeros; empty = zero poly.
    coeffs: Vec<Rational>,
}

const NO_VAR: &str = "";

impl Poly {
    pub fn new(var: impl Into<String>, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        let var: Arc<str> = if coeffs.len() <= 1 {
            Arc::from(NO_VAR)
        } else {
            Arc::from(var.into().as_str())
        };
        Poly { var, coeffs }
    }

    fn with_var(var: Arc<str>, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        let var = if coeffs.len() <= 1 { Arc::from(NO_VAR) } else { var };
        Poly { var, coeffs }
    }

    pub fn zero() -> Self {
        Poly { var: Arc::from(NO_VAR), coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new("", vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The monomial `x` for the given variable name.
    pub fn variable(var: impl Into<String>) -> Self {
        Poly::new(var, vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(var: impl Into<String>, c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(var, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Variable name of a nonconstant polynomial, unified against `other`.
    fn unify_var(&self, other: &Poly) -> Arc<str> {
        if self.is_constant() {
            other.var.clone()
        } else if other.is_constant() {
            self.var.clone()
        } else {
            assert_eq!(
                self.var, other.var,
                "mixed parameters `{}` and `{}` reached polynomial arithmetic",
                self.var, other.var
            );
            self.var.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::with_var(self.var.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Monic associate (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect();
        Poly::with_var(self.var.clone(), coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics if `div` is zero.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.coeffs.len() < div.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        if let Some(c) = div.as_constant() {
            return (self.scale(&c.recip()), Poly::zero());
        }
        let var = self.unify_var(div);
        let dlc = div.leading_coeff();
        let ddeg = div.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len() - ddeg];
        for i in (ddeg..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = &rem[i] / &dlc;
            let shift = i - ddeg;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let delta = dc * &factor;
                rem[shift + j] = &rem[shift + j] - &delta;
            }
            quot[shift] = factor;
        }
        (Poly::with_var(var.clone(), quot), Poly::with_var(var, rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Primitive integer-coefficient associate with positive leading
    /// coefficient. Scaling by a positive rational, so gcd chains are
    /// unaffected while coefficients stay small.
    fn primitive_rational(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let ints = self.primitive_integer_coeffs();
        Poly::with_var(
            self.var.clone(),
            ints.into_iter().map(Rational::from_integer).collect(),
        )
    }

    /// Monic greatest common divisor (primitive remainder sequence, which
    /// keeps intermediate coefficients from exploding).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let mut a = self.primitive_rational();
        let mut b = other.primitive_rational();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = if r.is_zero() || r.is_constant() {
                if r.is_zero() {
                    Poly::zero()
                } else {
                    return Poly::one();
                }
            } else {
                r.primitive_rational()
            };
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`,
    /// `g` monic, and the usual degree bounds on the cofactors.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = Poly::one();
        let mut u1 = Poly::zero();
        let mut v0 = Poly::zero();
        let mut v1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let lc = r0.leading_coeff();
        let inv = lc.recip();
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Clears denominators and content: primitive integer coefficients with
    /// positive leading coefficient. Returns them ascending by degree.
    fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if !content.is_zero() {
            for c in ints.iter_mut() {
                *c = &*c / &content;
            }
        }
        if ints.last().map_or(false, |c| c.is_negative()) {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
        }
        ints
    }

    /// Rational roots of a square-free polynomial, each with the quotient
    /// after dividing the corresponding linear factor out.
    fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        let mut p = self.clone();
        // Roots at zero first.
        while !p.is_zero() && p.coeff(0).is_zero() && p.degree() > Some(0) {
            roots.push(Rational::zero());
            let x = Poly::with_var(p.var.clone(), vec![Rational::zero(), Rational::one()]);
            p = p.div_rem(&x).0;
        }
        if p.degree().map_or(true, |d| d == 0) {
            return roots;
        }
        let ints = p.primitive_integer_coeffs();
        let lead = ints.last().unwrap().clone();
        let tail = ints[0].clone();
        debug_assert!(!tail.is_zero());
        let num_divs = positive_divisors(&tail);
        let den_divs = positive_divisors(&lead);
        'outer: for a in &num_divs {
            for b in &den_divs {
                for sign in [1i64, -1] {
                    let cand = Rational::new(a * BigInt::from(sign), b.clone());
                    if p.eval(&cand).is_zero() {
                        roots.push(cand.clone());
                        let lin =
                            Poly::with_var(p.var.clone(), vec![-cand, Rational::one()]);
                        p = p.div_rem(&lin).0;
                        if p.degree().map_or(true, |d| d == 0) {
                            break 'outer;
                        }
                    }
                }
            }
        }
        roots
    }

    /// Square-free decomposition (Yun): monic input assumed, returns monic
    /// pairwise-coprime factors with multiplicities whose product is `self`.
    fn squarefree_decomposition(&self) -> Vec<(Poly, u32)> {
        debug_assert!(self.leading_coeff().is_one());
        if self.degree().map_or(true, |d| d == 0) {
            return Vec::new();
        }
        let deriv = self.derivative();
        let g = self.gcd(&deriv);
        if g.is_one() {
            return vec![(self.clone(), 1)];
        }
        let mut out = Vec::new();
        let mut c = self.div_rem(&g).0;
        let mut d = &deriv.div_rem(&g).0 - &c.derivative();
        let mut i = 1u32;
        while c.degree().map_or(false, |deg| deg > 0) {
            let a = c.gcd(&d);
            if a.degree().map_or(false, |deg| deg > 0) {
                out.push((a.clone(), i));
            }
            c = c.div_rem(&a).0;
            d = &d.div_rem(&a).0 - &c.derivative();
            i += 1;
        }
        out
    }

    /// Partial factorization over the rationals: square-free decomposition,
    /// then rational-root extraction, then quadratics decided by whether the
    /// discriminant is a rational square. Anything of degree 3 or more with
    /// no rational root is reported unfactored rather than guessed at.
    pub fn factor_partial(&self) -> Factorization {
        if self.is_zero() {
            return Factorization {
                unit: Rational::zero(),
                factors: Vec::new(),
                unfactored: Vec::new(),
            };
        }
        let unit = self.leading_coeff();
        let monic = self.monic();
        let mut factors: Vec<(Poly, u32)> = Vec::new();
        let mut unfactored: Vec<(Poly, u32)> = Vec::new();
        for (sf, mult) in monic.squarefree_decomposition() {
            let roots = sf.rational_roots();
            let mut rest = sf.clone();
            for r in roots {
                let lin = Poly::with_var(sf.var.clone(), vec![-r, Rational::one()]);
                rest = rest.div_rem(&lin).0;
                factors.push((lin, mult));
            }
            match rest.degree() {
                None | Some(0) => {}
                Some(1) => factors.push((rest.monic(), mult)),
                Some(2) => {
                    // No rational roots, so the discriminant is not a
                    // rational square: irreducible over the rationals.
                    let a = rest.coeff(2);
                    let b = rest.coeff(1);
                    let c = rest.coeff(0);
                    let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &a * &c;
                    debug_assert!(rational_sqrt(&disc).is_none());
                    factors.push((rest.monic(), mult));
                }
                Some(_) => unfactored.push((rest.monic(), mult)),
            }
        }
        factors.sort_by(sort_key);
        unfactored.sort_by(sort_key);
        Factorization { unit, factors, unfactored }
    }
}

fn sort_key(a: &(Poly, u32), b: &(Poly, u32)) -> std::cmp::Ordering {
    let da = a.0.coeffs.len();
    let db = b.0.coeffs.len();
    da.cmp(&db)
        .then_with(|| a.0.to_string().cmp(&b.0.to_string()))
        .then_with(|| a.1.cmp(&b.1))
}

/// Result of [`Poly::factor_partial`]. The product of `unit`, all `factors`
/// and all `unfactored` parts (with multiplicities) equals the input.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    /// Certified irreducible monic factors (linear, or quadratic with
    /// non-square discriminant) with multiplicities.
    pub factors: Vec<(Poly, u32)>,
    /// Monic parts the partial method could not split further.
    pub unfactored: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn has_remainder(&self) -> bool {
        !self.unfactored.is_empty()
    }

    /// All parts, certified or not, as one coprime list.
    pub fn all_parts(&self) -> impl Iterator<Item = &(Poly, u32)> {
        self.factors.iter().chain(self.unfactored.iter())
    }

    pub fn product(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for (p, m) in self.all_parts() {
            acc = &acc * &p.pow(*m);
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let var = self.unify_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::with_var(var, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let var = self.unify_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::with_var(var, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let var = self.unify_var(rhs);
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::with_var(var, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::with_var(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = if self.var.is_empty() { "x" } else { &self.var };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{}", abs)?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{}", var)?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}
