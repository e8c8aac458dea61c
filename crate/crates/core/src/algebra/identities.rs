//! Variety identity checks on basis tuples.
//!
//! Each defining identity is multilinear, so verifying it on all basis
//! tuples decides it exactly; no sampling is involved.

use std::collections::BTreeMap;
use std::fmt;


use crate::error::AlgebraError;
use crate::scalar::{AssumptionSet, Scalar};

use super::{AlgebraSpec, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    Zinbiel,
    PreLie,
    Leibniz,
    Associative,
    Commutative,
    Lie,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 6] = [
        IdentityKind::Zinbiel,
        IdentityKind::PreLie,
        IdentityKind::Leibniz,
        IdentityKind::Associative,
        IdentityKind::Commutative,
        IdentityKind::Lie,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityKind::Zinbiel => "zinbiel",
            IdentityKind::PreLie => "prelie",
            IdentityKind::Leibniz => "leibniz",
            IdentityKind::Associative => "associative",
            IdentityKind::Commutative => "commutative",
            IdentityKind::Lie => "lie",
        }
    }

    pub fn from_name(name: &str) -> Option<IdentityKind> {
        IdentityKind::ALL.iter().copied().find(|k| k.name() == name)
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A basis tuple on which some axiom has a nonzero defect.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub axiom: &'static str,
    /// 1-based basis indices, length 2 or 3.
    pub indices: Vec<usize>,
    pub defect: Element,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub kind: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl IdentityReport {
    fn from_witnesses(kind: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        IdentityReport { kind: kind.into(), holds: witnesses.is_empty(), witnesses }
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Element {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Element {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Checks the defining identity of the given variety on every basis tuple
/// (pairs for the commutativity-type laws, triples otherwise).
pub fn check_identity(algebra: &AlgebraSpec, kind: IdentityKind) -> IdentityReport {
    let n = algebra.dim;
    let e = |i: usize| algebra.basis_element(i);
    let mul = |a: &Element, b: &Element| algebra.multiply(a, b).expect("basis elements");
    let mut witnesses = Vec::new();
    let mut record = |axiom: &'static str, idx: Vec<usize>, defect: Element| {
        if !is_zero_vec(&defect) {
            witnesses.push(Witness {
                axiom,
                indices: idx.into_iter().map(|i| i + 1).collect(),
                defect,
            });
        }
    };
    match kind {
        IdentityKind::Commutative => {
            for i in 0..n {
                for j in 0..n {
                    record("commutativity", vec![i, j], sub(&mul(&e(i), &e(j)), &mul(&e(j), &e(i))));
                }
            }
        }
        IdentityKind::Lie => {
            for i in 0..n {
                for j in 0..n {
                    record(
                        "antisymmetry",
                        vec![i, j],
                        add(&mul(&e(i), &e(j)), &mul(&e(j), &e(i))),
                    );
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let jac = add(
                            &add(
                                &mul(&mul(&e(i), &e(j)), &e(k)),
                                &mul(&mul(&e(j), &e(k)), &e(i)),
                            ),
                            &mul(&mul(&e(k), &e(i)), &e(j)),
                        );
                        record("jacobi", vec![i, j, k], jac);
                    }
                }
            }
        }
        _ => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (a, b, c) = (e(i), e(j), e(k));
                        let (axiom, defect): (&'static str, Element) = match kind {
                            // (a b) c = a (b c) + a (c b)
                            IdentityKind::Zinbiel => (
                                "zinbiel",
                                sub(
                                    &mul(&mul(&a, &b), &c),
                                    &add(&mul(&a, &mul(&b, &c)), &mul(&a, &mul(&c, &b))),
                                ),
                            ),
                            // (a b) c - a (b c) = (b a) c - b (a c)
                            IdentityKind::PreLie => (
                                "prelie",
                                sub(
                                    &sub(&mul(&mul(&a, &b), &c), &mul(&a, &mul(&b, &c))),
                                    &sub(&mul(&mul(&b, &a), &c), &mul(&b, &mul(&a, &c))),
                                ),
                            ),
                            // a (b c) = (a b) c - (a c) b
                            IdentityKind::Leibniz => (
                                "leibniz",
                                sub(
                                    &mul(&a, &mul(&b, &c)),
                                    &sub(&mul(&mul(&a, &b), &c), &mul(&mul(&a, &c), &b)),
                                ),
                            ),
                            IdentityKind::Associative => (
                                "associativity",
                                sub(&mul(&mul(&a, &b), &c), &mul(&a, &mul(&b, &c))),
                            ),
                            _ => unreachable!(),
                        };
                        record(axiom, vec![i, j, k], defect);
                    }
                }
            }
        }
    }
    IdentityReport::from_witnesses(kind.name(), witnesses)
}

/// Two-product algebra with operations `lt` (left, `<`) and `rt` (right,
/// `>`), in the same sparse table format as [`AlgebraSpec`].
#[derive(Clone, Debug, PartialEq)]
pub struct DendriformSpec {
    pub name: String,
    pub dim: usize,
    pub left: BTreeMap<(usize, usize), Vec<Scalar>>,
    pub right: BTreeMap<(usize, usize), Vec<Scalar>>,
    pub param: Option<String>,
    pub assumptions: AssumptionSet,
}

impl DendriformSpec {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        DendriformSpec {
            name: name.into(),
            dim,
            left: BTreeMap::new(),
            right: BTreeMap::new(),
            param: None,
            assumptions: AssumptionSet::empty(),
        }
    }

    fn mul_table(
        &self,
        table: &BTreeMap<(usize, usize), Vec<Scalar>>,
        a: &[Scalar],
        b: &[Scalar],
    ) -> Result<Element, AlgebraError> {
        if a.len() != self.dim || b.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: a.len().max(b.len()),
            });
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for ((i, j), gamma) in table {
            if a[*i].is_zero() || b[*j].is_zero() {
                continue;
            }
            let c = a[*i].clone() * b[*j].clone();
            for (k, g) in gamma.iter().enumerate() {
                if !g.is_zero() {
                    out[k] = out[k].clone() + c.clone() * g.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn left_mul(&self, a: &[Scalar], b: &[Scalar]) -> Result<Element, AlgebraError> {
        self.mul_table(&self.left, a, b)
    }

    pub fn right_mul(&self, a: &[Scalar], b: &[Scalar]) -> Result<Element, AlgebraError> {
        self.mul_table(&self.right, a, b)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }
}

/// Checks the three dendriform axioms on all basis triples.
pub fn check_dendriform(d: &DendriformSpec) -> IdentityReport {
    let n = d.dim;
    let e = |i: usize| d.basis_element(i);
    let lt = |a: &Element, b: &Element| d.left_mul(a, b).expect("basis elements");
    let rt = |a: &Element, b: &Element| d.right_mul(a, b).expect("basis elements");
    let mut witnesses = Vec::new();
    let mut record = |axiom: &'static str, idx: (usize, usize, usize), defect: Element| {
        if !is_zero_vec(&defect) {
            witnesses.push(Witness {
                axiom,
                indices: vec![idx.0 + 1, idx.1 + 1, idx.2 + 1],
                defect,
            });
        }
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (e(i), e(j), e(k));
                // (a < b) < c = a < (b < c) + a < (b > c)
                record(
                    "dendriform-1",
                    (i, j, k),
                    sub(
                        &lt(&lt(&a, &b), &c),
                        &add(&lt(&a, &lt(&b, &c)), &lt(&a, &rt(&b, &c))),
                    ),
                );
                // (a > b) < c = a > (b < c)
                record(
                    "dendriform-2",
                    (i, j, k),
                    sub(&lt(&rt(&a, &b), &c), &rt(&a, &lt(&b, &c))),
                );
                // a > (b > c) = (a < b) > c + (a > b) > c
                record(
                    "dendriform-3",
                    (i, j, k),
                    sub(
                        &rt(&a, &rt(&b, &c)),
                        &add(&rt(&lt(&a, &b), &c), &rt(&rt(&a, &b), &c)),
                    ),
                );
            }
        }
    }
    IdentityReport::from_witnesses("dendriform", witnesses)
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
    fn z2_1_is_zinbiel_and_associative() {
        let a = z2_1();
        assert!(check_identity(&a, IdentityKind::Zinbiel).holds);
        assert!(check_identity(&a, IdentityKind::Associative).holds);
    }

    #[test]
    fn abelian_satisfies_everything() {
        let a = AlgebraSpec::new("Z3_1", 3);
        for kind in IdentityKind::ALL {
            assert!(check_identity(&a, kind).holds, "{} failed", kind);
        }
    }

    #[test]
    fn idempotent_line_is_not_zinbiel() {
        // e1*e1 = e1 forces 1 = 2 in the identity.
        let mut a = AlgebraSpec::new("bad", 1);
        a.set_product(0, 0, vec![Scalar::one()]);
        let report = check_identity(&a, IdentityKind::Zinbiel);
        assert!(!report.holds);
        assert_eq!(report.witnesses[0].indices, vec![1, 1, 1]);
    }

    #[test]
    fn dendriform_axiom_failure_witnessed() {
        // e1 < e1 = e2, e2 < e1 = e1, right product zero: axiom 1 breaks at
        // (1,1,1) because (e1<e1)<e1 = e1 while the right side vanishes.
        let mut d = DendriformSpec::new("bad", 2);
        d.left.insert((0, 0), vec![Scalar::zero(), Scalar::one()]);
        d.left.insert((1, 0), vec![Scalar::one(), Scalar::zero()]);
        let report = check_dendriform(&d);
        assert!(!report.holds);
        let w = report
            .witnesses
            .iter()
            .find(|w| w.axiom == "dendriform-1")
            .expect("axiom 1 witness");
        assert_eq!(w.indices, vec![1, 1, 1]);
    }

    #[test]
    fn zero_dendriform_holds() {
        let d = DendriformSpec::new("zero", 2);
        assert!(check_dendriform(&d).holds);
    }
}
