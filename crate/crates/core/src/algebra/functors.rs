//! Derived-structure constructions connecting the varieties: Zinbiel
//! products symmetrize to commutative associative ones, split into
//! dendriform pairs, and feed the pre-Lie/Lie chain.

use std::fmt;


use crate::scalar::Scalar;

use super::identities::DendriformSpec;
use super::AlgebraSpec;

fn combine(
    a: &AlgebraSpec,
    f: impl Fn(usize, usize) -> Vec<Scalar>,
) -> AlgebraSpec {
    let mut out = AlgebraSpec::new(a.name.clone(), a.dim);
    out.labels = a.labels.clone();
    out.param = a.param.clone();
    out.assumptions = a.assumptions.clone();
    for i in 0..a.dim {
        for j in 0..a.dim {
            out.set_product(i, j, f(i, j));
        }
    }
    out
}

fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// `a * b = a.b + b.a`, the commutative associated product.
pub fn symmetrize(a: &AlgebraSpec) -> AlgebraSpec {
    combine(a, |i, j| vec_add(&a.basis_product(i, j), &a.basis_product(j, i)))
}

/// The opposite product `a ∘ b = b.a`.
pub fn opposite(a: &AlgebraSpec) -> AlgebraSpec {
    combine(a, |i, j| a.basis_product(j, i))
}

/// The commutator `[a, b] = a.b - b.a`.
pub fn commutator(a: &AlgebraSpec) -> AlgebraSpec {
    combine(a, |i, j| vec_sub(&a.basis_product(i, j), &a.basis_product(j, i)))
}

/// Splits a Zinbiel product into the standard dendriform pair:
/// `a < b = a.b` and `a > b = b.a`.
pub fn zinbiel_to_dendriform(a: &AlgebraSpec) -> DendriformSpec {
    let mut d = DendriformSpec::new(a.name.clone(), a.dim);
    d.param = a.param.clone();
    d.assumptions = a.assumptions.clone();
    for ((i, j), gamma) in &a.table {
        d.left.insert((*i, *j), gamma.clone());
        d.right.insert((*j, *i), gamma.clone());
    }
    d
}

/// `a * b = a < b + a > b`, the associative total product.
pub fn dendriform_to_associative(d: &DendriformSpec) -> AlgebraSpec {
    let mut out = AlgebraSpec::new(d.name.clone(), d.dim);
    out.param = d.param.clone();
    out.assumptions = d.assumptions.clone();
    for i in 0..d.dim {
        for j in 0..d.dim {
            let zero = vec![Scalar::zero(); d.dim];
            let l = d.left.get(&(i, j)).unwrap_or(&zero).clone();
            let r = d.right.get(&(i, j)).unwrap_or(&zero);
            out.set_product(i, j, vec_add(&l, r));
        }
    }
    out
}

/// `a ∘ b = a > b - b < a`, the pre-Lie product of a dendriform pair.
pub fn dendriform_to_prelie(d: &DendriformSpec) -> AlgebraSpec {
    let mut out = AlgebraSpec::new(d.name.clone(), d.dim);
    out.param = d.param.clone();
    out.assumptions = d.assumptions.clone();
    for i in 0..d.dim {
        for j in 0..d.dim {
            let zero = vec![Scalar::zero(); d.dim];
            let r = d.right.get(&(i, j)).unwrap_or(&zero).clone();
            let l = d.left.get(&(j, i)).unwrap_or(&zero);
            out.set_product(i, j, vec_sub(&r, l));
        }
    }
    out
}

/// The Lie bracket of a pre-Lie (or associative) product.
pub fn prelie_to_lie(a: &AlgebraSpec) -> AlgebraSpec {
    commutator(a)
}

/// Single-table derived structures reachable from an algebra file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeriveKind {
    /// `a.b + b.a`
    Symmetrize,
    /// `b.a`
    Opposite,
    /// total product of the induced dendriform pair (equals symmetrize for
    /// a Zinbiel input; kept as an independent route)
    DendriformAssociative,
    /// pre-Lie product of the induced dendriform pair (identically zero for
    /// a Zinbiel input)
    DendriformPrelie,
    /// commutator bracket
    Lie,
}

impl DeriveKind {
    pub const ALL: [DeriveKind; 5] = [
        DeriveKind::Symmetrize,
        DeriveKind::Opposite,
        DeriveKind::DendriformAssociative,
        DeriveKind::DendriformPrelie,
        DeriveKind::Lie,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DeriveKind::Symmetrize => "symmetrize",
            DeriveKind::Opposite => "opposite",
            DeriveKind::DendriformAssociative => "dendriform-associative",
            DeriveKind::DendriformPrelie => "dendriform-prelie",
            DeriveKind::Lie => "lie",
        }
    }

    pub fn from_name(name: &str) -> Option<DeriveKind> {
        DeriveKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    pub fn apply(&self, a: &AlgebraSpec) -> AlgebraSpec {
        match self {
            DeriveKind::Symmetrize => symmetrize(a),
            DeriveKind::Opposite => opposite(a),
            DeriveKind::DendriformAssociative => {
                dendriform_to_associative(&zinbiel_to_dendriform(a))
            }
            DeriveKind::DendriformPrelie => {
                dendriform_to_prelie(&zinbiel_to_dendriform(a))
            }
            DeriveKind::Lie => prelie_to_lie(a),
        }
    }
}

impl fmt::Display for DeriveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
