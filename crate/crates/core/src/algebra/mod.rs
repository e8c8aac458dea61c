//! Structure-constant algebras: construction, multiplication, subspace
//! machinery (center, centralizer, power ideals, ideals), direct sums and
//! basis change.

pub mod identities;
pub mod functors;
pub mod parse;

use std::collections::BTreeMap;


use crate::error::{AlgebraError, LinalgError, ScalarError};
use crate::linalg::{Matrix, RankCertificate, SubspaceBasis};
use crate::scalar::{AssumptionSet, Rational, Scalar};

/// Coordinate vector of an element in the fixed basis.
pub type Element = Vec<Scalar>;

/// A finite-dimensional algebra given by its structure constants: the
/// product of basis elements `i` and `j` is the stored coordinate vector,
/// absent entries meaning the zero product.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `(i, j) -> coordinates of e_i * e_j`, 0-based, no stored zero vectors.
    pub table: BTreeMap<(usize, usize), Vec<Scalar>>,
    pub param: Option<String>,
    pub assumptions: AssumptionSet,
}

impl AlgebraSpec {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        AlgebraSpec {
            name: name.into(),
            dim,
            labels: (1..=dim).map(|i| format!("e{}", i)).collect(),
            table: BTreeMap::new(),
            param: None,
            assumptions: AssumptionSet::empty(),
        }
    }

    /// Stores the product of basis elements `i` and `j` (0-based), dropping
    /// it when all coordinates are zero.
    pub fn set_product(&mut self, i: usize, j: usize, coords: Vec<Scalar>) {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        assert_eq!(coords.len(), self.dim, "product vector length mismatch");
        if coords.iter().all(|c| c.is_zero()) {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), coords);
        }
    }

    /// Structure constant vector of `e_i * e_j`; `None` means zero.
    pub fn product(&self, i: usize, j: usize) -> Option<&Vec<Scalar>> {
        self.table.get(&(i, j))
    }

    pub fn zero_element(&self) -> Element {
        vec![Scalar::zero(); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = self.zero_element();
        v[i] = Scalar::one();
        v
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Element, AlgebraError> {
        if a.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: a.len() });
        }
        if b.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: b.len() });
        }
        let mut out = self.zero_element();
        for ((i, j), gamma) in &self.table {
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

    /// Product of basis elements as an owned vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        match self.product(i, j) {
            Some(v) => v.clone(),
            None => self.zero_element(),
        }
    }

    /// Stacked left/right multiplication constraints: the kernel of this
    /// matrix (acting on coordinates of `a`) is exactly the set of `a` with
    /// `a * s = s * a = 0` for every `s` in the list.
    pub fn centralizer_constraints(&self, elements: &[Element]) -> Matrix<Scalar> {
        let n = self.dim;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for s in elements {
            // a * s = 0: coefficient of unknown a_i in coordinate k is
            // sum_j s_j gamma_{ij}^k.
            let mut right = vec![vec![Scalar::zero(); n]; n]; // [k][i]
            let mut left = vec![vec![Scalar::zero(); n]; n];
            for ((i, j), gamma) in &self.table {
                for (k, g) in gamma.iter().enumerate() {
                    if g.is_zero() {
                        continue;
                    }
                    if !s[*j].is_zero() {
                        right[k][*i] =
                            right[k][*i].clone() + s[*j].clone() * g.clone();
                    }
                    if !s[*i].is_zero() {
                        left[k][*j] = left[k][*j].clone() + s[*i].clone() * g.clone();
                    }
                }
            }
            for row in right.into_iter().chain(left) {
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            Matrix::zeros(0, n)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Elements annihilated by the whole algebra on both sides.
    pub fn centralizer(
        &self,
        elements: &[Element],
    ) -> (SubspaceBasis<Scalar>, RankCertificate) {
        self.centralizer_constraints(elements).nullspace(&self.assumptions)
    }

    /// The center: centralizer of the full basis.
    pub fn center(&self) -> (SubspaceBasis<Scalar>, RankCertificate) {
        let basis: Vec<Element> = (0..self.dim).map(|i| self.basis_element(i)).collect();
        self.centralizer(&basis)
    }

    /// Span of `u * e_j` over basis vectors `u` of `space` and all `j`.
    pub fn right_product_space(
        &self,
        space: &SubspaceBasis<Scalar>,
    ) -> (SubspaceBasis<Scalar>, RankCertificate) {
        let mut gens = Vec::new();
        for u in space.rows() {
            for j in 0..self.dim {
                let ej = self.basis_element(j);
                let prod = self.multiply(u, &ej).expect("ambient checked");
                if prod.iter().any(|x| !x.is_zero()) {
                    gens.push(prod);
                }
            }
        }
        SubspaceBasis::from_generators(self.dim, gens, &self.assumptions)
    }

    /// Span of all products; the second term of the power chain.
    pub fn product_subspace(&self) -> (SubspaceBasis<Scalar>, RankCertificate) {
        let full = SubspaceBasis::full(self.dim);
        self.right_product_space(&full)
    }

    /// Descending chain `A >= A*A >= (A*A)*A >= ...` computed until it
    /// stabilizes; the first repeated term is not stored.
    pub fn power_chain(&self) -> (Vec<SubspaceBasis<Scalar>>, RankCertificate) {
        let mut cert = RankCertificate::new(0);
        let mut chain = vec![SubspaceBasis::full(self.dim)];
        loop {
            let last = chain.last().unwrap();
            let (next, c) = self.right_product_space(last);
            cert.merge(&c);
            if &next == last {
                break;
            }
            debug_assert!(last.contains_subspace(&next));
            chain.push(next.clone());
            if next.is_zero() {
                break;
            }
        }
        (chain, cert)
    }

    /// Checks `A*U ⊆ U` and `U*A ⊆ U` on basis elements.
    pub fn is_ideal(&self, subspace: &SubspaceBasis<Scalar>) -> Result<bool, AlgebraError> {
        if subspace.ambient() != self.dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.dim,
                right: subspace.ambient(),
            }
            .into());
        }
        for u in subspace.rows() {
            for j in 0..self.dim {
                let ej = self.basis_element(j);
                if !subspace.contains(&self.multiply(u, &ej)?)
                    || !subspace.contains(&self.multiply(&ej, u)?)
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Block direct sum. The summands may share one parameter; two distinct
    /// parameters are rejected.
    pub fn direct_sum(&self, other: &AlgebraSpec) -> Result<AlgebraSpec, AlgebraError> {
        match (&self.param, &other.param) {
            (Some(a), Some(b)) if a != b => {
                return Err(ScalarError::ParameterClash {
                    first: a.clone(),
                    second: b.clone(),
                }
                .into());
            }
            _ => {}
        }
        let n = self.dim;
        let m = other.dim;
        let mut out = AlgebraSpec::new(format!("{}+{}", self.name, other.name), n + m);
        out.param = self.param.clone().or_else(|| other.param.clone());
        out.assumptions = self.assumptions.union(&other.assumptions);
        for ((i, j), gamma) in &self.table {
            let mut coords = vec![Scalar::zero(); n + m];
            coords[..n].clone_from_slice(gamma);
            out.set_product(*i, *j, coords);
        }
        for ((i, j), gamma) in &other.table {
            let mut coords = vec![Scalar::zero(); n + m];
            coords[n..].clone_from_slice(gamma);
            out.set_product(n + i, n + j, coords);
        }
        Ok(out)
    }

    /// Rewrites the table in the basis `e'_i = sum_t P[i][t] e_t` (rows of
    /// `P` are the new basis vectors in old coordinates).
    pub fn change_of_basis(&self, p: &Matrix<Scalar>) -> Result<AlgebraSpec, AlgebraError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} basis change on dimension {}",
                p.rows(),
                p.cols(),
                self.dim
            ))
            .into());
        }
        let q = p.inverse(&self.assumptions)?;
        let mut out = AlgebraSpec::new(self.name.clone(), self.dim);
        out.param = self.param.clone();
        out.assumptions = self.assumptions.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod_old = self.multiply(p.row(i), p.row(j))?;
                let coords = q.apply_row(&prod_old)?;
                out.set_product(i, j, coords);
            }
        }
        Ok(out)
    }

    /// Exact substitution of the parameter, producing a parameter-free
    /// algebra. The value is checked against the assumption set once.
    pub fn specialize(&self, value: &Rational) -> Result<AlgebraSpec, ScalarError> {
        self.assumptions.check_value(value)?;
        let empty = AssumptionSet::empty();
        let mut out = AlgebraSpec::new(self.name.clone(), self.dim);
        out.labels = self.labels.clone();
        for ((i, j), gamma) in &self.table {
            let coords = gamma
                .iter()
                .map(|c| c.evaluate_at(value, &empty).map(Scalar::Rat))
                .collect::<Result<Vec<_>, _>>()?;
            out.set_product(*i, *j, coords);
        }
        Ok(out)
    }

    /// True when every structure constant is a plain rational.
    pub fn is_parameter_free(&self) -> bool {
        self.table
            .values()
            .all(|v| v.iter().all(|c| c.as_rational().is_some()))
    }

    /// Renders an element like `e2 + 1/2 e3` using the basis labels.
    pub fn render_element(&self, v: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.labels[k];
            if c.is_one() {
                parts.push(label.clone());
            } else if (-c.clone()).is_one() {
                parts.push(format!("-{}", label));
            } else {
                let cs = c.to_string();
                if cs.contains(' ') {
                    parts.push(format!("({}) {}", cs, label));
                } else {
                    parts.push(format!("{} {}", cs, label));
                }
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    /// e1*e1 = e2 in dimension 2.
    pub(crate) fn z2_1() -> AlgebraSpec {
        let mut a = AlgebraSpec::new("Z2_1", 2);
        a.set_product(0, 0, vec![Scalar::zero(), Scalar::one()]);
        a
    }

    #[test]
    fn multiply_basis_elements() {
        let a = z2_1();
        let e1 = a.basis_element(0);
        let e2 = a.basis_element(1);
        assert_eq!(a.multiply(&e1, &e1).unwrap(), e2);
        assert!(a.multiply(&e2, &e2).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn multiply_is_bilinear_spot() {
        let a = z2_1();
        let e1 = a.basis_element(0);
        let mut x = a.zero_element();
        x[0] = Scalar::from_int(3);
        let product = a.multiply(&x, &e1).unwrap();
        assert_eq!(product[1], Scalar::from_int(3));
    }

    #[test]
    fn dimension_mismatch_reported() {
        let a = z2_1();
        let bad = vec![Scalar::one()];
        assert!(matches!(
            a.multiply(&bad, &bad),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn center_of_z2_1() {
        let a = z2_1();
        let (c, _) = a.center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&a.basis_element(1)));
    }

    #[test]
    fn power_chain_of_z2_1() {
        let a = z2_1();
        let (chain, _) = a.power_chain();
        let dims: Vec<usize> = chain.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![2, 1, 0]);
        assert!(chain[1].contains(&a.basis_element(1)));
    }

    #[test]
    fn ideal_checks() {
        let a = z2_1();
        let span_e2 = SubspaceBasis::from_generators(
            2,
            vec![a.basis_element(1)],
            &AssumptionSet::empty(),
        )
        .0;
        let span_e1 = SubspaceBasis::from_generators(
            2,
            vec![a.basis_element(0)],
            &AssumptionSet::empty(),
        )
        .0;
        assert!(a.is_ideal(&span_e2).unwrap());
        assert!(!a.is_ideal(&span_e1).unwrap());
    }

    #[test]
    fn direct_sum_blocks() {
        let a = z2_1();
        let s = a.direct_sum(&a).unwrap();
        assert_eq!(s.dim, 4);
        let e1 = s.basis_element(0);
        let e3 = s.basis_element(2);
        assert_eq!(s.multiply(&e1, &e1).unwrap(), s.basis_element(1));
        assert_eq!(s.multiply(&e3, &e3).unwrap(), s.basis_element(3));
        assert!(s
            .multiply(&e1, &e3)
            .unwrap()
            .iter()
            .all(|x| x.is_zero()));
    }

    #[test]
    fn basis_swap_moves_product() {
        let a = z2_1();
        let swap = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::one(), Scalar::zero()],
        ]);
        let b = a.change_of_basis(&swap).unwrap();
        // Now e2'*e2' = e1'.
        assert_eq!(
            b.basis_product(1, 1),
            vec![Scalar::one(), Scalar::zero()]
        );
        assert!(b.product(0, 0).is_none());
    }

    #[test]
    fn basis_change_roundtrip() {
        let a = z2_1();
        let p = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::one()],
            vec![Scalar::zero(), Scalar::one()],
        ]);
        let q = p.inverse(&AssumptionSet::empty()).unwrap();
        let round = a.change_of_basis(&p).unwrap().change_of_basis(&q).unwrap();
        assert_eq!(round.table, a.table);
    }

    #[test]
    fn identity_basis_change_is_identity() {
        let a = z2_1();
        let id = Matrix::identity(2);
        assert_eq!(a.change_of_basis(&id).unwrap().table, a.table);
    }

    #[test]
    fn center_of_z3_2() {
        let mut a = AlgebraSpec::new("Z3_2", 3);
        a.set_product(0, 0, vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
        let (c, _) = a.center();
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&a.basis_element(1)));
        assert!(c.contains(&a.basis_element(2)));
    }

    #[test]
    fn centralizer_of_single_element() {
        let a = z2_1();
        let (c, _) = a.centralizer(&[a.basis_element(1)]);
        // e2 annihilates everything, so its centralizer is the whole space.
        assert_eq!(c.dim(), 2);
        let (c, _) = a.centralizer(&[a.basis_element(0)]);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn singular_basis_change_rejected() {
        let a = z2_1();
        let p = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::one()],
            vec![Scalar::one(), Scalar::one()],
        ]);
        assert!(matches!(
            a.change_of_basis(&p),
            Err(AlgebraError::Linalg(LinalgError::SingularMatrix))
        ));
    }

    #[test]
    fn specialize_checks_assumptions() {
        use crate::scalar::Poly;
        let mut a = AlgebraSpec::new("Z3_6", 3);
        a.param = Some("lambda".into());
        a.assumptions.insert(Poly::variable("lambda"));
        let mut v = vec![Scalar::zero(); 3];
        v[2] = Scalar::parameter("lambda");
        a.set_product(1, 1, v);
        assert!(a.specialize(&rat_int(2)).is_ok());
        assert!(matches!(
            a.specialize(&rat_int(0)),
            Err(ScalarError::AssumptionViolated { .. })
        ));
        let spec = a.specialize(&rat_int(2)).unwrap();
        assert_eq!(spec.basis_product(1, 1)[2], Scalar::from_int(2));
    }
}
