//! Canonical subspace bases.
//!
//! A subspace is stored as the reduced row echelon basis of its row space,
//! which makes equality of subspaces structural equality of the bases.



use crate::error::LinalgError;
use crate::field::Field;
use crate::scalar::AssumptionSet;

use super::matrix::{Matrix, RankCertificate};

#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceBasis<K> {
    ambient: usize,
    rows: Vec<Vec<K>>,
}

impl<K: Field> SubspaceBasis<K> {
    /// The zero subspace.
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis { ambient, rows: Vec::new() }
    }

    /// The full coordinate space.
    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![K::zero(); ambient];
                v[i] = K::one();
                v
            })
            .collect();
        SubspaceBasis { ambient, rows }
    }

    /// Canonical basis of the span of arbitrary generators.
    pub fn from_generators(
        ambient: usize,
        gens: Vec<Vec<K>>,
        assumptions: &AssumptionSet,
    ) -> (Self, RankCertificate) {
        for g in &gens {
            assert_eq!(g.len(), ambient, "generator length mismatch");
        }
        if gens.is_empty() {
            return (SubspaceBasis::zero(ambient), RankCertificate::new(0));
        }
        let m = Matrix::from_rows(gens);
        let (red, cert) = m.rref(assumptions);
        let rows = (0..cert.rank).map(|i| red.row_vec(i)).collect();
        (SubspaceBasis { ambient, rows }, cert)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<K>] {
        &self.rows
    }

    /// Pivot column of each basis row (entries are canonical, so the pivot
    /// is the first nonzero entry and equals one).
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("zero basis row"))
            .collect()
    }

    /// Membership by residual elimination against the canonical basis.
    pub fn contains(&self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch in contains");
        let mut residual = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(self.pivot_cols().iter()) {
            let c = residual[pc].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(row.iter()) {
                if !b.is_zero() {
                    *x = x.clone() - c.clone() * b.clone();
                }
            }
        }
        residual.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis<K>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Canonical basis of the sum.
    pub fn sum(
        &self,
        other: &SubspaceBasis<K>,
        assumptions: &AssumptionSet,
    ) -> Result<(SubspaceBasis<K>, RankCertificate), LinalgError> {
        self.check_ambient(other)?;
        let mut gens = self.rows.clone();
        gens.extend(other.rows.clone());
        Ok(SubspaceBasis::from_generators(self.ambient, gens, assumptions))
    }

    /// Canonical basis of the intersection, computed through the kernel of
    /// the stacked coordinate system `[A^T | -B^T]`.
    pub fn intersect(
        &self,
        other: &SubspaceBasis<K>,
        assumptions: &AssumptionSet,
    ) -> Result<(SubspaceBasis<K>, RankCertificate), LinalgError> {
        self.check_ambient(other)?;
        let ka = self.dim();
        let kb = other.dim();
        if ka == 0 || kb == 0 {
            return Ok((SubspaceBasis::zero(self.ambient), RankCertificate::new(0)));
        }
        let mut m = Matrix::zeros(self.ambient, ka + kb);
        for (j, row) in self.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, j)] = row[i].clone();
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, ka + j)] = -row[i].clone();
            }
        }
        let (kernel, mut cert) = m.nullspace(assumptions);
        let gens: Vec<Vec<K>> = kernel
            .rows()
            .iter()
            .map(|coeffs| {
                let mut v = vec![K::zero(); self.ambient];
                for (j, row) in self.rows.iter().enumerate() {
                    if coeffs[j].is_zero() {
                        continue;
                    }
                    for i in 0..self.ambient {
                        if !row[i].is_zero() {
                            v[i] = v[i].clone() + coeffs[j].clone() * row[i].clone();
                        }
                    }
                }
                v
            })
            .collect();
        let (basis, canon) = SubspaceBasis::from_generators(self.ambient, gens, assumptions);
        cert.merge(&canon);
        Ok((basis, cert))
    }

    fn check_ambient(&self, other: &SubspaceBasis<K>) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> SubspaceBasis<L> {
        SubspaceBasis {
            ambient: self.ambient,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }
}

/// Structural equality of canonical bases decides subspace equality.
pub fn subspace_equal<K: Field>(a: &SubspaceBasis<K>, b: &SubspaceBasis<K>) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rational};

    fn qv(v: Vec<i64>) -> Vec<Rational> {
        v.into_iter().map(rat_int).collect()
    }

    fn span(ambient: usize, gens: Vec<Vec<i64>>) -> SubspaceBasis<Rational> {
        SubspaceBasis::from_generators(
            ambient,
            gens.into_iter().map(qv).collect(),
            &AssumptionSet::empty(),
        )
        .0
    }

    #[test]
    fn intersect_idempotent() {
        let v = span(3, vec![vec![1, 0, 2], vec![0, 1, 1]]);
        let (w, _) = v.intersect(&v, &AssumptionSet::empty()).unwrap();
        assert_eq!(w, v);
    }

    #[test]
    fn axes_meet_trivially() {
        let x = span(2, vec![vec![1, 0]]);
        let y = span(2, vec![vec![0, 1]]);
        let (meet, _) = x.intersect(&y, &AssumptionSet::empty()).unwrap();
        assert!(meet.is_zero());
    }

    #[test]
    fn sum_spans_plane() {
        let a = span(2, vec![vec![1, 0]]);
        let b = span(2, vec![vec![1, 1]]);
        let (s, _) = a.sum(&b, &AssumptionSet::empty()).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s, SubspaceBasis::full(2));
    }

    #[test]
    fn contains_scalar_multiple() {
        let v = span(2, vec![vec![0, 1]]);
        assert!(v.contains(&qv(vec![0, 5])));
        assert!(!v.contains(&qv(vec![1, 0])));
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = span(2, vec![vec![1, 0]]);
        let b = span(3, vec![vec![1, 0, 0]]);
        assert!(matches!(
            a.sum(&b, &AssumptionSet::empty()),
            Err(LinalgError::AmbientMismatch { .. })
        ));
    }
}
