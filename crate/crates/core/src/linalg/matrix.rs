//! Dense matrices and exact reduced row echelon form.
//!
//! Pivot policy is deterministic: in the leftmost unresolved column, the
//! first row whose entry is unconditionally nonzero is chosen (plain
//! rationals are scanned before assumption-backed parameter entries, which
//! does not change the reduced form or the certificate); failing that, the
//! first row whose entry is nonzero only generically, in which case the
//! obstructing polynomial is recorded in the rank certificate and the
//! entry is treated as nonzero (generic mode).

use std::fmt;



use crate::error::LinalgError;
use crate::field::{Field, NonzeroStatus, QuickStatus};
use crate::scalar::{AssumptionSet, Poly};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn new(rows: usize, cols: usize, data: Vec<K>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry grid does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: nrows, cols: ncols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<K> {
        self.row(r).to_vec()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[K]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix<K>) -> Result<Matrix<K>, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Matrix<K> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix<K>) -> Result<Matrix<K>, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch("matrix addition".into()));
        }
        let data = self
            .data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, rhs: &Matrix<K>) -> Result<Matrix<K>, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch("matrix subtraction".into()));
        }
        let data = self
            .data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &K) -> Matrix<K> {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[K]) -> Result<Vec<K>, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::ShapeMismatch("vector-matrix product".into()));
        }
        let mut out = vec![K::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                out[j] = out[j].clone() + vi.clone() * a.clone();
            }
        }
        Ok(out)
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Reduced row echelon form together with the rank certificate.
    pub fn rref(&self, assumptions: &AssumptionSet) -> (Matrix<K>, RankCertificate) {
        let mut m = self.clone();
        let cert = m.rref_in_place(assumptions);
        (m, cert)
    }

    pub fn rref_in_place(&mut self, assumptions: &AssumptionSet) -> RankCertificate {
        if let Some(cert) = K::rref_special(self, assumptions) {
            return cert;
        }
        self.rref_field(assumptions)
    }

    /// Generic over-the-field elimination; public to the crate's tests so
    /// the specialized path can be cross-checked against it.
    #[doc(hidden)]
    pub fn rref_generic_for_tests(&mut self, assumptions: &AssumptionSet) -> RankCertificate {
        self.rref_field(assumptions)
    }

    fn rref_field(&mut self, assumptions: &AssumptionSet) -> RankCertificate {
        let mut cert = RankCertificate::new(0);
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            // First unconditionally nonzero entry, else first conditional
            // one. A cheap pass finds rational pivots without touching the
            // parameter machinery; only when none exists are the
            // parameter-dependent entries classified in row order.
            let mut chosen: Option<usize> = None;
            let mut any_unknown = false;
            for r in pivot_row..self.rows {
                match self[(r, col)].quick_status() {
                    QuickStatus::Nonzero => {
                        chosen = Some(r);
                        break;
                    }
                    QuickStatus::Unknown => any_unknown = true,
                    QuickStatus::Zero => {}
                }
            }
            if chosen.is_none() && any_unknown {
                let mut conditional: Option<(usize, Poly)> = None;
                for r in pivot_row..self.rows {
                    if self[(r, col)].quick_status() != QuickStatus::Unknown {
                        continue;
                    }
                    match self[(r, col)].nonzero_status(assumptions) {
                        NonzeroStatus::Nonzero => {
                            chosen = Some(r);
                            break;
                        }
                        NonzeroStatus::Conditional(p) => {
                            if conditional.is_none() {
                                conditional = Some((r, p));
                            }
                        }
                        NonzeroStatus::Zero => {}
                    }
                }
                if chosen.is_none() {
                    if let Some((r, p)) = conditional {
                        cert.record(p, assumptions);
                        chosen = Some(r);
                    }
                }
            }
            let r = match chosen {
                Some(r) => r,
                None => continue,
            };
            self.swap_rows(pivot_row, r);
            let inv = self[(pivot_row, col)]
                .try_inv()
                .expect("pivot certified nonzero");
            self.scale_row(pivot_row, &inv);
            for other in 0..self.rows {
                if other == pivot_row || self[(other, col)].is_zero() {
                    continue;
                }
                let factor = self[(other, col)].clone();
                self.sub_scaled_row(other, pivot_row, &factor);
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        cert.rank = pivot_row;
        cert.pivot_cols = pivot_cols;
        cert
    }

    /// Canonical basis of `{v : self * v = 0}` (vectors as rows).
    pub fn nullspace(
        &self,
        assumptions: &AssumptionSet,
    ) -> (super::SubspaceBasis<K>, RankCertificate) {
        let (red, mut cert) = self.rref(assumptions);
        let mut is_pivot = vec![false; self.cols];
        for &c in &cert.pivot_cols {
            is_pivot[c] = true;
        }
        let mut gens = Vec::with_capacity(self.cols - cert.rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (i, &pc) in cert.pivot_cols.iter().enumerate() {
                let coeff = &red[(i, free)];
                if !coeff.is_zero() {
                    v[pc] = -coeff.clone();
                }
            }
            gens.push(v);
        }
        let (basis, canon_cert) =
            super::SubspaceBasis::from_generators(self.cols, gens, assumptions);
        cert.merge(&canon_cert);
        debug_assert_eq!(basis.dim(), self.cols - cert.rank);
        (basis, cert)
    }

    /// Exact inverse. Fails if the matrix is not square, is singular, or can
    /// only be inverted under extra genericity conditions (a conditional
    /// pivot is rejected rather than assumed).
    pub fn inverse(&self, assumptions: &AssumptionSet) -> Result<Matrix<K>, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = K::one();
        }
        let cert = aug.rref_in_place(assumptions);
        // Invertible exactly when the left block carries a full pivot
        // staircase and no pivot needed a genericity condition.
        let left_pivots_ok =
            cert.pivot_cols.len() >= n && cert.pivot_cols[..n].iter().enumerate().all(|(i, &c)| c == i);
        if !left_pivots_ok || !cert.specializations.is_empty() {
            return Err(LinalgError::SingularMatrix);
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &K) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.data[idx].is_zero() {
                self.data[idx] = self.data[idx].clone() * c.clone();
            }
        }
    }

    /// row[target] -= factor * row[src]
    fn sub_scaled_row(&mut self, target: usize, src: usize, factor: &K) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if s.is_zero() {
                continue;
            }
            let idx = target * self.cols + j;
            self.data[idx] = self.data[idx].clone() - factor.clone() * s;
        }
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (r, c): (usize, usize)) -> &K {
        &self.data[r * self.cols + c]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut K {
        &mut self.data[r * self.cols + c]
    }
}

impl<K: Field> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .iter_rows()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cell, width = width)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Rank of a generic elimination plus the polynomials at which the chosen
/// pivot sequence stops being valid. Assumption polynomials never appear.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RankCertificate {
    pub rank: usize,
    pub specializations: Vec<Poly>,
    pub pivot_cols: Vec<usize>,
}

impl RankCertificate {
    pub fn new(rank: usize) -> Self {
        RankCertificate { rank, specializations: Vec::new(), pivot_cols: Vec::new() }
    }

    pub fn record(&mut self, p: Poly, assumptions: &AssumptionSet) {
        let monic = p.monic();
        if monic.is_constant() || assumptions.contains_equivalent(&monic) {
            return;
        }
        if !self.specializations.contains(&monic) {
            self.specializations.push(monic);
            self.specializations
                .sort_by(|a, b| a.coeffs().len().cmp(&b.coeffs().len()).then_with(|| {
                    a.to_string().cmp(&b.to_string())
                }));
        }
    }

    /// Imports the specialization list of a subordinate computation.
    pub fn merge(&mut self, other: &RankCertificate) {
        for p in &other.specializations {
            if !self.specializations.contains(p) {
                self.specializations.push(p.clone());
            }
        }
        self.specializations
            .sort_by(|a, b| a.coeffs().len().cmp(&b.coeffs().len()).then_with(|| {
                a.to_string().cmp(&b.to_string())
            }));
    }
}

/// Coefficients expressing `target` in the span of `rows`, if it lies there.
pub fn express_in_span<K: Field>(
    rows: &[Vec<K>],
    target: &[K],
    assumptions: &AssumptionSet,
) -> Option<Vec<K>> {
    if rows.is_empty() {
        return if target.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let n = target.len();
    let k = rows.len();
    // Columns are the generators; last column is the target.
    let mut m = Matrix::zeros(n, k + 1);
    for (j, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), n, "generator length mismatch");
        for i in 0..n {
            m[(i, j)] = row[i].clone();
        }
    }
    for i in 0..n {
        m[(i, k)] = target[i].clone();
    }
    let (red, cert) = m.rref(assumptions);
    if cert.pivot_cols.contains(&k) {
        return None; // inconsistent
    }
    let mut coeffs = vec![K::zero(); k];
    for (i, &pc) in cert.pivot_cols.iter().enumerate() {
        coeffs[pc] = red[(i, k)].clone();
    }
    Some(coeffs)
}
