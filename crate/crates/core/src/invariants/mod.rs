//! Linear invariant spaces of an algebra: derivations, centroid, center
//! membership, and central derivations via three independent
//! characterizations.
//!
//! Endomorphisms are encoded in row convention: the matrix `[a_it]` sends
//! the `i`-th basis element to `sum_t a_it e_t`, and is vectorized
//! row-major into coordinate space of dimension `n^2`. Composition
//! `phi . psi` (apply `psi` first) therefore corresponds to the matrix
//! product `M_psi * M_phi`.

pub mod checks;
pub mod decomp;
pub mod render;
pub mod sums;


use crate::algebra::AlgebraSpec;
use crate::linalg::{Matrix, RankCertificate, SubspaceBasis};
use crate::scalar::Scalar;

/// A linear subspace of the `n^2`-dimensional endomorphism space.
#[derive(Clone, Debug, PartialEq)]
pub struct EndoSpace {
    pub n: usize,
    pub space: SubspaceBasis<Scalar>,
}

impl EndoSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis vectors reshaped to `n x n` matrices.
    pub fn basis_matrices(&self) -> Vec<Matrix<Scalar>> {
        self.space
            .rows()
            .iter()
            .map(|v| Matrix::new(self.n, self.n, v.clone()))
            .collect()
    }

    pub fn contains_matrix(&self, m: &Matrix<Scalar>) -> bool {
        self.space.contains(&vectorize(m))
    }
}

/// Row-major vectorization of a square matrix.
pub fn vectorize(m: &Matrix<Scalar>) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for r in m.iter_rows() {
        v.extend(r.iter().cloned());
    }
    v
}

/// Index of unknown `a_it` in the vectorized endomorphism.
fn slot(n: usize, i: usize, t: usize) -> usize {
    i * n + t
}

fn push_nonzero(rows: &mut Vec<Vec<Scalar>>, row: Vec<Scalar>) {
    if row.iter().any(|x| !x.is_zero()) {
        rows.push(row);
    }
}

/// Drops duplicate constraint rows and puts sparse, parameter-free rows
/// first. The row space is unchanged; elimination just meets cheap pivots
/// early. The ordering is a deterministic function of the input.
fn tidy_rows(rows: &mut Vec<Vec<Scalar>>) {
    rows.dedup();
    let mut seen: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
    for row in rows.drain(..) {
        if !seen.contains(&row) {
            seen.push(row);
        }
    }
    *rows = seen;
    rows.sort_by_cached_key(|row| {
        let nonzeros = row.iter().filter(|x| !x.is_zero()).count();
        let parametric = row.iter().any(|x| x.as_rational().is_none());
        let first = row
            .iter()
            .position(|x| !x.is_zero())
            .unwrap_or(usize::MAX);
        (parametric, nonzeros, first)
    });
}

fn solve_system(
    a: &AlgebraSpec,
    mut rows: Vec<Vec<Scalar>>,
) -> (EndoSpace, RankCertificate) {
    let n = a.dim;
    tidy_rows(&mut rows);
    let m = if rows.is_empty() {
        Matrix::zeros(0, n * n)
    } else {
        Matrix::from_rows(rows)
    };
    let (space, cert) = m.nullspace(&a.assumptions);
    (EndoSpace { n, space }, cert)
}

/// Derivations: `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)`, which in structure
/// constants is, for every `(i, j, k)`,
/// `sum_t g_ij^t d_tk - sum_t d_it g_tj^k - sum_t d_jt g_it^k = 0`.
pub fn derivation_space(a: &AlgebraSpec) -> (EndoSpace, RankCertificate) {
    let n = a.dim;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let gamma_ij = a.product(i, j);
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                if let Some(g) = gamma_ij {
                    for t in 0..n {
                        if !g[t].is_zero() {
                            let s = slot(n, t, k);
                            row[s] = row[s].clone() + g[t].clone();
                        }
                    }
                }
                for t in 0..n {
                    if let Some(g) = a.product(t, j) {
                        if !g[k].is_zero() {
                            let s = slot(n, i, t);
                            row[s] = row[s].clone() - g[k].clone();
                        }
                    }
                    if let Some(g) = a.product(i, t) {
                        if !g[k].is_zero() {
                            let s = slot(n, j, t);
                            row[s] = row[s].clone() - g[k].clone();
                        }
                    }
                }
                push_nonzero(&mut rows, row);
            }
        }
    }
    solve_system(a, rows)
}

/// Centroid: `phi(e_i e_j) = phi(e_i) e_j` and `phi(e_i e_j) = e_i phi(e_j)`
/// as two families of equations over all `(i, j, k)`.
pub fn centroid_space(a: &AlgebraSpec) -> (EndoSpace, RankCertificate) {
    solve_system(a, centroid_rows(a))
}

fn centroid_rows(a: &AlgebraSpec) -> Vec<Vec<Scalar>> {
    let n = a.dim;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let gamma_ij = a.product(i, j);
            for k in 0..n {
                let mut right = vec![Scalar::zero(); n * n];
                let mut left = vec![Scalar::zero(); n * n];
                if let Some(g) = gamma_ij {
                    for t in 0..n {
                        if !g[t].is_zero() {
                            let s = slot(n, t, k);
                            right[s] = right[s].clone() + g[t].clone();
                            left[s] = left[s].clone() + g[t].clone();
                        }
                    }
                }
                for t in 0..n {
                    if let Some(g) = a.product(t, j) {
                        if !g[k].is_zero() {
                            let s = slot(n, i, t);
                            right[s] = right[s].clone() - g[k].clone();
                        }
                    }
                    if let Some(g) = a.product(i, t) {
                        if !g[k].is_zero() {
                            let s = slot(n, j, t);
                            left[s] = left[s].clone() - g[k].clone();
                        }
                    }
                }
                push_nonzero(&mut rows, right);
                push_nonzero(&mut rows, left);
            }
        }
    }
    rows
}

/// Central derivations by the equational characterization: the three
/// families `sum_t g_ij^t a_tk = 0`, `sum_t a_it g_tj^k = 0` and
/// `sum_t a_jt g_it^k = 0`, each set to zero individually over all
/// `(i, j, k)`.
pub fn cd_equational(a: &AlgebraSpec) -> (EndoSpace, RankCertificate) {
    solve_system(a, cd_equational_rows(a))
}

/// The full constraint system of the equational characterization, for rank
/// proofs in mismatch certificates.
pub fn cd_constraint_matrix(a: &AlgebraSpec) -> Matrix<Scalar> {
    let rows = cd_equational_rows(a);
    if rows.is_empty() {
        Matrix::zeros(0, a.dim * a.dim)
    } else {
        Matrix::from_rows(rows)
    }
}

fn cd_equational_rows(a: &AlgebraSpec) -> Vec<Vec<Scalar>> {
    let n = a.dim;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut fam1 = vec![Scalar::zero(); n * n];
                let mut fam2 = vec![Scalar::zero(); n * n];
                let mut fam3 = vec![Scalar::zero(); n * n];
                if let Some(g) = a.product(i, j) {
                    for t in 0..n {
                        if !g[t].is_zero() {
                            let s = slot(n, t, k);
                            fam1[s] = fam1[s].clone() + g[t].clone();
                        }
                    }
                }
                for t in 0..n {
                    if let Some(g) = a.product(t, j) {
                        if !g[k].is_zero() {
                            let s = slot(n, i, t);
                            fam2[s] = fam2[s].clone() + g[k].clone();
                        }
                    }
                    if let Some(g) = a.product(i, t) {
                        if !g[k].is_zero() {
                            let s = slot(n, j, t);
                            fam3[s] = fam3[s].clone() + g[k].clone();
                        }
                    }
                }
                push_nonzero(&mut rows, fam1);
                push_nonzero(&mut rows, fam2);
                push_nonzero(&mut rows, fam3);
            }
        }
    }
    rows
}

/// Central derivations by the definition: image inside the center and
/// annihilation of the product subspace. Center membership is imposed
/// through the stacked multiplication constraints whose kernel is the
/// center, annihilation through a basis of `A*A`.
pub fn cd_definitional(a: &AlgebraSpec) -> (EndoSpace, RankCertificate) {
    let n = a.dim;
    let mut rows = Vec::new();
    let q = a.centralizer_constraints(
        &(0..n).map(|i| a.basis_element(i)).collect::<Vec<_>>(),
    );
    for qr in 0..q.rows() {
        for i in 0..n {
            let mut row = vec![Scalar::zero(); n * n];
            for t in 0..n {
                let c = &q[(qr, t)];
                if !c.is_zero() {
                    row[slot(n, i, t)] = c.clone();
                }
            }
            push_nonzero(&mut rows, row);
        }
    }
    let (square, cert_sq) = a.product_subspace();
    for v in square.rows() {
        for t in 0..n {
            let mut row = vec![Scalar::zero(); n * n];
            for i in 0..n {
                if !v[i].is_zero() {
                    row[slot(n, i, t)] = v[i].clone();
                }
            }
            push_nonzero(&mut rows, row);
        }
    }
    let (space, mut cert) = solve_system(a, rows);
    cert.merge(&cert_sq);
    (space, cert)
}

/// Central derivations as the intersection of derivations and centroid.
pub fn cd_intersection(a: &AlgebraSpec) -> (EndoSpace, RankCertificate) {
    let (der, mut cert) = derivation_space(a);
    let (cen, c2) = centroid_space(a);
    cert.merge(&c2);
    let (space, c3) = der
        .space
        .intersect(&cen.space, &a.assumptions)
        .expect("equal ambient by construction");
    cert.merge(&c3);
    (EndoSpace { n: a.dim, space }, cert)
}

/// Independent re-verification that a matrix satisfies all three equation
/// families of the central-derivation system. Evaluates the sums directly
/// from the structure constants; shares nothing with the nullspace path.
pub fn verify_cd_member(a: &AlgebraSpec, m: &Matrix<Scalar>) -> bool {
    let n = a.dim;
    if m.rows() != n || m.cols() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut fam1 = Scalar::zero();
                let mut fam2 = Scalar::zero();
                let mut fam3 = Scalar::zero();
                for t in 0..n {
                    if let Some(g) = a.product(i, j) {
                        if !g[t].is_zero() {
                            fam1 = fam1 + g[t].clone() * m[(t, k)].clone();
                        }
                    }
                    if let Some(g) = a.product(t, j) {
                        if !g[k].is_zero() {
                            fam2 = fam2 + m[(i, t)].clone() * g[k].clone();
                        }
                    }
                    if let Some(g) = a.product(i, t) {
                        if !g[k].is_zero() {
                            fam3 = fam3 + m[(j, t)].clone() * g[k].clone();
                        }
                    }
                }
                if !fam1.is_zero() || !fam2.is_zero() || !fam3.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// All invariant spaces of one algebra, with the specialization
/// polynomials met along the way.
#[derive(Clone, Debug)]
pub struct AlgebraInvariants {
    pub der: EndoSpace,
    pub gamma: EndoSpace,
    pub center: SubspaceBasis<Scalar>,
    pub cd_eq: EndoSpace,
    pub cd_def: EndoSpace,
    pub cd_int: EndoSpace,
    pub chain: Vec<SubspaceBasis<Scalar>>,
    pub cert: RankCertificate,
}

impl AlgebraInvariants {
    pub fn compute(a: &AlgebraSpec) -> Self {
        let (der, c1) = derivation_space(a);
        let (gamma, c2) = centroid_space(a);
        let (center, c3) = a.center();
        let (cd_eq, c4) = cd_equational(a);
        let (cd_def, c5) = cd_definitional(a);
        // Intersection reuses the two spaces already at hand.
        let (int_space, c6) = der
            .space
            .intersect(&gamma.space, &a.assumptions)
            .expect("equal ambient by construction");
        let cd_int = EndoSpace { n: a.dim, space: int_space };
        let (chain, c7) = a.power_chain();
        let mut cert = c1;
        for c in [&c2, &c3, &c4, &c5, &c6, &c7] {
            cert.merge(c);
        }
        cert.rank = 0; // aggregate: only the specialization list is meaningful
        AlgebraInvariants { der, gamma, center, cd_eq, cd_def, cd_int, chain, cert }
    }

    /// Exact agreement of the three central-derivation characterizations.
    pub fn cd_agreement(&self) -> bool {
        self.cd_eq.space == self.cd_def.space && self.cd_eq.space == self.cd_int.space
    }

    pub fn chain_dims(&self) -> Vec<usize> {
        self.chain.iter().map(|s| s.dim()).collect()
    }
}
