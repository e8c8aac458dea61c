//! Fraction-free reduction.
//!
//! Elimination over the rational-function field spends most of its time
//! normalizing fractions. When every entry is a polynomial (denominator
//! one), a one-step fraction-free Gauss-Jordan pass keeps all intermediate
//! entries as integer-coefficient polynomials: rows are scaled to clear
//! denominators (row scaling does not change the reduced form), and the
//! update `(pivot * m[i][j] - m[i][col] * m[pivot][j]) / previous_pivot`
//! divides exactly by Sylvester's determinant identity, so entries stay
//! the size of minors. One reduced division per entry at the end produces
//! the same canonical reduced row echelon form the generic field path
//! computes. Plain rational matrices take the same route with
//! degree-zero polynomials, trading rational arithmetic for integer
//! arithmetic throughout.
//!
//! This is an internal fast path; the external contract is unchanged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{AssumptionSet, Poly, Rational, Scalar};

use super::matrix::{Matrix, RankCertificate};

/// Integer-coefficient polynomial: ascending degree, no trailing zeros,
/// empty for zero.
type IPoly = Vec<BigInt>;

fn itrim(v: &mut IPoly) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn imul(a: &IPoly, b: &IPoly) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    itrim(&mut out);
    out
}

fn isub(a: &IPoly, b: &IPoly) -> IPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero));
    }
    itrim(&mut out);
    out
}

/// Exact polynomial division; the divisor is known to divide the dividend.
fn idiv_exact(num: &IPoly, den: &IPoly) -> IPoly {
    debug_assert!(!den.is_empty(), "division by the zero polynomial");
    if num.is_empty() {
        return Vec::new();
    }
    debug_assert!(num.len() >= den.len());
    let mut rem = num.clone();
    let mut quot = vec![BigInt::zero(); num.len() - den.len() + 1];
    let dlead = den.last().unwrap();
    for i in (den.len() - 1..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (q, r) = rem[i].div_rem(dlead);
        debug_assert!(r.is_zero(), "fraction-free division must be exact");
        let shift = i - (den.len() - 1);
        for (j, d) in den.iter().enumerate() {
            let delta = d * &q;
            rem[shift + j] -= delta;
        }
        quot[shift] = q;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder");
    itrim(&mut quot);
    quot
}

/// Entries of one matrix row as integer polynomials, denominators cleared
/// by a common positive factor (a row scaling).
fn clear_row(entries: &[Poly]) -> Vec<IPoly> {
    let mut lcm = BigInt::one();
    for p in entries {
        for c in p.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
    }
    entries
        .iter()
        .map(|p| {
            let mut v: IPoly = p
                .coeffs()
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect();
            itrim(&mut v);
            v
        })
        .collect()
}

fn ipoly_to_poly(v: &IPoly, var: &str) -> Poly {
    Poly::new(
        var,
        v.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}

struct FractionFreeOutcome {
    /// Scaled echelon grid; each pivot row is its reduced form times its
    /// own final pivot entry.
    grid: Vec<IPoly>,
    cert: RankCertificate,
}

/// Shared kernel over integer polynomial rows. `var` names the parameter
/// for assumption handling (it is empty for plain rational input).
fn run_fraction_free(
    mut grid: Vec<IPoly>,
    rows: usize,
    cols: usize,
    var: &str,
    assumptions: &AssumptionSet,
) -> FractionFreeOutcome {
    let mut cert = RankCertificate::new(0);
    let mut prev: IPoly = vec![BigInt::one()];
    let mut pivot_row = 0usize;
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        // Pivot policy mirrors the field path: first unconditionally
        // nonzero entry (constants before assumption-backed parametric
        // entries), else the first generically nonzero one, recorded.
        let mut chosen: Option<usize> = None;
        for r in pivot_row..rows {
            let e = &grid[r * cols + col];
            if e.len() == 1 {
                chosen = Some(r);
                break;
            }
        }
        if chosen.is_none() {
            let mut conditional: Option<(usize, Poly)> = None;
            for r in pivot_row..rows {
                let e = &grid[r * cols + col];
                if e.len() < 2 {
                    continue;
                }
                let rest = assumptions.strip_factors(&ipoly_to_poly(e, var));
                if rest.is_constant() {
                    chosen = Some(r);
                    break;
                }
                if conditional.is_none() {
                    conditional = Some((r, rest.monic()));
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
        if r != pivot_row {
            for c in 0..cols {
                grid.swap(r * cols + c, pivot_row * cols + c);
            }
        }
        let pivot = grid[pivot_row * cols + col].clone();
        for i in 0..rows {
            if i == pivot_row {
                continue;
            }
            let lead = grid[i * cols + col].clone();
            for j in 0..cols {
                if j == col {
                    continue;
                }
                let idx = i * cols + j;
                let left = imul(&pivot, &grid[idx]);
                let val = if lead.is_empty() {
                    left
                } else {
                    isub(&left, &imul(&lead, &grid[pivot_row * cols + j]))
                };
                grid[idx] = if val.is_empty() {
                    Vec::new()
                } else if prev.len() == 1 && prev[0].is_one() {
                    val
                } else {
                    idiv_exact(&val, &prev)
                };
            }
            grid[i * cols + col] = Vec::new();
        }
        prev = pivot;
        pivot_cols.push(col);
        pivot_row += 1;
    }
    cert.rank = pivot_cols.len();
    cert.pivot_cols = pivot_cols;
    FractionFreeOutcome { grid, cert }
}

/// Fraction-free route for the scalar field. Returns `None` when some
/// entry has a nontrivial denominator; plain rational and polynomial
/// matrices are both handled.
pub fn fraction_free_rref(
    m: &mut Matrix<Scalar>,
    assumptions: &AssumptionSet,
) -> Option<RankCertificate> {
    let rows = m.rows();
    let cols = m.cols();
    if rows == 0 || cols == 0 {
        return None;
    }
    let mut var = String::new();
    let mut poly_rows: Vec<Vec<Poly>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for c in 0..cols {
            match &m[(r, c)] {
                Scalar::Rat(x) => row.push(Poly::constant(x.clone())),
                Scalar::Fun(f) if f.den.is_one() => {
                    if var.is_empty() {
                        var = f.num.var().to_string();
                    }
                    row.push(f.num.clone());
                }
                _ => return None,
            }
        }
        poly_rows.push(row);
    }
    let mut grid = Vec::with_capacity(rows * cols);
    for row in &poly_rows {
        grid.extend(clear_row(row));
    }
    let out = run_fraction_free(grid, rows, cols, &var, assumptions);
    for (k, &pc) in out.cert.pivot_cols.iter().enumerate() {
        let piv = ipoly_to_poly(&out.grid[k * cols + pc], &var);
        for j in 0..cols {
            let entry = &out.grid[k * cols + j];
            m[(k, j)] = if entry.is_empty() {
                Scalar::zero()
            } else {
                Scalar::from_fraction(ipoly_to_poly(entry, &var), piv.clone())
            };
        }
    }
    for r in out.cert.rank..rows {
        for j in 0..cols {
            debug_assert!(
                out.grid[r * cols + j].is_empty(),
                "dependent rows must vanish"
            );
            m[(r, j)] = Scalar::zero();
        }
    }
    Some(out.cert)
}

/// Fraction-free route for plain rational matrices (degree-zero
/// polynomials throughout).
pub fn fraction_free_rref_rational(
    m: &mut Matrix<Rational>,
    assumptions: &AssumptionSet,
) -> Option<RankCertificate> {
    let rows = m.rows();
    let cols = m.cols();
    if rows == 0 || cols == 0 {
        return None;
    }
    let mut grid = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let row: Vec<Poly> = (0..cols).map(|c| Poly::constant(m[(r, c)].clone())).collect();
        grid.extend(clear_row(&row));
    }
    let out = run_fraction_free(grid, rows, cols, "", assumptions);
    let to_int = |v: &IPoly| -> BigInt {
        debug_assert!(v.len() <= 1);
        v.first().cloned().unwrap_or_else(BigInt::zero)
    };
    for (k, &pc) in out.cert.pivot_cols.iter().enumerate() {
        let piv = to_int(&out.grid[k * cols + pc]);
        for j in 0..cols {
            m[(k, j)] = Rational::new(to_int(&out.grid[k * cols + j]), piv.clone());
        }
    }
    for r in out.cert.rank..rows {
        for j in 0..cols {
            m[(r, j)] = Rational::zero();
        }
    }
    Some(out.cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> Scalar {
        Scalar::parameter("lambda")
    }

    #[test]
    fn agrees_with_field_elimination() {
        // Deterministic pseudo-random polynomial matrices; the two
        // elimination routes must produce identical canonical forms.
        let mut rng = crate::rng::SplitMix64::new(99);
        let asn = AssumptionSet::empty();
        for rows in 1..=5usize {
            for cols in 1..=5usize {
                for _ in 0..8 {
                    let data: Vec<Scalar> = (0..rows * cols)
                        .map(|_| match rng.below(4) {
                            0 => Scalar::zero(),
                            1 => Scalar::from_int(rng.int_in(-3, 3)),
                            2 => lam() * Scalar::from_int(rng.int_in(-2, 2)),
                            _ => {
                                lam() * Scalar::from_int(rng.int_in(-2, 2))
                                    + Scalar::from_int(rng.int_in(-2, 2))
                            }
                        })
                        .collect();
                    let m = Matrix::new(rows, cols, data);
                    let mut a = m.clone();
                    let special =
                        fraction_free_rref(&mut a, &asn).expect("polynomial matrix");
                    let mut b = m.clone();
                    let generic = b.rref_generic_for_tests(&asn);
                    assert_eq!(a, b, "reduced forms differ");
                    assert_eq!(special.rank, generic.rank);
                    assert_eq!(special.pivot_cols, generic.pivot_cols);
                }
            }
        }
    }

    #[test]
    fn agrees_on_rational_matrices() {
        let mut rng = crate::rng::SplitMix64::new(7);
        let asn = AssumptionSet::empty();
        for _ in 0..30 {
            let rows = 1 + rng.below(5) as usize;
            let cols = 1 + rng.below(5) as usize;
            let data: Vec<Rational> = (0..rows * cols)
                .map(|_| {
                    Rational::new(BigInt::from(rng.int_in(-4, 4)), BigInt::from(rng.int_in(1, 3)))
                })
                .collect();
            let m = Matrix::new(rows, cols, data);
            let mut a = m.clone();
            let special = fraction_free_rref_rational(&mut a, &asn).expect("nonempty");
            let mut b = m.clone();
            let generic = b.rref_generic_for_tests(&asn);
            assert_eq!(a, b);
            assert_eq!(special.rank, generic.rank);
            assert_eq!(special.pivot_cols, generic.pivot_cols);
        }
    }

    #[test]
    fn declines_non_polynomial_matrices() {
        let inv = lam().try_inv().unwrap();
        let mut m = Matrix::from_rows(vec![vec![inv]]);
        assert!(fraction_free_rref(&mut m, &AssumptionSet::empty()).is_none());
    }

    #[test]
    fn exact_division_helper() {
        // (x^2 - 1) / (x - 1) = x + 1 in integer coefficients.
        let num: IPoly = vec![BigInt::from(-1), BigInt::zero(), BigInt::one()];
        let den: IPoly = vec![BigInt::from(-1), BigInt::one()];
        assert_eq!(idiv_exact(&num, &den), vec![BigInt::one(), BigInt::one()]);
    }
}
