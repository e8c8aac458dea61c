//! Parametric matrix views of endomorphism spaces.
//!
//! A canonical basis assigns one free symbol per basis vector, named after
//! the vector's pivot coordinate: the general member of the space is the
//! linear combination of basis matrices with those symbols as weights.
//! The column convention displays the transpose, with symbols renamed to
//! their displayed positions; classification tables are usually typeset
//! that way.

use std::fmt;



use crate::scalar::Scalar;

use super::EndoSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Row,
    Column,
}

impl Convention {
    pub fn name(&self) -> &'static str {
        match self {
            Convention::Row => "row",
            Convention::Column => "column",
        }
    }

    pub fn from_name(name: &str) -> Option<Convention> {
        match name {
            "row" => Some(Convention::Row),
            "column" => Some(Convention::Column),
            _ => None,
        }
    }
}

/// One linear expression in the free symbols.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinExpr {
    /// `(symbol, coefficient)` pairs in basis order; empty means zero.
    pub terms: Vec<(String, Scalar)>,
}

impl LinExpr {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (sym, c) in &self.terms {
            let (neg, body) = render_term(sym, c);
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
            write!(f, "{}", body)?;
        }
        Ok(())
    }
}

fn render_term(sym: &str, c: &Scalar) -> (bool, String) {
    if c.is_one() {
        return (false, sym.to_string());
    }
    if (-c.clone()).is_one() {
        return (true, sym.to_string());
    }
    let s = c.to_string();
    if let Some(stripped) = s.strip_prefix('-') {
        if !stripped.contains(' ') {
            return (true, format!("{}*{}", stripped, sym));
        }
    }
    if s.contains(' ') {
        (false, format!("({})*{}", s, sym))
    } else {
        (false, format!("{}*{}", s, sym))
    }
}

/// The general member of an endomorphism space, as a grid of linear
/// expressions in free symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricMatrixView {
    pub n: usize,
    pub convention: Convention,
    pub symbols: Vec<String>,
    pub cells: Vec<Vec<LinExpr>>,
}

impl ParametricMatrixView {
    /// Zero/nonzero mask of the cells.
    pub fn nonzero_mask(&self) -> Vec<Vec<bool>> {
        self.cells
            .iter()
            .map(|row| row.iter().map(|c| !c.is_zero()).collect())
            .collect()
    }
}

impl fmt::Display for ParametricMatrixView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
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

/// Renders the space with free symbols at the free coordinates of the
/// canonical basis. In row convention the symbol for pivot coordinate
/// `(i, t)` is `a<i><t>` placed so that row `i` is the image of the `i`-th
/// basis element; the column convention transposes the display and renames
/// symbols to their displayed positions.
pub fn render_parametric(space: &EndoSpace, convention: Convention) -> ParametricMatrixView {
    let n = space.n;
    let pivots = space.space.pivot_cols();
    let display_pos = |coord: usize| -> (usize, usize) {
        let i = coord / n;
        let t = coord % n;
        match convention {
            Convention::Row => (i, t),
            Convention::Column => (t, i),
        }
    };
    let symbols: Vec<String> = pivots
        .iter()
        .map(|&p| {
            let (r, c) = display_pos(p);
            format!("a{}{}", r + 1, c + 1)
        })
        .collect();
    let mut cells = vec![vec![LinExpr::default(); n]; n];
    for (s, vec) in space.space.rows().iter().enumerate() {
        for (coord, value) in vec.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let (r, c) = display_pos(coord);
            cells[r][c].terms.push((symbols[s].clone(), value.clone()));
        }
    }
    ParametricMatrixView { n, convention, symbols, cells }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::invariants::cd_equational;
    use crate::linalg::SubspaceBasis;

    fn z2_1() -> AlgebraSpec {
        let mut a = AlgebraSpec::new("Z2_1", 2);
        a.set_product(0, 0, vec![Scalar::zero(), Scalar::one()]);
        a
    }

    #[test]
    fn cd_of_z2_1_row_and_column() {
        let (cd, _) = cd_equational(&z2_1());
        let row = render_parametric(&cd, Convention::Row);
        assert_eq!(row.symbols, vec!["a12"]);
        assert!(!row.cells[0][1].is_zero());
        assert!(row.cells[1][0].is_zero());
        let col = render_parametric(&cd, Convention::Column);
        assert_eq!(col.symbols, vec!["a21"]);
        assert!(!col.cells[1][0].is_zero());
        assert!(col.cells[0][1].is_zero());
        assert_eq!(col.cells[1][0].to_string(), "a21");
    }

    #[test]
    fn zero_space_renders_blank() {
        let space = EndoSpace { n: 2, space: SubspaceBasis::zero(4) };
        let view = render_parametric(&space, Convention::Column);
        assert!(view.symbols.is_empty());
        assert!(view.cells.iter().flatten().all(|c| c.is_zero()));
    }
}
