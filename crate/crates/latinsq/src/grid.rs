//! Raw square arrays: [`Grid`] for integer cells and [`PairGrid`] for
//! ordered-pair cells.
//!
//! A `Grid` places no restriction on its cell values; it is the substrate
//! that [`LatinSquare`](crate::LatinSquare) and
//! [`MagicSquare`](crate::MagicSquare) certify.

use std::fmt;

use crate::error::{Error, Result};

/// An n x n array of integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    order: usize,
    cells: Vec<i64>,
}

impl Grid {
    /// Builds a grid of the given order from rows of cells.
    ///
    /// Fails with a dimension error when the row count or any row length
    /// differs from `order`, or when `order` is zero.
    pub fn new(order: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("order must be positive".into()));
        }
        if rows.len() != order {
            return Err(Error::RowCount {
                expected: order,
                found: rows.len(),
            });
        }
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Dimension {
                    expected: order,
                    row: i + 1,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Ok(Grid { order, cells })
    }

    /// Builds a grid from rows, inferring the order from the row count.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let order = rows.len();
        Grid::new(order, rows)
    }

    /// Builds a grid by evaluating `f(row, col)` over 0-based coordinates.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        assert!(order > 0, "order must be positive");
        let mut cells = Vec::with_capacity(order * order);
        for r in 0..order {
            for c in 0..order {
                cells.push(f(r, c));
            }
        }
        Grid { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Cell at 0-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> i64 {
        assert!(row < self.order && col < self.order, "index out of bounds");
        self.cells[row * self.order + col]
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> &[i64] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.cells.chunks(self.order)
    }

    /// Sum of the main diagonal.
    pub fn diag_sum(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Sum of the antidiagonal.
    pub fn antidiag_sum(&self) -> i64 {
        let n = self.order;
        (0..n).map(|i| self.get(i, n - 1 - i)).sum()
    }
}

impl fmt::Display for Grid {
    /// Formats as the text grid format: one line per row, cells separated
    /// by single spaces, trailing newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for cell in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{cell}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An n x n array of ordered integer pairs — the shape of a
/// superimposition of two squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairGrid {
    order: usize,
    cells: Vec<(i64, i64)>,
}

impl PairGrid {
    pub fn new(order: usize, rows: Vec<Vec<(i64, i64)>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("order must be positive".into()));
        }
        if rows.len() != order {
            return Err(Error::RowCount {
                expected: order,
                found: rows.len(),
            });
        }
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Dimension {
                    expected: order,
                    row: i + 1,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Ok(PairGrid { order, cells })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> (i64, i64)) -> Self {
        assert!(order > 0, "order must be positive");
        let mut cells = Vec::with_capacity(order * order);
        for r in 0..order {
            for c in 0..order {
                cells.push(f(r, c));
            }
        }
        PairGrid { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Pair at 0-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> (i64, i64) {
        assert!(row < self.order && col < self.order, "index out of bounds");
        self.cells[row * self.order + col]
    }

    pub fn cells(&self) -> &[(i64, i64)] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[(i64, i64)]> {
        self.cells.chunks(self.order)
    }

    /// The grid of left components.
    pub fn left(&self) -> Grid {
        Grid::from_fn(self.order, |r, c| self.get(r, c).0)
    }

    /// The grid of right components.
    pub fn right(&self) -> Grid {
        Grid::from_fn(self.order, |r, c| self.get(r, c).1)
    }
}

impl fmt::Display for PairGrid {
    /// Text format for pair grids: tokens `a,b` separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for (a, b) in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{a},{b}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_checks_dimensions() {
        assert!(Grid::new(3, vec![vec![2, 3, 1], vec![1, 2, 3], vec![3, 1, 2]]).is_ok());
        assert!(Grid::new(1, vec![vec![1]]).is_ok());
        // ragged input
        let err = Grid::new(2, vec![vec![1, 2], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::Dimension { row: 2, found: 1, .. }));
        // wrong row count
        assert!(Grid::new(2, vec![vec![1, 2]]).is_err());
        assert!(Grid::new(0, vec![]).is_err());
    }

    #[test]
    fn diagonal_sums() {
        let g = Grid::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(g.diag_sum(), 5);
        assert_eq!(g.antidiag_sum(), 5);
        let one = Grid::from_rows(vec![vec![1]]).unwrap();
        assert_eq!(one.diag_sum(), 1);
        assert_eq!(one.antidiag_sum(), 1);
    }

    #[test]
    fn display_is_canonical_text() {
        let g = Grid::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(g.to_string(), "1 2\n3 4\n");
        let p = PairGrid::from_fn(1, |_, _| (5, 1));
        assert_eq!(p.to_string(), "5,1\n");
    }
}
