//! Certified magic squares.

use std::fmt;

use crate::error::{Error, Line, Result};
use crate::grid::Grid;

/// A grid certified to be a magic square: the cells are a permutation of
/// `{1, ..., n^2}` and every row, every column, the main diagonal, and the
/// antidiagonal sum to the magic constant `n(n^2 + 1) / 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MagicSquare {
    grid: Grid,
}

impl MagicSquare {
    /// Certifies a grid as a magic square.
    pub fn certify(grid: Grid) -> Result<Self> {
        let n = grid.order();
        let max = (n * n) as i64;
        let mut seen = vec![false; n * n];
        for r in 0..n {
            for c in 0..n {
                let v = grid.get(r, c);
                if v < 1 || v > max {
                    return Err(Error::OutOfRange {
                        value: v,
                        row: r + 1,
                        col: c + 1,
                        max,
                    });
                }
                if seen[v as usize - 1] {
                    return Err(Error::DuplicateValue { value: v });
                }
                seen[v as usize - 1] = true;
            }
        }
        let expected = magic_constant(n);
        for r in 0..n {
            let sum: i64 = (0..n).map(|c| grid.get(r, c)).sum();
            if sum != expected {
                return Err(Error::MagicViolation {
                    line: Line::Row(r + 1),
                    sum,
                    expected,
                });
            }
        }
        for c in 0..n {
            let sum: i64 = (0..n).map(|r| grid.get(r, c)).sum();
            if sum != expected {
                return Err(Error::MagicViolation {
                    line: Line::Column(c + 1),
                    sum,
                    expected,
                });
            }
        }
        if grid.diag_sum() != expected {
            return Err(Error::MagicViolation {
                line: Line::Diagonal,
                sum: grid.diag_sum(),
                expected,
            });
        }
        if grid.antidiag_sum() != expected {
            return Err(Error::MagicViolation {
                line: Line::Antidiagonal,
                sum: grid.antidiag_sum(),
                expected,
            });
        }
        Ok(MagicSquare { grid })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        MagicSquare::certify(Grid::from_rows(rows)?)
    }

    pub fn order(&self) -> usize {
        self.grid.order()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.grid.get(row, col)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn into_grid(self) -> Grid {
        self.grid
    }

    /// The common line sum `n(n^2 + 1) / 2`.
    pub fn constant(&self) -> i64 {
        magic_constant(self.order())
    }
}

/// Magic constant of order `n`: `n(n^2 + 1) / 2`.
pub fn magic_constant(n: usize) -> i64 {
    let n = n as i64;
    n * (n * n + 1) / 2
}

impl fmt::Display for MagicSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.grid.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lo_shu_certifies_with_constant_15() {
        let m = MagicSquare::from_rows(vec![vec![4, 9, 2], vec![3, 5, 7], vec![8, 1, 6]]).unwrap();
        assert_eq!(m.constant(), 15);
    }

    #[test]
    fn row_sum_violation_names_the_line() {
        let err = MagicSquare::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap_err();
        assert_eq!(
            err,
            Error::MagicViolation {
                line: Line::Row(1),
                sum: 3,
                expected: 5
            }
        );
    }

    #[test]
    fn duplicates_and_range_are_rejected() {
        let dup = MagicSquare::from_rows(vec![vec![1, 1], vec![2, 2]]).unwrap_err();
        assert_eq!(dup, Error::DuplicateValue { value: 1 });
        let range = MagicSquare::from_rows(vec![vec![0, 1], vec![2, 3]]).unwrap_err();
        assert!(matches!(range, Error::OutOfRange { value: 0, .. }));
    }

    #[test]
    fn order_one_is_magic() {
        let m = MagicSquare::from_rows(vec![vec![1]]).unwrap();
        assert_eq!(m.constant(), 1);
    }
}
