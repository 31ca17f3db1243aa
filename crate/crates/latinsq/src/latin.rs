//! Certified Latin squares and the orthogonality predicates.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Axis, Error, Result};
use crate::grid::{Grid, PairGrid};

/// A grid certified to be a Latin square: every row and every column is a
/// permutation of `{1, ..., n}`.
///
/// Values can only be obtained through [`LatinSquare::certify`], so the
/// invariant holds structurally and downstream operations never re-check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    grid: Grid,
}

impl LatinSquare {
    /// Certifies a grid as a Latin square.
    ///
    /// Reports the first offending cell for out-of-range entries and the
    /// first repeated symbol for row/column violations (1-based indices).
    pub fn certify(grid: Grid) -> Result<Self> {
        let n = grid.order();
        let max = n as i64;
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
            }
        }
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                let v = grid.get(r, c) as usize - 1;
                if seen[v] {
                    return Err(Error::LatinViolation {
                        axis: Axis::Row,
                        index: r + 1,
                        symbol: (v + 1) as i64,
                    });
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                let v = grid.get(r, c) as usize - 1;
                if seen[v] {
                    return Err(Error::LatinViolation {
                        axis: Axis::Column,
                        index: c + 1,
                        symbol: (v + 1) as i64,
                    });
                }
                seen[v] = true;
            }
        }
        Ok(LatinSquare { grid })
    }

    /// Convenience: build the grid and certify it in one step.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        LatinSquare::certify(Grid::from_rows(rows)?)
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

    /// True when both squares have the same order and their superimposition
    /// covers all n^2 ordered pairs.
    pub fn is_orthogonal_to(&self, other: &LatinSquare) -> Result<bool> {
        let n = check_same_order(self, other)?;
        // occupancy table over pairs; symbols are 1..=n by certification
        let mut seen = vec![false; n * n];
        for (&a, &b) in self.grid.cells().iter().zip(other.grid.cells()) {
            let slot = (a as usize - 1) * n + (b as usize - 1);
            if seen[slot] {
                return Ok(false);
            }
            seen[slot] = true;
        }
        Ok(true)
    }

    /// True when the main diagonal entries are pairwise distinct and the
    /// antidiagonal entries are pairwise distinct.
    pub fn is_diagonal(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        for i in 0..n {
            let v = self.get(i, i) as usize - 1;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen.fill(false);
        for i in 0..n {
            let v = self.get(i, n - 1 - i) as usize - 1;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.grid.fmt(f)
    }
}

fn check_same_order(a: &LatinSquare, b: &LatinSquare) -> Result<usize> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(a.order())
}

/// Superimposes `a` on `b`: cell (i, j) of the result is `(a_ij, b_ij)`.
pub fn superimpose(a: &LatinSquare, b: &LatinSquare) -> Result<PairGrid> {
    let n = check_same_order(a, b)?;
    Ok(PairGrid::from_fn(n, |r, c| (a.get(r, c), b.get(r, c))))
}

/// An ordered pair together with every 1-based (row, col) position where
/// it occurs in a superimposition.
pub type PairOccurrences = ((i64, i64), Vec<(usize, usize)>);

/// Every ordered pair occurring at two or more positions in the
/// superimposition of `a` on `b`, with all of its positions.
///
/// Positions are 1-based (row, col). Pairs are sorted ascending and
/// positions are in row-major order, so the output is deterministic.
/// The result is empty exactly when the squares are orthogonal.
pub fn repeated_pairs(a: &LatinSquare, b: &LatinSquare) -> Result<Vec<PairOccurrences>> {
    let n = check_same_order(a, b)?;
    let mut by_pair: BTreeMap<(i64, i64), Vec<(usize, usize)>> = BTreeMap::new();
    for r in 0..n {
        for c in 0..n {
            by_pair
                .entry((a.get(r, c), b.get(r, c)))
                .or_default()
                .push((r + 1, c + 1));
        }
    }
    Ok(by_pair
        .into_iter()
        .filter(|(_, positions)| positions.len() >= 2)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(rows: Vec<Vec<i64>>) -> LatinSquare {
        LatinSquare::from_rows(rows).unwrap()
    }

    #[test]
    fn certify_accepts_order_3_example() {
        let a = square(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
        assert_eq!(a.order(), 3);
    }

    #[test]
    fn certify_rejects_row_repeat() {
        let err = LatinSquare::from_rows(vec![vec![1, 1], vec![2, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::LatinViolation {
                axis: Axis::Row,
                index: 1,
                symbol: 1
            }
        );
    }

    #[test]
    fn certify_rejects_column_repeat() {
        // rows are fine, column 1 repeats 1
        let err = LatinSquare::from_rows(vec![vec![1, 2], vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            Error::LatinViolation {
                axis: Axis::Column,
                index: 1,
                symbol: 1
            }
        );
    }

    #[test]
    fn certify_rejects_out_of_range() {
        let err = LatinSquare::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRange {
                value: 0,
                row: 1,
                col: 1,
                max: 2
            }
        );
    }

    #[test]
    fn orthogonal_order_3_pair() {
        let a = square(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
        let b = square(vec![vec![3, 2, 1], vec![1, 3, 2], vec![2, 1, 3]]);
        assert!(a.is_orthogonal_to(&b).unwrap());
        assert!(b.is_orthogonal_to(&a).unwrap());
        assert!(repeated_pairs(&a, &b).unwrap().is_empty());
        let s = superimpose(&a, &b).unwrap();
        assert_eq!(s.get(0, 0), (1, 3));
    }

    #[test]
    fn self_pair_is_never_orthogonal_above_order_one() {
        let a = square(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
        assert!(!a.is_orthogonal_to(&a).unwrap());
        // order 1 is the degenerate exception: the single pair occurs once
        let one = square(vec![vec![1]]);
        assert!(one.is_orthogonal_to(&one).unwrap());
        assert_eq!(superimpose(&one, &one).unwrap().cells(), &[(1, 1)]);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = square(vec![vec![1, 2], vec![2, 1]]);
        let b = square(vec![vec![1]]);
        assert!(matches!(
            a.is_orthogonal_to(&b),
            Err(Error::OrderMismatch { left: 2, right: 1 })
        ));
        assert!(superimpose(&a, &b).is_err());
        assert!(repeated_pairs(&a, &b).is_err());
    }

    #[test]
    fn repeated_pairs_reports_positions() {
        let a = square(vec![vec![1, 2], vec![2, 1]]);
        let reps = repeated_pairs(&a, &a).unwrap();
        assert_eq!(
            reps,
            vec![
                ((1, 1), vec![(1, 1), (2, 2)]),
                ((2, 2), vec![(1, 2), (2, 1)]),
            ]
        );
    }

    #[test]
    fn diagonal_detection() {
        // main diagonal 1,3,2 distinct; antidiagonal 3,3.. not for this one
        let cyclic = square(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
        assert!(!cyclic.is_diagonal());
        let one = square(vec![vec![1]]);
        assert!(one.is_diagonal());
    }
}
