//! Exhaustive enumeration of small-order Latin squares and the brute-force
//! checks built on it.
//!
//! Enumeration is row-major backtracking with column-occupancy bitmasks,
//! capped at order 5 (161,280 squares). Order 6 has roughly 8 * 10^8
//! squares, far past what a per-square orbit analysis can cover.

use std::collections::BTreeMap;

use crate::dihedral::{orbit_report, DihedralElement};
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::latin::LatinSquare;

/// Largest order the enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 5;

/// Streams every Latin square of order `n` exactly once, in lexicographic
/// row-major order.
pub fn enumerate_latin(n: usize) -> Result<LatinEnumerator> {
    LatinEnumerator::new(n, false)
}

/// Streams the squares whose first row is `1, 2, ..., n`, in lexicographic
/// row-major order. The full count is this count times n!.
pub fn enumerate_reduced(n: usize) -> Result<LatinEnumerator> {
    LatinEnumerator::new(n, true)
}

/// Backtracking enumerator over the cells in row-major order, trying
/// symbols in ascending order at each cell.
#[derive(Debug, Clone)]
pub struct LatinEnumerator {
    n: usize,
    cells: Vec<i64>,
    /// next candidate symbol (1-based) to try at each depth
    next_symbol: Vec<u32>,
    row_mask: Vec<u32>,
    col_mask: Vec<u32>,
    cursor: usize,
    base_depth: usize,
    started: bool,
    done: bool,
}

impl LatinEnumerator {
    fn new(n: usize, reduced: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("order must be positive".into()));
        }
        if n > MAX_ENUM_ORDER {
            return Err(Error::Capacity {
                order: n,
                limit: MAX_ENUM_ORDER,
            });
        }
        let mut e = LatinEnumerator {
            n,
            cells: vec![0; n * n],
            next_symbol: vec![1; n * n + 1],
            row_mask: vec![0; n],
            col_mask: vec![0; n],
            cursor: 0,
            base_depth: 0,
            started: false,
            done: false,
        };
        if reduced {
            for c in 0..n {
                e.place(c, (c + 1) as u32);
            }
            e.base_depth = n;
            e.cursor = n;
        }
        Ok(e)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn place(&mut self, depth: usize, symbol: u32) {
        let bit = 1u32 << (symbol - 1);
        self.cells[depth] = symbol as i64;
        self.row_mask[depth / self.n] |= bit;
        self.col_mask[depth % self.n] |= bit;
    }

    fn unplace(&mut self, depth: usize) {
        let bit = 1u32 << (self.cells[depth] - 1);
        self.row_mask[depth / self.n] &= !bit;
        self.col_mask[depth % self.n] &= !bit;
        self.cells[depth] = 0;
    }

    fn snapshot(&self) -> LatinSquare {
        let n = self.n;
        let grid = Grid::from_fn(n, |r, c| self.cells[r * n + c]);
        LatinSquare::certify(grid).expect("enumerated square is Latin")
    }
}

impl Iterator for LatinEnumerator {
    type Item = LatinSquare;

    fn next(&mut self) -> Option<LatinSquare> {
        if self.done {
            return None;
        }
        let total = self.n * self.n;
        if !self.started {
            self.started = true;
        } else {
            // resume after a yield: retract the last placed cell
            if self.cursor == self.base_depth {
                self.done = true;
                return None;
            }
            self.cursor -= 1;
            self.unplace(self.cursor);
        }
        loop {
            if self.cursor == total {
                return Some(self.snapshot());
            }
            let r = self.cursor / self.n;
            let c = self.cursor % self.n;
            let used = self.row_mask[r] | self.col_mask[c];
            let mut symbol = self.next_symbol[self.cursor];
            let mut placed = false;
            while symbol as usize <= self.n {
                if used & (1 << (symbol - 1)) == 0 {
                    self.place(self.cursor, symbol);
                    self.next_symbol[self.cursor] = symbol + 1;
                    self.cursor += 1;
                    self.next_symbol[self.cursor] = 1;
                    placed = true;
                    break;
                }
                symbol += 1;
            }
            if !placed {
                if self.cursor == self.base_depth {
                    self.done = true;
                    return None;
                }
                self.cursor -= 1;
                self.unplace(self.cursor);
            }
        }
    }
}

/// True when no square of order `n` is orthogonal to its half-turn image.
/// A square fixed by the half turn is excluded as a self-pair, which only
/// matters for the degenerate order 1.
pub fn check_r2_lemma(n: usize) -> Result<bool> {
    for square in enumerate_latin(n)? {
        let image = DihedralElement::R2.apply_latin(&square);
        if image != square && square.is_orthogonal_to(&image)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when no even-order square of order `n` is orthogonal to its
/// horizontal or vertical reflection.
pub fn check_even_reflection_lemma(n: usize) -> Result<bool> {
    if n % 2 != 0 {
        return Err(Error::Domain(format!(
            "the reflection check applies to even orders, got {n}"
        )));
    }
    if n > 4 {
        return Err(Error::Capacity { order: n, limit: 4 });
    }
    for square in enumerate_latin(n)? {
        for sigma in [DihedralElement::S0, DihedralElement::S2] {
            let image = sigma.apply_latin(&square);
            if image != square && square.is_orthogonal_to(&image)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Aggregate orbit statistics over every Latin square of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub order: usize,
    pub total_squares: u64,
    /// Squares orthogonal to at least one nontrivial symmetry image.
    pub dihedral_count: u64,
    /// Squares orthogonal to their transpose.
    pub self_orthogonal_count: u64,
    /// Orbit max-MOLS value -> number of squares attaining it.
    pub max_mols_histogram: BTreeMap<usize, u64>,
}

impl CensusRow {
    /// Largest max-MOLS value observed.
    pub fn max_observed(&self) -> usize {
        self.max_mols_histogram.keys().copied().max().unwrap_or(0)
    }
}

/// Runs the orbit analysis on every square of order `n` and aggregates the
/// counts. Sequential and deterministic.
pub fn census(n: usize) -> Result<CensusRow> {
    let mut row = CensusRow {
        order: n,
        total_squares: 0,
        dihedral_count: 0,
        self_orthogonal_count: 0,
        max_mols_histogram: BTreeMap::new(),
    };
    for square in enumerate_latin(n)? {
        let report = orbit_report(&square);
        row.total_squares += 1;
        if (1..8).any(|k| report.orthogonality[0][k]) {
            row.dihedral_count += 1;
        }
        if report.orthogonality[0][DihedralElement::S1.index()] {
            row.self_orthogonal_count += 1;
        }
        *row.max_mols_histogram.entry(report.max_mols).or_insert(0) += 1;
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_sequence() {
        assert_eq!(enumerate_latin(1).unwrap().count(), 1);
        assert_eq!(enumerate_latin(2).unwrap().count(), 2);
        assert_eq!(enumerate_latin(3).unwrap().count(), 12);
        assert_eq!(enumerate_latin(4).unwrap().count(), 576);
    }

    #[test]
    fn reduced_counts_multiply_out() {
        // first-row-fixed count times n! gives the full count
        assert_eq!(enumerate_reduced(3).unwrap().count() * 6, 12);
        assert_eq!(enumerate_reduced(4).unwrap().count() * 24, 576);
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        let squares: Vec<Vec<i64>> = enumerate_latin(3)
            .unwrap()
            .map(|s| s.grid().cells().to_vec())
            .collect();
        let mut sorted = squares.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(squares, sorted);
        assert_eq!(
            squares[0],
            vec![1, 2, 3, 2, 3, 1, 3, 1, 2],
            "first square in lexicographic order"
        );
    }

    #[test]
    fn capacity_and_domain_errors() {
        assert!(matches!(
            enumerate_latin(6),
            Err(Error::Capacity { order: 6, limit: 5 })
        ));
        assert!(enumerate_latin(0).is_err());
        assert!(matches!(check_even_reflection_lemma(3), Err(Error::Domain(_))));
        assert!(matches!(
            check_even_reflection_lemma(6),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn lemma_checks_hold_on_small_orders() {
        assert!(check_r2_lemma(1).unwrap());
        assert!(check_r2_lemma(2).unwrap());
        assert!(check_r2_lemma(3).unwrap());
        assert!(check_even_reflection_lemma(2).unwrap());
    }

    #[test]
    fn census_totals_are_consistent() {
        let row = census(3).unwrap();
        assert_eq!(row.total_squares, 12);
        assert_eq!(
            row.max_mols_histogram.values().sum::<u64>(),
            row.total_squares
        );
        assert!(row.max_observed() <= 4);
        // census is deterministic
        assert_eq!(census(3).unwrap(), row);
    }

    #[test]
    fn census_degenerate_orders() {
        let one = census(1).unwrap();
        assert_eq!(one.total_squares, 1);
        assert_eq!(one.max_observed(), 1);
        let two = census(2).unwrap();
        assert_eq!(two.total_squares, 2);
        assert!(two.max_observed() <= 2);
        assert_eq!(two.self_orthogonal_count, 0);
    }
}
