//! Composition operators on Latin squares: the pairwise Kronecker product,
//! its integer-substituted form, and the cellwise pair-to-integer map used
//! for magic-square synthesis.

use crate::error::{Error, Result};
use crate::grid::{Grid, PairGrid};
use crate::latin::LatinSquare;

/// Kronecker product as a pair grid: block (i, j) of the result pairs
/// `a_ij` with every cell of `b`, so cell `(m(i-1)+s, m(j-1)+t)` holds
/// `(a_ij, b_st)` in 1-based coordinates.
pub fn kron_pairs(a: &LatinSquare, b: &LatinSquare) -> PairGrid {
    let n = a.order();
    let m = b.order();
    PairGrid::from_fn(n * m, |r, c| (a.get(r / m, c / m), b.get(r % m, c % m)))
}

/// Substituted Kronecker product: cell `(m(i-1)+s, m(j-1)+t)` holds
/// `m(a_ij - 1) + b_st`, flattening the pair-valued product to the symbols
/// `1..=nm`. The product of two Latin squares is again Latin.
pub fn subst_kron(a: &LatinSquare, b: &LatinSquare) -> LatinSquare {
    let n = a.order();
    let m = b.order();
    let grid = Grid::from_fn(n * m, |r, c| {
        m as i64 * (a.get(r / m, c / m) - 1) + b.get(r % m, c % m)
    });
    LatinSquare::certify(grid).expect("substituted Kronecker product of Latin squares is Latin")
}

/// Blows a square up to order n^2 by composing it with itself.
pub fn choi_type(a: &LatinSquare) -> LatinSquare {
    subst_kron(a, a)
}

/// Cellwise map `(a_ij, b_ij) -> n(a_ij - 1) + b_ij` over two same-order
/// squares. When the squares are orthogonal, the result's cells are a
/// permutation of `1..=n^2`; it is returned uncertified because its
/// diagonal sums need not be magic.
pub fn plus_s(a: &LatinSquare, b: &LatinSquare) -> Result<Grid> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let n = a.order();
    Ok(Grid::from_fn(n, |r, c| {
        n as i64 * (a.get(r, c) - 1) + b.get(r, c)
    }))
}
