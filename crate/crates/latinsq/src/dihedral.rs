//! The eight symmetries of a square grid and their action on squares.
//!
//! Elements are named `r0..r3` (identity and counterclockwise rotations by
//! 90, 180, 270 degrees) and `s0..s3` (horizontal, main-diagonal, vertical,
//! and antidiagonal reflections). The action preserves Latin-ness, so the
//! eight images of a Latin square form its labeled orbit; [`orbit_report`]
//! analyzes which images are mutually orthogonal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::{Grid, PairGrid};
use crate::latin::LatinSquare;

/// One symmetry of the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DihedralElement {
    R0,
    R1,
    R2,
    R3,
    S0,
    S1,
    S2,
    S3,
}

use DihedralElement::*;

/// All eight elements in their fixed canonical order.
pub const ELEMENTS: [DihedralElement; 8] = [R0, R1, R2, R3, S0, S1, S2, S3];

/// Composition table: `COMPOSE[a][b]` is the element whose action equals
/// applying `a` first and then `b`.
const COMPOSE: [[DihedralElement; 8]; 8] = [
    [R0, R1, R2, R3, S0, S1, S2, S3],
    [R1, R2, R3, R0, S1, S2, S3, S0],
    [R2, R3, R0, R1, S2, S3, S0, S1],
    [R3, R0, R1, R2, S3, S0, S1, S2],
    [S0, S3, S2, S1, R0, R3, R2, R1],
    [S1, S0, S3, S2, R1, R0, R3, R2],
    [S2, S1, S0, S3, R2, R1, R0, R3],
    [S3, S2, S1, S0, R3, R2, R1, R0],
];

impl DihedralElement {
    /// Index in the canonical `r0..s3` order.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Lowercase tag: `"r0"` through `"s3"`.
    pub fn tag(self) -> &'static str {
        match self {
            R0 => "r0",
            R1 => "r1",
            R2 => "r2",
            R3 => "r3",
            S0 => "s0",
            S1 => "s1",
            S2 => "s2",
            S3 => "s3",
        }
    }

    /// Composes two symmetries: the result acts as `self` followed by
    /// `then`, i.e. `compose(a, b).apply(g) == b.apply(&a.apply(g))`.
    pub fn compose(self, then: DihedralElement) -> DihedralElement {
        COMPOSE[self.index()][then.index()]
    }

    /// Source coordinates (0-based) for the cell at (row, col) of the image.
    fn source(self, n: usize, row: usize, col: usize) -> (usize, usize) {
        let m = n - 1;
        match self {
            R0 => (row, col),
            R1 => (col, m - row),
            R2 => (m - row, m - col),
            R3 => (m - col, row),
            S0 => (m - row, col),
            S1 => (col, row),
            S2 => (row, m - col),
            S3 => (m - col, m - row),
        }
    }

    /// Applies the symmetry to a raw grid.
    pub fn apply(self, grid: &Grid) -> Grid {
        let n = grid.order();
        Grid::from_fn(n, |r, c| {
            let (sr, sc) = self.source(n, r, c);
            grid.get(sr, sc)
        })
    }

    /// Applies the symmetry to a pair grid.
    pub fn apply_pairs(self, grid: &PairGrid) -> PairGrid {
        let n = grid.order();
        PairGrid::from_fn(n, |r, c| {
            let (sr, sc) = self.source(n, r, c);
            grid.get(sr, sc)
        })
    }

    /// Applies the symmetry to a Latin square. The image of a Latin square
    /// is always Latin: rows and columns map onto rows or columns.
    pub fn apply_latin(self, square: &LatinSquare) -> LatinSquare {
        LatinSquare::certify(self.apply(square.grid()))
            .expect("symmetry image of a Latin square is Latin")
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for DihedralElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ELEMENTS
            .into_iter()
            .find(|e| e.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown symmetry tag {s:?}")))
    }
}

/// The labeled orbit: all eight images in canonical element order.
/// Duplicate images are retained with their labels.
pub fn orbit(square: &LatinSquare) -> [(DihedralElement, LatinSquare); 8] {
    std::array::from_fn(|i| {
        let sigma = ELEMENTS[i];
        (sigma, sigma.apply_latin(square))
    })
}

/// First non-identity symmetry whose image is orthogonal to the square,
/// scanning in canonical order; `None` when there is no such symmetry.
pub fn dihedral_witness(square: &LatinSquare) -> Option<DihedralElement> {
    ELEMENTS[1..].iter().copied().find(|&sigma| {
        square
            .is_orthogonal_to(&sigma.apply_latin(square))
            .expect("orbit images share the order")
    })
}

/// True when the square is orthogonal to at least one of its nontrivial
/// symmetry images.
pub fn is_dihedral(square: &LatinSquare) -> bool {
    dihedral_witness(square).is_some()
}

/// True when the square is orthogonal to its transpose (the `s1` image).
pub fn is_self_orthogonal(square: &LatinSquare) -> bool {
    square
        .is_orthogonal_to(&S1.apply_latin(square))
        .expect("transpose shares the order")
}

/// Orthogonality structure of a labeled orbit.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub base: LatinSquare,
    /// The eight labeled images, in canonical element order.
    pub images: [(DihedralElement, LatinSquare); 8],
    /// `orthogonality[i][j]` is true when image i and image j are
    /// orthogonal as squares. Symmetric, false on the diagonal.
    pub orthogonality: [[bool; 8]; 8],
    /// Largest number of pairwise-distinct, pairwise-orthogonal squares
    /// in the orbit.
    pub max_mols: usize,
    /// Every subset of labels attaining `max_mols`, each sorted in
    /// canonical element order. Subsets never contain two labels carrying
    /// identical grids, but the same set of grids may appear under several
    /// labelings when the orbit collapses.
    pub witnesses: Vec<Vec<DihedralElement>>,
}

impl OrbitReport {
    /// Labels whose image is orthogonal to the base square.
    pub fn orthogonal_to_base(&self) -> Vec<DihedralElement> {
        ELEMENTS[1..]
            .iter()
            .copied()
            .filter(|sigma| self.orthogonality[0][sigma.index()])
            .collect()
    }
}

/// Computes the full orbit orthogonality matrix, the maximum number of
/// mutually orthogonal distinct squares in the orbit, and every subset of
/// labels attaining it.
///
/// Identical images under different labels never count as an orthogonal
/// pair: the maximum is taken over distinct grids, each represented by its
/// first label. In particular the order-1 square reports `max_mols = 1`.
pub fn orbit_report(square: &LatinSquare) -> OrbitReport {
    let images = orbit(square);
    let mut orthogonality = [[false; 8]; 8];
    for i in 0..8 {
        for j in (i + 1)..8 {
            let orth = images[i]
                .1
                .is_orthogonal_to(&images[j].1)
                .expect("orbit images share the order");
            orthogonality[i][j] = orth;
            orthogonality[j][i] = orth;
        }
    }

    // exhaustive search over labeled subsets: members must be pairwise
    // orthogonal and pairwise distinct as grids
    let mut max_mols = 0;
    let mut best: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << 8) {
        let members: Vec<usize> = (0..8).filter(|b| mask & (1 << b) != 0).collect();
        let compatible = members.iter().enumerate().all(|(x, &i)| {
            members[x + 1..]
                .iter()
                .all(|&j| orthogonality[i][j] && images[i].1 != images[j].1)
        });
        if !compatible {
            continue;
        }
        match members.len().cmp(&max_mols) {
            std::cmp::Ordering::Greater => {
                max_mols = members.len();
                best = vec![mask];
            }
            std::cmp::Ordering::Equal => best.push(mask),
            std::cmp::Ordering::Less => {}
        }
    }
    let mut witnesses: Vec<Vec<DihedralElement>> = best
        .into_iter()
        .map(|mask| {
            (0..8)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| ELEMENTS[b])
                .collect()
        })
        .collect();
    witnesses.sort();

    OrbitReport {
        base: square.clone(),
        images,
        orthogonality,
        max_mols,
        witnesses,
    }
}
