//! Latin squares, their orthogonality, the dihedral symmetries of the
//! square, Kronecker-style composition, and magic-square synthesis from
//! orthogonal pairs — with exhaustive small-order enumeration to back it
//! all up.
//!
//! The central objects are certified: a [`LatinSquare`] or [`MagicSquare`]
//! can only be obtained by certifying a raw [`Grid`], so every downstream
//! operation can rely on the invariants without re-checking.
//!
//! ```
//! use latinsq::construct;
//!
//! let m = construct::magic(9).unwrap();
//! assert_eq!(m.constant(), 369);
//! ```

pub mod compose;
pub mod construct;
pub mod dihedral;
pub mod error;
pub mod grid;
pub mod io;
pub mod latin;
pub mod magic;
pub mod search;

pub use error::{Error, Result};
pub use grid::{Grid, PairGrid};
pub use latin::{repeated_pairs, superimpose, LatinSquare};
pub use magic::{magic_constant, MagicSquare};
