//! Concrete square families: Choi Seok-Jeong's classical order-9 pair, the
//! order-3 seeds it factors into, circulant pairs for every odd order, a
//! recursive Kronecker family for orders divisible by four, and magic-square
//! synthesis from any pair this module produces.

use crate::compose::{plus_s, subst_kron};
use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::grid::{Grid, PairGrid};
use crate::latin::{superimpose, LatinSquare};
use crate::magic::MagicSquare;

/// A certified pair of orthogonal Latin squares whose main-diagonal and
/// antidiagonal sums both equal `n(n+1)/2` for each member.
///
/// That diagonal-sum condition is exactly what makes the cellwise
/// `n(a-1)+b` combination of the pair a magic square, even when neither
/// member is a diagonal Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalPair {
    first: LatinSquare,
    second: LatinSquare,
}

impl OrthogonalPair {
    /// Certifies the pair: same order, mutually orthogonal, and all four
    /// diagonal sums equal to `n(n+1)/2`.
    pub fn new(first: LatinSquare, second: LatinSquare) -> Result<Self> {
        if first.order() != second.order() {
            return Err(Error::OrderMismatch {
                left: first.order(),
                right: second.order(),
            });
        }
        if !first.is_orthogonal_to(&second)? {
            return Err(Error::Construction(
                "pair members are not orthogonal".into(),
            ));
        }
        let n = first.order() as i64;
        let want = n * (n + 1) / 2;
        for (name, square) in [("first", &first), ("second", &second)] {
            for (line, sum) in [
                ("main diagonal", square.grid().diag_sum()),
                ("antidiagonal", square.grid().antidiag_sum()),
            ] {
                if sum != want {
                    return Err(Error::Construction(format!(
                        "{name} member's {line} sums to {sum}, expected {want}"
                    )));
                }
            }
        }
        Ok(OrthogonalPair { first, second })
    }

    pub fn first(&self) -> &LatinSquare {
        &self.first
    }

    pub fn second(&self) -> &LatinSquare {
        &self.second
    }

    pub fn order(&self) -> usize {
        self.first.order()
    }
}

fn constant_square(rows: &[&[i64]]) -> LatinSquare {
    let grid = Grid::from_rows(rows.iter().map(|r| r.to_vec()).collect())
        .expect("built-in constant has consistent dimensions");
    LatinSquare::certify(grid).expect("built-in constant is a Latin square")
}

/// The first of Choi Seok-Jeong's order-9 Latin squares.
pub fn choi_l() -> LatinSquare {
    constant_square(&[
        &[5, 6, 4, 8, 9, 7, 2, 3, 1],
        &[4, 5, 6, 7, 8, 9, 1, 2, 3],
        &[6, 4, 5, 9, 7, 8, 3, 1, 2],
        &[2, 3, 1, 5, 6, 4, 8, 9, 7],
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        &[3, 1, 2, 6, 4, 5, 9, 7, 8],
        &[8, 9, 7, 2, 3, 1, 5, 6, 4],
        &[7, 8, 9, 1, 2, 3, 4, 5, 6],
        &[9, 7, 8, 3, 1, 2, 6, 4, 5],
    ])
}

/// The second of Choi Seok-Jeong's order-9 Latin squares — the mirror
/// image of the first across its middle column.
pub fn choi_n() -> LatinSquare {
    constant_square(&[
        &[1, 3, 2, 7, 9, 8, 4, 6, 5],
        &[3, 2, 1, 9, 8, 7, 6, 5, 4],
        &[2, 1, 3, 8, 7, 9, 5, 4, 6],
        &[7, 9, 8, 4, 6, 5, 1, 3, 2],
        &[9, 8, 7, 6, 5, 4, 3, 2, 1],
        &[8, 7, 9, 5, 4, 6, 2, 1, 3],
        &[4, 6, 5, 1, 3, 2, 7, 9, 8],
        &[6, 5, 4, 3, 2, 1, 9, 8, 7],
        &[5, 4, 6, 2, 1, 3, 8, 7, 9],
    ])
}

/// Choi's two squares superimposed: the classical order-9 Graeco-Latin
/// square.
pub fn choi_k() -> PairGrid {
    superimpose(&choi_l(), &choi_n()).expect("Choi's squares share order 9")
}

/// Order-3 seed whose self-composition produces [`choi_l`].
pub fn seed_a3() -> LatinSquare {
    constant_square(&[&[2, 3, 1], &[1, 2, 3], &[3, 1, 2]])
}

/// Order-3 seed whose self-composition produces [`choi_n`]; the vertical
/// mirror of [`seed_a3`].
pub fn seed_b3() -> LatinSquare {
    constant_square(&[&[1, 3, 2], &[3, 2, 1], &[2, 1, 3]])
}

/// Circulant Latin square of odd order n with every descending
/// (wrap-around) diagonal constant.
///
/// With k = (n+1)/2, the first row alternates the runs k, k-1, ..., 1 and
/// n, n-1, ..., k+1: even positions (0-based) hold k-t, odd positions hold
/// n-t. Row i is the first row rotated right by i. The main diagonal is
/// constant k and the antidiagonal covers every symbol once, so both sum
/// to n(n+1)/2 — while the square is deliberately not a diagonal Latin
/// square for n > 1.
pub fn circulant_odd(n: usize) -> Result<LatinSquare> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::Domain(format!(
            "circulant construction needs an odd order >= 3, got {n}"
        )));
    }
    let k = (n + 1) / 2;
    let mut first_row = vec![0i64; n];
    for t in 0..k {
        first_row[2 * t] = (k - t) as i64;
    }
    for t in 0..k - 1 {
        first_row[2 * t + 1] = (n - t) as i64;
    }
    let grid = Grid::from_fn(n, |i, j| first_row[(j + n - i) % n]);
    LatinSquare::certify(grid).map_err(|e| Error::Construction(format!("circulant: {e}")))
}

/// Orthogonal pair for any odd order n >= 3: the circulant square and its
/// vertical mirror.
pub fn odd_pair(n: usize) -> Result<OrthogonalPair> {
    let a = circulant_odd(n)?;
    let b = DihedralElement::S2.apply_latin(&a);
    OrthogonalPair::new(a, b)
}

/// Order-4 base square for the even-order family.
pub fn base_a1() -> LatinSquare {
    constant_square(&[&[1, 4, 3, 2], &[4, 1, 2, 3], &[2, 3, 4, 1], &[3, 2, 1, 4]])
}

/// Orthogonal mate of [`base_a1`].
pub fn base_a2() -> LatinSquare {
    constant_square(&[&[3, 1, 2, 4], &[4, 2, 1, 3], &[2, 4, 3, 1], &[1, 3, 4, 2]])
}

/// Order-8 base square for the even-order family.
pub fn base_b1() -> LatinSquare {
    constant_square(&[
        &[1, 5, 8, 4, 2, 6, 7, 3],
        &[3, 8, 5, 2, 4, 7, 6, 1],
        &[8, 3, 2, 5, 7, 4, 1, 6],
        &[6, 2, 3, 7, 5, 1, 4, 8],
        &[2, 6, 7, 3, 1, 5, 8, 4],
        &[4, 7, 6, 1, 3, 8, 5, 2],
        &[7, 4, 1, 6, 8, 3, 2, 5],
        &[5, 1, 4, 8, 6, 2, 3, 7],
    ])
}

/// Orthogonal mate of [`base_b1`].
pub fn base_b2() -> LatinSquare {
    constant_square(&[
        &[1, 4, 5, 8, 2, 6, 3, 7],
        &[4, 1, 8, 5, 6, 2, 7, 3],
        &[3, 8, 1, 6, 5, 7, 2, 4],
        &[8, 3, 6, 1, 7, 5, 4, 2],
        &[7, 5, 4, 2, 8, 3, 6, 1],
        &[5, 7, 2, 4, 3, 8, 1, 6],
        &[6, 2, 7, 3, 4, 1, 8, 5],
        &[2, 6, 3, 7, 1, 4, 5, 8],
    ])
}

fn unsupported(order: usize) -> Error {
    Error::UnsupportedOrder {
        order,
        reason: "only odd orders >= 3 and multiples of 4 are constructible; \
                 orders of the form 2r with r odd are excluded"
            .into(),
    }
}

/// Orthogonal pair for any order divisible by four.
///
/// Writes n = 2^p * t with t odd and p >= 2, builds the 2^p-order pair by
/// left-folding the substituted Kronecker product over the base pairs
/// (all order-4 factors when p is even, one leading order-8 factor when p
/// is odd), then composes with [`odd_pair`]`(t)` when t > 1. The result is
/// re-certified rather than trusted.
pub fn even_pair(n: usize) -> Result<OrthogonalPair> {
    if n < 4 || n % 4 != 0 {
        return Err(unsupported(n));
    }
    let mut t = n;
    let mut p = 0u32;
    while t % 2 == 0 {
        t /= 2;
        p += 1;
    }

    // factor word over {8, 4} for the power-of-two part
    let mut factors: Vec<usize> = Vec::new();
    let mut rem = p;
    if p % 2 == 1 {
        factors.push(8);
        rem -= 3;
    }
    while rem > 0 {
        factors.push(4);
        rem -= 2;
    }

    let base = |f: usize| -> (LatinSquare, LatinSquare) {
        match f {
            4 => (base_a1(), base_a2()),
            _ => (base_b1(), base_b2()),
        }
    };
    let mut acc = base(factors[0]);
    for &f in &factors[1..] {
        let (f1, f2) = base(f);
        acc = (subst_kron(&acc.0, &f1), subst_kron(&acc.1, &f2));
    }
    if t > 1 {
        let odd = odd_pair(t)?;
        acc = (
            subst_kron(&acc.0, odd.first()),
            subst_kron(&acc.1, odd.second()),
        );
    }
    OrthogonalPair::new(acc.0, acc.1)
}

/// Orthogonal pair with the magic diagonal-sum property for any supported
/// order: odd n >= 3 or n divisible by 4.
pub fn pair_for(n: usize) -> Result<OrthogonalPair> {
    if n >= 3 && n % 2 == 1 {
        odd_pair(n)
    } else if n >= 4 && n % 4 == 0 {
        even_pair(n)
    } else {
        Err(unsupported(n))
    }
}

/// Combines a certified pair into a magic square via the cellwise
/// `n(a-1)+b` map. Cannot fail for pairs produced by this module; the
/// certification is kept as a guard against transcription errors in the
/// base constants.
pub fn magic_from_pair(pair: &OrthogonalPair) -> Result<MagicSquare> {
    let combined = plus_s(pair.first(), pair.second())?;
    MagicSquare::certify(combined)
        .map_err(|e| Error::Construction(format!("combined pair is not magic: {e}")))
}

/// Magic square of any supported order.
pub fn magic(n: usize) -> Result<MagicSquare> {
    magic_from_pair(&pair_for(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::repeated_pairs;

    #[test]
    fn choi_constants_certify_and_align() {
        let l = choi_l();
        let n = choi_n();
        assert_eq!(l.grid().rows().next().unwrap(), &[5, 6, 4, 8, 9, 7, 2, 3, 1]);
        assert_eq!(n.grid().rows().next().unwrap(), &[1, 3, 2, 7, 9, 8, 4, 6, 5]);
        assert!(l.is_orthogonal_to(&n).unwrap());
        assert_eq!(choi_k().get(0, 0), (5, 1));
        assert_eq!(n, DihedralElement::S2.apply_latin(&l));
    }

    #[test]
    fn choi_squares_factor_into_the_seeds() {
        assert_eq!(subst_kron(&seed_a3(), &seed_a3()), choi_l());
        assert_eq!(subst_kron(&seed_b3(), &seed_b3()), choi_n());
    }

    #[test]
    fn choi_l_diagonal_structure() {
        let l = choi_l();
        assert_eq!(l.grid().diag_sum(), 45);
        assert_eq!(l.grid().antidiag_sum(), 45);
        // the main diagonal is constant, so the square is not diagonal
        assert!((0..9).all(|i| l.get(i, i) == 5));
        assert!(!l.is_diagonal());
    }

    #[test]
    fn seeds_are_mirror_orthogonal() {
        assert_eq!(seed_b3(), DihedralElement::S2.apply_latin(&seed_a3()));
        assert!(seed_a3().is_orthogonal_to(&seed_b3()).unwrap());
    }

    #[test]
    fn circulant_reproduces_the_order_3_seed() {
        assert_eq!(circulant_odd(3).unwrap(), seed_a3());
    }

    #[test]
    fn circulant_first_rows_and_corners() {
        let c5 = circulant_odd(5).unwrap();
        assert_eq!(c5.grid().rows().next().unwrap(), &[3, 5, 2, 4, 1]);
        // corner values of the first row: k, n, ..., k+1, 1
        for n in [3usize, 5, 7, 9, 11] {
            let k = (n + 1) as i64 / 2;
            let c = circulant_odd(n).unwrap();
            let row: Vec<i64> = c.grid().rows().next().unwrap().to_vec();
            assert_eq!(row[0], k);
            assert_eq!(row[1], n as i64);
            assert_eq!(row[n - 2], k + 1);
            assert_eq!(row[n - 1], 1);
        }
    }

    #[test]
    fn circulant_descending_diagonals_are_constant() {
        let c = circulant_odd(9).unwrap();
        let n = c.order();
        for r in 0..n {
            for col in 0..n {
                assert_eq!(c.get(r, col), c.get((r + 1) % n, (col + 1) % n));
            }
        }
        assert_eq!(c.grid().diag_sum(), 45);
        assert_eq!(c.grid().antidiag_sum(), 45);
    }

    #[test]
    fn circulant_rejects_bad_orders() {
        assert!(matches!(circulant_odd(4), Err(Error::Domain(_))));
        assert!(matches!(circulant_odd(1), Err(Error::Domain(_))));
    }

    #[test]
    fn odd_pair_3_is_the_seed_pair() {
        let p = odd_pair(3).unwrap();
        assert_eq!(p.first(), &seed_a3());
        assert_eq!(p.second(), &seed_b3());
        assert_eq!(pair_for(3).unwrap(), p);
    }

    #[test]
    fn odd_pair_members_verify() {
        let p = odd_pair(5).unwrap();
        assert!(p.first().is_orthogonal_to(p.second()).unwrap());
        assert!(repeated_pairs(p.first(), p.second()).unwrap().is_empty());
        let p9 = odd_pair(9).unwrap();
        for m in [p9.first(), p9.second()] {
            assert_eq!(m.grid().diag_sum(), 45);
            assert_eq!(m.grid().antidiag_sum(), 45);
        }
    }

    #[test]
    fn base_squares_match_their_transcriptions() {
        assert_eq!(base_a1().grid().rows().next().unwrap(), &[1, 4, 3, 2]);
        assert_eq!(base_b2().grid().rows().next().unwrap(), &[1, 4, 5, 8, 2, 6, 3, 7]);
        assert!(base_a1().is_orthogonal_to(&base_a2()).unwrap());
        assert!(base_b1().is_orthogonal_to(&base_b2()).unwrap());
        for s in [base_a1(), base_a2()] {
            assert_eq!(s.grid().diag_sum(), 10);
            assert_eq!(s.grid().antidiag_sum(), 10);
        }
        for s in [base_b1(), base_b2()] {
            assert_eq!(s.grid().diag_sum(), 36);
            assert_eq!(s.grid().antidiag_sum(), 36);
        }
    }

    #[test]
    fn even_pair_small_cases() {
        let p4 = even_pair(4).unwrap();
        assert_eq!((p4.first(), p4.second()), (&base_a1(), &base_a2()));
        let p8 = even_pair(8).unwrap();
        assert_eq!((p8.first(), p8.second()), (&base_b1(), &base_b2()));
    }

    #[test]
    fn even_pair_12_composes_the_order_4_and_order_3_pairs() {
        let p = even_pair(12).unwrap();
        let odd = odd_pair(3).unwrap();
        assert_eq!(p.first(), &subst_kron(&base_a1(), odd.first()));
        assert_eq!(p.second(), &subst_kron(&base_a2(), odd.second()));
        assert_eq!(p.first().grid().diag_sum(), 78);
        assert_eq!(p.second().grid().antidiag_sum(), 78);
    }

    #[test]
    fn unsupported_orders_are_rejected() {
        for n in [1usize, 2, 6, 10] {
            assert!(matches!(pair_for(n), Err(Error::UnsupportedOrder { order, .. }) if order == n));
        }
        assert!(even_pair(6).is_err());
        assert!(magic(6).is_err());
    }

    #[test]
    fn magic_small_orders() {
        let m3 = magic(3).unwrap();
        assert_eq!(
            m3.grid(),
            &Grid::from_rows(vec![vec![4, 9, 2], vec![3, 5, 7], vec![8, 1, 6]]).unwrap()
        );
        assert_eq!(magic(9).unwrap().constant(), 369);
        assert_eq!(magic(8).unwrap().constant(), 260);
        assert_eq!(magic(16).unwrap().constant(), 2056);
    }

    #[test]
    fn classical_pair_combines_into_the_order_9_magic_square() {
        let pair = OrthogonalPair::new(choi_l(), choi_n()).unwrap();
        let m = magic_from_pair(&pair).unwrap();
        assert_eq!(m.order(), 9);
        assert_eq!(m.constant(), 369);
        assert_eq!(m.get(0, 0), 37);
    }

    #[test]
    fn pair_for_9_has_constant_main_diagonal() {
        let p = pair_for(9).unwrap();
        for i in 0..9 {
            assert_eq!(p.first().get(i, i), 5);
        }
        assert!(!p.first().is_diagonal());
    }

    #[test]
    fn orthogonal_pair_rejects_bad_inputs() {
        // orthogonal but main diagonal sums are not n(n+1)/2
        let a = LatinSquare::from_rows(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]).unwrap();
        let b = LatinSquare::from_rows(vec![vec![3, 2, 1], vec![1, 3, 2], vec![2, 1, 3]]).unwrap();
        assert!(a.is_orthogonal_to(&b).unwrap());
        assert!(matches!(
            OrthogonalPair::new(a.clone(), b),
            Err(Error::Construction(_))
        ));
        // not orthogonal
        assert!(matches!(
            OrthogonalPair::new(a.clone(), a.clone()),
            Err(Error::Construction(_))
        ));
        // order mismatch
        let one = LatinSquare::from_rows(vec![vec![1]]).unwrap();
        assert!(matches!(
            OrthogonalPair::new(a, one),
            Err(Error::OrderMismatch { .. })
        ));
    }
}
