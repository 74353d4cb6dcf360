//! Skew-symmetric matrices, Pfaffians, and division-free determinants.
//!
//! The Pfaffian of a `2d x 2d` skew-symmetric matrix `A` is defined by the
//! recursion
//!
//! ```text
//! Pf(A) = a_{12}                                     if d = 1,
//! Pf(A) = sum_{j=2}^{2d} (-1)^j a_{1j} Pf(A^{[1,j]})  otherwise,
//! ```
//!
//! where `A^{[1,j]}` deletes rows and columns 1 and `j`, and `Pf` of the
//! empty matrix is one so the base case folds into the sum. Expansion is
//! always along the first surviving row, with no pivoting, so results are
//! deterministic. Both the Pfaffian and the determinant here are
//! division-free and therefore valid over any commutative ring with 1;
//! the naive recursion touches `(2d-1)!!` leaves, so [`SkewMatrix::pfaffian`]
//! memoizes on the set of surviving indices (at most `2^{2d}` subproblems)
//! and the determinant memoizes Laplace expansion over column subsets.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

/// Largest supported matrix size; index subsets are tracked in a `u64`
/// bitmask, and exact expansion is exponential in the size anyway.
pub const MAX_SIZE: usize = 64;

/// A skew-symmetric matrix with zero diagonal, stored as its strict upper
/// triangle. Indices are 1-based throughout, matching the usual notation
/// `a_{ij}`. Reading `entry(j, i)` for `i < j` yields the negation, which
/// enforces skew-symmetry with zero diagonal over every ring, including
/// characteristic 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    ring: Ring,
    size: usize,
    upper: BTreeMap<(usize, usize), Element>,
}

impl SkewMatrix {
    /// Builds a matrix from strict-upper entries `((i, j), value)` with
    /// `1 <= i < j <= size`. Zero values are dropped.
    pub fn from_upper(
        ring: Ring,
        size: usize,
        entries: impl IntoIterator<Item = ((usize, usize), Element)>,
    ) -> Result<SkewMatrix> {
        if !size.is_multiple_of(2) {
            return Err(Error::ShapeError(format!(
                "skew matrix size must be even, got {size}"
            )));
        }
        if size > MAX_SIZE {
            return Err(Error::ShapeError(format!(
                "size {size} exceeds the supported maximum {MAX_SIZE}"
            )));
        }
        let mut upper = BTreeMap::new();
        for ((i, j), v) in entries {
            if !(1 <= i && i < j && j <= size) {
                return Err(Error::IndexError(format!(
                    "({i},{j}) is not a strict upper-triangle position of a {size}x{size} matrix"
                )));
            }
            if !ring.contains(&v) {
                return Err(Error::RingMismatch(format!(
                    "entry ({i},{j}) does not belong to {ring}"
                )));
            }
            if ring.is_zero(&v) {
                continue;
            }
            if upper.insert((i, j), v).is_some() {
                return Err(Error::IndexError(format!("duplicate entry at ({i},{j})")));
            }
        }
        Ok(SkewMatrix { ring, size, upper })
    }

    /// The zero matrix of the given even size.
    pub fn zero(ring: Ring, size: usize) -> Result<SkewMatrix> {
        SkewMatrix::from_upper(ring, size, std::iter::empty())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Stored strict-upper entries, ascending by (row, column).
    pub fn upper_entries(&self) -> impl Iterator<Item = (&(usize, usize), &Element)> {
        self.upper.iter()
    }

    /// The `(i, j)` entry, 1-based, anywhere in the matrix.
    pub fn entry(&self, i: usize, j: usize) -> Element {
        assert!(
            1 <= i && i <= self.size && 1 <= j && j <= self.size,
            "index ({i},{j}) out of range for size {}",
            self.size
        );
        if i == j {
            self.ring.zero()
        } else if i < j {
            self.upper
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| self.ring.zero())
        } else {
            let e = self.entry(j, i);
            self.ring.neg(&e)
        }
    }

    /// Applies a function to every stored entry; zero results are dropped.
    pub fn map_entries(&self, mut f: impl FnMut(&Element) -> Element) -> SkewMatrix {
        let upper = self
            .upper
            .iter()
            .map(|(&ij, v)| (ij, f(v)))
            .filter(|(_, v)| !self.ring.is_zero(v))
            .collect();
        SkewMatrix {
            ring: self.ring.clone(),
            size: self.size,
            upper,
        }
    }

    /// The matrix scaled entrywise by `c`.
    pub fn scale(&self, c: &Element) -> SkewMatrix {
        self.map_entries(|v| self.ring.mul(c, v))
    }

    /// Deletes rows and columns `i` and `j` (1-based, distinct), re-packing
    /// the remaining indices in order. This is `A^[i,j]` of the recursion.
    pub fn delete_rows_cols(&self, i: usize, j: usize) -> Result<SkewMatrix> {
        if i == j || !(1 <= i && i <= self.size) || !(1 <= j && j <= self.size) {
            return Err(Error::IndexError(format!(
                "cannot delete rows/columns ({i},{j}) of a {0}x{0} matrix",
                self.size
            )));
        }
        let survivors: Vec<usize> = (1..=self.size).filter(|&k| k != i && k != j).collect();
        let rank = |k: usize| survivors.iter().position(|&s| s == k).map(|p| p + 1);
        let upper = self
            .upper
            .iter()
            .filter_map(|(&(r, c), v)| Some(((rank(r)?, rank(c)?), v.clone())))
            .collect();
        Ok(SkewMatrix {
            ring: self.ring.clone(),
            size: self.size - 2,
            upper,
        })
    }

    /// The Pfaffian, memoized on the bitmask of surviving 1-based indices
    /// (bit `k` stands for index `k+1`).
    pub fn pfaffian(&self) -> Element {
        let full: u64 = if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        };
        let mut memo: HashMap<u64, Element> = HashMap::new();
        self.pf_masked(full, &mut memo)
    }

    fn pf_masked(&self, mask: u64, memo: &mut HashMap<u64, Element>) -> Element {
        if mask == 0 {
            return self.ring.one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << first);
        let mut acc = self.ring.zero();
        let mut pos = 0usize;
        let mut scan = rest;
        while scan != 0 {
            let j = scan.trailing_zeros() as usize;
            scan &= !(1u64 << j);
            pos += 1;
            // `j` is the (pos+1)-th surviving index, so the sign from
            // (-1)^(column) is + exactly when pos is odd.
            let e = self.entry(first + 1, j + 1);
            if self.ring.is_zero(&e) {
                continue;
            }
            let sub = self.pf_masked(rest & !(1u64 << j), memo);
            let term = self.ring.mul(&e, &sub);
            acc = if pos % 2 == 1 {
                self.ring.add(&acc, &term)
            } else {
                self.ring.sub(&acc, &term)
            };
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// The Pfaffian by the literal recursion, materializing each submatrix.
    /// Exponentially slower than [`SkewMatrix::pfaffian`]; kept as an
    /// independent oracle for tests.
    pub fn pfaffian_direct(&self) -> Element {
        if self.size == 0 {
            return self.ring.one();
        }
        let mut acc = self.ring.zero();
        for j in 2..=self.size {
            let e = self.entry(1, j);
            if self.ring.is_zero(&e) {
                continue;
            }
            let sub = self
                .delete_rows_cols(1, j)
                .expect("indices in range")
                .pfaffian_direct();
            let term = self.ring.mul(&e, &sub);
            acc = if j % 2 == 0 {
                self.ring.add(&acc, &term)
            } else {
                self.ring.sub(&acc, &term)
            };
        }
        acc
    }

    /// The full square form, for determinants and products.
    pub fn to_square(&self) -> SquareMatrix {
        let rows = (1..=self.size)
            .map(|i| (1..=self.size).map(|j| self.entry(i, j)).collect())
            .collect();
        SquareMatrix {
            ring: self.ring.clone(),
            size: self.size,
            rows,
        }
    }

    /// The determinant, computed independently of the Pfaffian (division-free
    /// memoized Laplace expansion). `det(A) = Pf(A)^2` is a theorem, not an
    /// implementation shortcut, so this is a meaningful cross-check.
    pub fn determinant(&self) -> Element {
        self.to_square().determinant()
    }
}

/// A dense square matrix over a ring; used for congruence transforms
/// `X A X^t` and determinant cross-checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    ring: Ring,
    size: usize,
    rows: Vec<Vec<Element>>,
}

impl SquareMatrix {
    pub fn new(ring: Ring, rows: Vec<Vec<Element>>) -> Result<SquareMatrix> {
        let size = rows.len();
        if size > MAX_SIZE {
            return Err(Error::ShapeError(format!(
                "size {size} exceeds the supported maximum {MAX_SIZE}"
            )));
        }
        for row in &rows {
            if row.len() != size {
                return Err(Error::ShapeError(format!(
                    "row of length {} in a {size}x{size} matrix",
                    row.len()
                )));
            }
            for v in row {
                if !ring.contains(v) {
                    return Err(Error::RingMismatch(format!(
                        "matrix entry does not belong to {ring}"
                    )));
                }
            }
        }
        Ok(SquareMatrix { ring, size, rows })
    }

    pub fn identity(ring: Ring, size: usize) -> SquareMatrix {
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { ring.one() } else { ring.zero() })
                    .collect()
            })
            .collect();
        SquareMatrix { ring, size, rows }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The `(i, j)` entry, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.rows[i - 1][j - 1]
    }

    pub fn transpose(&self) -> SquareMatrix {
        let rows = (0..self.size)
            .map(|i| (0..self.size).map(|j| self.rows[j][i].clone()).collect())
            .collect();
        SquareMatrix {
            ring: self.ring.clone(),
            size: self.size,
            rows,
        }
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                "matrix product over different rings".into(),
            ));
        }
        if self.size != other.size {
            return Err(Error::ShapeError(format!(
                "matrix product of sizes {} and {}",
                self.size, other.size
            )));
        }
        let rows = (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| {
                        let mut acc = self.ring.zero();
                        for k in 0..self.size {
                            let p = self.ring.mul(&self.rows[i][k], &other.rows[k][j]);
                            acc = self.ring.add(&acc, &p);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(SquareMatrix {
            ring: self.ring.clone(),
            size: self.size,
            rows,
        })
    }

    /// Division-free determinant: Laplace expansion along the topmost
    /// remaining row, memoized on the set of remaining columns (the row is
    /// determined by how many columns remain, so the mask is a full key).
    pub fn determinant(&self) -> Element {
        let full: u64 = if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        };
        let mut memo: HashMap<u64, Element> = HashMap::new();
        self.det_masked(0, full, &mut memo)
    }

    fn det_masked(&self, row: usize, mask: u64, memo: &mut HashMap<u64, Element>) -> Element {
        if mask == 0 {
            return self.ring.one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = self.ring.zero();
        let mut pos = 0usize;
        let mut scan = mask;
        while scan != 0 {
            let c = scan.trailing_zeros() as usize;
            scan &= !(1u64 << c);
            pos += 1;
            let e = &self.rows[row][c];
            if self.ring.is_zero(e) {
                continue;
            }
            let sub = self.det_masked(row + 1, mask & !(1u64 << c), memo);
            let term = self.ring.mul(e, &sub);
            acc = if pos % 2 == 1 {
                self.ring.add(&acc, &term)
            } else {
                self.ring.sub(&acc, &term)
            };
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

/// The congruence transform `X A X^t`, reassembled as a [`SkewMatrix`].
///
/// Skew-symmetry of the product is a theorem; the implementation reads only
/// the strict upper triangle of the product and asserts that the diagonal
/// and the reflected lower triangle agree with it.
pub fn congruence(x: &SquareMatrix, a: &SkewMatrix) -> Result<SkewMatrix> {
    if x.ring() != a.ring() {
        return Err(Error::RingMismatch(
            "congruence transform over different rings".into(),
        ));
    }
    if x.size() != a.size() {
        return Err(Error::ShapeError(format!(
            "congruence of a {}x{} transform with a {}x{} matrix",
            x.size(),
            x.size(),
            a.size(),
            a.size()
        )));
    }
    let ring = a.ring().clone();
    let product = x.mul(&a.to_square())?.mul(&x.transpose())?;
    let mut upper = Vec::new();
    for i in 1..=a.size() {
        assert!(
            ring.is_zero(product.entry(i, i)),
            "congruence product has a nonzero diagonal entry; this is a bug"
        );
        for j in (i + 1)..=a.size() {
            let v = product.entry(i, j).clone();
            assert!(
                ring.neg(&v) == *product.entry(j, i),
                "congruence product is not skew-symmetric; this is a bug"
            );
            upper.push(((i, j), v));
        }
    }
    SkewMatrix::from_upper(ring, a.size(), upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::sample::Sampler;

    fn int() -> Ring {
        Ring::integers()
    }

    fn int_skew(size: usize, entries: &[(usize, usize, i64)]) -> SkewMatrix {
        SkewMatrix::from_upper(
            int(),
            size,
            entries
                .iter()
                .map(|&(i, j, v)| ((i, j), int().embed_int(v))),
        )
        .unwrap()
    }

    #[test]
    fn size_two_pfaffian_is_the_single_entry() {
        let a = int_skew(2, &[(1, 2, 5)]);
        assert_eq!(a.pfaffian(), int().embed_int(5));
    }

    #[test]
    fn empty_matrix_has_pfaffian_zero() {
        let a = SkewMatrix::zero(int(), 4).unwrap();
        assert_eq!(a.pfaffian(), int().zero());
    }

    #[test]
    fn zero_size_pfaffian_is_one() {
        let a = SkewMatrix::zero(int(), 0).unwrap();
        assert_eq!(a.pfaffian(), int().one());
        assert_eq!(a.pfaffian_direct(), int().one());
        assert_eq!(a.determinant(), int().one());
    }

    #[test]
    fn four_by_four_integer_instance() {
        // 2*5 - 3*7 + 1*4 = -7
        let a = int_skew(
            4,
            &[
                (1, 2, 2),
                (1, 3, 3),
                (1, 4, 1),
                (2, 3, 4),
                (2, 4, 7),
                (3, 4, 5),
            ],
        );
        assert_eq!(a.pfaffian(), int().embed_int(-7));
        assert_eq!(a.pfaffian_direct(), int().embed_int(-7));
    }

    #[test]
    fn four_by_four_generic_symbolic_formula() {
        let names = ["a12", "a13", "a14", "a23", "a24", "a34"];
        let ring = Ring::polynomial(int(), names).unwrap();
        let p = ring.as_poly().unwrap();
        let var = |n: &str| Element::Poly(p.resolve_var(n).unwrap());
        let a = SkewMatrix::from_upper(
            ring.clone(),
            4,
            [
                ((1, 2), var("a12")),
                ((1, 3), var("a13")),
                ((1, 4), var("a14")),
                ((2, 3), var("a23")),
                ((2, 4), var("a24")),
                ((3, 4), var("a34")),
            ],
        )
        .unwrap();
        let expected = MultiPoly::parse(p, "a12*a34 - a13*a24 + a14*a23").unwrap();
        assert_eq!(a.pfaffian(), Element::Poly(expected));
    }

    #[test]
    fn block_diagonal_pfaffian_multiplies() {
        let a = int_skew(4, &[(1, 2, 6), (3, 4, 7)]);
        assert_eq!(a.pfaffian(), int().embed_int(42));
    }

    #[test]
    fn entry_reflection_and_diagonal() {
        let a = int_skew(4, &[(1, 3, 9)]);
        assert_eq!(a.entry(1, 3), int().embed_int(9));
        assert_eq!(a.entry(3, 1), int().embed_int(-9));
        assert_eq!(a.entry(2, 2), int().zero());
        assert_eq!(a.entry(2, 4), int().zero());
    }

    #[test]
    fn from_upper_rejects_bad_shapes_and_indices() {
        let err = SkewMatrix::from_upper(int(), 3, std::iter::empty()).unwrap_err();
        assert!(matches!(err, Error::ShapeError(_)));
        let err = SkewMatrix::from_upper(int(), 4, [((2, 1), int().one())]).unwrap_err();
        assert!(matches!(err, Error::IndexError(_)));
        let err = SkewMatrix::from_upper(int(), 4, [((1, 5), int().one())]).unwrap_err();
        assert!(matches!(err, Error::IndexError(_)));
        let err = SkewMatrix::from_upper(int(), 4, [((1, 2), int().one()), ((1, 2), int().one())])
            .unwrap_err();
        assert!(matches!(err, Error::IndexError(_)));
        let err = SkewMatrix::from_upper(int(), 66, std::iter::empty()).unwrap_err();
        assert!(matches!(err, Error::ShapeError(_)));
    }

    #[test]
    fn deletion_repacks_indices() {
        let a = int_skew(
            4,
            &[
                (1, 2, 2),
                (1, 3, 3),
                (1, 4, 1),
                (2, 3, 4),
                (2, 4, 7),
                (3, 4, 5),
            ],
        );
        // Deleting (1,2) leaves original indices {3,4}: Pf = a34.
        let b = a.delete_rows_cols(1, 2).unwrap();
        assert_eq!(b.size(), 2);
        assert_eq!(b.pfaffian(), int().embed_int(5));
        // Deleting (1,4) leaves {2,3}: Pf = a23.
        let c = a.delete_rows_cols(1, 4).unwrap();
        assert_eq!(c.pfaffian(), int().embed_int(4));
        // Order of the pair does not matter.
        assert_eq!(a.delete_rows_cols(4, 1).unwrap(), c);
        // Down to the empty matrix.
        let d = b.delete_rows_cols(1, 2).unwrap();
        assert_eq!(d.size(), 0);
        assert_eq!(d.pfaffian(), int().one());
        assert!(matches!(
            a.delete_rows_cols(2, 2),
            Err(Error::IndexError(_))
        ));
        assert!(matches!(
            a.delete_rows_cols(0, 2),
            Err(Error::IndexError(_))
        ));
    }

    #[test]
    fn memoized_and_direct_pfaffian_agree() {
        let mut s = Sampler::new(7);
        for size in [2usize, 4, 6, 8] {
            for _ in 0..10 {
                let a = s.skew(&int(), size);
                assert_eq!(a.pfaffian(), a.pfaffian_direct());
            }
        }
    }

    #[test]
    fn determinant_is_pfaffian_squared() {
        let mut s = Sampler::new(11);
        for ring in [int(), Ring::rationals(), Ring::modular(6).unwrap()] {
            for size in [2usize, 4, 6, 8, 10] {
                for _ in 0..50 {
                    let a = s.skew(&ring, size);
                    let pf = a.pfaffian();
                    assert_eq!(a.determinant(), ring.mul(&pf, &pf));
                }
            }
        }
    }

    #[test]
    fn determinant_matches_small_hand_formulas() {
        let ring = int();
        let m = SquareMatrix::new(
            ring.clone(),
            vec![
                vec![ring.embed_int(3), ring.embed_int(5)],
                vec![ring.embed_int(2), ring.embed_int(7)],
            ],
        )
        .unwrap();
        assert_eq!(m.determinant(), ring.embed_int(11));
        let m = SquareMatrix::new(
            ring.clone(),
            vec![
                vec![ring.embed_int(1), ring.embed_int(2), ring.embed_int(3)],
                vec![ring.embed_int(4), ring.embed_int(5), ring.embed_int(6)],
                vec![ring.embed_int(7), ring.embed_int(8), ring.embed_int(10)],
            ],
        )
        .unwrap();
        assert_eq!(m.determinant(), ring.embed_int(-3));
        assert_eq!(
            SquareMatrix::identity(ring.clone(), 5).determinant(),
            ring.one()
        );
    }

    #[test]
    fn congruence_by_identity_is_identity_map() {
        let a = int_skew(4, &[(1, 2, 2), (1, 3, 3), (2, 4, 7), (3, 4, 5)]);
        let x = SquareMatrix::identity(int(), 4);
        assert_eq!(congruence(&x, &a).unwrap(), a);
    }

    #[test]
    fn congruence_by_diagonal_scales_pfaffian() {
        let a = int_skew(
            4,
            &[
                (1, 2, 2),
                (1, 3, 3),
                (1, 4, 1),
                (2, 3, 4),
                (2, 4, 7),
                (3, 4, 5),
            ],
        );
        let ring = int();
        let mut x = SquareMatrix::identity(ring.clone(), 4);
        x.rows[0][0] = ring.embed_int(3);
        let b = congruence(&x, &a).unwrap();
        // det(X) = 3, so Pf scales by 3.
        assert_eq!(b.pfaffian(), ring.embed_int(-21));
    }

    #[test]
    fn congruence_covariance_on_random_samples() {
        let mut s = Sampler::new(23);
        for size in [4usize, 6] {
            for _ in 0..50 {
                let a = s.skew(&int(), size);
                let x = s.square(&int(), size);
                let b = congruence(&x, &a).unwrap();
                let expected = int().mul(&x.determinant(), &a.pfaffian());
                assert_eq!(b.pfaffian(), expected);
            }
        }
    }

    #[test]
    fn congruence_rejects_size_mismatch() {
        let a = SkewMatrix::zero(int(), 4).unwrap();
        let x = SquareMatrix::identity(int(), 6);
        assert!(matches!(congruence(&x, &a), Err(Error::ShapeError(_))));
    }

    #[test]
    fn scaling_pfaffian_power_law() {
        let mut s = Sampler::new(31);
        for size in [2usize, 4, 6] {
            let a = s.skew(&int(), size);
            let c = int().embed_int(3);
            let scaled = a.scale(&c);
            let expected = int().mul(&int().pow(&c, (size / 2) as u32), &a.pfaffian());
            assert_eq!(scaled.pfaffian(), expected);
        }
    }

    #[test]
    fn zero_row_forces_zero_pfaffian() {
        // Row 2 untouched: every entry involving index 2 is zero.
        let a = int_skew(6, &[(1, 3, 4), (1, 4, 2), (3, 5, 8), (4, 6, 1), (5, 6, 3)]);
        assert_eq!(a.pfaffian(), int().zero());
    }

    #[test]
    fn modular_pfaffian_reduces() {
        let ring = Ring::modular(6).unwrap();
        let a = SkewMatrix::from_upper(
            ring.clone(),
            4,
            [
                ((1, 2), ring.embed_int(2)),
                ((3, 4), ring.embed_int(3)),
                ((1, 3), ring.embed_int(4)),
                ((2, 4), ring.embed_int(5)),
            ],
        )
        .unwrap();
        // 2*3 - 4*5 = -14 = 4 mod 6
        assert_eq!(a.pfaffian(), ring.embed_int(4));
    }
}
