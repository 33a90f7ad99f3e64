//! Dense exact linear algebra over the rationals.
//!
//! Scalars are [`BigRational`] values, always kept in lowest terms with a
//! positive denominator, so structural equality is numerical equality.
//! Nothing here ever rounds.

use std::fmt;

use num_traits::{One, Zero};

use crate::{Error, Result};

pub use num_rational::BigRational;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
}

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_entries",
                left: format!("{rows}x{cols}"),
                right: format!("{} entries", entries.len()),
            });
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested integer rows. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().map(|&x| rat(x)));
        }
        RatMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Stacks the given vectors as the rows of a matrix.
    pub fn from_row_vectors(vectors: &[RatVector], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            if v.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_row_vectors",
                    left: cols.to_string(),
                    right: v.len().to_string(),
                });
            }
            entries.extend(v.entries().iter().cloned());
        }
        Ok(RatMatrix {
            rows: vectors.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        assert!(
            row < self.rows && col < self.cols,
            "matrix index out of range"
        );
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        assert!(
            row < self.rows && col < self.cols,
            "matrix index out of range"
        );
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[BigRational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_vector(&self, row: usize) -> RatVector {
        RatVector::row(self.row(row).to_vec())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exact schoolbook product `self · rhs`.
    pub fn mat_mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", rhs.rows, rhs.cols),
            });
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Sum of the entries of column `col`.
    pub fn column_sum(&self, col: usize) -> Result<BigRational> {
        if col >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: col,
                len: self.cols,
            });
        }
        Ok((0..self.rows).fold(BigRational::zero(), |acc, r| {
            acc + &self.entries[r * self.cols + col]
        }))
    }

    /// All column sums at once.
    pub fn column_sums(&self) -> Vec<BigRational> {
        let mut sums = vec![BigRational::zero(); self.cols];
        for r in 0..self.rows {
            for (s, x) in sums.iter_mut().zip(self.row(r)) {
                *s += x;
            }
        }
        sums
    }

    /// Reduced row echelon form and rank. `self` is left untouched.
    ///
    /// Pivots are taken column by column, using the first row at or below
    /// the current pivot row with a nonzero entry; the pivot is scaled to 1
    /// and eliminated above and below.
    pub fn row_reduce(&self) -> (RatMatrix, usize) {
        let mut m = self.clone();
        let rank = m.row_reduce_in_place();
        (m, rank)
    }

    fn row_reduce_in_place(&mut self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(found) = (pivot_row..rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if found != pivot_row {
                for c in 0..cols {
                    self.entries.swap(found * cols + c, pivot_row * cols + c);
                }
            }
            let inv = self.get(pivot_row, col).recip();
            for c in col..cols {
                let idx = pivot_row * cols + c;
                self.entries[idx] = &self.entries[idx] * &inv;
            }
            for r in 0..rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..cols {
                    let delta = &factor * &self.entries[pivot_row * cols + c];
                    self.entries[r * cols + c] -= delta;
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1
    }

    /// `self^exp` by repeated multiplication; `exp = 0` gives the identity.
    pub fn pow(&self, exp: usize) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "pow",
                left: self.rows.to_string(),
                right: self.cols.to_string(),
            });
        }
        let mut acc = RatMatrix::identity(self.rows);
        for _ in 0..exp {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    /// Block-diagonal matrix `[a 0; 0 b]`.
    pub fn block_diagonal(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        let rows = a.rows + b.rows;
        let cols = a.cols + b.cols;
        let mut out = RatMatrix::zeros(rows, cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                out.entries[r * cols + c] = a.get(r, c).clone();
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                out.entries[(a.rows + r) * cols + a.cols + c] = b.get(r, c).clone();
            }
        }
        out
    }
}

/// Fixed row-major bracketed form, e.g. `[[1, 0], [0, 1/2]]`.
impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Dense vector with a fixed orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatVector {
    entries: Vec<BigRational>,
    orientation: Orientation,
}

impl RatVector {
    pub fn row(entries: Vec<BigRational>) -> Self {
        RatVector {
            entries,
            orientation: Orientation::Row,
        }
    }

    pub fn column(entries: Vec<BigRational>) -> Self {
        RatVector {
            entries,
            orientation: Orientation::Column,
        }
    }

    pub fn zeros(len: usize, orientation: Orientation) -> Self {
        RatVector {
            entries: vec![BigRational::zero(); len],
            orientation,
        }
    }

    pub fn row_from_ints(xs: &[i64]) -> Self {
        Self::row(xs.iter().map(|&x| rat(x)).collect())
    }

    pub fn column_from_ints(xs: &[i64]) -> Self {
        Self::column(xs.iter().map(|&x| rat(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transposed(&self) -> RatVector {
        RatVector {
            entries: self.entries.clone(),
            orientation: match self.orientation {
                Orientation::Row => Orientation::Column,
                Orientation::Column => Orientation::Row,
            },
        }
    }

    pub fn neg(&self) -> RatVector {
        RatVector {
            entries: self.entries.iter().map(|x| -x).collect(),
            orientation: self.orientation,
        }
    }

    /// Concatenation; the result takes `self`'s orientation.
    pub fn concat(&self, other: &RatVector) -> RatVector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        RatVector {
            entries,
            orientation: self.orientation,
        }
    }

    /// Exact inner product. Orientation is ignored, lengths must agree.
    pub fn dot(&self, other: &RatVector) -> Result<BigRational> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                op: "dot",
                left: self.len().to_string(),
                right: other.len().to_string(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Row vector times matrix.
    pub fn vec_mat(&self, m: &RatMatrix) -> Result<RatVector> {
        if self.orientation != Orientation::Row || self.len() != m.rows() {
            return Err(Error::DimensionMismatch {
                op: "vec_mat",
                left: format!("{:?} of length {}", self.orientation, self.len()),
                right: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        let mut out = vec![BigRational::zero(); m.cols()];
        for (i, a) in self.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(m.row(i)) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Ok(RatVector::row(out))
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")?;
        if self.orientation == Orientation::Column {
            f.write_str("ᵀ")?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    a.mat_mul(b)
}

pub fn column_sum(m: &RatMatrix, col: usize) -> Result<BigRational> {
    m.column_sum(col)
}

pub fn row_reduce(m: &RatMatrix) -> (RatMatrix, usize) {
    m.row_reduce()
}

pub fn dot(a: &RatVector, b: &RatVector) -> Result<BigRational> {
    a.dot(b)
}

/// Whether `v` lies in the span of `basis`, decided by comparing
/// `rank(basis)` with `rank(basis ∪ {v})`.
pub fn in_span(basis: &[RatVector], v: &RatVector) -> Result<bool> {
    for b in basis {
        if b.len() != v.len() || b.orientation() != v.orientation() {
            return Err(Error::DimensionMismatch {
                op: "in_span",
                left: format!("{:?} of length {}", b.orientation(), b.len()),
                right: format!("{:?} of length {}", v.orientation(), v.len()),
            });
        }
    }
    let n = v.len();
    let without = RatMatrix::from_row_vectors(basis, n)?.rank();
    let mut extended = basis.to_vec();
    extended.push(v.clone());
    let with = RatMatrix::from_row_vectors(&extended, n)?.rank();
    Ok(with == without)
}

/// Rows kept in reduced echelon form, so membership of a new vector costs
/// one pass of eliminations instead of a full re-reduction.
#[derive(Debug, Clone, Default)]
pub(crate) struct EchelonSpan {
    /// (pivot column, normalized row)
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl EchelonSpan {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    #[cfg(test)]
    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the current span; returns whether
    /// it was added.
    pub(crate) fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut residue = v.to_vec();
        for (pivot, row) in &self.rows {
            let factor = residue[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, r) in residue.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        let Some(pivot) = residue.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = residue[pivot].recip();
        for x in residue.iter_mut() {
            *x = &*x * &inv;
        }
        // keep older rows reduced against the new pivot
        for (_, row) in self.rows.iter_mut() {
            let factor = row[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, r) in row.iter_mut().zip(&residue) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        self.rows.push((pivot, residue));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_form() {
        assert_eq!(frac(2, -4), frac(-1, 2));
        assert_eq!(frac(0, 7), BigRational::zero());
        assert_eq!(frac(0, 7).denom(), &BigInt::from(1));
        assert!(frac(3, -9).denom() > &BigInt::from(0));
    }

    #[test]
    fn identity_is_neutral() {
        let m = RatMatrix::from_ints(&[[0, 0, 0, 1], [1, 0, 0, 1], [1, 1, 1, 0], [0, 1, 0, 0]]);
        assert_eq!(m.mat_mul(&RatMatrix::identity(4)).unwrap(), m);
        assert_eq!(RatMatrix::identity(4).mat_mul(&m).unwrap(), m);
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let a = RatMatrix::zeros(2, 3);
        let err = a.mat_mul(&RatMatrix::zeros(2, 3)).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch { op: "mat_mul", .. }
        ));
    }

    #[test]
    fn column_sum_edges() {
        let z = RatMatrix::zeros(3, 3);
        for c in 0..3 {
            assert_eq!(z.column_sum(c).unwrap(), BigRational::zero());
        }
        assert_eq!(
            z.column_sum(3).unwrap_err(),
            Error::IndexOutOfRange { index: 3, len: 3 }
        );
    }

    #[test]
    fn row_reduce_examples() {
        let (r, rank) = RatMatrix::identity(3).row_reduce();
        assert_eq!(r, RatMatrix::identity(3));
        assert_eq!(rank, 3);

        let m = RatMatrix::from_ints(&[[1, 2], [2, 4]]);
        let (r, rank) = m.row_reduce();
        assert_eq!(r, RatMatrix::from_ints(&[[1, 2], [0, 0]]));
        assert_eq!(rank, 1);
        // input untouched
        assert_eq!(m, RatMatrix::from_ints(&[[1, 2], [2, 4]]));
    }

    #[test]
    fn row_reduce_fractions() {
        let m = RatMatrix::from_ints(&[[2, 1, 0], [4, 0, 1]]);
        let (r, rank) = m.row_reduce();
        assert_eq!(rank, 2);
        assert_eq!(r.get(0, 0), &rat(1));
        assert_eq!(r.get(0, 2), &frac(1, 4));
        assert_eq!(r.get(1, 1), &rat(1));
        assert_eq!(r.get(1, 2), &frac(-1, 2));
    }

    #[test]
    fn in_span_examples() {
        assert!(in_span(&[], &RatVector::row_from_ints(&[0, 0])).unwrap());
        assert!(!in_span(&[], &RatVector::row_from_ints(&[0, 1])).unwrap());
        let e1 = RatVector::row_from_ints(&[1, 0]);
        let e2 = RatVector::row_from_ints(&[0, 1]);
        assert!(!in_span(std::slice::from_ref(&e1), &e2).unwrap());
        assert!(in_span(&[e1.clone(), e2], &RatVector::row_from_ints(&[3, -7])).unwrap());
        assert!(in_span(
            std::slice::from_ref(&e1),
            &RatVector::row_from_ints(&[5, 0])
        )
        .unwrap());
        assert!(in_span(
            std::slice::from_ref(&e1),
            &RatVector::row_from_ints(&[1, 0, 0])
        )
        .is_err());
        assert!(in_span(&[e1], &RatVector::column_from_ints(&[1, 0])).is_err());
    }

    #[test]
    fn dot_examples() {
        let v = RatVector::row_from_ints(&[3, -1, 4]);
        assert_eq!(
            v.dot(&RatVector::zeros(3, Orientation::Column)).unwrap(),
            rat(0)
        );
        assert_eq!(
            v.dot(&RatVector::column_from_ints(&[1, 1, 1])).unwrap(),
            rat(6)
        );
        assert!(v.dot(&RatVector::row_from_ints(&[1])).is_err());
    }

    #[test]
    fn display_form() {
        let mut m = RatMatrix::identity(2);
        m.set(1, 1, frac(1, 2));
        assert_eq!(m.to_string(), "[[1, 0], [0, 1/2]]");
        assert_eq!(RatMatrix::zeros(0, 0).to_string(), "[]");
    }

    #[test]
    fn echelon_span_matches_rank() {
        let vs = [[1, 2, 3], [2, 4, 6], [0, 1, 1], [1, 3, 4], [0, 0, 5]];
        let mut span = EchelonSpan::new();
        let mut kept: Vec<RatVector> = Vec::new();
        for v in vs {
            let v = RatVector::row_from_ints(&v);
            let independent = !in_span(&kept, &v).unwrap();
            assert_eq!(span.insert(v.entries()), independent);
            if independent {
                kept.push(v);
            }
        }
        assert_eq!(span.dim(), 3);
    }

    fn small_frac() -> impl Strategy<Value = BigRational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| frac(n, d))
    }

    fn zero_one_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec(0i64..=1, n * n).prop_map(move |xs| {
            RatMatrix::from_entries(n, n, xs.into_iter().map(rat).collect()).unwrap()
        })
    }

    fn int_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
                RatMatrix::from_entries(r, c, xs.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_frac(), b in small_frac(), c in small_frac()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a / &a, BigRational::one());
            }
        }

        #[test]
        fn mat_mul_associative(
            (a, b, c) in (1usize..=5).prop_flat_map(|n| (zero_one_matrix(n), zero_one_matrix(n), zero_one_matrix(n)))
        ) {
            let left = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
            let right = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn powers_of_zero_one_matrices_are_natural((m, k) in (1usize..=5).prop_flat_map(|n| (zero_one_matrix(n), 0usize..6))) {
            let p = m.pow(k).unwrap();
            for x in p.entries() {
                prop_assert!(x.is_integer());
                prop_assert!(*x >= BigRational::zero());
            }
        }

        #[test]
        fn row_reduce_idempotent(m in int_matrix()) {
            let (r, rank) = m.row_reduce();
            let (rr, rank2) = r.row_reduce();
            prop_assert_eq!(&rr, &r);
            prop_assert_eq!(rank, rank2);
            prop_assert!(rank <= m.rows().min(m.cols()));
        }
    }
}
