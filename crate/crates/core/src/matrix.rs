//! Dense matrices over exact rationals.
//!
//! Row reduction always pivots on the leftmost remaining column and, within
//! it, the first row with a nonzero entry; kernel and cokernel bases built on
//! top of it are therefore reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(
            n,
            n,
            |i, j| if i == j { Rational::one() } else { Rational::zero() },
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer entries given row by row. Panics on ragged input.
    pub fn from_int_rows(rows: usize, cols: usize, entries: &[Vec<i64>]) -> Self {
        assert_eq!(entries.len(), rows, "row count");
        Self::from_fn(rows, cols, |i, j| {
            assert_eq!(entries[i].len(), cols, "ragged row {i}");
            Rational::from_integer(BigInt::from(entries[i][j]))
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &RatMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    /// Stacks blocks vertically; all blocks share `cols`.
    pub fn vstack(blocks: &[&RatMatrix], cols: usize) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Self { rows, cols, data }
    }

    /// Concatenates blocks horizontally; all blocks share `rows`.
    pub fn hstack(blocks: &[&RatMatrix], rows: usize) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, offset + j, b.get(i, j).clone());
                }
            }
            offset += b.cols;
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn block_diag(a: &RatMatrix, b: &RatMatrix) -> Self {
        let mut out = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            let mut support = Vec::new();
            for j in col..m.cols {
                let idx = row * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] *= &inv;
                    support.push((j, m.data[idx].clone()));
                }
            }
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let factor = m.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, v) in &support {
                    m.data[i * m.cols + j] -= &factor * v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of `{v : self * v = 0}`, one per free column of
    /// the echelon form in increasing order.
    pub fn kernel(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free = free_columns(self.cols, &pivots);
        let mut out = RatMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, Rational::one());
            for (i, &p) in pivots.iter().enumerate() {
                out.set(p, k, -r.get(i, f).clone());
            }
        }
        out
    }

    /// The kernel basis of [`RatMatrix::kernel`] laid out as rows.
    pub fn kernel_rows(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free = free_columns(self.cols, &pivots);
        let mut out = RatMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, Rational::one());
            for (i, &p) in pivots.iter().enumerate() {
                out.set(k, p, -r.get(i, f).clone());
            }
        }
        out
    }

    /// Splits into consecutive column blocks of `width` columns each.
    pub fn into_column_blocks(self, width: usize) -> Vec<RatMatrix> {
        assert!(
            width > 0 && self.cols.is_multiple_of(width),
            "column blocks must tile"
        );
        let count = self.cols / width;
        let mut blocks: Vec<Vec<Rational>> = (0..count)
            .map(|_| Vec::with_capacity(self.rows * width))
            .collect();
        for (idx, v) in self.data.into_iter().enumerate() {
            blocks[(idx % self.cols) / width].push(v);
        }
        blocks
            .into_iter()
            .map(|data| RatMatrix {
                rows: self.rows,
                cols: width,
                data,
            })
            .collect()
    }

    /// Splits into consecutive row blocks of `height` rows each.
    pub fn into_row_blocks(self, height: usize) -> Vec<RatMatrix> {
        assert!(
            height > 0 && self.rows.is_multiple_of(height),
            "row blocks must tile"
        );
        let cols = self.cols;
        let mut data = self.data.into_iter();
        (0..self.rows / height)
            .map(|_| RatMatrix {
                rows: height,
                cols,
                data: data.by_ref().take(height * cols).collect(),
            })
            .collect()
    }

    /// Square with full rank.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn row_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{} empty]", self.rows, self.cols);
        }
        for (i, row) in self.row_strings().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_and_kernel() {
        let a = RatMatrix::from_int_rows(2, 3, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!((k.rows(), k.cols()), (3, 2));
        assert!(a.mul(&k).is_zero());
        assert_eq!(k.rank(), 2);
    }

    #[test]
    fn rref_is_deterministic_and_reduced() {
        let a = RatMatrix::from_int_rows(3, 3, &[vec![0, 2, 4], vec![3, 0, 3], vec![1, 1, 3]]);
        let (r, pivots) = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.get(0, 2), &q(1, 1));
        assert_eq!(r.get(1, 2), &q(2, 1));
        assert!(r.submatrix(2..3, 0..3).is_zero());
    }

    #[test]
    fn empty_shapes() {
        let a = RatMatrix::zeros(0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel(), RatMatrix::identity(3));
        let b = RatMatrix::zeros(2, 0);
        assert_eq!(b.kernel().cols(), 0);
        assert!(RatMatrix::identity(0).is_invertible());
    }

    #[test]
    fn kernel_layouts_agree() {
        let a = RatMatrix::from_int_rows(2, 4, &[vec![1, 2, 0, 1], vec![0, 0, 1, 3]]);
        assert_eq!(a.kernel_rows(), a.kernel().transpose());
        assert!(a.mul(&a.kernel()).is_zero());
    }

    #[test]
    fn blocks_round_trip() {
        let a = RatMatrix::from_int_rows(2, 4, &[vec![1, 2, 3, 4], vec![5, 6, 7, 8]]);
        let cols = a.clone().into_column_blocks(2);
        assert_eq!(cols[1], a.submatrix(0..2, 2..4));
        assert_eq!(RatMatrix::hstack(&[&cols[0], &cols[1]], 2), a);
        let t = a.transpose();
        let rows = t.clone().into_row_blocks(2);
        assert_eq!(rows[1], t.submatrix(2..4, 0..2));
        assert_eq!(RatMatrix::vstack(&[&rows[0], &rows[1]], 2), t);
    }

    #[test]
    fn stacking() {
        let a = RatMatrix::from_int_rows(1, 2, &[vec![1, 2]]);
        let b = RatMatrix::from_int_rows(1, 2, &[vec![3, 4]]);
        let v = RatMatrix::vstack(&[&a, &b], 2);
        assert_eq!(v, RatMatrix::from_int_rows(2, 2, &[vec![1, 2], vec![3, 4]]));
        let h = RatMatrix::hstack(&[&a, &b], 1);
        assert_eq!(h, RatMatrix::from_int_rows(1, 4, &[vec![1, 2, 3, 4]]));
        let d = RatMatrix::block_diag(&a, &b);
        assert_eq!(d.rank(), 2);
        assert_eq!((d.rows(), d.cols()), (2, 4));
    }
}
