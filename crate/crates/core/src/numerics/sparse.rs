//! Minimal complex sparse matrices in compressed-row form.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

/// Complex sparse matrix in CSR layout.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    rows: usize,
    cols: usize,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    data: Vec<Complex64>,
}

impl CsrMatrix {
    /// Builds from (row, col, value) triplets; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, Complex64)]) -> Self {
        let mut per_row: Vec<BTreeMap<usize, Complex64>> = vec![BTreeMap::new(); rows];
        for &(r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) out of bounds");
            *per_row[r].entry(c).or_insert(Complex64::new(0.0, 0.0)) += v;
        }
        Self::from_rows(rows, cols, per_row)
    }

    fn from_rows(rows: usize, cols: usize, per_row: Vec<BTreeMap<usize, Complex64>>) -> Self {
        let mut indptr = Vec::with_capacity(rows + 1);
        let mut indices = Vec::new();
        let mut data = Vec::new();
        indptr.push(0);
        for row in per_row {
            for (c, v) in row {
                indices.push(c);
                data.push(v);
            }
            indptr.push(indices.len());
        }
        Self {
            rows,
            cols,
            indptr,
            indices,
            data,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_triplets(rows, cols, &[])
    }

    pub fn identity(n: usize) -> Self {
        let t: Vec<_> = (0..n).map(|i| (i, i, Complex64::new(1.0, 0.0))).collect();
        Self::from_triplets(n, n, &t)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    /// Iterates over stored entries as (row, col, value).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.rows).flat_map(move |r| {
            (self.indptr[r]..self.indptr[r + 1]).map(move |k| (r, self.indices[k], self.data[k]))
        })
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        let span = self.indptr[r]..self.indptr[r + 1];
        match self.indices[span.clone()].binary_search(&c) {
            Ok(k) => self.data[span.start + k],
            Err(_) => Complex64::new(0.0, 0.0),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        out.data.iter_mut().for_each(|v| *v *= s);
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let t: Vec<_> = self.entries().map(|(r, c, v)| (c, r, v.conj())).collect();
        Self::from_triplets(self.cols, self.rows, &t)
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (self.indptr[r]..self.indptr[r + 1])
                    .map(|k| self.data[k] * x[self.indices[k]])
                    .sum()
            })
            .collect()
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut per_row: Vec<BTreeMap<usize, Complex64>> = vec![BTreeMap::new(); self.rows];
        for (r, row) in per_row.iter_mut().enumerate() {
            for k in self.indptr[r]..self.indptr[r + 1] {
                let a = self.data[k];
                let mid = self.indices[k];
                for kk in other.indptr[mid]..other.indptr[mid + 1] {
                    *row.entry(other.indices[kk]).or_insert(Complex64::new(0.0, 0.0)) +=
                        a * other.data[kk];
                }
            }
        }
        Self::from_rows(self.rows, other.cols, per_row)
    }

    fn combine(&self, other: &Self, sign: f64) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut t: Vec<_> = self.entries().collect();
        t.extend(other.entries().map(|(r, c, v)| (r, c, v * sign)));
        Self::from_triplets(self.rows, self.cols, &t)
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Places `blocks[i][j]` (all same shape per row/column) into one matrix.
    pub fn block(blocks: &[Vec<&CsrMatrix>]) -> Self {
        let row_sizes: Vec<usize> = blocks.iter().map(|b| b[0].rows).collect();
        let col_sizes: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let mut t = Vec::new();
        let mut r0 = 0;
        for (bi, brow) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in brow.iter().enumerate() {
                assert_eq!((b.rows, b.cols), (row_sizes[bi], col_sizes[bj]));
                t.extend(b.entries().map(|(r, c, v)| (r0 + r, c0 + c, v)));
                c0 += col_sizes[bj];
            }
            r0 += row_sizes[bi];
        }
        Self::from_triplets(r0, col_sizes.iter().sum(), &t)
    }

    /// Extracts the sub-matrix `rows x cols` starting at `(r0, c0)`.
    pub fn sub_block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let t: Vec<_> = self
            .entries()
            .filter(|&(r, c, _)| r >= r0 && r < r0 + rows && c >= c0 && c < c0 + cols)
            .map(|(r, c, v)| (r - r0, c - c0, v))
            .collect();
        Self::from_triplets(rows, cols, &t)
    }
}

impl Add for &CsrMatrix {
    type Output = CsrMatrix;
    fn add(self, rhs: Self) -> CsrMatrix {
        self.combine(rhs, 1.0)
    }
}

impl Sub for &CsrMatrix {
    type Output = CsrMatrix;
    fn sub(self, rhs: Self) -> CsrMatrix {
        self.combine(rhs, -1.0)
    }
}

impl Mul for &CsrMatrix {
    type Output = CsrMatrix;
    fn mul(self, rhs: Self) -> CsrMatrix {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn product_and_adjoint() {
        let a = CsrMatrix::from_triplets(2, 2, &[(0, 0, c(1.0, 0.0)), (0, 1, c(0.0, 1.0)), (1, 1, c(2.0, 0.0))]);
        let p = &a * &a.adjoint();
        assert_eq!(p.get(0, 0), c(2.0, 0.0));
        assert_eq!(p.get(0, 1), c(0.0, 2.0));
        assert_eq!(p.get(1, 0), c(0.0, -2.0));
        assert_eq!(p.get(1, 1), c(4.0, 0.0));
        assert!((&p - &p.adjoint()).max_abs() < 1e-15);
    }

    #[test]
    fn block_assembly_round_trip() {
        let a = CsrMatrix::identity(2);
        let z = CsrMatrix::zeros(2, 3);
        let b = CsrMatrix::from_triplets(3, 3, &[(2, 1, c(5.0, 0.0))]);
        let zt = CsrMatrix::zeros(3, 2);
        let m = CsrMatrix::block(&[vec![&a, &z], vec![&zt, &b]]);
        assert_eq!(m.rows(), 5);
        assert_eq!(m.get(4, 3), c(5.0, 0.0));
        assert_eq!(m.sub_block(2, 2, 3, 3), b);
    }
}
