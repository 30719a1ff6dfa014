use std::ops::Range;

use super::dense::DenseMatrix;
use super::LinearOperator;
use crate::error::{check_len, Result};

/// Compressed-sparse-row matrix. Symmetric matrices are stored in full.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<f64>,
}

impl SparseMatrix {
    /// Builds a CSR matrix from `(row, col, value)` triplets. Duplicates are
    /// summed; column indices end up sorted within each row.
    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut counts = vec![0usize; rows + 1];
        for &(r, c, _) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) out of bounds");
            counts[r + 1] += 1;
        }
        for i in 0..rows {
            counts[i + 1] += counts[i];
        }
        let mut next = counts.clone();
        let mut cols_raw = vec![0usize; triplets.len()];
        let mut vals_raw = vec![0.0; triplets.len()];
        for &(r, c, v) in triplets {
            let k = next[r];
            cols_raw[k] = c;
            vals_raw[k] = v;
            next[r] += 1;
        }

        let mut row_offsets = Vec::with_capacity(rows + 1);
        let mut col_indices = Vec::with_capacity(triplets.len());
        let mut values = Vec::with_capacity(triplets.len());
        row_offsets.push(0);
        for r in 0..rows {
            let mut entries: Vec<(usize, f64)> =
                (counts[r]..counts[r + 1]).map(|k| (cols_raw[k], vals_raw[k])).collect();
            entries.sort_by_key(|e| e.0);
            for (c, v) in entries {
                match col_indices.last() {
                    Some(&last) if last == c && col_indices.len() > row_offsets[r] => {
                        *values.last_mut().unwrap() += v;
                    }
                    _ => {
                        col_indices.push(c);
                        values.push(v);
                    }
                }
            }
            row_offsets.push(col_indices.len());
        }
        Self {
            rows,
            cols,
            row_offsets,
            col_indices,
            values,
        }
    }

    /// Drops stored entries with `|v| ≤ rel_tol · max|v|` (cancellation
    /// residue left by summing element contributions).
    pub fn pruned(&self, rel_tol: f64) -> Self {
        let cut = rel_tol * self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let kept: Vec<_> = self.triplets().into_iter().filter(|t| t.2.abs() > cut).collect();
        Self::from_triplets(self.rows, self.cols, &kept)
    }

    pub fn from_dense(d: &DenseMatrix) -> Self {
        let mut t = Vec::new();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if d.get(i, j) != 0.0 {
                    t.push((i, j, d.get(i, j)));
                }
            }
        }
        Self::from_triplets(d.rows(), d.cols(), &t)
    }

    pub fn identity(n: usize) -> Self {
        let triplets: Vec<_> = (0..n).map(|i| (i, i, 1.0)).collect();
        Self::from_triplets(n, n, &triplets)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Iterates over the stored entries of one row as `(col, value)`.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let span = self.row_offsets[r]..self.row_offsets[r + 1];
        self.col_indices[span.clone()]
            .iter()
            .copied()
            .zip(self.values[span].iter().copied())
    }

    /// Stored value at `(r, c)`, zero when the entry is not stored.
    pub fn get(&self, r: usize, c: usize) -> f64 {
        let span = self.row_offsets[r]..self.row_offsets[r + 1];
        match self.col_indices[span.clone()].binary_search(&c) {
            Ok(k) => self.values[span.start + k],
            Err(_) => 0.0,
        }
    }

    pub fn spmv(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_len(self.cols, x.len())?;
        let mut y = vec![0.0; self.rows];
        self.spmv_into(x, &mut y);
        Ok(y)
    }

    pub(crate) fn spmv_into(&self, x: &[f64], y: &mut [f64]) {
        for (r, yr) in y.iter_mut().enumerate() {
            let mut acc = 0.0;
            for k in self.row_offsets[r]..self.row_offsets[r + 1] {
                acc += self.values[k] * x[self.col_indices[k]];
            }
            *yr = acc;
        }
    }

    /// Extracts the block `rows x cols` as a new CSR matrix.
    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> SparseMatrix {
        let mut triplets = Vec::new();
        for r in rows.clone() {
            for (c, v) in self.row(r) {
                if cols.contains(&c) {
                    triplets.push((r - rows.start, c - cols.start, v));
                }
            }
        }
        SparseMatrix::from_triplets(rows.len(), cols.len(), &triplets)
    }

    /// Returns `self + B` where `B` is a dense block placed at `(offset, offset)`.
    pub fn add_block(&self, offset: usize, block: &DenseMatrix) -> SparseMatrix {
        let mut triplets = self.triplets();
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                let v = block.get(i, j);
                if v != 0.0 {
                    triplets.push((offset + i, offset + j, v));
                }
            }
        }
        SparseMatrix::from_triplets(self.rows, self.cols, &triplets)
    }

    pub fn triplets(&self) -> Vec<(usize, usize, f64)> {
        (0..self.rows)
            .flat_map(|r| self.row(r).map(move |(c, v)| (r, c, v)))
            .collect()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.triplets() {
            d.set(r, c, v);
        }
        d
    }

    /// Largest `|a_ij - a_ji|` over the stored pattern.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.rows {
            for (c, v) in self.row(r) {
                worst = worst.max((v - self.get(c, r)).abs());
            }
        }
        worst
    }

    /// Writes the matrix in MatrixMarket coordinate format.
    pub fn to_matrix_market(&self) -> String {
        let mut out = String::from("%%MatrixMarket matrix coordinate real general\n");
        out.push_str(&format!("{} {} {}\n", self.rows, self.cols, self.nnz()));
        for (r, c, v) in self.triplets() {
            out.push_str(&format!("{} {} {:.17e}\n", r + 1, c + 1, v));
        }
        out
    }
}

impl LinearOperator for SparseMatrix {
    fn dim(&self) -> usize {
        self.rows
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.spmv_into(x, y);
    }
}
