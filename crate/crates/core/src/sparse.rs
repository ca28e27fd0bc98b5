//! Minimal CSR sparse matrix, enough for the pressure projection operator.

/// Compressed sparse row matrix.
#[derive(Debug, Clone)]
pub struct Csr {
    pub nrows: usize,
    pub ncols: usize,
    pub row_ptr: Vec<usize>,
    pub col_idx: Vec<usize>,
    pub vals: Vec<f64>,
}

impl Csr {
    /// Builds from (row, col, value) triplets, summing duplicates.
    /// Entries within a row end up sorted by column.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: &[(usize, usize, f64)]) -> Csr {
        let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); nrows];
        for &(r, c, v) in triplets {
            debug_assert!(r < nrows && c < ncols);
            rows[r].push((c, v));
        }
        let mut row_ptr = Vec::with_capacity(nrows + 1);
        let mut col_idx = Vec::new();
        let mut vals = Vec::new();
        row_ptr.push(0);
        for row in &mut rows {
            row.sort_by_key(|&(c, _)| c);
            let mut k = 0;
            while k < row.len() {
                let c = row[k].0;
                let mut v = 0.0;
                while k < row.len() && row[k].0 == c {
                    v += row[k].1;
                    k += 1;
                }
                col_idx.push(c);
                vals.push(v);
            }
            row_ptr.push(col_idx.len());
        }
        Csr { nrows, ncols, row_ptr, col_idx, vals }
    }

    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.ncols);
        debug_assert_eq!(y.len(), self.nrows);
        for r in 0..self.nrows {
            let mut acc = 0.0;
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.vals[k] * x[self.col_idx[k]];
            }
            y[r] = acc;
        }
    }

    /// C = A * B (small sizes; used once per grid to compose operators).
    pub fn mat_mul(&self, other: &Csr) -> Csr {
        assert_eq!(self.ncols, other.nrows);
        let mut triplets: Vec<(usize, usize, f64)> = Vec::new();
        let mut acc: Vec<f64> = vec![0.0; other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        for r in 0..self.nrows {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                let a = self.vals[k];
                let mid = self.col_idx[k];
                for k2 in other.row_ptr[mid]..other.row_ptr[mid + 1] {
                    let c = other.col_idx[k2];
                    if acc[c] == 0.0 {
                        touched.push(c);
                    }
                    acc[c] += a * other.vals[k2];
                }
            }
            touched.sort_unstable();
            for &c in &touched {
                triplets.push((r, c, acc[c]));
                acc[c] = 0.0;
            }
            touched.clear();
        }
        Csr::from_triplets(self.nrows, other.ncols, &triplets)
    }

    pub fn diagonal(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.nrows.min(self.ncols)];
        for r in 0..d.len() {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                if self.col_idx[k] == r {
                    d[r] = self.vals[k];
                }
            }
        }
        d
    }

    /// max |A - A^T| entrywise, as a symmetry diagnostic.
    pub fn asymmetry(&self) -> f64 {
        assert_eq!(self.nrows, self.ncols);
        let mut worst = 0.0f64;
        for r in 0..self.nrows {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                let c = self.col_idx[k];
                let v = self.vals[k];
                // find (c, r)
                let mut vt = 0.0;
                for k2 in self.row_ptr[c]..self.row_ptr[c + 1] {
                    if self.col_idx[k2] == r {
                        vt = self.vals[k2];
                        break;
                    }
                }
                worst = worst.max((v - vt).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_sum_and_multiply() {
        // A = [[2, 1], [0, 3]], duplicate (0,0) entries sum to 2
        let a = Csr::from_triplets(2, 2, &[(0, 0, 1.0), (0, 0, 1.0), (0, 1, 1.0), (1, 1, 3.0)]);
        let mut y = vec![0.0; 2];
        a.mul_vec(&[1.0, 2.0], &mut y);
        assert_eq!(y, vec![4.0, 6.0]);

        let b = Csr::from_triplets(2, 2, &[(0, 0, 1.0), (1, 0, 1.0), (1, 1, 1.0)]);
        let c = a.mat_mul(&b);
        let mut y = vec![0.0; 2];
        c.mul_vec(&[1.0, 0.0], &mut y);
        // A*B = [[3, 1], [3, 3]]
        assert_eq!(y, vec![3.0, 3.0]);
        assert_eq!(c.diagonal(), vec![3.0, 3.0]);
    }
}
