//! Small dense linear algebra: column-major matrices, a cyclic Jacobi
//! eigensolver for symmetric matrices, LU and Cholesky solves.
//!
//! Problem sizes here are snapshot counts and mode counts (tens to a few
//! thousand), so plain dense routines are the right tool.

use crate::error::{Error, Result};

/// Dense column-major `rows x cols` matrix of f64.
#[derive(Debug, Clone, PartialEq)]
pub struct DMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DMat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = DMat::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds from a column-major payload.
    pub fn from_col_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "matrix payload has {} entries, expected {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(DMat { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[j * self.rows + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[j * self.rows + i] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        self.data[j * self.rows + i] += v;
    }

    pub fn col(&self, j: usize) -> &[f64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn col_mut(&mut self, j: usize) -> &mut [f64] {
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> DMat {
        DMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// y = A x
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols, "mul_vec dimension mismatch");
        let mut y = vec![0.0; self.rows];
        for j in 0..self.cols {
            let xj = x[j];
            if xj == 0.0 {
                continue;
            }
            let col = self.col(j);
            for i in 0..self.rows {
                y[i] += col[i] * xj;
            }
        }
        y
    }

    /// y = A^T x
    pub fn mul_vec_t(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.rows, "mul_vec_t dimension mismatch");
        let mut y = vec![0.0; self.cols];
        for j in 0..self.cols {
            let col = self.col(j);
            let mut acc = 0.0;
            for i in 0..self.rows {
                acc += col[i] * x[i];
            }
            y[j] = acc;
        }
        y
    }

    pub fn mat_mul(&self, other: &DMat) -> DMat {
        assert_eq!(self.cols, other.rows, "mat_mul dimension mismatch");
        let mut out = DMat::zeros(self.rows, other.cols);
        for j in 0..other.cols {
            let oc = other.col(j);
            let out_col = out.col_mut(j);
            for k in 0..self.cols {
                let v = oc[k];
                if v == 0.0 {
                    continue;
                }
                let sc = self.col(k);
                for i in 0..sc.len() {
                    out_col[i] += sc[i] * v;
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    /// Extracts the submatrix with the given row and column index sets.
    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> DMat {
        DMat::from_fn(row_idx.len(), col_idx.len(), |i, j| self.get(row_idx[i], col_idx[j]))
    }
}

/// Third-order tensor stored as a stack of `n_slices` matrices of equal shape.
/// Slice `s` holds the matrix T[s] with entries T[s](i, k).
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    slices: Vec<DMat>,
}

impl Tensor3 {
    pub fn new(slices: Vec<DMat>) -> Self {
        if let Some(first) = slices.first() {
            for s in &slices {
                assert_eq!((s.rows(), s.cols()), (first.rows(), first.cols()));
            }
        }
        Tensor3 { slices }
    }

    pub fn n_slices(&self) -> usize {
        self.slices.len()
    }

    pub fn slice(&self, s: usize) -> &DMat {
        &self.slices[s]
    }

    pub fn slices(&self) -> &[DMat] {
        &self.slices
    }

    /// Σ_s w[s] · T[s], a matrix.
    pub fn contract_slices(&self, w: &[f64]) -> DMat {
        assert_eq!(w.len(), self.slices.len(), "contract_slices dimension mismatch");
        let (r, c) = if let Some(f) = self.slices.first() {
            (f.rows(), f.cols())
        } else {
            return DMat::zeros(0, 0);
        };
        let mut out = DMat::zeros(r, c);
        for (s, m) in self.slices.iter().enumerate() {
            let ws = w[s];
            if ws == 0.0 {
                continue;
            }
            for (o, v) in out.data.iter_mut().zip(m.data.iter()) {
                *o += ws * v;
            }
        }
        out
    }

    pub fn select(&self, slice_idx: &[usize], row_idx: &[usize], col_idx: &[usize]) -> Tensor3 {
        Tensor3::new(slice_idx.iter().map(|&s| self.slices[s].select(row_idx, col_idx)).collect())
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
///
/// Returns eigenvalues sorted descending and the matching orthonormal
/// eigenvector columns. Convergence: off-diagonal Frobenius norm below
/// `1e-12 * ||A||_F`.
pub fn jacobi_eigh(a: &DMat) -> Result<(Vec<f64>, DMat)> {
    assert_eq!(a.rows(), a.cols(), "jacobi_eigh needs a square matrix");
    let n = a.rows();
    if n == 0 {
        return Ok((vec![], DMat::zeros(0, 0)));
    }
    // symmetrize defensively
    let mut m = DMat::from_fn(n, n, |i, j| 0.5 * (a.get(i, j) + a.get(j, i)));
    let mut v = DMat::identity(n);
    let norm = m.frobenius_norm();
    let tol = 1e-12 * norm;
    const MAX_SWEEPS: usize = 100;

    let mut converged = norm == 0.0;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m.get(p, q) * m.get(p, q);
            }
        }
        if (2.0 * off).sqrt() <= tol {
            converged = true;
            break;
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let s = theta.signum();
                    s / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                m.set(p, p, app - t * apq);
                m.set(q, q, aqq + t * apq);
                m.set(p, q, 0.0);
                m.set(q, p, 0.0);
                for j in 0..n {
                    if j != p && j != q {
                        let ajp = m.get(j, p);
                        let ajq = m.get(j, q);
                        m.set(j, p, ajp - s * (ajq + tau * ajp));
                        m.set(p, j, m.get(j, p));
                        m.set(j, q, ajq + s * (ajp - tau * ajq));
                        m.set(q, j, m.get(j, q));
                    }
                }
                for j in 0..n {
                    let vjp = v.get(j, p);
                    let vjq = v.get(j, q);
                    v.set(j, p, vjp - s * (vjq + tau * vjp));
                    v.set(j, q, vjq + s * (vjp - tau * vjq));
                }
            }
        }
    }
    if !converged {
        return Err(Error::EigenNonConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m.get(i, i)).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap());
    let lambda: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vecs = DMat::from_fn(n, n, |i, j| v.get(i, order[j]));
    Ok((lambda, vecs))
}

/// Solves A x = b by LU with partial pivoting. `a` is consumed as workspace.
pub fn lu_solve(mut a: DMat, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.rows();
    assert_eq!(a.cols(), n, "lu_solve needs a square matrix");
    assert_eq!(b.len(), n, "lu_solve rhs dimension mismatch");
    let mut x: Vec<f64> = b.to_vec();
    let mut piv: Vec<usize> = (0..n).collect();

    for k in 0..n {
        let mut p = k;
        let mut max = a.get(k, k).abs();
        for i in (k + 1)..n {
            let v = a.get(i, k).abs();
            if v > max {
                max = v;
                p = i;
            }
        }
        if max == 0.0 {
            return Err(Error::SingularMatrix(format!("zero pivot at column {k}")));
        }
        if p != k {
            for j in 0..n {
                let t = a.get(k, j);
                a.set(k, j, a.get(p, j));
                a.set(p, j, t);
            }
            piv.swap(k, p);
            x.swap(k, p);
        }
        let pivot = a.get(k, k);
        for i in (k + 1)..n {
            let f = a.get(i, k) / pivot;
            a.set(i, k, f);
            if f != 0.0 {
                for j in (k + 1)..n {
                    let v = a.get(i, j) - f * a.get(k, j);
                    a.set(i, j, v);
                }
                x[i] -= f * x[k];
            }
        }
    }
    for i in (0..n).rev() {
        let mut acc = x[i];
        for j in (i + 1)..n {
            acc -= a.get(i, j) * x[j];
        }
        x[i] = acc / a.get(i, i);
    }
    Ok(x)
}

/// Cholesky factorization of an SPD matrix; returns the lower factor.
pub fn cholesky(a: &DMat) -> Result<DMat> {
    let n = a.rows();
    assert_eq!(a.cols(), n, "cholesky needs a square matrix");
    let mut l = DMat::zeros(n, n);
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            let v = l.get(j, k);
            d -= v * v;
        }
        if d <= 0.0 {
            return Err(Error::SingularMatrix(format!(
                "matrix not positive definite at column {j} (pivot {d:.3e})"
            )));
        }
        let djj = d.sqrt();
        l.set(j, j, djj);
        for i in (j + 1)..n {
            let mut v = a.get(i, j);
            for k in 0..j {
                v -= l.get(i, k) * l.get(j, k);
            }
            l.set(i, j, v / djj);
        }
    }
    Ok(l)
}

/// Solves A x = b given the lower Cholesky factor of A.
pub fn cholesky_solve(l: &DMat, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    assert_eq!(b.len(), n, "cholesky_solve rhs dimension mismatch");
    let mut y = b.to_vec();
    for i in 0..n {
        let mut acc = y[i];
        for k in 0..i {
            acc -= l.get(i, k) * y[k];
        }
        y[i] = acc / l.get(i, i);
    }
    for i in (0..n).rev() {
        let mut acc = y[i];
        for k in (i + 1)..n {
            acc -= l.get(k, i) * y[k];
        }
        y[i] = acc / l.get(i, i);
    }
    y
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn norm_inf(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_rank_one() {
        // [[1,1],[1,1]] has eigenvalues {2, 0}, first vector (1,1)/sqrt(2)
        let a = DMat::from_fn(2, 2, |_, _| 1.0);
        let (l, v) = jacobi_eigh(&a).unwrap();
        assert!((l[0] - 2.0).abs() < 1e-14);
        assert!(l[1].abs() < 1e-14);
        let s = 1.0 / 2f64.sqrt();
        let v0 = (v.get(0, 0), v.get(1, 0));
        assert!((v0.0.abs() - s).abs() < 1e-12 && (v0.1.abs() - s).abs() < 1e-12);
        assert!((v0.0 - v0.1).abs() < 1e-12, "components share a sign");
    }

    #[test]
    fn jacobi_identity() {
        let a = DMat::identity(5);
        let (l, _) = jacobi_eigh(&a).unwrap();
        for li in l {
            assert!((li - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn jacobi_residual_and_trace_random_spd() {
        let n = 10;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let g = DMat::from_fn(n, n, |_, _| next());
        // SPD by construction
        let a = g.mat_mul(&g.transpose());
        let (l, v) = jacobi_eigh(&a).unwrap();

        let trace: f64 = (0..n).map(|i| a.get(i, i)).sum();
        let lsum: f64 = l.iter().sum();
        assert!((trace - lsum).abs() <= 1e-10 * trace.abs());

        // residual ||AV - V diag(l)||_F <= 1e-10 ||A||_F
        let av = a.mat_mul(&v);
        let mut resid = 0.0;
        for j in 0..n {
            for i in 0..n {
                let r = av.get(i, j) - v.get(i, j) * l[j];
                resid += r * r;
            }
        }
        assert!(resid.sqrt() <= 1e-10 * a.frobenius_norm());

        // orthonormal columns
        let vtv = v.transpose().mat_mul(&v);
        for j in 0..n {
            for i in 0..n {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((vtv.get(i, j) - expect).abs() < 1e-12);
            }
        }
        // sorted descending
        for i in 1..n {
            assert!(l[i - 1] >= l[i]);
        }
    }

    #[test]
    fn lu_and_cholesky_agree() {
        let n = 8;
        let mut state = 42u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let g = DMat::from_fn(n, n, |_, _| next());
        let mut a = g.mat_mul(&g.transpose());
        for i in 0..n {
            a.add_to(i, i, 1.0);
        }
        let b: Vec<f64> = (0..n).map(|i| (i as f64) - 2.5).collect();
        let x1 = lu_solve(a.clone(), &b).unwrap();
        let l = cholesky(&a).unwrap();
        let x2 = cholesky_solve(&l, &b);
        for (u, w) in x1.iter().zip(&x2) {
            assert!((u - w).abs() < 1e-10);
        }
        // check residual
        let r = a.mul_vec(&x1);
        for (ri, bi) in r.iter().zip(&b) {
            assert!((ri - bi).abs() < 1e-10);
        }
    }

    #[test]
    fn lu_singular_reports_error() {
        let a = DMat::zeros(3, 3);
        assert!(lu_solve(a, &[1.0, 2.0, 3.0]).is_err());
    }
}
