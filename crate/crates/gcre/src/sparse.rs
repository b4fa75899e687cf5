//! Sparse matrix assembly and direct solves.
//!
//! Assembly accumulates triplets and compresses to CSR; factorizations go
//! through faer (sparse Cholesky for SPD systems, sparse LU for the
//! equality-constrained saddle systems of the flux recovery).

use crate::error::{Error, Result};
use faer::sparse::{SparseColMat, Triplet};

/// Triplet accumulator for a sparse matrix.
#[derive(Debug, Clone)]
pub struct Triplets {
    nrows: usize,
    ncols: usize,
    entries: Vec<(usize, usize, f64)>,
}

impl Triplets {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, row: usize, col: usize, val: f64) {
        debug_assert!(row < self.nrows && col < self.ncols);
        if val != 0.0 {
            self.entries.push((row, col, val));
        }
    }

    pub fn to_csr(&self) -> Csr {
        let mut indptr = vec![0usize; self.nrows + 1];
        for &(r, _, _) in &self.entries {
            indptr[r + 1] += 1;
        }
        for i in 0..self.nrows {
            indptr[i + 1] += indptr[i];
        }
        let nnz = indptr[self.nrows];
        let mut indices = vec![0usize; nnz];
        let mut data = vec![0f64; nnz];
        let mut cursor = indptr.clone();
        for &(r, c, v) in &self.entries {
            indices[cursor[r]] = c;
            data[cursor[r]] = v;
            cursor[r] += 1;
        }
        // sort each row by column and merge duplicates
        let mut out_indices = Vec::with_capacity(nnz);
        let mut out_data = Vec::with_capacity(nnz);
        let mut out_indptr = vec![0usize; self.nrows + 1];
        let mut row_buf: Vec<(usize, f64)> = Vec::new();
        for r in 0..self.nrows {
            row_buf.clear();
            for k in indptr[r]..indptr[r + 1] {
                row_buf.push((indices[k], data[k]));
            }
            row_buf.sort_unstable_by_key(|e| e.0);
            let mut i = 0;
            while i < row_buf.len() {
                let col = row_buf[i].0;
                let mut sum = 0.0;
                while i < row_buf.len() && row_buf[i].0 == col {
                    sum += row_buf[i].1;
                    i += 1;
                }
                out_indices.push(col);
                out_data.push(sum);
            }
            out_indptr[r + 1] = out_indices.len();
        }
        Csr {
            nrows: self.nrows,
            ncols: self.ncols,
            indptr: out_indptr,
            indices: out_indices,
            data: out_data,
        }
    }
}

/// Compressed sparse row matrix.
#[derive(Debug, Clone)]
pub struct Csr {
    pub nrows: usize,
    pub ncols: usize,
    pub indptr: Vec<usize>,
    pub indices: Vec<usize>,
    pub data: Vec<f64>,
}

impl Csr {
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        (self.indptr[r]..self.indptr[r + 1]).map(move |k| (self.indices[k], self.data[k]))
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.ncols);
        let mut y = vec![0.0; self.nrows];
        for r in 0..self.nrows {
            let mut s = 0.0;
            for k in self.indptr[r]..self.indptr[r + 1] {
                s += self.data[k] * x[self.indices[k]];
            }
            y[r] = s;
        }
        y
    }

    /// Quadratic form x' A x.
    pub fn quad_form(&self, x: &[f64]) -> f64 {
        self.matvec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Extract the square submatrix on `keep` rows/columns.
    /// `keep_index[old] = Some(new)` must be consistent with `keep`.
    pub fn submatrix(&self, keep: &[usize], keep_index: &[Option<usize>]) -> Csr {
        let mut t = Triplets::new(keep.len(), keep.len());
        for (new_r, &old_r) in keep.iter().enumerate() {
            for k in self.indptr[old_r]..self.indptr[old_r + 1] {
                if let Some(new_c) = keep_index[self.indices[k]] {
                    t.push(new_r, new_c, self.data[k]);
                }
            }
        }
        t.to_csr()
    }

    fn to_faer(&self) -> Result<SparseColMat<usize, f64>> {
        let triplets: Vec<Triplet<usize, usize, f64>> = (0..self.nrows)
            .flat_map(|r| self.row(r).map(move |(c, v)| Triplet::new(r, c, v)))
            .collect();
        SparseColMat::try_new_from_triplets(self.nrows, self.ncols, &triplets)
            .map_err(|e| Error::InvalidInput(format!("faer matrix construction: {e:?}")))
    }
}

/// Cached sparse Cholesky factorization of an SPD matrix.
pub struct SpdSolver {
    factor: faer::sparse::linalg::solvers::Llt<usize, f64>,
    n: usize,
}

impl SpdSolver {
    pub fn new(a: &Csr) -> Result<Self> {
        assert_eq!(a.nrows, a.ncols);
        let m = a.to_faer()?;
        let factor = m
            .sp_cholesky(faer::Side::Lower)
            .map_err(|e| Error::NotSpd(format!("sparse Cholesky failed: {e:?}")))?;
        Ok(Self { factor, n: a.nrows })
    }

    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        assert_eq!(rhs.len(), self.n);
        let mut b = faer::Mat::from_fn(self.n, 1, |i, _| rhs[i]);
        use faer::linalg::solvers::Solve;
        self.factor.solve_in_place(b.as_mut());
        (0..self.n).map(|i| b[(i, 0)]).collect()
    }
}

/// Solve the saddle system
///
/// ```text
/// [ M  B' ] [x]   [c]
/// [ B  0  ] [y] = [d]
/// ```
///
/// with `M` SPD of size n and `B` of size m-by-n with full row rank, via one
/// sparse LU of the assembled KKT matrix. Returns `(x, y)`.
pub fn solve_kkt(m: &Csr, b: &Csr, c: &[f64], d: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = m.nrows;
    let k = b.nrows;
    assert_eq!(m.ncols, n);
    assert_eq!(b.ncols, n);
    assert_eq!(c.len(), n);
    assert_eq!(d.len(), k);
    let mut triplets: Vec<Triplet<usize, usize, f64>> = Vec::new();
    for r in 0..n {
        for (col, v) in m.row(r) {
            triplets.push(Triplet::new(r, col, v));
        }
    }
    for r in 0..k {
        for (col, v) in b.row(r) {
            triplets.push(Triplet::new(n + r, col, v));
            triplets.push(Triplet::new(col, n + r, v));
        }
    }
    let kkt = SparseColMat::try_new_from_triplets(n + k, n + k, &triplets)
        .map_err(|e| Error::Equilibration(format!("KKT assembly: {e:?}")))?;
    let lu = kkt
        .sp_lu()
        .map_err(|e| Error::Equilibration(format!("KKT factorization failed (constraints may be rank deficient): {e:?}")))?;
    let mut rhs = faer::Mat::from_fn(n + k, 1, |i, _| if i < n { c[i] } else { d[i - n] });
    use faer::linalg::solvers::Solve;
    lu.solve_in_place(rhs.as_mut());
    let x = (0..n).map(|i| rhs[(i, 0)]).collect();
    let y = (0..k).map(|i| rhs[(n + i, 0)]).collect();
    Ok((x, y))
}

/// Kahan-compensated sum, used by the estimator reductions where identities
/// are checked near machine precision.
pub fn kahan_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csr_assembly_merges_duplicates() {
        let mut t = Triplets::new(2, 2);
        t.push(0, 0, 1.0);
        t.push(0, 0, 2.0);
        t.push(1, 0, -1.0);
        t.push(0, 1, 4.0);
        let a = t.to_csr();
        assert_eq!(a.matvec(&[1.0, 1.0]), vec![7.0, -1.0]);
    }

    #[test]
    fn spd_solve_roundtrip() {
        // 1D Laplacian, n = 5
        let n = 5;
        let mut t = Triplets::new(n, n);
        for i in 0..n {
            t.push(i, i, 2.0);
            if i > 0 {
                t.push(i, i - 1, -1.0);
            }
            if i + 1 < n {
                t.push(i, i + 1, -1.0);
            }
        }
        let a = t.to_csr();
        let x_true: Vec<f64> = (0..n).map(|i| (i as f64) - 2.0).collect();
        let rhs = a.matvec(&x_true);
        let solver = SpdSolver::new(&a).unwrap();
        let x = solver.solve(&rhs);
        for (a, b) in x.iter().zip(&x_true) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn kkt_matches_hand_solution() {
        // min 1/2 (x0^2 + x1^2) s.t. x0 + x1 = 2 -> x = (1, 1)
        let mut m = Triplets::new(2, 2);
        m.push(0, 0, 1.0);
        m.push(1, 1, 1.0);
        let mut b = Triplets::new(1, 2);
        b.push(0, 0, 1.0);
        b.push(0, 1, 1.0);
        let (x, y) = solve_kkt(&m.to_csr(), &b.to_csr(), &[0.0, 0.0], &[2.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-14 && (x[1] - 1.0).abs() < 1e-14);
        assert_eq!(y.len(), 1);
    }
}
