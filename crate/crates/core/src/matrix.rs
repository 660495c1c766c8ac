//! Sparse matrices over [`ExtScalar`] and a fraction-free linear solver.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ring::ExtScalar;

/// Column-major sparse matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<BTreeMap<usize, ExtScalar>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![BTreeMap::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.cols[i].insert(i, ExtScalar::one());
        }
        m
    }

    pub fn scalar(n: usize, s: &ExtScalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    /// Build from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, ExtScalar)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            m.add_to(r, c, &v);
        }
        m
    }

    /// Build from columns given as sparse vectors.
    pub fn from_columns(rows: usize, cols: Vec<BTreeMap<usize, ExtScalar>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|c| c.into_iter().filter(|(r, v)| {
                assert!(*r < rows, "row index out of range");
                !v.is_zero()
            }).collect())
            .collect();
        SparseMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, ExtScalar> {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> ExtScalar {
        self.cols[c].get(&r).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExtScalar) {
        assert!(r < self.rows, "row index out of range");
        if v.is_zero() {
            self.cols[c].remove(&r);
        } else {
            self.cols[c].insert(r, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &ExtScalar) {
        assert!(r < self.rows, "row index out of range");
        add_into(&mut self.cols[c], r, v);
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    /// Entries in `(row, col)` order.
    pub fn entries(&self) -> Vec<(usize, usize, &ExtScalar)> {
        let mut out: Vec<_> =
            self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v))).collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    /// `self * rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows(), "dimension mismatch in composition");
        let cols = rhs.cols.iter().map(|col| self.apply(col)).collect();
        SparseMatrix { rows: self.rows, cols }
    }

    /// `self * v` for a sparse column vector.
    pub fn apply(&self, v: &BTreeMap<usize, ExtScalar>) -> BTreeMap<usize, ExtScalar> {
        let mut out = BTreeMap::new();
        for (k, x) in v {
            for (r, a) in &self.cols[*k] {
                add_into(&mut out, *r, &(a * x));
            }
        }
        out
    }

    /// Kronecker product; the index of `other` varies fastest.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let (orows, ocols) = (other.nrows(), other.ncols());
        let mut out = Self::zeros(self.rows * orows, self.ncols() * ocols);
        for (ca, col_a) in self.cols.iter().enumerate() {
            for (ra, a) in col_a {
                for (cb, col_b) in other.cols.iter().enumerate() {
                    for (rb, b) in col_b {
                        out.cols[ca * ocols + cb].insert(ra * orows + rb, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &ExtScalar) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v * s)).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows(), self.ncols()), (other.nrows(), other.ncols()), "dimension mismatch in sum");
        let mut out = self.clone();
        for (c, col) in other.cols.iter().enumerate() {
            for (r, v) in col {
                add_into(&mut out.cols[c], *r, v);
            }
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.scale(&-ExtScalar::one()))
    }

    /// `Some(s)` when the matrix is `s` times the identity.
    pub fn as_scalar(&self) -> Option<ExtScalar> {
        if self.rows != self.ncols() || self.rows == 0 {
            return None;
        }
        let s = self.get(0, 0);
        for (c, col) in self.cols.iter().enumerate() {
            if col.len() > 1 || col.keys().any(|r| *r != c) || self.get(c, c) != s {
                return None;
            }
        }
        Some(s)
    }

    /// All entries, column-major, including zeros.
    pub fn flatten(&self) -> Vec<ExtScalar> {
        let mut out = Vec::with_capacity(self.rows * self.ncols());
        for c in 0..self.ncols() {
            for r in 0..self.rows {
                out.push(self.get(r, c));
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<ExtScalar>> {
        (0..self.rows).map(|r| (0..self.ncols()).map(|c| self.get(r, c)).collect()).collect()
    }
}

pub(crate) fn add_into(v: &mut BTreeMap<usize, ExtScalar>, k: usize, x: &ExtScalar) {
    if x.is_zero() {
        return;
    }
    match v.get_mut(&k) {
        Some(e) => {
            *e += x;
            if e.is_zero() {
                v.remove(&k);
            }
        }
        None => {
            v.insert(k, x.clone());
        }
    }
}

/// Outcome of [`solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// One solution (free unknowns set to zero), `n x k`.
    Unique(Vec<Vec<ExtScalar>>, usize),
    /// `A x = b` has no solution over the fraction field.
    Inconsistent,
    /// A solution exists over the fraction field but not over the ring.
    NotIntegral,
}

/// Solve `A X = B` by fraction-free Gauss-Jordan elimination (Bareiss).
///
/// Every intermediate entry is a minor of `[A | B]`, so each division by
/// the previous pivot is exact. The second field of [`Solution::Unique`]
/// is the rank of `A`.
pub fn solve(a: &[Vec<ExtScalar>], b: &[Vec<ExtScalar>]) -> Solution {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    let k = b.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<ExtScalar>> =
        a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb.iter()).cloned().collect()).collect();
    let width = n + k;
    let mut prev = ExtScalar::one();
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..n {
        let rank = pivots.len();
        let Some(p) = (rank..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank {
                continue;
            }
            let factor = row[col].clone();
            if factor.is_zero() && prev.is_one() && pv.is_one() {
                continue;
            }
            for j in 0..width {
                if j == col {
                    continue;
                }
                let lhs = &pv * &row[j];
                let rhs = if factor.is_zero() || pivot_row[j].is_zero() {
                    ExtScalar::zero()
                } else {
                    &factor * &pivot_row[j]
                };
                let num = &lhs - &rhs;
                row[j] = if num.is_zero() || prev.is_one() {
                    num
                } else {
                    num.exact_div(&prev).expect("Bareiss division is exact")
                };
            }
            row[col] = ExtScalar::zero();
        }
        prev = pv;
        pivots.push(col);
    }
    let rank = pivots.len();
    if rows[rank..].iter().any(|row| row[n..].iter().any(|x| !x.is_zero())) {
        return Solution::Inconsistent;
    }
    let mut x = vec![vec![ExtScalar::zero(); k]; n];
    for (r, &col) in pivots.iter().enumerate() {
        for j in 0..k {
            let num = &rows[r][n + j];
            match num.exact_div(&prev) {
                Some(v) => x[col][j] = v,
                None => return Solution::NotIntegral,
            }
        }
    }
    Solution::Unique(x, rank)
}

/// Rank over the fraction field of the given vectors.
pub fn rank(vectors: &[Vec<ExtScalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let len = vectors[0].len();
    let a: Vec<Vec<ExtScalar>> = (0..len).map(|i| vectors.iter().map(|v| v[i].clone()).collect()).collect();
    let b: Vec<Vec<ExtScalar>> = vec![Vec::new(); len];
    match solve(&a, &b) {
        Solution::Unique(_, r) => r,
        _ => unreachable!("homogeneous system is consistent"),
    }
}

/// Inverse of a square matrix, if it exists over the ring.
pub fn inverse(m: &SparseMatrix) -> Option<SparseMatrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    let ident = SparseMatrix::identity(n).to_dense();
    match solve(&m.to_dense(), &ident) {
        Solution::Unique(x, r) if r == n => {
            Some(SparseMatrix::from_entries(n, n, x.into_iter().enumerate().flat_map(|(i, row)| {
                row.into_iter().enumerate().map(move |(j, v)| (i, j, v))
            })))
        }
        _ => None,
    }
}
