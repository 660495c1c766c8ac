//! The four-dimensional module: braiding, inverse braiding and pivot, with
//! the validation suite every transcription must pass.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{inverse, solve, SparseMatrix, Solution};
use crate::ring::{w_poly, ExtScalar};

/// Dimension of `V`.
pub const DIM: usize = 4;

/// Validated representation data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepData {
    /// `c : V⊗V -> V⊗V` in the basis `e11, e12, ..., e44`.
    pub braiding: SparseMatrix,
    pub braiding_inverse: SparseMatrix,
    /// Diagonal of the pivot `G = diag(s0^-2, -s1^2, -s0^-2, s1^2)`.
    pub pivot: [ExtScalar; DIM],
    /// Diagonal of `G^-1`.
    pub pivot_inverse: [ExtScalar; DIM],
    /// Which closure sides turned the braiding into the identity.
    pub ribbon_sides: RibbonSides,
}

/// Result of closing one strand of the braiding on either side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RibbonSides {
    /// Right strand closed with `G`.
    pub right: bool,
    /// Left strand closed with `G^-1`.
    pub left: bool,
}

/// Basis index of `e_ab` with `a, b` in `1..=4`.
pub fn basis(a: usize, b: usize) -> usize {
    (a - 1) * DIM + (b - 1)
}

/// The transcribed nonzero entries `(row, col, value)` of the braiding.
pub fn braiding_entries() -> Vec<(usize, usize, ExtScalar)> {
    let m = ExtScalar::mono;
    let t0 = m(2, 0, 1);
    let t1 = m(0, 2, 1);
    let one = ExtScalar::one();
    let s0 = m(1, 0, 1);
    let s1 = m(0, 1, 1);
    let y = ExtScalar::y();
    let neg_s0s1 = m(1, 1, -1);
    let neg_s0s1_y = &neg_s0s1 * &y;
    let w = ExtScalar::from_even(w_poly().clone());
    let raw = [
        ((1, 1), (1, 1), t0.clone()),
        ((1, 2), (2, 1), s0.clone()),
        ((1, 3), (3, 1), s0.clone()),
        ((1, 4), (4, 1), one.clone()),
        ((2, 1), (1, 2), s0.clone()),
        ((2, 1), (2, 1), &t0 - &one),
        ((2, 2), (2, 2), -one.clone()),
        ((2, 3), (2, 3), &(&t0 * &t1) - &one),
        ((2, 3), (3, 2), neg_s0s1.clone()),
        ((2, 3), (4, 1), neg_s0s1_y.clone()),
        ((2, 4), (4, 2), s1.clone()),
        ((3, 1), (1, 3), s0.clone()),
        ((3, 1), (3, 1), &t0 - &one),
        ((3, 2), (2, 3), neg_s0s1),
        ((3, 2), (4, 1), y.clone()),
        ((3, 3), (3, 3), -one.clone()),
        ((3, 4), (4, 3), s1.clone()),
        ((4, 1), (1, 4), one.clone()),
        ((4, 1), (2, 3), neg_s0s1_y),
        ((4, 1), (3, 2), y),
        ((4, 1), (4, 1), w),
        ((4, 2), (2, 4), s1.clone()),
        ((4, 2), (4, 2), &t1 - &one),
        ((4, 3), (3, 4), s1),
        ((4, 3), (4, 3), &t1 - &one),
        ((4, 4), (4, 4), t1),
    ];
    raw.into_iter().map(|((a, b), (c, d), v)| (basis(a, b), basis(c, d), v)).collect()
}

pub fn transcribed_braiding() -> SparseMatrix {
    SparseMatrix::from_entries(DIM * DIM, DIM * DIM, braiding_entries())
}

fn pivot_diag() -> [ExtScalar; DIM] {
    let m = ExtScalar::mono;
    [m(-2, 0, 1), m(0, 2, -1), m(-2, 0, -1), m(0, 2, 1)]
}

/// Load the transcribed data and run the full validation suite.
pub fn load_rep() -> Result<RepData> {
    RepData::from_braiding(transcribed_braiding())
}

/// `Σ_k w_k m[(i,k),(j,k)]` for an endomorphism of `X ⊗ V`.
pub fn trace_last(m: &SparseMatrix, weights: &[ExtScalar; DIM]) -> SparseMatrix {
    let d = m.nrows() / DIM;
    let mut out = SparseMatrix::zeros(d, d);
    for c in 0..m.ncols() {
        let (j, k) = (c / DIM, c % DIM);
        for (r, v) in m.column(c) {
            if r % DIM == k {
                out.add_to(r / DIM, j, &(v * &weights[k]));
            }
        }
    }
    out
}

/// `Σ_k w_k m[(k,i),(k,j)]` for an endomorphism of `V ⊗ X`.
pub fn trace_first(m: &SparseMatrix, weights: &[ExtScalar; DIM]) -> SparseMatrix {
    let d = m.nrows() / DIM;
    let mut out = SparseMatrix::zeros(d, d);
    for c in 0..m.ncols() {
        let (k, j) = (c / d, c % d);
        for (r, v) in m.column(c) {
            if r / d == k {
                out.add_to(r % d, j, &(v * &weights[k]));
            }
        }
    }
    out
}

impl RepData {
    /// Validate a candidate braiding together with the fixed pivot.
    ///
    /// Checks, in order: Yang-Baxter, invertibility, quantum dimension zero,
    /// ribbon element acting as one. The first failure is reported.
    pub fn from_braiding(braiding: SparseMatrix) -> Result<RepData> {
        let n = DIM * DIM;
        if braiding.nrows() != n || braiding.ncols() != n {
            return Err(Error::TranscriptionError("shape 16x16".into()));
        }
        if !yang_baxter_holds(&braiding) {
            return Err(Error::TranscriptionError("Yang-Baxter equation".into()));
        }
        let braiding_inverse =
            inverse(&braiding).ok_or_else(|| Error::TranscriptionError("invertibility of the braiding".into()))?;
        if braiding.compose(&braiding_inverse) != SparseMatrix::identity(n) {
            return Err(Error::TranscriptionError("braiding * braiding_inverse = id".into()));
        }
        let pivot = pivot_diag();
        let pivot_inverse = [0, 1, 2, 3].map(|k| {
            ExtScalar::one().exact_div(&pivot[k]).expect("pivot entries are units")
        });
        let trace = pivot.iter().fold(ExtScalar::zero(), |acc, g| &acc + g);
        if !trace.is_zero() {
            return Err(Error::TranscriptionError("quantum dimension zero".into()));
        }
        let ident = SparseMatrix::identity(DIM);
        let ribbon_sides = RibbonSides {
            right: trace_last(&braiding, &pivot) == ident,
            left: trace_first(&braiding, &pivot_inverse) == ident,
        };
        if !ribbon_sides.right {
            return Err(Error::TranscriptionError("ribbon element acts as 1".into()));
        }
        Ok(RepData { braiding, braiding_inverse, pivot, pivot_inverse, ribbon_sides })
    }

    /// Ordinary trace of the pivot.
    pub fn quantum_dimension(&self) -> ExtScalar {
        self.pivot.iter().fold(ExtScalar::zero(), |acc, g| &acc + g)
    }

    /// Debug dump, one entry per line: `row col : value` with basis labels.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let label = |i: usize| format!("{}{}", i / DIM + 1, i % DIM + 1);
        for (name, m) in [("braiding", &self.braiding), ("braiding_inverse", &self.braiding_inverse)] {
            let _ = writeln!(out, "# {name}");
            for (r, c, v) in m.entries() {
                let _ = writeln!(out, "{} {} : {v}", label(r), label(c));
            }
        }
        let _ = writeln!(out, "# pivot");
        for (k, g) in self.pivot.iter().enumerate() {
            let _ = writeln!(out, "{} {} : {g}", k + 1, k + 1);
        }
        out
    }
}

/// `(c⊗1)(1⊗c)(c⊗1) = (1⊗c)(c⊗1)(1⊗c)` on `V⊗V⊗V`.
pub fn yang_baxter_holds(c: &SparseMatrix) -> bool {
    let id = SparseMatrix::identity(DIM);
    let a = c.kron(&id);
    let b = id.kron(c);
    a.compose(&b).compose(&a) == b.compose(&a).compose(&b)
}

/// Coefficients `(x2, x1, x0)` with `c^3 = x2 c^2 + x1 c + x0 id`.
pub fn cubic_minimal_polynomial(c: &SparseMatrix) -> Result<(ExtScalar, ExtScalar, ExtScalar)> {
    let n = c.nrows();
    let c2 = c.compose(c);
    let c3 = c2.compose(c);
    let cols = [c2.flatten(), c.flatten(), SparseMatrix::identity(n).flatten()];
    let rhs = c3.flatten();
    let a: Vec<Vec<ExtScalar>> = (0..rhs.len()).map(|i| cols.iter().map(|v| v[i].clone()).collect()).collect();
    let b: Vec<Vec<ExtScalar>> = rhs.into_iter().map(|x| vec![x]).collect();
    let Solution::Unique(x, _) = solve(&a, &b) else {
        return Err(Error::NoCubicRelation);
    };
    let [x2, x1, x0] = [x[0][0].clone(), x[1][0].clone(), x[2][0].clone()];
    let check = c2.scale(&x2).add(&c.scale(&x1)).add(&SparseMatrix::scalar(n, &x0));
    if check != c3 {
        return Err(Error::NoCubicRelation);
    }
    Ok((x2, x1, x0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ext_to_pq, parse_bilaurent};

    #[test]
    fn transcription_validates() {
        let rep = load_rep().unwrap();
        assert!(rep.quantum_dimension().is_zero());
        assert!(rep.ribbon_sides.right);
        assert_eq!(rep.braiding.compose(&rep.braiding_inverse), SparseMatrix::identity(16));
    }

    #[test]
    fn both_closure_sides_give_one() {
        let rep = load_rep().unwrap();
        assert!(rep.ribbon_sides.left);
    }

    #[test]
    fn cubic_relation_has_eigenvalues_t0_minus1_t1() {
        let rep = load_rep().unwrap();
        let (x2, x1, x0) = cubic_minimal_polynomial(&rep.braiding).unwrap();
        let pq = |x: &ExtScalar| ext_to_pq(x).unwrap();
        // (c - t0)(c + 1)(c - t1) = 0 with t0 = q/p, t1 = p q
        assert_eq!(pq(&x2), parse_bilaurent("p^-1*q + p*q - 1").unwrap());
        assert_eq!(pq(&x1), parse_bilaurent("-q^2 + p^-1*q + p*q").unwrap());
        assert_eq!(pq(&x0), parse_bilaurent("-q^2").unwrap());
    }

    #[test]
    fn cubic_of_identity_is_some_valid_triple() {
        let id = SparseMatrix::identity(4);
        let (x2, x1, x0) = cubic_minimal_polynomial(&id).unwrap();
        assert!((&(&x2 + &x1) + &x0).is_one());
    }

    #[test]
    fn corrupted_entry_names_yang_baxter() {
        let mut c = transcribed_braiding();
        c.set(basis(2, 1), basis(1, 2), ExtScalar::mono(1, 0, 2));
        assert_eq!(
            RepData::from_braiding(c).unwrap_err(),
            Error::TranscriptionError("Yang-Baxter equation".into())
        );
    }

    #[test]
    fn dump_lists_every_entry() {
        let rep = load_rep().unwrap();
        let dump = rep.dump();
        assert!(dump.contains("11 11 : s0^2"));
        assert_eq!(dump.lines().filter(|l| l.contains(" : ")).count(), 26 + rep.braiding_inverse.nnz() + 4);
    }
}
