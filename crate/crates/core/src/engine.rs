//! Block-local sparse contraction: applying a map that touches a few
//! adjacent tensor factors to a sparse state vector on `V^{⊗m}`.

use std::collections::BTreeMap;

use crate::matrix::{add_into, SparseMatrix};
use crate::repdata::DIM;
use crate::ring::ExtScalar;

pub type StateVec = BTreeMap<usize, ExtScalar>;

/// Map from `width_in` adjacent factors to `width_out` factors, tabulated
/// column by column.
#[derive(Clone, Debug)]
pub struct LocalOp {
    pub width_in: u32,
    pub width_out: u32,
    table: Vec<Vec<(usize, ExtScalar)>>,
}

impl LocalOp {
    pub fn from_matrix(m: &SparseMatrix, width_in: u32, width_out: u32) -> Self {
        assert_eq!(m.ncols(), DIM.pow(width_in));
        assert_eq!(m.nrows(), DIM.pow(width_out));
        let table = (0..m.ncols()).map(|c| m.column(c).iter().map(|(r, v)| (*r, v.clone())).collect()).collect();
        LocalOp { width_in, width_out, table }
    }

    /// Apply at factors `pos .. pos + width_in` (0-based) of a vector on `len` factors.
    pub fn apply(&self, v: &StateVec, len: usize, pos: usize) -> StateVec {
        let suffix_len = len - pos - self.width_in as usize;
        let suffix_dim = DIM.pow(suffix_len as u32);
        let in_dim = DIM.pow(self.width_in);
        let out_dim = DIM.pow(self.width_out);
        let mut out = StateVec::new();
        for (idx, x) in v {
            let suffix = idx % suffix_dim;
            let rest = idx / suffix_dim;
            let (prefix, local) = (rest / in_dim, rest % in_dim);
            for (lo, s) in &self.table[local] {
                let new = (prefix * out_dim + lo) * suffix_dim + suffix;
                add_into(&mut out, new, &(x * s));
            }
        }
        out
    }
}

/// Digits of a basis index on `len` factors, most significant first.
pub fn digits(mut idx: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = idx % DIM;
        idx /= DIM;
    }
    out
}
