//! Links presented as braid closures.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::engine::{digits, LocalOp, StateVec};
use crate::error::{Error, Result};
use crate::matrix::SparseMatrix;
use crate::repdata::{RepData, DIM};
use crate::ring::{ext_to_pq, p_degree_stats, BiLaurent, ExtScalar, UniLaurent};

/// Default cap on the number of strands, overridable by `LG_MAX_STRANDS`.
pub const DEFAULT_MAX_STRANDS: usize = 8;

pub fn max_strands() -> usize {
    std::env::var("LG_MAX_STRANDS").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MAX_STRANDS)
}

/// A braid word on `strands` strands; letter `±i` is the generator
/// `σ_i^{±1}` crossing strands `i` and `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("a braid needs at least one strand".into()));
        }
        if let Some(bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::Parse(format!("letter {bad} is not a generator on {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Strand count inferred as `max|letter| + 1`.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        Self::new(strands, letters)
    }

    /// Parse `n=3; 1 -2 1 -2`; the `n=` prefix is optional.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (strands, body) = match text.split_once(';') {
            Some((head, body)) => {
                let head = head.trim();
                let n = head
                    .strip_prefix("n=")
                    .or_else(|| head.strip_prefix("n ="))
                    .ok_or_else(|| Error::Parse(format!("expected `n=<strands>;`, got {head:?}")))?;
                let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad strand count {n:?}")))?;
                (Some(n), body)
            }
            None => (None, text),
        };
        let letters = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match strands {
            Some(n) => Self::new(n, letters),
            None => Self::from_letters(letters),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// Conjugate by moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Markov stabilization: add a strand and the letter `±n`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// `(σ_1)^k` on two strands: the torus link `T(2,k)`, with parallel
    /// orientation when `k` is even.
    pub fn torus2(k: i32) -> Self {
        let letter = if k >= 0 { 1 } else { -1 };
        BraidWord { strands: 2, letters: vec![letter; k.unsigned_abs() as usize] }
    }

    /// The boundary `H_n` of an annulus with `-n` full twists: the
    /// `(2, 2n)` torus link with antiparallel orientation and linking
    /// number `n`. Realized on `n + 1` strands by an unknotted axis strand
    /// wrapped `n` times by a second component; `H_{-n}` is the mirror.
    pub fn hopf(n: i32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        let m = n.abs();
        let mut letters: Vec<i32> = (1..m).map(|i| -i).collect();
        letters.extend((2..=m).rev());
        letters.push(1);
        letters.extend(1..=m);
        let b = BraidWord { strands: m as usize + 1, letters };
        Ok(if n > 0 { b } else { b.mirror() })
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        count
    }

    /// Image of each strand position after the whole word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

pub fn mirror(b: &BraidWord) -> BraidWord {
    b.mirror()
}

fn check_size(b: &BraidWord) -> Result<()> {
    let cap = max_strands();
    if b.strands > cap {
        return Err(Error::ResourceLimit(format!(
            "{} strands exceeds the cap of {cap} (set LG_MAX_STRANDS to raise it)",
            b.strands
        )));
    }
    Ok(())
}

/// The closed `(1,1)`-operator on `V`: the braid with every strand except
/// `open` (0-based) closed, strands to the right of it by right traces with
/// the pivot and strands to its left by left traces with the inverse pivot.
pub fn closed_operator(b: &BraidWord, rep: &RepData, open: usize) -> Result<SparseMatrix> {
    check_size(b)?;
    let n = b.strands;
    assert!(open < n, "open strand out of range");
    let pos_op = LocalOp::from_matrix(&rep.braiding, 2, 2);
    let neg_op = LocalOp::from_matrix(&rep.braiding_inverse, 2, 2);
    let ops: Vec<(&LocalOp, usize)> = b
        .letters
        .iter()
        .map(|&l| (if l > 0 { &pos_op } else { &neg_op }, l.unsigned_abs() as usize - 1))
        .collect();
    let closed_dim = DIM.pow(n as u32 - 1);
    let open_scale = DIM.pow((n - 1 - open) as u32);
    let split = |idx: usize| {
        let (hi, lo) = (idx / open_scale, idx % open_scale);
        (hi % DIM, (hi / DIM) * open_scale + lo)
    };
    let join = |j: usize, x: usize| ((x / open_scale) * DIM + j) * open_scale + x % open_scale;
    let weight = |x: usize| {
        let mut w = ExtScalar::one();
        let ds = digits(join(0, x), n);
        for (k, d) in ds.into_iter().enumerate() {
            if k < open {
                w = &w * &rep.pivot_inverse[d];
            } else if k > open {
                w = &w * &rep.pivot[d];
            }
        }
        w
    };
    let partial = (0..closed_dim)
        .into_par_iter()
        .map(|x| {
            let mut cols = vec![vec![ExtScalar::zero(); DIM]; DIM];
            let w = weight(x);
            for (i, col) in cols.iter_mut().enumerate() {
                let mut v = StateVec::new();
                v.insert(join(i, x), ExtScalar::one());
                for (op, pos) in &ops {
                    v = op.apply(&v, n, *pos);
                }
                for (idx, val) in v {
                    let (j, y) = split(idx);
                    if y == x {
                        col[j] += &(&val * &w);
                    }
                }
            }
            cols
        })
        .reduce(
            || vec![vec![ExtScalar::zero(); DIM]; DIM],
            |mut a, b| {
                for (ca, cb) in a.iter_mut().zip(b) {
                    for (x, y) in ca.iter_mut().zip(cb) {
                        *x += &y;
                    }
                }
                a
            },
        );
    let mut out = SparseMatrix::zeros(DIM, DIM);
    for (i, col) in partial.into_iter().enumerate() {
        for (j, v) in col.into_iter().enumerate() {
            out.set(j, i, v);
        }
    }
    Ok(out)
}

/// `LG(L; p, q)` of the closure, with strand 1 left open.
pub fn lg(b: &BraidWord, rep: &RepData) -> Result<BiLaurent> {
    lg_open(b, rep, 0)
}

/// As [`lg`], leaving strand `open` (0-based) open instead.
pub fn lg_open(b: &BraidWord, rep: &RepData, open: usize) -> Result<BiLaurent> {
    let m = closed_operator(b, rep, open)?;
    let s = m.as_scalar().ok_or_else(|| Error::NonScalarResult(format!("closure of {b} is not a multiple of id")))?;
    ext_to_pq(&s)
}

/// Highest `p`-degree of `LG` and its coefficient.
pub fn lg_top(b: &BraidWord, rep: &RepData) -> Result<(i32, UniLaurent)> {
    let (deg, _, top) = p_degree_stats(&lg(b, rep)?)?;
    Ok((deg, top))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let b = BraidWord::parse("n=3; 1 -2 1 -2").unwrap();
        assert_eq!((b.strands(), b.letters()), (3, &[1, -2, 1, -2][..]));
        assert_eq!(b.to_string(), "n=3; 1 -2 1 -2");
        assert_eq!(BraidWord::parse("1 1 1").unwrap().strands(), 2);
        assert_eq!(BraidWord::parse("").unwrap().strands(), 1);
        assert_eq!(BraidWord::parse("n=1;").unwrap().letters(), &[] as &[i32]);
        assert!(BraidWord::parse("n=2; 2").is_err());
        assert!(BraidWord::parse("1 x").is_err());
        assert!(BraidWord::parse("0").is_err());
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(BraidWord::parse("1 1 1").unwrap().mirror().letters(), &[-1, -1, -1]);
        assert_eq!(BraidWord::parse("n=1;").unwrap().mirror().letters(), &[] as &[i32]);
        assert_eq!(BraidWord::parse("2 -1").unwrap().mirror().letters(), &[-2, 1]);
    }

    #[test]
    fn hopf_words() {
        assert_eq!(BraidWord::hopf(1).unwrap().letters(), &[1, 1]);
        assert_eq!(BraidWord::hopf(2).unwrap().letters(), &[-1, 2, 1, 1, 2]);
        assert_eq!(BraidWord::hopf(3).unwrap().letters(), &[-1, -2, 3, 2, 1, 1, 2, 3]);
        for n in 1..6 {
            assert_eq!(BraidWord::hopf(n).unwrap().components(), 2);
        }
        assert_eq!(BraidWord::hopf(0), Err(Error::ZeroIndex));
    }

    #[test]
    fn components() {
        assert_eq!(BraidWord::parse("1 1 1").unwrap().components(), 1);
        assert_eq!(BraidWord::parse("1 1").unwrap().components(), 2);
        assert_eq!(BraidWord::parse("n=3;").unwrap().components(), 3);
    }
}
