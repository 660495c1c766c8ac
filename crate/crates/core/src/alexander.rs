//! Alexander polynomial of a braid closure from the reduced Burau
//! representation; an independent oracle for the specializations of `LG`.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ring::{normalize, specialize, uni, BiLaurent, InVar, PTransform, QValue, UniLaurent};

/// Alexander polynomial in `p`, stored as the canonical representative of
/// its class up to `±p^k`. The zero class is allowed (split links).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexPoly {
    poly: UniLaurent,
}

impl AlexPoly {
    pub fn from_poly(f: &UniLaurent) -> Self {
        AlexPoly { poly: normalize(f) }
    }

    pub fn poly(&self) -> &UniLaurent {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for AlexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", InVar(&self.poly, "p"))
    }
}

/// Equality up to a unit `±p^k`.
pub fn same_up_to_unit(f: &UniLaurent, g: &UniLaurent) -> bool {
    normalize(f) == normalize(g)
}

type Mat = Vec<Vec<UniLaurent>>;

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { UniLaurent::one() } else { UniLaurent::zero() }).collect()).collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![UniLaurent::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Reduced Burau matrix of `σ_i^{±1}` on `n` strands (size `n-1`).
fn generator(n: usize, letter: i32) -> Mat {
    let mut m = identity(n - 1);
    let i = letter.unsigned_abs() as usize - 1;
    let (diag, above, below) = if letter > 0 {
        (uni(&[(1, -1)]), uni(&[(1, 1)]), UniLaurent::one())
    } else {
        (uni(&[(-1, -1)]), UniLaurent::one(), uni(&[(-1, 1)]))
    };
    m[i][i] = diag;
    if i >= 1 {
        m[i - 1][i] = above;
    }
    if i + 1 < n - 1 {
        m[i + 1][i] = below;
    }
    m
}

/// Determinant by fraction-free elimination.
fn det(mut m: Mat) -> UniLaurent {
    let n = m.len();
    let mut prev = UniLaurent::one();
    let mut sign = UniLaurent::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return UniLaurent::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UniLaurent::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return UniLaurent::one();
    }
    &sign * &m[n - 1][n - 1]
}

/// `det(I - ψ(b)) / (1 + p + ... + p^(n-1))`, up to units.
pub fn alexander(b: &BraidWord) -> Result<AlexPoly> {
    let n = b.strands();
    let mut m = identity(n - 1);
    for &l in b.letters() {
        m = mat_mul(&m, &generator(n, l));
    }
    let i_minus: Mat = (0..n - 1)
        .map(|i| {
            (0..n - 1)
                .map(|j| {
                    let d = if i == j { UniLaurent::one() } else { UniLaurent::zero() };
                    &d - &m[i][j]
                })
                .collect()
        })
        .collect();
    let d = det(i_minus);
    let norm = uni(&(0..n as i32).map(|k| (k, 1)).collect::<Vec<_>>());
    let delta = d.exact_div(&norm).ok_or_else(|| Error::InexactDivision("Burau determinant".into()))?;
    Ok(AlexPoly::from_poly(&delta))
}

/// `p -> p^2`.
fn square_variable(f: &UniLaurent) -> UniLaurent {
    f.map_exponents(|e| 2 * e)
}

/// The three specializations: `LG(p,1) ≐ Δ(p)^2`, `LG(-p,-1) ≐ Δ(p)^2` and
/// `LG(ip,i) ≐ Δ(p^2)`, each up to `±p^k`.
pub fn check_specializations(lg_value: &BiLaurent, alex: &AlexPoly) -> bool {
    let delta = alex.poly();
    let squared = delta * delta;
    let at_one = specialize(lg_value, QValue::One, PTransform::P);
    let at_minus = specialize(lg_value, QValue::MinusOne, PTransform::MinusP);
    let at_i = specialize(lg_value, QValue::I, PTransform::IP);
    if at_i.terms().values().any(|c| !c.is_real()) {
        return false;
    }
    same_up_to_unit(&at_one, &squared)
        && same_up_to_unit(&at_minus, &squared)
        && same_up_to_unit(&at_i, &square_variable(delta))
}
