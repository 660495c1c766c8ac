//! Closed forms for antiparallel twists and the Hopf links `H_n`.

use crate::error::{Error, Result};
use crate::ring::{bar_involution, bi, int, lift_q, p_plus_pinv, q_pow, uni, BiLaurent, UniLaurent};

/// Coefficients of `n` antiparallel full twists in the basis clasp,
/// capcup, id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinCoeffs {
    pub n: i32,
    pub b: UniLaurent,
    pub c: BiLaurent,
    pub d: BiLaurent,
}

/// Numerator of `R`: `-q(p+p^-1) + q^2 + 1`; the denominator is `q^2 - 1`.
pub fn r_numerator() -> BiLaurent {
    bi(&[((1, 1), -1), ((-1, 1), -1), ((0, 2), 1), ((0, 0), 1)])
}

/// `1 + q^2 + ... + q^(2(n-1))`.
pub fn b_coeff(n: i32) -> UniLaurent {
    uni(&(0..n).map(|k| (2 * k, 1)).collect::<Vec<_>>())
}

pub fn skein_coeffs(n: i32) -> Result<SkeinCoeffs> {
    if n < 1 {
        return Err(Error::InvalidExpression(format!("twist count {n} must be positive")));
    }
    let b = b_coeff(n);
    let bl = lift_q(&b);
    let r = r_numerator();
    let q2_minus_1 = bi(&[((0, 2), 1), ((0, 0), -1)]);
    let q2_plus_1 = bi(&[((0, 2), 1), ((0, 0), 1)]);
    let inner = &(&q2_plus_1 * &r) + &q2_minus_1;
    let numerator = &r.scale(&int(2 * n as i64)) - &(&bl * &inner);
    let c = numerator
        .exact_div(&q2_minus_1)
        .ok_or_else(|| Error::InexactDivision(format!("C_{n} numerator by q^2-1")))?;
    let d = &(&bl * &r) + &BiLaurent::one();
    Ok(SkeinCoeffs { n, b, c, d })
}

/// `a_n(q) = (2n-1)q + (2n-3)q^3 + ... + q^(2n-1)`, and `a_n(q) = a_{-n}(q^-1)`
/// for negative `n`.
pub fn a_poly(n: i32) -> Result<UniLaurent> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let m = n.abs();
    let sign = n.signum();
    Ok(uni(&(0..m).map(|k| (sign * (2 * k + 1), (2 * (m - k) - 1) as i64)).collect::<Vec<_>>()))
}

/// `b_n(q) = -2n - Σ_{k<n} (4k+1) q^(2(n-k))`.
pub fn b_poly(n: i32) -> Result<UniLaurent> {
    if n < 1 {
        return Err(Error::InvalidExpression(format!("b_n needs n >= 1, got {n}")));
    }
    let mut terms = vec![(0, -2 * n as i64)];
    terms.extend((0..n).map(|k| (2 * (n - k), -(4 * k + 1) as i64)));
    Ok(uni(&terms))
}

/// `a_n` with its power of `q` stripped: an ordinary polynomial in `q^2`.
pub fn d_poly(n: i32) -> Result<UniLaurent> {
    let a = a_poly(n)?;
    let lo = a.trailing().expect("nonzero").0;
    Ok(a.mul_monomial(-lo, &int(1)))
}

/// `LG(H_n) = B_n + C_n`; negative `n` by the mirror rule.
pub fn lg_hopf(n: i32) -> Result<BiLaurent> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n < 0 {
        return Ok(bar_involution(&lg_hopf(-n)?));
    }
    let s = skein_coeffs(n)?;
    Ok(&lift_q(&s.b) + &s.c)
}

/// `g(q, p) = q^-1 (C_2 + B_2 D_1)`.
pub fn g_poly() -> Result<BiLaurent> {
    let s1 = skein_coeffs(1)?;
    let s2 = skein_coeffs(2)?;
    let sum = &s2.c + &(&lift_q(&s2.b) * &s1.d);
    Ok(&lift_q(&q_pow(-1)) * &sum)
}

/// `a_n` read off as the coefficient of `p` in `C_n`.
pub fn a_from_skein(n: i32) -> Result<UniLaurent> {
    Ok(crate::ring::p_coefficient(&skein_coeffs(n)?.c, 1))
}

/// `C_n - a_n (p + p^-1)`, which must be free of `p`.
pub fn b_from_skein(n: i32) -> Result<BiLaurent> {
    let s = skein_coeffs(n)?;
    Ok(&s.c - &(&lift_q(&a_poly(n)?) * &p_plus_pinv()))
}

impl SkeinCoeffs {
    /// `C_n` and `D_n` are of degree one in `p + p^-1`; `B_n` is free of `p`.
    pub fn shape_ok(&self) -> bool {
        let span = |f: &BiLaurent| {
            let ps: Vec<i32> = f.terms().keys().map(|(a, _)| *a).collect();
            ps.iter().max().zip(ps.iter().min()).map(|(hi, lo)| hi - lo)
        };
        !self.b.is_zero() && span(&self.c) == Some(2) && span(&self.d) == Some(2)
    }
}
