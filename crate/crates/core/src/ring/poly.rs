use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianInt;
use super::laurent::Laurent;
use crate::error::{Error, Result};

/// Laurent polynomial in `q` over the Gaussian integers.
pub type UniLaurent = Laurent<i32, GaussianInt>;
/// Laurent polynomial in `(p, q)`; keys are `(p_exp, q_exp)`.
pub type BiLaurent = Laurent<(i32, i32), GaussianInt>;
/// Laurent polynomial in the square roots `(s0, s1)` over the integers.
pub type SLaurent = Laurent<(i32, i32), BigInt>;

/// Value substituted for `q` by [`specialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QValue {
    One,
    MinusOne,
    I,
}

/// Rewriting of `p` applied by [`specialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PTransform {
    P,
    MinusP,
    IP,
}

pub fn q_pow(e: i32) -> UniLaurent {
    UniLaurent::monomial(e, GaussianInt::one())
}

pub fn int(c: i64) -> GaussianInt {
    GaussianInt::from(c)
}

/// Polynomial in `q` from `(exponent, integer coefficient)` pairs.
pub fn uni(terms: &[(i32, i64)]) -> UniLaurent {
    UniLaurent::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
}

/// Polynomial in `(p, q)` from `((p_exp, q_exp), integer coefficient)` pairs.
pub fn bi(terms: &[((i32, i32), i64)]) -> BiLaurent {
    BiLaurent::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
}

/// `p + p^-1`.
pub fn p_plus_pinv() -> BiLaurent {
    bi(&[((1, 0), 1), ((-1, 0), 1)])
}

/// View a polynomial in `q` as a polynomial in `(p, q)` with no `p`.
pub fn lift_q(f: &UniLaurent) -> BiLaurent {
    f.map_exponents(|e| (0, e))
}

/// The `p^k` coefficient of `f`, a polynomial in `q`.
pub fn p_coefficient(f: &BiLaurent, k: i32) -> UniLaurent {
    UniLaurent::from_terms(f.terms().iter().filter(|((a, _), _)| *a == k).map(|((_, b), c)| (*b, c.clone())))
}

/// `q -> q^-1, p -> p^-1`.
pub fn bar_involution(f: &BiLaurent) -> BiLaurent {
    f.map_exponents(|(a, b)| (-a, -b))
}

/// `p -> p^-1` only.
pub fn p_inversion(f: &BiLaurent) -> BiLaurent {
    f.map_exponents(|(a, b)| (-a, b))
}

/// `q -> q^-1`.
pub fn q_bar(f: &UniLaurent) -> UniLaurent {
    f.map_exponents(|e| -e)
}

/// Substitute `q` and rewrite `p`; the result is a polynomial in `p`.
pub fn specialize(f: &BiLaurent, q_value: QValue, p_transform: PTransform) -> UniLaurent {
    let mut out = UniLaurent::zero();
    for ((a, b), c) in f.terms() {
        let q_part = match q_value {
            QValue::One => GaussianInt::one(),
            QValue::MinusOne => sign_pow(*b as i64),
            QValue::I => GaussianInt::i_pow(*b as i64),
        };
        let p_part = match p_transform {
            PTransform::P => GaussianInt::one(),
            PTransform::MinusP => sign_pow(*a as i64),
            PTransform::IP => GaussianInt::i_pow(*a as i64),
        };
        out.add_term(*a, &(&(c * &q_part) * &p_part));
    }
    out
}

fn sign_pow(k: i64) -> GaussianInt {
    if k.rem_euclid(2) == 0 {
        GaussianInt::one()
    } else {
        -GaussianInt::one()
    }
}

/// `(deg_p_plus, p_span, top_coeff)`.
pub fn p_degree_stats(f: &BiLaurent) -> Result<(i32, i32, UniLaurent)> {
    let max = f.leading().ok_or(Error::ZeroPolynomial)?.0 .0;
    let min = f.trailing().ok_or(Error::ZeroPolynomial)?.0 .0;
    Ok((max, max - min, p_coefficient(f, max)))
}

/// Exact quotient in `Z[i][q^±1]`.
pub fn exact_div(f: &UniLaurent, g: &UniLaurent) -> Result<UniLaurent> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.exact_div(g).ok_or(Error::NotDivisible)
}

/// A single term `±q^e`.
pub fn is_monic(f: &UniLaurent) -> bool {
    f.as_monomial().is_some_and(|(_, c)| c.is_one() || (-c.clone()).is_one())
}

/// Span of the exponents, `max - min`.
pub fn q_span(f: &UniLaurent) -> Option<i32> {
    f.bounds().map(|(lo, hi)| hi - lo)
}

/// Integer coefficients, if all imaginary parts vanish.
pub fn integer_coeffs(f: &UniLaurent) -> Option<Vec<(i32, BigInt)>> {
    f.terms().iter().map(|(e, c)| c.to_integer().map(|c| (*e, c))).collect()
}

/// Canonical representative of the unit class `±q^k f`: lowest exponent 0
/// and positive trailing coefficient (for real trailing coefficients).
pub fn normalize(f: &UniLaurent) -> UniLaurent {
    let Some((lo, c)) = f.trailing() else {
        return UniLaurent::zero();
    };
    let sign = if c.is_real() && c.re.is_negative() { -GaussianInt::one() } else { GaussianInt::one() };
    f.mul_monomial(-lo, &sign)
}

fn dense(f: &UniLaurent) -> Result<Vec<BigInt>> {
    let coeffs = integer_coeffs(f).ok_or_else(|| Error::Parse("non-real coefficient".into()))?;
    let lo = f.trailing().map(|(e, _)| e).unwrap_or(0);
    let hi = f.leading().map(|(e, _)| e).unwrap_or(0);
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in coeffs {
        v[(e - lo) as usize] = c;
    }
    Ok(v)
}

fn trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of dense polynomials, `deg a >= deg b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    let db = b.len() - 1;
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        r.pop();
        trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    trim(&mut r);
    r
}

/// Greatest common divisor over the rationals of two integer Laurent
/// polynomials, returned as a primitive integer polynomial in canonical
/// unit normalization. Units `q^k` are ignored.
pub fn gcd_rational(f: &UniLaurent, g: &UniLaurent) -> Result<UniLaurent> {
    let mut a = primitive(&dense(&normalize(f))?);
    let mut b = primitive(&dense(&normalize(g))?);
    let is_zero = |v: &[BigInt]| v.iter().all(|c| c.is_zero());
    if is_zero(&a) {
        std::mem::swap(&mut a, &mut b);
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !is_zero(&b) {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
    }
    let out = UniLaurent::from_terms(a.into_iter().enumerate().map(|(i, c)| (i as i32, GaussianInt::from(c))));
    Ok(normalize(&out))
}

pub(crate) fn write_poly<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (GaussianInt, Vec<(&'a str, i32)>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        let mono = vars
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*");
        let s = if mono.is_empty() {
            c.to_string()
        } else if c.is_one() {
            mono
        } else if c == -GaussianInt::one() {
            format!("-{mono}")
        } else {
            format!("{c}*{mono}")
        };
        if !first && !s.starts_with('-') {
            write!(f, "+")?;
        }
        write!(f, "{s}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for UniLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms().iter().map(|(e, c)| (c.clone(), vec![("q", *e)])))
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms().iter().map(|((a, b), c)| (c.clone(), vec![("p", *a), ("q", *b)])))
    }
}

impl fmt::Display for SLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms().iter().map(|((a, b), c)| (GaussianInt::from(c.clone()), vec![("s0", *a), ("s1", *b)])))
    }
}

/// Display a polynomial in one variable under a different variable name.
pub struct InVar<'a>(pub &'a UniLaurent, pub &'a str);

impl fmt::Display for InVar<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.0.terms().iter().map(|(e, c)| (c.clone(), vec![(self.1, *e)])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_examples() {
        assert_eq!(exact_div(&uni(&[(4, 1), (2, 3)]), &q_pow(2)).unwrap(), uni(&[(2, 1), (0, 3)]));
        let f = uni(&[(2, 9), (4, 6), (6, 1)]);
        assert_eq!(exact_div(&f, &uni(&[(0, 3), (2, 1)])).unwrap(), uni(&[(2, 3), (4, 1)]));
        assert_eq!(exact_div(&uni(&[(2, 1), (0, 1)]), &uni(&[(1, 1), (0, 1)])), Err(Error::NotDivisible));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar_involution(&bi(&[((1, 2), 1)])), bi(&[((-1, -2), 1)]));
        assert_eq!(bar_involution(&p_plus_pinv()), p_plus_pinv());
        let pal = bi(&[((0, -4), -1), ((0, 0), 2), ((0, 4), -1)]);
        assert_eq!(bar_involution(&pal), pal);
    }

    #[test]
    fn specialize_examples() {
        let hopf = bi(&[((1, 1), 1), ((-1, 1), 1), ((0, 2), -1), ((0, 0), -1)]);
        assert_eq!(specialize(&hopf, QValue::One, PTransform::P), uni(&[(1, 1), (-1, 1), (0, -2)]));
        let q3 = bi(&[((0, 3), 1)]);
        assert_eq!(specialize(&q3, QValue::I, PTransform::IP), UniLaurent::constant(GaussianInt::new(0, -1)));
        for (qv, pt) in [(QValue::MinusOne, PTransform::MinusP), (QValue::I, PTransform::IP)] {
            assert!(specialize(&BiLaurent::one(), qv, pt).is_one());
        }
    }

    #[test]
    fn degree_stats_examples() {
        let f = bi(&[((2, 2), 1), ((0, 0), 5), ((-2, 2), 1)]);
        assert_eq!(p_degree_stats(&f).unwrap(), (2, 4, q_pow(2)));
        let ex = bi(&[
            ((0, -4), -1),
            ((0, 0), 2),
            ((0, 4), -1),
            ((1, 3), 1),
            ((1, -3), 1),
            ((1, 1), -1),
            ((1, -1), -1),
            ((-1, 3), 1),
            ((-1, -3), 1),
            ((-1, 1), -1),
            ((-1, -1), -1),
        ]);
        assert_eq!(p_degree_stats(&ex).unwrap(), (1, 2, uni(&[(3, 1), (-3, 1), (1, -1), (-1, -1)])));
        assert_eq!(p_degree_stats(&bi(&[((0, 0), 7)])).unwrap(), (0, 0, uni(&[(0, 7)])));
        assert_eq!(p_degree_stats(&BiLaurent::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        assert!(gcd_rational(&uni(&[(0, 3), (2, 1)]), &uni(&[(0, 5), (2, 3), (4, 1)])).unwrap().is_one());
        assert!(gcd_rational(&uni(&[(0, 3), (2, 1)]), &uni(&[(0, 1), (2, 3)])).unwrap().is_one());
        let common = uni(&[(0, 1), (1, 1)]);
        let f = &common * &uni(&[(0, 2), (3, 1)]);
        let g = &common * &uni(&[(-2, 4), (0, -1)]);
        assert_eq!(gcd_rational(&f, &g).unwrap(), common);
    }

    #[test]
    fn display() {
        assert_eq!(uni(&[(2, 3), (4, 1)]).to_string(), "3*q^2+q^4");
        assert_eq!(uni(&[(-4, -1), (0, 2), (4, -1)]).to_string(), "-q^-4+2-q^4");
        assert_eq!(bi(&[((-1, 1), 1), ((0, 0), -1)]).to_string(), "p^-1*q-1");
        assert_eq!(UniLaurent::zero().to_string(), "0");
    }
}
