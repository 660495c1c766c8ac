use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gaussian::GaussianInt;
use super::poly::{BiLaurent, SLaurent};
use crate::error::{Error, Result};

/// `W = Y^2 = (s0^2 - 1)(1 - s1^2)`.
pub fn w_poly() -> &'static SLaurent {
    static W: OnceLock<SLaurent> = OnceLock::new();
    W.get_or_init(|| {
        let t0_minus_1 = SLaurent::from_terms([((2, 0), BigInt::one()), ((0, 0), -BigInt::one())]);
        let one_minus_t1 = SLaurent::from_terms([((0, 0), BigInt::one()), ((0, 2), -BigInt::one())]);
        &t0_minus_1 * &one_minus_t1
    })
}

/// `s0^a s1^b` as an [`SLaurent`].
pub fn s_mono(a: i32, b: i32, c: i64) -> SLaurent {
    SLaurent::monomial((a, b), BigInt::from(c))
}

/// Element `even + odd*Y` of the quadratic extension carrying the braiding.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtScalar {
    pub even: SLaurent,
    pub odd: SLaurent,
}

impl ExtScalar {
    pub fn new(even: SLaurent, odd: SLaurent) -> Self {
        ExtScalar { even, odd }
    }

    pub fn from_even(even: SLaurent) -> Self {
        ExtScalar { even, odd: SLaurent::zero() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_even(SLaurent::constant(BigInt::from(c)))
    }

    /// `c * s0^a * s1^b`.
    pub fn mono(a: i32, b: i32, c: i64) -> Self {
        Self::from_even(s_mono(a, b, c))
    }

    /// `Y` itself.
    pub fn y() -> Self {
        ExtScalar { even: SLaurent::zero(), odd: SLaurent::one() }
    }

    pub fn is_one(&self) -> bool {
        self.odd.is_zero() && self.even.is_one()
    }

    /// `even - odd*Y`.
    pub fn conj(&self) -> Self {
        ExtScalar { even: self.even.clone(), odd: -&self.odd }
    }

    /// `x * conj(x) = even^2 - odd^2 W`, an element of the base ring.
    pub fn norm(&self) -> SLaurent {
        if self.odd.is_zero() {
            return &self.even * &self.even;
        }
        &(&self.even * &self.even) - &(&(&self.odd * &self.odd) * w_poly())
    }

    pub fn scale(&self, s: &SLaurent) -> Self {
        ExtScalar { even: &self.even * s, odd: &self.odd * s }
    }

    /// Exact quotient `self / d`, if it lies in the ring.
    pub fn exact_div(&self, d: &ExtScalar) -> Option<ExtScalar> {
        if d.odd.is_zero() {
            return Some(ExtScalar { even: self.even.exact_div(&d.even)?, odd: self.odd.exact_div(&d.even)? });
        }
        let n = d.norm();
        let num = self * &d.conj();
        Some(ExtScalar { even: num.even.exact_div(&n)?, odd: num.odd.exact_div(&n)? })
    }
}

/// Substitute `s0^2 = p^-1 q`, `s1^2 = p q`.
pub fn ext_to_pq(x: &ExtScalar) -> Result<BiLaurent> {
    if !x.odd.is_zero() {
        return Err(Error::NonScalarResult(format!("odd part {}", x.odd)));
    }
    let mut out = BiLaurent::zero();
    for ((a, b), c) in x.even.terms() {
        if (a + b) % 2 != 0 {
            return Err(Error::NonScalarResult(format!("half-integer power s0^{a}*s1^{b}")));
        }
        out.add_term(((b - a) / 2, (a + b) / 2), &GaussianInt::from(c.clone()));
    }
    Ok(out)
}

/// Inverse of [`ext_to_pq`]: `p -> s0^-1 s1`, `q -> s0 s1`.
pub fn pq_to_ext(f: &BiLaurent) -> Result<ExtScalar> {
    let mut even = SLaurent::zero();
    for ((a, b), c) in f.terms() {
        let c = c.to_integer().ok_or_else(|| Error::NonScalarResult("Gaussian coefficient".into()))?;
        even.add_term((b - a, a + b), &c);
    }
    Ok(ExtScalar::from_even(even))
}

impl Zero for ExtScalar {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

impl One for ExtScalar {
    fn one() -> Self {
        Self::from_even(SLaurent::one())
    }
}

impl Add for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, o: &ExtScalar) -> ExtScalar {
        ExtScalar { even: &self.even + &o.even, odd: &self.odd + &o.odd }
    }
}

impl Sub for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, o: &ExtScalar) -> ExtScalar {
        ExtScalar { even: &self.even - &o.even, odd: &self.odd - &o.odd }
    }
}

impl Mul for &ExtScalar {
    type Output = ExtScalar;
    fn mul(self, o: &ExtScalar) -> ExtScalar {
        if self.odd.is_zero() && o.odd.is_zero() {
            return ExtScalar::from_even(&self.even * &o.even);
        }
        let mut even = &self.even * &o.even;
        if !self.odd.is_zero() && !o.odd.is_zero() {
            even += &(&(&self.odd * &o.odd) * w_poly());
        }
        let mut odd = &self.even * &o.odd;
        odd += &(&self.odd * &o.even);
        ExtScalar { even, odd }
    }
}

impl Add for ExtScalar {
    type Output = ExtScalar;
    fn add(mut self, o: ExtScalar) -> ExtScalar {
        self += &o;
        self
    }
}

impl Sub for ExtScalar {
    type Output = ExtScalar;
    fn sub(mut self, o: ExtScalar) -> ExtScalar {
        self -= &o;
        self
    }
}

impl Mul for ExtScalar {
    type Output = ExtScalar;
    fn mul(self, o: ExtScalar) -> ExtScalar {
        &self * &o
    }
}

impl AddAssign<&ExtScalar> for ExtScalar {
    fn add_assign(&mut self, o: &ExtScalar) {
        self.even += &o.even;
        self.odd += &o.odd;
    }
}

impl SubAssign<&ExtScalar> for ExtScalar {
    fn sub_assign(&mut self, o: &ExtScalar) {
        self.even -= &o.even;
        self.odd -= &o.odd;
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar { even: -self.even, odd: -self.odd }
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -self.clone()
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "({})*Y", self.odd),
            (false, false) => write!(f, "{}+({})*Y", self.even, self.odd),
        }
    }
}
