use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Gaussian integer `re + im*i` with arbitrary-precision parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real part when the imaginary part vanishes.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_real().then(|| self.re.clone())
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `self / other` if the quotient is again a Gaussian integer.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if other.is_real() {
            let (qr, rr) = self.re.div_rem(&other.re);
            let (qi, ri) = self.im.div_rem(&other.re);
            return (rr.is_zero() && ri.is_zero()).then_some(GaussianInt { re: qr, im: qi });
        }
        let num = self * &other.conj();
        let n = other.norm();
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussianInt { re: qr, im: qi })
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianInt::one(),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }
}

impl From<BigInt> for GaussianInt {
    fn from(re: BigInt) -> Self {
        GaussianInt { re, im: BigInt::zero() }
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        GaussianInt::new(re, 0)
    }
}

impl Zero for GaussianInt {
    fn zero() -> Self {
        GaussianInt::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianInt {
    fn one() -> Self {
        GaussianInt::new(1, 0)
    }
}

impl<'a> Add<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: &GaussianInt) -> GaussianInt {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianInt { re: &self.re * &o.re, im: BigInt::zero() };
        }
        GaussianInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: GaussianInt) -> GaussianInt {
        &self + &o
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: GaussianInt) -> GaussianInt {
        &self - &o
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: GaussianInt) -> GaussianInt {
        &self * &o
    }
}

impl AddAssign<&GaussianInt> for GaussianInt {
    fn add_assign(&mut self, o: &GaussianInt) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianInt> for GaussianInt {
    fn sub_assign(&mut self, o: &GaussianInt) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianInt {
    /// `3`, `-2`, `i`, `-5i`, `(1+2i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigInt| {
            if v.is_one() {
                write!(f, "i")
            } else if *v == -BigInt::one() {
                write!(f, "-i")
            } else {
                write!(f, "{v}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im),
            (false, false) => {
                write!(f, "({}", self.re)?;
                if self.im.is_positive() {
                    write!(f, "+")?;
                }
                imag(f, &self.im)?;
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let a = GaussianInt::new(3, 4);
        let b = GaussianInt::new(1, 2);
        let p = &a * &b;
        assert_eq!(p.exact_div(&b), Some(a));
        assert_eq!(GaussianInt::new(1, 0).exact_div(&GaussianInt::new(1, 1)), None);
        assert_eq!(GaussianInt::new(2, 0).exact_div(&GaussianInt::new(1, 1)), Some(GaussianInt::new(1, -1)));
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(GaussianInt::i_pow(3), GaussianInt::new(0, -1));
        assert_eq!(GaussianInt::i_pow(-1), GaussianInt::new(0, -1));
        assert_eq!(&GaussianInt::i() * &GaussianInt::i(), GaussianInt::new(-1, 0));
    }

    #[test]
    fn display() {
        assert_eq!(GaussianInt::new(-2, 0).to_string(), "-2");
        assert_eq!(GaussianInt::new(0, -1).to_string(), "-i");
        assert_eq!(GaussianInt::new(1, -3).to_string(), "(1-3i)");
    }
}
