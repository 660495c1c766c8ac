use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gaussian::GaussianInt;

/// Coefficient ring of a [`Laurent`] polynomial.
pub trait Coeff: Clone + Eq + Hash + Debug + Zero + One + Neg<Output = Self> + Send + Sync {
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    /// `self / other` when exact.
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

impl Coeff for GaussianInt {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        GaussianInt::exact_div(self, other)
    }
}

/// Exponent monoid: `i32` for one variable, `(i32, i32)` for two.
///
/// The derived `Ord` is lexicographic, which is the term order used by
/// long division.
pub trait Exponent: Copy + Ord + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn neg(self) -> Self;
    fn coord_min(self, o: Self) -> Self;
    fn coord_max(self, o: Self) -> Self;
    /// Componentwise `<=`.
    fn le_all(self, o: Self) -> bool;
}

impl Exponent for i32 {
    fn zero() -> Self {
        0
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
    fn sub(self, o: Self) -> Self {
        self - o
    }
    fn neg(self) -> Self {
        -self
    }
    fn coord_min(self, o: Self) -> Self {
        self.min(o)
    }
    fn coord_max(self, o: Self) -> Self {
        self.max(o)
    }
    fn le_all(self, o: Self) -> bool {
        self <= o
    }
}

impl Exponent for (i32, i32) {
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, o: Self) -> Self {
        (self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: Self) -> Self {
        (self.0 - o.0, self.1 - o.1)
    }
    fn neg(self) -> Self {
        (-self.0, -self.1)
    }
    fn coord_min(self, o: Self) -> Self {
        (self.0.min(o.0), self.1.min(o.1))
    }
    fn coord_max(self, o: Self) -> Self {
        (self.0.max(o.0), self.1.max(o.1))
    }
    fn le_all(self, o: Self) -> bool {
        self.0 <= o.0 && self.1 <= o.1
    }
}

/// Sparse Laurent polynomial; no zero coefficient is ever stored, so equal
/// polynomials have identical term maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<E: Exponent, C: Coeff> {
    terms: BTreeMap<E, C>,
}

impl<E: Exponent, C: Coeff> Default for Laurent<E, C> {
    fn default() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
}

impl<E: Exponent, C: Coeff> Laurent<E, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(E::zero(), c)
    }

    pub fn monomial(e: E, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (E, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<E, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<E, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&E::zero()).is_some_and(|c| c.is_one())
    }

    /// The single `(exponent, coefficient)` pair of a monomial.
    pub fn as_monomial(&self) -> Option<(E, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn coeff(&self, e: E) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: E, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(E, &C)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn trailing(&self) -> Option<(E, &C)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Componentwise minimal and maximal exponents.
    pub fn bounds(&self) -> Option<(E, E)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.coord_min(*e), hi.coord_max(*e))))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, x)| (*e, x.mul_ref(c))).collect() }
    }

    /// Multiply by the monomial `c * x^e`.
    pub fn mul_monomial(&self, e: E, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(k, x)| (k.add(e), x.mul_ref(c))).collect() }
    }

    /// Apply an exponent map that is injective on the support.
    pub fn map_exponents<F: Exponent>(&self, f: impl Fn(E) -> F) -> Laurent<F, C> {
        let mut out = Laurent::<F, C>::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c);
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<E, D> {
        let mut out = Laurent::<E, D>::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &f(c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self += m * other`, used by the division loop and by accumulators.
    pub fn add_scaled(&mut self, other: &Self, shift: E, c: &C) {
        for (e, x) in &other.terms {
            self.add_term(e.add(shift), &x.mul_ref(c));
        }
    }

    /// Exact quotient `self / g` in the Laurent ring, if it exists.
    ///
    /// Lexicographic long division. In an integral domain every term of an
    /// exact quotient lies in the box between `lo(f)-lo(g)` and `hi(f)-hi(g)`,
    /// so leaving that box proves non-divisibility and bounds the loop.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        let (g_lead_e, g_lead_c) = g.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((e, c)) = g.as_monomial() {
            let mut terms = BTreeMap::new();
            for (k, x) in &self.terms {
                terms.insert(k.sub(e), x.exact_div(c)?);
            }
            return Some(Laurent { terms });
        }
        let (flo, fhi) = self.bounds()?;
        let (glo, ghi) = g.bounds()?;
        let (qlo, qhi) = (flo.sub(glo), fhi.sub(ghi));
        if !qlo.le_all(qhi) {
            return None;
        }
        let g_lead_c = g_lead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let qe = e.sub(g_lead_e);
            if !(qlo.le_all(qe) && qe.le_all(qhi)) {
                return None;
            }
            let qc = c.exact_div(&g_lead_c)?;
            rem.add_scaled(g, qe, &-qc.clone());
            quot.add_term(qe, &qc);
        }
        Some(quot)
    }
}

impl<E: Exponent, C: Coeff> Zero for Laurent<E, C> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: Exponent, C: Coeff> One for Laurent<E, C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<E: Exponent, C: Coeff> AddAssign<&Laurent<E, C>> for Laurent<E, C> {
    fn add_assign(&mut self, o: &Laurent<E, C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, c);
        }
    }
}

impl<E: Exponent, C: Coeff> SubAssign<&Laurent<E, C>> for Laurent<E, C> {
    fn sub_assign(&mut self, o: &Laurent<E, C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, &-c.clone());
        }
    }
}

impl<E: Exponent, C: Coeff> Add for &Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn add(self, o: &Laurent<E, C>) -> Laurent<E, C> {
        let (mut big, small) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        big += small;
        big
    }
}

impl<E: Exponent, C: Coeff> Sub for &Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn sub(self, o: &Laurent<E, C>) -> Laurent<E, C> {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl<E: Exponent, C: Coeff> Mul for &Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn mul(self, o: &Laurent<E, C>) -> Laurent<E, C> {
        if let Some((e, c)) = o.as_monomial() {
            return self.mul_monomial(e, c);
        }
        if let Some((e, c)) = self.as_monomial() {
            return o.mul_monomial(e, c);
        }
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1.add(*e2), &c1.mul_ref(c2));
            }
        }
        out
    }
}

impl<E: Exponent, C: Coeff> Add for Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn add(mut self, o: Laurent<E, C>) -> Laurent<E, C> {
        self += &o;
        self
    }
}

impl<E: Exponent, C: Coeff> Sub for Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn sub(mut self, o: Laurent<E, C>) -> Laurent<E, C> {
        self -= &o;
        self
    }
}

impl<E: Exponent, C: Coeff> Mul for Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn mul(self, o: Laurent<E, C>) -> Laurent<E, C> {
        &self * &o
    }
}

impl<E: Exponent, C: Coeff> Neg for Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn neg(self) -> Laurent<E, C> {
        Laurent { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<E: Exponent, C: Coeff> Neg for &Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn neg(self) -> Laurent<E, C> {
        -self.clone()
    }
}
