//! Annularity analysis of a top coefficient: factorization into the
//! normalized Hopf-link tops `d_n`, parity and degree obstructions, Kakeya
//! root bounds and pairwise coprimality of the `d_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::plumb::AnnularExpr;
use crate::ring::{gcd_rational, integer_coeffs, q_pow, UniLaurent};
use crate::skein::d_poly;

/// `q^u · ∏ d_n` with `|n| >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnularFactorization {
    pub u: i32,
    pub factors: Vec<i32>,
}

impl AnnularFactorization {
    pub fn reconstruct(&self) -> UniLaurent {
        self.factors.iter().fold(q_pow(self.u), |acc, &n| &acc * &d_poly(n).expect("index is nonzero"))
    }

    /// Factors as a sorted multiset, for order-free comparison.
    pub fn sorted_factors(&self) -> Vec<i32> {
        let mut v = self.factors.clone();
        v.sort_unstable();
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    Positivity,
    Support,
    Parity,
    DegreeBound,
    NoFactorization,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Reason::Positivity => "positivity",
            Reason::Support => "support",
            Reason::Parity => "parity",
            Reason::DegreeBound => "degree_bound",
            Reason::NoFactorization => "no_factorization",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    PossiblyAnnular,
    /// The first failed check.
    NotAnnular(Reason),
}

impl Verdict {
    pub fn is_annular(&self) -> bool {
        matches!(self, Verdict::PossiblyAnnular)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PossiblyAnnular => f.write_str("PossiblyAnnular"),
            Verdict::NotAnnular(r) => write!(f, "NotAnnular({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub positivity_ok: bool,
    pub support_ok: bool,
    pub parity_ok: bool,
    pub degree_bound_ok: bool,
    /// Span required by the prime factorizations of the extreme coefficients.
    pub required_span: Option<BigInt>,
    pub factorization: Option<AnnularFactorization>,
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    /// Lowest exponent of the input.
    pub u: i32,
    /// Kakeya bounds of the stripped polynomial in `z = q^2`, when defined.
    pub kakeya: Option<(BigRational, BigRational)>,
}

#[derive(Serialize)]
struct KakeyaJson {
    rmin: String,
    rmax: String,
}

#[derive(Serialize)]
struct ReportJson {
    verdict: String,
    reasons: Vec<Reason>,
    u: i32,
    factors: Vec<i32>,
    kakeya: Option<KakeyaJson>,
}

impl ObstructionReport {
    pub fn to_json(&self) -> serde_json::Value {
        let verdict = match self.verdict {
            Verdict::PossiblyAnnular => "PossiblyAnnular",
            Verdict::NotAnnular(_) => "NotAnnular",
        };
        let report = ReportJson {
            verdict: verdict.into(),
            reasons: self.reasons.clone(),
            u: self.factorization.as_ref().map_or(self.u, |f| f.u),
            factors: self.factorization.as_ref().map(|f| f.factors.clone()).unwrap_or_default(),
            kakeya: self.kakeya.as_ref().map(|(lo, hi)| KakeyaJson { rmin: lo.to_string(), rmax: hi.to_string() }),
        };
        serde_json::to_value(report).expect("report serializes")
    }
}

/// Stripped dense coefficients in `z = q^2` when every coefficient is a
/// positive integer and every exponent has the parity of the lowest one.
/// The two flags are (positivity, support).
fn z_coefficients(f: &UniLaurent) -> (bool, bool, Vec<BigInt>) {
    let Some(coeffs) = integer_coeffs(f) else {
        return (false, false, Vec::new());
    };
    let positive = coeffs.iter().all(|(_, c)| c.is_positive());
    let lo = coeffs.first().map_or(0, |(e, _)| *e);
    let support = coeffs.iter().all(|(e, _)| (e - lo) % 2 == 0);
    if !(positive && support) {
        return (positive, support, Vec::new());
    }
    let hi = coeffs.last().map_or(0, |(e, _)| *e);
    let mut z = vec![BigInt::zero(); ((hi - lo) / 2 + 1) as usize];
    for (e, c) in coeffs {
        z[((e - lo) / 2) as usize] = c;
    }
    (positive, support, z)
}

/// Writes `f = q^u ∏ d_n`, trying `n = 2, -2, 3, -3, ...` in turn.
pub fn factor_into_d(f: &UniLaurent) -> Option<AnnularFactorization> {
    let (lo, hi) = f.bounds()?;
    let (positive, support, _) = z_coefficients(f);
    if !(positive && support) {
        return None;
    }
    let mut rest = f.mul_monomial(-lo, &One::one());
    let span = hi - lo;
    let mut factors = Vec::new();
    let mut k = 2;
    while 2 * k - 2 <= span && !rest.is_one() {
        for n in [k, -k] {
            let d = d_poly(n).expect("index is nonzero");
            while let Some(qt) = rest.exact_div(&d) {
                rest = qt;
                factors.push(n);
            }
        }
        k += 1;
    }
    rest.is_one().then_some(AnnularFactorization { u: lo, factors })
}

/// Prime factorization by trial division, as `prime -> multiplicity`.
pub fn prime_factors(n: &BigInt) -> BTreeMap<BigInt, u32> {
    let mut n = n.abs();
    let mut out = BTreeMap::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        while n.is_multiple_of(&d) {
            n /= &d;
            *out.entry(d.clone()).or_insert(0) += 1;
        }
        d += 1;
    }
    if n > BigInt::one() {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// `Σ n_i (p_i - 1)` over the prime factorization `∏ p_i^{n_i}`.
fn prime_weight(n: &BigInt) -> BigInt {
    prime_factors(n).into_iter().map(|(p, k)| (p - 1) * BigInt::from(k)).sum()
}

/// Runs positivity, support, parity, the span bound and factorization in
/// that order. Every failed check is listed in `reasons`; the verdict
/// carries the first.
pub fn obstruction_report(f: &UniLaurent) -> ObstructionReport {
    let u = f.trailing().map_or(0, |(e, _)| e);
    let (positivity_ok, support_ok, z) = z_coefficients(f);
    let ints = integer_coeffs(f).unwrap_or_default();
    let (parity_ok, required_span) = match (ints.first(), ints.last()) {
        (Some((_, beta)), Some((_, alpha))) => (
            alpha.is_odd() && beta.is_odd(),
            Some(prime_weight(alpha) + prime_weight(beta)),
        ),
        _ => (false, None),
    };
    let span = f.bounds().map_or(0, |(lo, hi)| hi - lo);
    let degree_bound_ok = required_span.as_ref().is_some_and(|r| BigInt::from(span) >= *r);
    let factorization = factor_into_d(f);
    let mut reasons = Vec::new();
    for (ok, r) in [
        (positivity_ok, Reason::Positivity),
        (support_ok, Reason::Support),
        (parity_ok, Reason::Parity),
        (degree_bound_ok, Reason::DegreeBound),
        (factorization.is_some(), Reason::NoFactorization),
    ] {
        if !ok {
            reasons.push(r);
        }
    }
    let verdict = reasons.first().map_or(Verdict::PossiblyAnnular, |&r| Verdict::NotAnnular(r));
    let kakeya = if z.len() >= 2 { kakeya_dense(&z).ok() } else { None };
    ObstructionReport {
        positivity_ok,
        support_ok,
        parity_ok,
        degree_bound_ok,
        required_span,
        factorization,
        verdict,
        reasons,
        u,
        kakeya,
    }
}

fn kakeya_dense(a: &[BigInt]) -> Result<(BigRational, BigRational)> {
    if a.iter().any(|c| !c.is_positive()) {
        return Err(Error::NonPositiveCoefficients);
    }
    if a.len() < 2 {
        return Err(Error::InvalidExpression("a constant has no roots to bound".into()));
    }
    let ratios: Vec<BigRational> =
        a.windows(2).map(|w| BigRational::new(w[0].clone(), w[1].clone())).collect();
    let min = ratios.iter().min().expect("nonempty").clone();
    let max = ratios.iter().max().expect("nonempty").clone();
    Ok((min, max))
}

/// Min and max of `a_j / a_{j+1}` for an ordinary polynomial
/// `a_0 + a_1 z + ... + a_d z^d` with positive coefficients; every root lies
/// in `r_min <= |z| <= r_max`.
pub fn kakeya_bounds(f: &UniLaurent) -> Result<(BigRational, BigRational)> {
    let (lo, hi) = f.bounds().ok_or(Error::ZeroPolynomial)?;
    if lo != 0 {
        return Err(Error::NonPositiveCoefficients);
    }
    let a = (0..=hi)
        .map(|e| f.coeff(e).to_integer().ok_or(Error::NonPositiveCoefficients))
        .collect::<Result<Vec<_>>>()?;
    kakeya_dense(&a)
}

/// One separation inequality `R_max(head) < R_min(p_m)` for `m < n`, where
/// `head = p_n - z^{n-m} p_m` and `p_k` is `d_k` in `z = q^2`. When
/// `n = m + 1` the head is a nonzero constant and there is nothing to
/// separate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub m: i32,
    pub n: i32,
    pub head_rmax: Option<BigRational>,
    pub tail_rmin: BigRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimalityCertificate {
    pub gcd: Vec<((i32, i32), bool)>,
    pub separation: Vec<Separation>,
}

impl CoprimalityCertificate {
    pub fn all_true(&self) -> bool {
        self.gcd.iter().all(|(_, ok)| *ok) && self.separation.iter().all(|s| s.holds)
    }
}

fn in_z(f: &UniLaurent) -> UniLaurent {
    f.map_exponents(|e| e / 2)
}

/// Checks `gcd(d_n, d_m) = 1` over the rationals for every pair of distinct
/// indices with `2 <= |n|, |m| <= bound`, and the separation inequalities
/// for `2 <= m < n <= bound`.
pub fn coprimality_certificate(bound: i32) -> Result<CoprimalityCertificate> {
    if bound < 2 {
        return Err(Error::InvalidExpression(format!("bound {bound} is below 2")));
    }
    let indices: Vec<i32> = (2..=bound).flat_map(|k| [k, -k]).collect();
    let ds: Vec<UniLaurent> = indices.iter().map(|&n| d_poly(n)).collect::<Result<_>>()?;
    let mut gcd = Vec::new();
    for i in 0..indices.len() {
        for j in i + 1..indices.len() {
            let g = gcd_rational(&ds[i], &ds[j])?;
            gcd.push(((indices[i], indices[j]), g.is_one()));
        }
    }
    let mut separation = Vec::new();
    for m in 2..bound {
        let pm = in_z(&d_poly(m)?);
        let tail_rmin = kakeya_bounds(&pm)?.0;
        for n in m + 1..=bound {
            let pn = in_z(&d_poly(n)?);
            let head = &pn - &pm.mul_monomial(n - m, &One::one());
            let head_rmax = match head.bounds() {
                Some((_, hi)) if hi > 0 => Some(kakeya_bounds(&head)?.1),
                _ => None,
            };
            let holds = head.terms().values().all(|c| c.to_integer().is_some_and(|c| c.is_positive()))
                && head_rmax.as_ref().map_or(true, |r| *r < tail_rmin);
            separation.push(Separation { m, n, head_rmax, tail_rmin: tail_rmin.clone(), holds });
        }
    }
    Ok(CoprimalityCertificate { gcd, separation })
}

/// Lowest `q`-exponent of `a_n`: `1` for `n > 0`, `1 - 2|n|` for `n < 0`.
pub fn a_shift(n: i32) -> i32 {
    if n > 0 {
        1
    } else {
        1 - 2 * n.abs()
    }
}

/// Multiset difference over indices with `|n| >= 2`, plus the net `q`-power
/// `Σ shift(plumbed) - Σ shift(deplumbed)`.
pub fn reduce(e: &AnnularExpr) -> Option<(Vec<i32>, i32)> {
    let mut remaining: Vec<i32> = e.plumbed.iter().copied().filter(|n| n.abs() >= 2).collect();
    for &m in e.deplumbed.iter().filter(|m| m.abs() >= 2) {
        let pos = remaining.iter().position(|&n| n == m)?;
        remaining.swap_remove(pos);
    }
    remaining.sort_unstable();
    let shift: i32 =
        e.plumbed.iter().map(|&n| a_shift(n)).sum::<i32>() - e.deplumbed.iter().map(|&n| a_shift(n)).sum::<i32>();
    Some((remaining, shift))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Consistent { reduced: Vec<i32>, u: i32 },
    Inconsistent,
}

/// Two annular presentations of one link must reduce to the same multiset
/// and the same net `q`-power.
pub fn uniqueness_compare(e1: &AnnularExpr, e2: &AnnularExpr) -> Comparison {
    match (reduce(e1), reduce(e2)) {
        (Some(a), Some(b)) if a == b => Comparison::Consistent { reduced: a.0, u: a.1 },
        _ => Comparison::Inconsistent,
    }
}
