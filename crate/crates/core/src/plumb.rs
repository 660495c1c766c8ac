//! Annular surfaces: multisets of plumbed and deplumbed twisted annuli.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{is_monic, UniLaurent};
use crate::skein::a_poly;

/// Surface built by plumbing the annuli `A_n` for `n` in `plumbed` and
/// deplumbing those in `deplumbed`. Indices are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnnularExpr {
    pub plumbed: Vec<i32>,
    pub deplumbed: Vec<i32>,
}

impl AnnularExpr {
    pub fn new(plumbed: Vec<i32>, deplumbed: Vec<i32>) -> Result<Self> {
        if plumbed.iter().chain(&deplumbed).any(|&n| n == 0) {
            return Err(Error::ZeroIndex);
        }
        Ok(AnnularExpr { plumbed, deplumbed })
    }

    pub fn plumbing(plumbed: &[i32]) -> Result<Self> {
        Self::new(plumbed.to_vec(), Vec::new())
    }

    /// Parse `plumb: 2,3,-1 deplumb: 2`; the deplumb clause is optional.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let rest = text
            .strip_prefix("plumb:")
            .ok_or_else(|| Error::Parse(format!("expected `plumb:` in {text:?}")))?;
        let (plumbed, deplumbed) = match rest.split_once("deplumb:") {
            Some((a, b)) => (a, Some(b)),
            None => (rest, None),
        };
        let list = |s: &str| -> Result<Vec<i32>> {
            s.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad twist index {t:?}"))))
                .collect()
        };
        Self::new(list(plumbed)?, deplumbed.map(list).transpose()?.unwrap_or_default())
    }

    fn check(&self) -> Result<()> {
        if self.plumbed.is_empty() {
            return Err(Error::EmptyExpression);
        }
        if self.deplumbed.len() >= self.plumbed.len() {
            return Err(Error::InvalidExpression("more deplumbed than plumbed annuli".into()));
        }
        Ok(())
    }
}

impl fmt::Display for AnnularExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i32]| v.iter().map(i32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "plumb: {}", join(&self.plumbed))?;
        if !self.deplumbed.is_empty() {
            write!(f, " deplumb: {}", join(&self.deplumbed))?;
        }
        Ok(())
    }
}

/// Each annulus has `χ = 0`; each plumbing lowers `χ` by one.
pub fn euler_char(e: &AnnularExpr) -> Result<i32> {
    e.check()?;
    Ok(1 - e.plumbed.len() as i32 + e.deplumbed.len() as i32)
}

/// `∏ a_{n_i} / ∏ a_{m_j}`, with the polynomial quotient when it exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalTop {
    pub numerator: UniLaurent,
    pub denominator: UniLaurent,
    pub quotient: Option<UniLaurent>,
}

pub fn predicted_top(e: &AnnularExpr) -> Result<RationalTop> {
    e.check()?;
    let product = |v: &[i32]| -> Result<UniLaurent> {
        v.iter().try_fold(UniLaurent::one(), |acc, &n| Ok(&acc * &a_poly(n)?))
    };
    let numerator = product(&e.plumbed)?;
    let denominator = product(&e.deplumbed)?;
    let quotient = numerator.exact_div(&denominator);
    Ok(RationalTop { numerator, denominator, quotient })
}

/// `λ = (deg_p⁺ − e) / 2` for a monomial top coefficient `±q^e`.
pub fn hopf_invariant(deg_p_plus: i32, top: &UniLaurent) -> Result<i32> {
    if !is_monic(top) {
        return Err(Error::NotMonic);
    }
    let (e, _) = top.as_monomial().ok_or(Error::NotMonic)?;
    let diff = deg_p_plus - e;
    if diff % 2 != 0 {
        return Err(Error::ParityError);
    }
    Ok(diff / 2)
}
