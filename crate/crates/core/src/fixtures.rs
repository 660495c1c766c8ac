//! Knot fixtures: braid words with their expected top coefficients,
//! fibredness and annularity, and the check that compares them against a
//! computation.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::braid::{lg, BraidWord};
use crate::error::{Error, Result};
use crate::obstruct::{obstruction_report, ObstructionReport};
use crate::plumb::{euler_char, predicted_top, AnnularExpr};
use crate::repdata::RepData;
use crate::ring::{is_monic, p_degree_stats, parse_unilaurent, BiLaurent, UniLaurent};
use crate::skein::a_poly;

/// The fixtures shipped with the crate.
pub const SHIPPED: &str = include_str!("../data/knots.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotFixture {
    pub name: String,
    /// Which table the row comes from.
    pub table: String,
    pub braid: String,
    /// Top coefficient as tabulated; may use `a_n` for the Hopf-link tops.
    pub table_top: String,
    pub fibred: bool,
    pub genus: Option<i32>,
    /// Whether the top coefficient is `q^u` times a product of `d_n`.
    pub annular: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<i32>,
    /// A plumbing of twisted annuli the knot bounds, in `plumb:` syntax.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    pub verified_by: String,
}

impl KnotFixture {
    pub fn braid_word(&self) -> Result<BraidWord> {
        BraidWord::parse(&self.braid)
    }

    pub fn expected_top(&self) -> Result<UniLaurent> {
        expand_table_notation(&self.table_top)
    }

    pub fn annular_model(&self) -> Result<Option<AnnularExpr>> {
        self.model.as_deref().map(AnnularExpr::parse).transpose()
    }
}

/// Replaces every `a_n` by its expansion and parses the result.
pub fn expand_table_notation(text: &str) -> Result<UniLaurent> {
    let mut out = String::new();
    let mut rest = text;
    while let Some(at) = rest.find("a_") {
        out.push_str(&rest[..at]);
        let tail = &rest[at + 2..];
        let len = tail
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
            .map_or(tail.len(), |(i, _)| i);
        let n: i32 = tail[..len].parse().map_err(|_| Error::Parse(format!("bad index in {text:?}")))?;
        out.push_str(&format!("({})", a_poly(n)?));
        rest = &tail[len..];
    }
    out.push_str(rest);
    parse_unilaurent(&out)
}

pub fn parse_fixtures(json: &str) -> Result<Vec<KnotFixture>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(format!("fixtures: {e}")))
}

pub fn shipped_fixtures() -> Vec<KnotFixture> {
    parse_fixtures(SHIPPED).expect("shipped fixtures parse")
}

pub fn load_fixtures(path: &Path) -> Result<Vec<KnotFixture>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_fixtures(&text)
}

/// Outcome of evaluating one fixture.
#[derive(Clone, Debug)]
pub struct FixtureCheck {
    pub name: String,
    pub lg: BiLaurent,
    pub deg: i32,
    pub top: UniLaurent,
    pub report: ObstructionReport,
    pub mismatches: Vec<String>,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn check_fixture(f: &KnotFixture, rep: &RepData) -> Result<FixtureCheck> {
    let value = lg(&f.braid_word()?, rep)?;
    let (deg, _, top) = p_degree_stats(&value)?;
    let expected = f.expected_top()?;
    let report = obstruction_report(&top);
    let mut mismatches = Vec::new();
    if top != expected {
        mismatches.push(format!("top: expected {expected}, computed {top}"));
    }
    if let Some(g) = f.genus {
        if deg != 2 * g {
            mismatches.push(format!("deg_p+: expected {}, computed {deg}", 2 * g));
        }
    }
    if is_monic(&top) != f.fibred {
        mismatches.push(format!("monicity of {top} disagrees with fibred = {}", f.fibred));
    }
    if report.verdict.is_annular() != f.annular {
        mismatches.push(format!("verdict: computed {}, expected annular = {}", report.verdict, f.annular));
    }
    if let Some(fac) = &report.factorization {
        let mut expected_factors = f.factors.clone().unwrap_or_default();
        expected_factors.sort_unstable();
        if f.factors.is_some() && fac.sorted_factors() != expected_factors {
            mismatches.push(format!("factors: expected {expected_factors:?}, computed {:?}", fac.sorted_factors()));
        }
        if f.u.is_some_and(|u| u != fac.u) {
            mismatches.push(format!("u: expected {:?}, computed {}", f.u, fac.u));
        }
    }
    if let Some(model) = f.annular_model()? {
        let predicted = predicted_top(&model)?;
        if predicted.quotient.as_ref() != Some(&top) {
            mismatches.push(format!("model {model}: predicted {:?}, computed {top}", predicted.quotient.map(|q| q.to_string())));
        }
        let chi = euler_char(&model)?;
        if deg != 1 - chi {
            mismatches.push(format!("model {model}: 1-chi = {}, deg_p+ = {deg}", 1 - chi));
        }
    }
    Ok(FixtureCheck { name: f.name.clone(), lg: value, deg, top, report, mismatches })
}
