//! Exact computation of the Links-Gould invariant `LG(L; p, q)` from braids
//! and layered tangles, and analysis of its top coefficient.

pub mod alexander;
pub mod braid;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod obstruct;
pub mod plumb;
pub mod repdata;
pub mod ring;
pub mod skein;
pub mod tangle;

pub use error::{Error, Result};
pub use repdata::{load_rep, RepData};
