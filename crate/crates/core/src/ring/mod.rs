//! Exact coefficient arithmetic.

mod ext;
mod gaussian;
mod laurent;
mod poly;
mod text;

pub use ext::{ext_to_pq, pq_to_ext, s_mono, w_poly, ExtScalar};
pub use gaussian::GaussianInt;
pub use laurent::{Coeff, Exponent, Laurent};
pub use poly::{
    bar_involution, bi, exact_div, gcd_rational, int, integer_coeffs, is_monic, lift_q, normalize, p_coefficient,
    p_degree_stats, p_inversion, p_plus_pinv, q_bar, q_pow, q_span, specialize, uni, BiLaurent, InVar,
    PTransform, QValue, SLaurent, UniLaurent,
};
pub use text::{
    bilaurent_from_json, bilaurent_to_json, parse_bilaurent, parse_unilaurent, unilaurent_from_json,
    unilaurent_to_json,
};
