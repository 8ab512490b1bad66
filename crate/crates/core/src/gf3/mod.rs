//! Arithmetic in the canonical fields GF(3^d), d <= 12.

mod chars;
mod embed;
mod field;
mod prime_poly;

pub use chars::{abs_trace, chi2, chi4, imaginary_unit, nonsquare, s_of_b, sqrt, QuarticChar};
pub use embed::{embedding, in_subfield, lift, rel_trace, Embedding};
pub use field::{degree_of_order, make_field, Felt, Field, MAX_DEGREE};
