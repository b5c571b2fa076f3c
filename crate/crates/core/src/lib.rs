//! Exact gap-sums of polynomials.
//!
//! For a polynomial `P` and a step `d >= 1`, the gap sum
//! `S_{P,d}(n) = P(n) + P(n - d) + P(n - 2d) + ...` runs down to the smallest
//! natural argument. This crate decides when `S_{P,d}` is itself a polynomial
//! in `n`, and builds the closed form, the witnesses and the bases of the
//! spaces involved, all over exact rationals.
//!
//! - [`exactnum`]: rationals and number-theoretic helpers
//! - [`poly`]: dense polynomials over the rationals
//! - [`special`]: Bernoulli, Euler and Genocchi sequences, power sums
//! - [`gapsum`]: membership in `E_d`, decomposition, bases, Banna polynomials
//! - [`genfun`]: generating-function criterion and the spaces `E_D`

pub mod error;
pub mod exactnum;
pub mod gapsum;
pub mod genfun;
pub mod linalg;
pub mod poly;
pub mod special;

pub use error::{Error, Result};
pub use exactnum::{format_rational, int, parse_rational, rat, Rational};
pub use gapsum::{
    banna_alpha, basis_ed, brute_sum, decompose, express_in_basis, membership,
    oracle_is_polynomial, Decomposition, MembershipReport, OracleRecord,
};
pub use genfun::{
    a_p, basis_general, convolve, decompose_general, gap_divisor, h_poly, member_general,
    poly_from_ogf, DivisibilityVerdict, GeneralSpace, OgfRep,
};
pub use poly::{binomial_poly, interpolate, Polynomial};
pub use special::{
    bernoulli_number, bernoulli_poly, c_value, euler_poly, faulhaber, genocchi, indefinite_sum,
};
