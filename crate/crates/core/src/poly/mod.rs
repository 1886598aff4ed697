//! Sparse multivariate polynomials with exact coefficients.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{monomials_of_degree, Monomial};
pub use order::TermOrder;
pub use polynomial::{divide, monomial_compare, normal_form, Polynomial};
pub use ring::{PolyRing, Ring, DEFAULT_DEGREE_CAP};

pub(crate) use parse::parse_expr;
pub(crate) use ring::check_same;
