//! Exact polynomial arithmetic over the rationals.

mod format;
mod monomial;
mod order;
mod polynomial;

pub use format::{parse_polynomial, parse_rational, PolynomialJson, TermJson};
pub use monomial::Monomial;
pub use order::{OrderFamily, OrderKey, TermOrder};
pub use polynomial::{
    elementary_symmetric, expand_power_linear, for_each_subset, linear_form, linear_sum, rat,
    ratio, subsets, Polynomial, Rational, Term,
};
