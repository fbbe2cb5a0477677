//! Sparse multivariate polynomials over the two-element field.

mod gf2poly;
mod monomial;

pub use gf2poly::Gf2Poly;
pub(crate) use gf2poly::TermAccumulator;
pub use monomial::{Exponent, Monomial};
