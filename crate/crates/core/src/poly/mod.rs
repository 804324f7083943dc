//! Exact sparse multivariate polynomials.

mod monomial;
mod polynomial;
mod ring;

pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::PolyRing;
