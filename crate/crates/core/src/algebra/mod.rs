//! Exact monomial/binomial arithmetic: weighted and elimination monomial
//! orders, reduction, and a Buchberger engine for pure-difference ideals.

mod binomial;
mod groebner;
mod monomial;
mod order;

pub use binomial::Binomial;
pub use groebner::{buchberger, reduce, GroebnerBasis};
pub use monomial::Monomial;
pub use order::MonomialOrder;
