//! Exact arithmetic in F_p[x_1..x_n].

mod context;
mod monomial;
mod parse;
mod polynomial;

pub use context::{Budget, RingContext, TermOrder};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::{product, Polynomial};
