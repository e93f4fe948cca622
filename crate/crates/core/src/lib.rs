//! Exact finite-level models for Frobenius actions on top local cohomology
//! `H^c_f(R)` of a permutable regular sequence `f = f_1..f_c` in
//! `R = F_p[x_1..x_n]`, and for the complex of annihilator submodules built
//! from it.
//!
//! The crate is layered:
//!
//! * [`polyring`]: sparse polynomials over F_p, Frobenius, text grammar.
//! * [`groebner`]: Buchberger bases, colon ideals, bracket powers,
//!   permutability certificates.
//! * [`fpmod`]: finitely presented modules, maps, kernels and cohomology.
//! * [`cech`]: leveled classes `{{r/f^a}}` with the natural and Fedder actions.
//! * [`ddelta`]: finite levels of the complex, chain maps and the
//!   verification procedures.
//! * [`runner`]: JSON-configured batch verification behind the `fedder` binary.

pub mod cech;
pub mod ddelta;
mod error;
pub mod fpmod;
pub mod groebner;
pub mod polyring;
pub mod runner;
mod subset;

pub use error::{Error, Result};
pub use subset::IndexSet;
