//! Ideal arithmetic: Buchberger bases, normal forms, colons, intersections,
//! bracket powers and permutability certificates.

pub(crate) mod engine;
mod ideal;
mod regseq;

pub use ideal::Ideal;
pub use regseq::{
    bracket_power, describe_sequence, is_permutable_regular, PermutabilityCertificate, PermutabilityFailure,
    RegSeqContext,
};

use crate::error::Result;
use crate::polyring::Polynomial;

/// Reduced Gröbner basis of `ideal`, cached on it.
pub fn groebner_basis(ideal: &Ideal) -> Result<&[Polynomial]> {
    ideal.groebner_basis()
}

pub fn ideal_member(r: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(r)
}

pub fn colon(ideal: &Ideal, r: &Polynomial) -> Result<Ideal> {
    ideal.colon(r)
}

pub fn colon_ideal(ideal: &Ideal, other: &Ideal) -> Result<Ideal> {
    ideal.colon_ideal(other)
}
