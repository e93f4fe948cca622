//! Classes of `H^c_f(R) = lim_a R/f^[a]`, the transition maps being
//! multiplication by `f^{b-a}`.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{Ideal, RegSeqContext};
use crate::polyring::Polynomial;
use crate::subset::IndexSet;

/// The class `{{r / f^a}}`, with `r` kept in normal form modulo `f^[a]`.
#[derive(Clone)]
pub struct CechClass {
    rs: Arc<RegSeqContext>,
    numerator: Polynomial,
    level: u32,
}

impl fmt::Debug for CechClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{{{} / f^{}}}}}", self.numerator, self.level)
    }
}

impl fmt::Display for CechClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for CechClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CechClass", 2)?;
        st.serialize_field("numerator", &self.numerator.to_string())?;
        st.serialize_field("level", &self.level)?;
        st.end()
    }
}

impl CechClass {
    pub fn new(rs: &Arc<RegSeqContext>, numerator: &Polynomial, level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidLevel(0));
        }
        if **numerator.ctx() != **rs.ctx() {
            return Err(Error::ContextMismatch);
        }
        let numerator = rs.bracket_power(level)?.normal_form(numerator)?;
        Ok(CechClass { rs: rs.clone(), numerator, level })
    }

    /// `{{1 / f^a}}`.
    pub fn one_over(rs: &Arc<RegSeqContext>, level: u32) -> Result<Self> {
        CechClass::new(rs, &Polynomial::one(rs.ctx()), level)
    }

    pub fn rs(&self) -> &Arc<RegSeqContext> {
        &self.rs
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// The numerator at level `b ≥ a`: `f^{b-a} · r`.
    pub fn numerator_at(&self, b: u32) -> Result<Polynomial> {
        if b < self.level {
            return Err(Error::InvalidArgument(format!("cannot lower level {} to {b}", self.level)));
        }
        self.rs.f_prod().pow((b - self.level) as u64)?.checked_mul(&self.numerator)
    }

    /// The same class represented at level `b ≥ a`.
    pub fn raise_to(&self, b: u32) -> Result<CechClass> {
        CechClass::new(&self.rs, &self.numerator_at(b)?, b)
    }

    /// Zero in the limit iff zero at its own level, the transitions being
    /// injective.
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn equals(&self, other: &CechClass) -> Result<bool> {
        if !Arc::ptr_eq(&self.rs, &other.rs) && self.rs.describe() != other.rs.describe() {
            return Err(Error::ContextMismatch);
        }
        let b = self.level.max(other.level);
        let diff = self.numerator_at(b)?.checked_sub(&other.numerator_at(b)?)?;
        self.rs.bracket_power(b)?.contains(&diff)
    }

    pub fn add(&self, other: &CechClass) -> Result<CechClass> {
        let b = self.level.max(other.level);
        CechClass::new(&self.rs, &self.numerator_at(b)?.checked_add(&other.numerator_at(b)?)?, b)
    }

    pub fn scale(&self, s: &Polynomial) -> Result<CechClass> {
        CechClass::new(&self.rs, &s.checked_mul(&self.numerator)?, self.level)
    }

    fn frobenius_level(&self) -> Result<u32> {
        self.level.checked_mul(self.rs.ctx().characteristic()).ok_or(Error::ExponentOverflow)
    }

    /// `{{r / f^a}} ↦ {{r^p / f^{ap}}}`.
    pub fn f_nat(&self) -> Result<CechClass> {
        CechClass::new(&self.rs, &self.numerator.frobenius(1)?, self.frobenius_level()?)
    }

    /// `f^{p-1} · F_nat`.
    pub fn f_fed(&self) -> Result<CechClass> {
        let p = self.rs.ctx().characteristic() as u64;
        let twist = self.rs.f_prod().pow(p - 1)?;
        CechClass::new(&self.rs, &twist.checked_mul(&self.numerator.frobenius(1)?)?, self.frobenius_level()?)
    }

    /// Whether `f_j · ξ = 0` for every `j ∈ t`.
    pub fn annihilated_by(&self, t: IndexSet) -> Result<bool> {
        let bracket = self.rs.bracket_power(self.level)?;
        for j in t.iter() {
            if !bracket.contains(&self.rs.sequence()[j].checked_mul(&self.numerator)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn cech_is_zero(xi: &CechClass) -> bool {
    xi.is_zero()
}

pub fn cech_equal(xi: &CechClass, eta: &CechClass) -> Result<bool> {
    xi.equals(eta)
}

pub fn scalar_action(s: &Polynomial, xi: &CechClass) -> Result<CechClass> {
    xi.scale(s)
}

pub fn f_nat(xi: &CechClass) -> Result<CechClass> {
    xi.f_nat()
}

pub fn f_fed(xi: &CechClass) -> Result<CechClass> {
    xi.f_fed()
}

pub fn annihilated_by(xi: &CechClass, t: IndexSet) -> Result<bool> {
    xi.annihilated_by(t)
}

/// `(f_g, f_T^[a])` with `T` the complement of `g_seq`: the source of the
/// annihilator embedding.
pub fn section_ideal(rs: &RegSeqContext, g_seq: IndexSet, a: u32) -> Result<Ideal> {
    rs.summand_ideal(g_seq.complement(rs.codim()), a)
}

/// `r̄ ↦ {{g^{a-1} r̄ / f^a}}` with `g = ∏_{j ∈ g_seq} f_j`: an injection of
/// `R/(g_seq, f_T^[a])` onto the annihilator of `g_seq`.
pub fn phi_embed(r: &Polynomial, a: u32, g_seq: IndexSet, rs: &Arc<RegSeqContext>) -> Result<CechClass> {
    if a == 0 {
        return Err(Error::InvalidLevel(0));
    }
    let g = rs.product_power(g_seq, (a - 1) as u64)?;
    CechClass::new(rs, &g.checked_mul(r)?, a)
}

/// Inverse of [`phi_embed`] on the annihilator of `g_seq`: some `s` with
/// `r ≡ g^{a-1} s` modulo `f^[a]`, reduced modulo `(g_seq, f_T^[a])`.
pub fn phi_section(xi: &CechClass, g_seq: IndexSet) -> Result<Polynomial> {
    if !xi.annihilated_by(g_seq)? {
        return Err(Error::NotInAnnihilator(format!("{xi} is not killed by f_{g_seq}")));
    }
    let rs = xi.rs();
    let a = xi.level();
    let mut gens = vec![rs.product_power(g_seq, (a - 1) as u64)?];
    gens.extend(rs.bracket_power(a)?.gens().iter().cloned());
    let cofactors = Ideal::lift(xi.numerator(), &gens)?
        .ok_or_else(|| Error::Internal(format!("annihilator class {xi} has no preimage")))?;
    section_ideal(rs, g_seq, a)?.normal_form(&cofactors[0])
}
