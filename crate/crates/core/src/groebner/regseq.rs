use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::Ideal;
use crate::error::{Error, Result};
use crate::polyring::{product, Polynomial, RingContext};
use crate::subset::IndexSet;

/// A pair `(T, j)` with `f_j` a zero divisor modulo `(f_T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PermutabilityFailure {
    pub subset: IndexSet,
    /// 0-based index of the offending element.
    pub index: usize,
}

impl fmt::Display for PermutabilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T={}, j={}", self.subset, self.index + 1)
    }
}

/// Outcome of [`is_permutable_regular`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PermutabilityCertificate {
    /// Indices of elements that are zero or units.
    pub degenerate: Vec<usize>,
    /// Whether `(f_1, .., f_c)` is the unit ideal.
    pub unit_ideal: bool,
    /// Every failing `(T, j)`, in colex order of `T` then increasing `j`.
    pub failures: Vec<PermutabilityFailure>,
}

impl PermutabilityCertificate {
    pub fn holds(&self) -> bool {
        self.degenerate.is_empty() && !self.unit_ideal && self.failures.is_empty()
    }
}

impl fmt::Display for PermutabilityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            return f.write_str("permutable regular");
        }
        let mut parts = Vec::new();
        for i in &self.degenerate {
            parts.push(format!("f_{} is zero or a unit", i + 1));
        }
        if self.unit_ideal {
            parts.push("the sequence generates the unit ideal".to_string());
        }
        parts.extend(self.failures.iter().map(|w| format!("({w})")));
        f.write_str(&parts.join("; "))
    }
}

/// Certifies that every subsequence of `f` is a regular sequence: for each
/// `T ⊆ [c]` and `j ∉ T`, `((f_T) : f_j) = (f_T)`, where for `T = ∅` this
/// reads `f_j ≠ 0`.
pub fn is_permutable_regular(ctx: &Arc<RingContext>, f: &[Polynomial]) -> Result<PermutabilityCertificate> {
    let c = f.len();
    if c == 0 || c > IndexSet::MAX_SIZE {
        return Err(Error::InvalidArgument(format!("sequence length {c} outside 1..={}", IndexSet::MAX_SIZE)));
    }
    let mut cert = PermutabilityCertificate {
        degenerate: (0..c).filter(|&i| f[i].is_zero() || f[i].is_unit()).collect(),
        ..Default::default()
    };
    cert.unit_ideal = Ideal::new(ctx, f.to_vec()).is_unit()?;
    for t in IndexSet::all_subsets(c) {
        let ideal_t = Ideal::new(ctx, t.iter().map(|i| f[i].clone()).collect());
        for j in (0..c).filter(|&j| !t.contains(j)) {
            let ok = if t.is_empty() {
                !f[j].is_zero()
            } else if f[j].is_zero() {
                false
            } else {
                ideal_t.colon(&f[j])?.equals(&ideal_t)?
            };
            if !ok {
                cert.failures.push(PermutabilityFailure { subset: t, index: j });
            }
        }
    }
    Ok(cert)
}

/// A permutable regular sequence `f_1..f_c` with product `f`.
pub struct RegSeqContext {
    ctx: Arc<RingContext>,
    f: Vec<Polynomial>,
    f_prod: Polynomial,
    certificate: PermutabilityCertificate,
    brackets: Mutex<HashMap<u32, Arc<Ideal>>>,
}

impl fmt::Debug for RegSeqContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RegSeqContext({})", self.describe())
    }
}

impl RegSeqContext {
    /// Validates permutability; fails with [`Error::NotPermutable`] carrying
    /// the certificate text otherwise.
    pub fn new(ctx: &Arc<RingContext>, f: Vec<Polynomial>) -> Result<Arc<Self>> {
        if f.iter().any(|g| **g.ctx() != **ctx) {
            return Err(Error::ContextMismatch);
        }
        let certificate = is_permutable_regular(ctx, &f)?;
        if !certificate.holds() {
            return Err(Error::NotPermutable(certificate.to_string()));
        }
        let f_prod = product(ctx, &f)?;
        Ok(Arc::new(RegSeqContext { ctx: ctx.clone(), f, f_prod, certificate, brackets: Mutex::new(HashMap::new()) }))
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn sequence(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn codim(&self) -> usize {
        self.f.len()
    }

    pub fn f_prod(&self) -> &Polynomial {
        &self.f_prod
    }

    pub fn certificate(&self) -> &PermutabilityCertificate {
        &self.certificate
    }

    pub fn full(&self) -> IndexSet {
        IndexSet::full(self.codim())
    }

    /// `f_T = ∏_{i ∈ T} f_i`.
    pub fn product_of(&self, t: IndexSet) -> Result<Polynomial> {
        product(&self.ctx, t.iter().map(|i| &self.f[i]))
    }

    /// `f_T^k`.
    pub fn product_power(&self, t: IndexSet, k: u64) -> Result<Polynomial> {
        self.product_of(t)?.pow(k)
    }

    /// The ideal `(f_T)`.
    pub fn ideal_of(&self, t: IndexSet) -> Ideal {
        Ideal::new(&self.ctx, t.iter().map(|i| self.f[i].clone()).collect())
    }

    /// `f_T^[a] = (f_i^a : i ∈ T)`.
    pub fn bracket_power_of(&self, t: IndexSet, a: u32) -> Result<Ideal> {
        if a == 0 {
            return Err(Error::InvalidLevel(0));
        }
        let gens = t.iter().map(|i| self.f[i].pow(a as u64)).collect::<Result<_>>()?;
        Ok(Ideal::new(&self.ctx, gens))
    }

    /// `J_S(a) = (f_j : j ∉ S) + (f_i^a : i ∈ S)`.
    pub fn summand_ideal(&self, s: IndexSet, a: u32) -> Result<Ideal> {
        let plain = self.ideal_of(s.complement(self.codim()));
        Ok(plain.sum(&self.bracket_power_of(s, a)?))
    }

    /// `f^[a]`, cached per level together with its Gröbner basis.
    pub fn bracket_power(&self, a: u32) -> Result<Arc<Ideal>> {
        if let Some(ideal) = self.brackets.lock().expect("bracket cache").get(&a) {
            return Ok(ideal.clone());
        }
        let ideal = self.bracket_power_of(self.full(), a)?;
        ideal.groebner_basis()?;
        let ideal = Arc::new(ideal);
        Ok(self.brackets.lock().expect("bracket cache").entry(a).or_insert(ideal).clone())
    }

    /// `p=2;vars=x,y;order=degrevlex;f=x,y`
    pub fn describe(&self) -> String {
        describe_sequence(&self.ctx, &self.f)
    }
}

/// The text of [`RegSeqContext::describe`] for a sequence not yet certified.
pub fn describe_sequence(ctx: &RingContext, f: &[Polynomial]) -> String {
    let f: Vec<String> = f.iter().map(|g| g.to_string()).collect();
    format!("p={};vars={};order={};f={}", ctx.characteristic(), ctx.vars().join(","), ctx.order(), f.join(","))
}

/// `f^[a]` for the whole sequence.
pub fn bracket_power(rs: &RegSeqContext, a: u32) -> Result<Arc<Ideal>> {
    rs.bracket_power(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, TermOrder};

    fn seq(p: u64, vars: &[&str], f: &[&str]) -> (Arc<RingContext>, Vec<Polynomial>) {
        let ctx = RingContext::new(p, vars, TermOrder::DegRevLex).unwrap();
        let f = f.iter().map(|g| parse_polynomial(g, &ctx).unwrap()).collect();
        (ctx, f)
    }

    #[test]
    fn variables_are_permutable() {
        let (ctx, f) = seq(3, &["x", "y"], &["x", "y"]);
        assert!(is_permutable_regular(&ctx, &f).unwrap().holds());
        let (ctx, f) = seq(2, &["x", "y"], &["x+y", "x*y"]);
        assert!(is_permutable_regular(&ctx, &f).unwrap().holds());
    }

    #[test]
    fn repeated_element_fails_with_witness() {
        let (ctx, f) = seq(2, &["x", "y"], &["x", "x"]);
        let cert = is_permutable_regular(&ctx, &f).unwrap();
        assert!(!cert.holds());
        assert_eq!(cert.failures[0].to_string(), "T={1}, j=2");
        match RegSeqContext::new(&ctx, f) {
            Err(Error::NotPermutable(msg)) => assert!(msg.contains("T={1}, j=2")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_sequences() {
        let (ctx, f) = seq(2, &["x", "y"], &["x", "1"]);
        assert!(!is_permutable_regular(&ctx, &f).unwrap().holds());
        let (ctx, f) = seq(2, &["x", "y"], &["x", "x+1"]);
        let cert = is_permutable_regular(&ctx, &f).unwrap();
        assert!(cert.unit_ideal && !cert.holds());
        let (ctx, f) = seq(2, &["x", "y"], &["x*y", "x"]);
        assert!(!is_permutable_regular(&ctx, &f).unwrap().holds());
    }

    #[test]
    fn bracket_powers() {
        let (ctx, f) = seq(2, &["x", "y"], &["x+y", "x*y"]);
        let rs = RegSeqContext::new(&ctx, f).unwrap();
        let b = rs.bracket_power(2).unwrap();
        let expected = Ideal::new(
            &ctx,
            vec![parse_polynomial("x^2+y^2", &ctx).unwrap(), parse_polynomial("x^2*y^2", &ctx).unwrap()],
        );
        assert!(b.equals(&expected).unwrap());
        assert_eq!(rs.bracket_power_of(rs.full(), 0).err(), Some(Error::InvalidLevel(0)));
        let b1 = rs.bracket_power(1).unwrap();
        assert!(b1.equals(&rs.ideal_of(rs.full())).unwrap());
    }
}
