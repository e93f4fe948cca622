use std::fmt;
use std::sync::{Arc, OnceLock};

use super::engine::{Basis, SVec};
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, RingContext};

/// An ideal of F_p[x_1..x_n] given by generators, with its reduced Gröbner
/// basis computed on first use and cached.
#[derive(Clone)]
pub struct Ideal {
    ctx: Arc<RingContext>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl Ideal {
    pub fn new(ctx: &Arc<RingContext>, gens: Vec<Polynomial>) -> Self {
        assert!(gens.iter().all(|g| **g.ctx() == **ctx), "generator from a different ring");
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ctx: ctx.clone(), gens, gb: OnceLock::new() }
    }

    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Ideal::new(ctx, Vec::new())
    }

    pub fn unit(ctx: &Arc<RingContext>) -> Self {
        Ideal::new(ctx, vec![Polynomial::one(ctx)])
    }

    pub fn principal(r: &Polynomial) -> Self {
        Ideal::new(r.ctx(), vec![r.clone()])
    }

    fn with_basis(ctx: &Arc<RingContext>, basis: Vec<Polynomial>) -> Self {
        let ideal = Ideal::new(ctx, basis.clone());
        let _ = ideal.gb.set(basis);
        ideal
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Gröbner basis: monic, auto-reduced, sorted by descending
    /// leading monomial. Empty for the zero ideal.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gens: Vec<SVec> = self.gens.iter().map(|g| SVec::from_poly_at(g, 0)).collect();
        let basis = Basis::compute(&self.ctx, 1, &gens)?;
        let polys = basis.elements.iter().map(|e| e.to_polys(&self.ctx, 0, 1).remove(0)).collect();
        Ok(self.gb.get_or_init(|| polys))
    }

    fn basis(&self) -> Result<Basis> {
        let elements = self.groebner_basis()?.iter().map(|g| SVec::from_poly_at(g, 0)).collect();
        Ok(Basis { rank: 1, elements })
    }

    pub fn normal_form(&self, r: &Polynomial) -> Result<Polynomial> {
        if **r.ctx() != *self.ctx {
            return Err(Error::ContextMismatch);
        }
        let reduced = self.basis()?.reduce(&self.ctx, &SVec::from_poly_at(r, 0))?;
        Ok(reduced.to_polys(&self.ctx, 0, 1).remove(0))
    }

    pub fn contains(&self, r: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(r)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality, decided by comparing reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.first().is_some_and(|g| g.is_unit()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ctx, gens)
    }

    /// `r · I`.
    pub fn scaled(&self, r: &Polynomial) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.checked_mul(r)).collect::<Result<_>>()?;
        Ok(Ideal::new(&self.ctx, gens))
    }

    /// `(I : r) = { s : s·r ∈ I }`.
    pub fn colon(&self, r: &Polynomial) -> Result<Ideal> {
        if r.is_zero() {
            return Err(Error::ZeroColon);
        }
        if **r.ctx() != *self.ctx {
            return Err(Error::ContextMismatch);
        }
        // (r, 1) and (g, 0) in R^2; the second coordinates of module elements
        // with vanishing first coordinate are exactly (I : r).
        let mut gens = vec![SVec::from_poly_at(r, 0).concat(SVec::from_poly_at(&Polynomial::one(&self.ctx), 1))];
        gens.extend(self.gens.iter().map(|g| SVec::from_poly_at(g, 0)));
        let basis = Basis::compute(&self.ctx, 2, &gens)?;
        Ok(Ideal::with_basis(&self.ctx, second_components(&self.ctx, &basis)))
    }

    /// `(I : J) = ∩_{g ∈ gens(J)} (I : g)`.
    pub fn colon_ideal(&self, j: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for g in j.gens() {
            let part = self.colon(g)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ctx)))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        // (g, g) for g ∈ I and (h, 0) for h ∈ J.
        let mut gens: Vec<SVec> =
            self.gens.iter().map(|g| SVec::from_poly_at(g, 0).concat(SVec::from_poly_at(g, 1))).collect();
        gens.extend(other.gens.iter().map(|h| SVec::from_poly_at(h, 0)));
        let basis = Basis::compute(&self.ctx, 2, &gens)?;
        Ok(Ideal::with_basis(&self.ctx, second_components(&self.ctx, &basis)))
    }

    /// Cofactors `c` with `r = Σ c_k · gens[k]`, or `None` when `r ∉ (gens)`.
    pub fn lift(r: &Polynomial, gens: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
        let ctx = r.ctx();
        let k = gens.len() as u32;
        let module_gens: Vec<SVec> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| SVec::from_poly_at(g, 0).concat(SVec::from_poly_at(&Polynomial::one(ctx), 1 + i as u32)))
            .collect();
        let basis = Basis::compute(ctx, 1 + gens.len(), &module_gens)?;
        let rem = basis.reduce(ctx, &SVec::from_poly_at(r, 0))?;
        if rem.lead_pos() == Some(0) {
            return Ok(None);
        }
        Ok(Some(rem.to_polys(ctx, 1, 1 + k).iter().map(|w| -w).collect()))
    }
}

fn second_components(ctx: &Arc<RingContext>, basis: &Basis) -> Vec<Polynomial> {
    basis.tail_elements(1).map(|e| e.to_polys(ctx, 1, 2).remove(0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, TermOrder};

    fn setup(p: u64, order: TermOrder) -> Arc<RingContext> {
        RingContext::new(p, &["x", "y"], order).unwrap()
    }

    fn ideal(ctx: &Arc<RingContext>, gens: &[&str]) -> Ideal {
        Ideal::new(ctx, gens.iter().map(|g| parse_polynomial(g, ctx).unwrap()).collect())
    }

    fn show(gb: &[Polynomial]) -> Vec<String> {
        gb.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn basis_examples() {
        let ctx = setup(3, TermOrder::DegRevLex);
        assert_eq!(show(ideal(&ctx, &["x", "y"]).groebner_basis().unwrap()), ["x", "y"]);
        assert_eq!(show(ideal(&ctx, &["x^2", "x"]).groebner_basis().unwrap()), ["x"]);
        let lex = setup(2, TermOrder::Lex);
        assert_eq!(show(ideal(&lex, &["x+y", "x*y"]).groebner_basis().unwrap()), ["x+y", "y^2"]);
        assert!(Ideal::zero(&ctx).groebner_basis().unwrap().is_empty());
    }

    #[test]
    fn membership_examples() {
        let ctx = setup(2, TermOrder::DegRevLex);
        let x2 = parse_polynomial("x^2", &ctx).unwrap();
        assert!(ideal(&ctx, &["x"]).contains(&x2).unwrap());
        assert!(!ideal(&ctx, &["x^2", "y"]).contains(&parse_polynomial("x", &ctx).unwrap()).unwrap());
        assert!(ideal(&ctx, &["x+y", "y^2"]).contains(&parse_polynomial("x*y", &ctx).unwrap()).unwrap());
    }

    #[test]
    fn colon_examples() {
        let ctx = setup(5, TermOrder::DegRevLex);
        let i = ideal(&ctx, &["x^3", "y^3"]);
        let xy2 = parse_polynomial("x^2*y^2", &ctx).unwrap();
        assert!(i.colon(&xy2).unwrap().equals(&ideal(&ctx, &["x", "y"])).unwrap());
        let expected = ideal(&ctx, &["x^2*y^2", "x^3", "y^3"]);
        assert!(i.colon_ideal(&ideal(&ctx, &["x", "y"])).unwrap().equals(&expected).unwrap());
        assert!(i.colon(&Polynomial::one(&ctx)).unwrap().equals(&i).unwrap());
        assert_eq!(i.colon(&Polynomial::zero(&ctx)).err(), Some(Error::ZeroColon));
    }

    #[test]
    fn intersection_and_lift() {
        let ctx = setup(3, TermOrder::DegRevLex);
        let a = ideal(&ctx, &["x^2"]);
        let b = ideal(&ctx, &["x*y"]);
        assert!(a.intersect(&b).unwrap().equals(&ideal(&ctx, &["x^2*y"])).unwrap());
        let gens: Vec<_> = ["x+y", "x*y"].iter().map(|g| parse_polynomial(g, &ctx).unwrap()).collect();
        let r = parse_polynomial("x^2*y+y", &ctx).unwrap();
        assert!(Ideal::lift(&r, &gens).unwrap().is_none());
        let r = parse_polynomial("x^2*y+x*y^2+x*y", &ctx).unwrap();
        let cof = Ideal::lift(&r, &gens).unwrap().unwrap();
        let back = &(&cof[0] * &gens[0]) + &(&cof[1] * &gens[1]);
        assert_eq!(back, r);
    }

    #[test]
    fn budget_is_enforced() {
        use crate::polyring::Budget;
        let ctx = setup(2, TermOrder::DegRevLex).with_budget(Budget { max_degree: 3, max_pairs: 1000 });
        let i = ideal(&ctx, &["x^5+y", "y^2"]);
        assert!(matches!(i.groebner_basis(), Err(Error::BudgetExceeded(_))));
    }
}
