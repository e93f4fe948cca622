use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;

use super::{Monomial, RingContext};
use crate::error::{Error, Result};

/// Sparse polynomial over F_p.
///
/// Terms are kept sorted in descending order for the context's term order,
/// coefficients are least nonnegative residues and never zero. Equality is
/// therefore structural.
#[derive(Clone)]
pub struct Polynomial {
    ctx: Arc<RingContext>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Arc<RingContext>) -> Self {
        Self::constant(ctx, 1)
    }

    pub fn constant(ctx: &Arc<RingContext>, c: i64) -> Self {
        Self::term(ctx, Monomial::one(ctx.num_vars()), c)
    }

    /// The variable with index `i`.
    pub fn var(ctx: &Arc<RingContext>, i: usize) -> Self {
        assert!(i < ctx.num_vars(), "variable index out of range");
        Self::term(ctx, Monomial::var(ctx.num_vars(), i), 1)
    }

    pub fn term(ctx: &Arc<RingContext>, mono: Monomial, c: i64) -> Self {
        assert_eq!(mono.num_vars(), ctx.num_vars());
        let c = ctx.reduce(c);
        let terms = if c == 0 { Vec::new() } else { vec![(mono, c)] };
        Polynomial { ctx: ctx.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(ctx: &Arc<RingContext>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.num_vars(), ctx.num_vars());
            let c = ctx.reduce(c);
            let e = acc.entry(m).or_insert(0);
            *e = ctx.add(*e, c);
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &Arc<RingContext>, acc: HashMap<Monomial, u32>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = ctx.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ctx: ctx.clone(), terms }
    }

    pub(crate) fn from_sorted_terms(ctx: &Arc<RingContext>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.iter().all(|t| t.1 != 0 && t.1 < ctx.characteristic()));
        debug_assert!(terms.windows(2).all(|w| ctx.order().cmp(&w[0].0, &w[1].0).is_gt()));
        Polynomial { ctx: ctx.clone(), terms }
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    /// Nonzero constant, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn lead_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.1)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|t| &t.0 == m).map_or(0, |t| t.1)
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let ctx = &self.ctx;
        let order = ctx.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: u32| if negate_other { ctx.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.0, &b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b.0.clone(), fix(b.1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ctx.add(a.1, fix(b.1));
                    if c != 0 {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| (t.0.clone(), fix(t.1))));
        Polynomial { ctx: ctx.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = c % self.ctx.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), self.ctx.mul(*a, c))).collect();
        Polynomial { ctx: self.ctx.clone(), terms }
    }

    /// Multiplication by the single term `c·mono`.
    pub fn mul_term(&self, mono: &Monomial, c: u32) -> Result<Polynomial> {
        let c = c % self.ctx.characteristic();
        if c == 0 {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| Ok((m.checked_mul(mono)?, self.ctx.mul(*a, c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { ctx: self.ctx.clone(), terms })
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, *c);
        }
        let ctx = &self.ctx;
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(small.terms.len() * big.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.checked_mul(mb)?;
                let e = acc.entry(m).or_insert(0);
                *e = ctx.add(*e, ctx.mul(*ca, *cb));
            }
        }
        Ok(Self::from_map(ctx, acc))
    }

    /// `self^k`, using the Frobenius on the base-p digits of `k`.
    pub fn pow(&self, k: u64) -> Result<Polynomial> {
        let p = self.ctx.characteristic() as u64;
        let mut acc = Polynomial::one(&self.ctx);
        let mut k = k;
        let mut e = 0u32;
        while k > 0 {
            let digit = k % p;
            if digit > 0 {
                let part = self.pow_by_squaring(digit)?.frobenius(e)?;
                acc = acc.checked_mul(&part)?;
            }
            k /= p;
            e += 1;
        }
        Ok(acc)
    }

    fn pow_by_squaring(&self, mut k: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ctx);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)`: exponents are scaled by `p^e`, coefficients are fixed by
    /// Fermat. Scaling preserves every supported term order, so no re-sort.
    pub fn frobenius(&self, e: u32) -> Result<Polynomial> {
        let q = (self.ctx.characteristic() as u64).checked_pow(e).ok_or(Error::ExponentOverflow)?;
        let terms = self.terms.iter().map(|(m, c)| Ok((m.checked_pow(q)?, *c))).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { ctx: self.ctx.clone(), terms })
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(self.ctx.inv(*c)),
        }
    }

    /// Random polynomial with total degree at most `max_degree`.
    pub fn random<R: Rng + ?Sized>(
        ctx: &Arc<RingContext>,
        rng: &mut R,
        max_degree: u32,
        max_terms: usize,
    ) -> Polynomial {
        let n = ctx.num_vars();
        let nterms = rng.gen_range(0..=max_terms);
        let p = ctx.characteristic() as i64;
        let terms = (0..nterms).map(|_| {
            let deg = rng.gen_range(0..=max_degree);
            let mut exps = vec![0u32; n];
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from(exps), rng.gen_range(0..p))
        });
        Polynomial::from_terms(ctx, terms.collect::<Vec<_>>())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            let mut first = true;
            if *c != 1 || m.is_one() {
                write!(f, "{c}")?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.ctx.vars()[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition across ring contexts")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction across ring contexts")
    }
}

/// Panics on context mismatch or exponent overflow; use
/// [`Polynomial::checked_mul`] where either is possible.
impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication failed")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), self.ctx.neg(*c))).collect();
        Polynomial { ctx: self.ctx.clone(), terms }
    }
}

/// Product of a list of polynomials, one for the empty list.
pub fn product<'a, I>(ctx: &Arc<RingContext>, factors: I) -> Result<Polynomial>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    factors.into_iter().try_fold(Polynomial::one(ctx), |acc, f| acc.checked_mul(f))
}
