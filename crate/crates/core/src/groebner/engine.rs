//! Buchberger's algorithm on elements of a free module R^n.
//!
//! Ideals are the rank-one case. Terms are ordered position-over-term: a
//! smaller component index is larger, ties are broken by the ring's term
//! order. With this order the basis elements whose leading position is at
//! least `k` generate the intersection of the module with the last `n - k`
//! coordinates, which is how colons, intersections, kernels and liftings
//! are computed.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, RingContext, TermOrder};

/// Sparse vector: `(position, monomial, coefficient)` in descending POT order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SVec {
    pub(crate) terms: Vec<(u32, Monomial, u32)>,
}

fn cmp_pot(order: TermOrder, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

impl SVec {
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead_pos(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub(crate) fn from_polys(entries: &[Polynomial], offset: u32) -> Self {
        let terms = entries
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| (offset + i as u32, m.clone(), *c)))
            .collect();
        SVec { terms }
    }

    pub(crate) fn from_poly_at(p: &Polynomial, pos: u32) -> Self {
        SVec { terms: p.terms().iter().map(|(m, c)| (pos, m.clone(), *c)).collect() }
    }

    /// Concatenation of two vectors whose positions do not overlap, `self` first.
    pub(crate) fn concat(mut self, other: SVec) -> Self {
        debug_assert!(match (self.terms.last(), other.terms.first()) {
            (Some(a), Some(b)) => a.0 < b.0,
            _ => true,
        });
        self.terms.extend(other.terms);
        self
    }

    /// Components `lo..hi`, re-indexed from zero.
    pub(crate) fn to_polys(&self, ctx: &Arc<RingContext>, lo: u32, hi: u32) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); (hi - lo) as usize];
        for (pos, m, c) in &self.terms {
            if (lo..hi).contains(pos) {
                buckets[(pos - lo) as usize].push((m.clone(), *c));
            }
        }
        buckets.into_iter().map(|t| Polynomial::from_sorted_terms(ctx, t)).collect()
    }

    fn max_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.1.degree()).max().unwrap_or(0)
    }
}

pub(crate) struct Engine<'a> {
    ctx: &'a Arc<RingContext>,
    order: TermOrder,
    /// Buchberger's coprime-lead criterion; valid only for ideals.
    product_criterion: bool,
}

struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(ctx: &'a Arc<RingContext>, rank: usize) -> Self {
        Engine { ctx, order: ctx.order(), product_criterion: rank <= 1 }
    }

    /// `v - c * m * g`.
    fn sub_mul(&self, v: &[(u32, Monomial, u32)], c: u32, m: &Monomial, g: &SVec) -> Result<Vec<(u32, Monomial, u32)>> {
        let ctx = self.ctx;
        let neg = ctx.neg(c);
        let mut out = Vec::with_capacity(v.len() + g.terms.len());
        let mut i = 0;
        for (gp, gm, gc) in &g.terms {
            let tm = gm.checked_mul(m)?;
            let tc = ctx.mul(*gc, neg);
            while i < v.len() && cmp_pot(self.order, (v[i].0, &v[i].1), (*gp, &tm)) == Ordering::Greater {
                out.push(v[i].clone());
                i += 1;
            }
            if i < v.len() && v[i].0 == *gp && v[i].1 == tm {
                let s = ctx.add(v[i].2, tc);
                if s != 0 {
                    out.push((*gp, tm, s));
                }
                i += 1;
            } else {
                out.push((*gp, tm, tc));
            }
        }
        out.extend_from_slice(&v[i..]);
        Ok(out)
    }

    fn find_reducer<'b>(&self, basis: &'b [&SVec], pos: u32, m: &Monomial) -> Option<&'b SVec> {
        basis.iter().copied().find(|g| {
            let (gp, gm, _) = &g.terms[0];
            *gp == pos && gm.divides(m)
        })
    }

    /// Normal form of `v` modulo the monic vectors `basis`.
    pub(crate) fn reduce(&self, v: &SVec, basis: &[&SVec]) -> Result<SVec> {
        let mut rem = Vec::new();
        let mut cur = v.terms.clone();
        let mut start = 0;
        while start < cur.len() {
            let (pos, m, c) = &cur[start];
            match self.find_reducer(basis, *pos, m) {
                Some(g) => {
                    let q = g.terms[0].1.quotient_of(m).expect("divisor");
                    let c = *c;
                    cur = self.sub_mul(&cur[start..], c, &q, g)?;
                    start = 0;
                }
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        Ok(SVec { terms: rem })
    }

    fn monic(&self, v: SVec) -> SVec {
        match v.terms.first() {
            Some((_, _, 1)) | None => v,
            Some((_, _, c)) => {
                let inv = self.ctx.inv(*c);
                SVec { terms: v.terms.into_iter().map(|(p, m, c)| (p, m, self.ctx.mul(c, inv))).collect() }
            }
        }
    }

    fn spoly(&self, f: &SVec, g: &SVec, lcm: &Monomial) -> Result<SVec> {
        let qf = f.terms[0].1.quotient_of(lcm).expect("lcm");
        let qg = g.terms[0].1.quotient_of(lcm).expect("lcm");
        let ff: Vec<_> =
            f.terms[1..].iter().map(|(p, m, c)| Ok((*p, m.checked_mul(&qf)?, *c))).collect::<Result<_>>()?;
        let tail_g = SVec { terms: g.terms[1..].to_vec() };
        Ok(SVec { terms: self.sub_mul(&ff, 1, &qg, &tail_g)? })
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, sorted
    /// by descending leading term.
    pub(crate) fn groebner(&self, gens: &[SVec]) -> Result<Vec<SVec>> {
        let budget = self.ctx.budget();
        let mut polys: Vec<SVec> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut processed = 0usize;

        let add = |h: SVec, polys: &mut Vec<SVec>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| -> Result<()> {
            if h.max_degree() > budget.max_degree {
                return Err(Error::BudgetExceeded(format!(
                    "basis element of degree {} exceeds cap {}",
                    h.max_degree(),
                    budget.max_degree
                )));
            }
            let h = self.monic(h);
            polys.push(h);
            active.push(false);
            let hi = polys.len() - 1;
            self.update(hi, polys, active, pairs);
            if pairs.len() > budget.max_pairs {
                return Err(Error::BudgetExceeded(format!("pair queue exceeds {}", budget.max_pairs)));
            }
            Ok(())
        };

        for g in gens {
            let basis: Vec<&SVec> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
            let h = self.reduce(g, &basis)?;
            if !h.is_zero() {
                add(h, &mut polys, &mut active, &mut pairs)?;
            }
        }

        while !pairs.is_empty() {
            processed += 1;
            if processed > budget.max_pairs {
                return Err(Error::BudgetExceeded(format!("more than {} S-pairs", budget.max_pairs)));
            }
            let best = (0..pairs.len())
                .min_by(|&a, &b| cmp_pot(self.order, (pairs[a].pos, &pairs[a].lcm), (pairs[b].pos, &pairs[b].lcm)))
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            let s = self.spoly(&polys[pair.i], &polys[pair.j], &pair.lcm)?;
            let basis: Vec<&SVec> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
            let h = self.reduce(&s, &basis)?;
            if !h.is_zero() {
                add(h, &mut polys, &mut active, &mut pairs)?;
            }
        }

        let minimal: Vec<&SVec> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        let mut reduced = Vec::with_capacity(minimal.len());
        for (k, g) in minimal.iter().enumerate() {
            let others: Vec<&SVec> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| *p).collect();
            let lead = SVec { terms: vec![g.terms[0].clone()] };
            let tail = SVec { terms: g.terms[1..].to_vec() };
            let tail = self.reduce(&tail, &others)?;
            reduced.push(lead.concat_sorted(tail, self.order));
        }
        reduced.sort_by(|a, b| {
            let (ap, am, _) = &a.terms[0];
            let (bp, bm, _) = &b.terms[0];
            cmp_pot(self.order, (*bp, bm), (*ap, am))
        });
        Ok(reduced)
    }

    /// Gebauer–Möller installation of the new element `h`.
    fn update(&self, h: usize, polys: &[SVec], active: &mut [bool], pairs: &mut Vec<Pair>) {
        let (hpos, hlm) = (polys[h].terms[0].0, polys[h].terms[0].1.clone());
        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for (g, p) in polys.iter().enumerate() {
            if g == h || !active[g] || p.terms[0].0 != hpos {
                continue;
            }
            let glm = &p.terms[0].1;
            let coprime = self.product_criterion && hlm.is_coprime(glm);
            cands.push((g, hlm.lcm(glm), coprime));
        }

        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for k in 0..cands.len() {
            let (_, lcm, coprime) = &cands[k];
            let dominated = cands[k + 1..].iter().any(|c| c.1.divides(lcm)) || kept.iter().any(|c| c.1.divides(lcm));
            if *coprime || !dominated {
                kept.push(cands[k].clone());
            }
        }

        pairs.retain(|pr| {
            if pr.pos != hpos || !hlm.divides(&pr.lcm) {
                return true;
            }
            let li = hlm.lcm(&polys[pr.i].terms[0].1);
            let lj = hlm.lcm(&polys[pr.j].terms[0].1);
            li == pr.lcm || lj == pr.lcm
        });

        pairs.extend(kept.into_iter().filter(|c| !c.2).map(|(g, lcm, _)| Pair { i: g, j: h, pos: hpos, lcm }));

        for (g, p) in polys.iter().enumerate() {
            if g != h && active[g] && p.terms[0].0 == hpos && hlm.divides(&p.terms[0].1) {
                active[g] = false;
            }
        }
        active[h] = true;
    }
}

impl SVec {
    /// Merge of a leading term with a tail of strictly smaller terms.
    fn concat_sorted(mut self, tail: SVec, order: TermOrder) -> SVec {
        debug_assert!(tail
            .terms
            .first()
            .is_none_or(|t| { cmp_pot(order, (self.terms[0].0, &self.terms[0].1), (t.0, &t.1)) == Ordering::Greater }));
        self.terms.extend(tail.terms);
        self
    }
}

/// A computed Gröbner basis of a submodule of R^rank.
#[derive(Clone, Debug)]
pub(crate) struct Basis {
    pub(crate) rank: usize,
    pub(crate) elements: Vec<SVec>,
}

impl Basis {
    pub(crate) fn compute(ctx: &Arc<RingContext>, rank: usize, gens: &[SVec]) -> Result<Basis> {
        let elements = Engine::new(ctx, rank).groebner(gens)?;
        Ok(Basis { rank, elements })
    }

    pub(crate) fn reduce(&self, ctx: &Arc<RingContext>, v: &SVec) -> Result<SVec> {
        let refs: Vec<&SVec> = self.elements.iter().collect();
        Engine::new(ctx, self.rank).reduce(v, &refs)
    }

    /// Elements whose leading position is at least `pos`.
    pub(crate) fn tail_elements(&self, pos: u32) -> impl Iterator<Item = &SVec> {
        self.elements.iter().filter(move |e| e.lead_pos().is_some_and(|p| p >= pos))
    }
}
