//! Brute-force model of the level complexes of `x_1^{d_1}, .., x_c^{d_c}` in
//! `F_p[x_1, .., x_c]`.
//!
//! Every summand `R/J_S(a)` is a monomial quotient with a finite standard
//! monomial box, so the whole complex is a finite dimensional F_p complex and
//! every question becomes dense linear algebra. Nothing here calls into the
//! Groebner engine; the helpers at the bottom only translate between the two
//! representations.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use fedder::fpmod::Vector;
use fedder::groebner::RegSeqContext;
use fedder::polyring::{Monomial, Polynomial, RingContext, TermOrder};
use fedder::IndexSet;

pub const VARS: [&str; 4] = ["x", "y", "z", "w"];

/// Every exponent vector `e` with `e_j < bounds_j`.
pub fn exponent_box(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * b as usize);
        for e in &out {
            for k in 0..b {
                let mut f = e.clone();
                f.push(k);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

/// Rank over F_p of a list of vectors.
pub fn rank(vectors: &[Vec<u64>], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = vectors.iter().map(|v| v.iter().map(|x| x % p).collect()).collect();
    let width = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, pivot);
        let inv = inverse(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let factor = rows[i][col];
                for k in 0..width {
                    rows[i][k] = (rows[i][k] + p * p - factor * rows[r][k] % p) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

fn inverse(x: u64, p: u64) -> u64 {
    (1..p).find(|y| x * y % p == 1).expect("unit")
}

/// Whether `v` lies in the F_p-span of `vectors`.
pub fn in_span(vectors: &[Vec<u64>], v: &[u64], p: u64) -> bool {
    if v.iter().all(|x| x % p == 0) {
        return true;
    }
    let mut with = vectors.to_vec();
    with.push(v.to_vec());
    rank(vectors, p) == rank(&with, p)
}

/// One summand-monomial of a level: `x^e` in `R/J_S(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub mask: u32,
    pub exps: Vec<u32>,
}

/// The level `a` complex of `x_1^{d_1}, .., x_c^{d_c}` over F_p.
pub struct Orthant {
    pub p: u64,
    pub d: Vec<u32>,
    pub a: u32,
    cells: Vec<Vec<Cell>>,
    index: Vec<HashMap<Cell, usize>>,
}

impl Orthant {
    pub fn new(p: u64, d: &[u32], a: u32) -> Self {
        let c = d.len();
        let mut cells = vec![Vec::new(); c + 1];
        for mask in 0..(1u32 << c) {
            let bounds: Vec<u32> = (0..c).map(|j| if mask >> j & 1 == 1 { a * d[j] } else { d[j] }).collect();
            for exps in exponent_box(&bounds) {
                cells[mask.count_ones() as usize].push(Cell { mask, exps });
            }
        }
        let index =
            cells.iter().map(|cs| cs.iter().cloned().enumerate().map(|(k, cell)| (cell, k)).collect()).collect();
        Orthant { p, d: d.to_vec(), a, cells, index }
    }

    pub fn codim(&self) -> usize {
        self.d.len()
    }

    pub fn dim(&self, i: usize) -> usize {
        self.cells[i].len()
    }

    pub fn cells(&self, i: usize) -> &[Cell] {
        &self.cells[i]
    }

    /// Whether `x^e` survives in `R/J_S(a)`.
    pub fn standard(&self, mask: u32, exps: &[u32]) -> bool {
        (0..self.codim()).all(|j| exps[j] < if mask >> j & 1 == 1 { self.a * self.d[j] } else { self.d[j] })
    }

    pub fn coordinate(&self, i: usize, cell: &Cell) -> Option<usize> {
        self.index[i].get(cell).copied()
    }

    /// The differential `L^i → L^{i+1}` on one vector.
    pub fn apply_d(&self, i: usize, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0; if i < self.codim() { self.dim(i + 1) } else { 0 }];
        for (k, cell) in self.cells[i].iter().enumerate() {
            if v[k].is_multiple_of(self.p) {
                continue;
            }
            for j in 0..self.codim() {
                if cell.mask >> j & 1 == 1 {
                    continue;
                }
                let below = (cell.mask & ((1 << j) - 1)).count_ones() as usize;
                let sign = if (below + 1).is_multiple_of(2) { 1 } else { self.p - 1 };
                let mut exps = cell.exps.clone();
                exps[j] += (self.a - 1) * self.d[j];
                let target = Cell { mask: cell.mask | 1 << j, exps };
                if let Some(t) = self.coordinate(i + 1, &target) {
                    out[t] = (out[t] + sign * v[k]) % self.p;
                }
            }
        }
        out
    }

    fn unit(&self, i: usize, k: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim(i)];
        v[k] = 1;
        v
    }

    /// Images of the basis of `L^{i-1}` in `L^i`.
    pub fn boundaries(&self, i: usize) -> Vec<Vec<u64>> {
        if i == 0 {
            return Vec::new();
        }
        (0..self.dim(i - 1)).map(|k| self.apply_d(i - 1, &self.unit(i - 1, k))).collect()
    }

    pub fn rank_d(&self, i: usize) -> usize {
        if i >= self.codim() {
            return 0;
        }
        let cols: Vec<_> = (0..self.dim(i)).map(|k| self.apply_d(i, &self.unit(i, k))).collect();
        rank(&cols, self.p)
    }

    pub fn kernel_dim(&self, i: usize) -> usize {
        self.dim(i) - self.rank_d(i)
    }

    pub fn cohomology_dim(&self, i: usize) -> usize {
        self.kernel_dim(i) - if i == 0 { 0 } else { self.rank_d(i - 1) }
    }

    pub fn is_cocycle(&self, i: usize, v: &[u64]) -> bool {
        self.apply_d(i, v).iter().all(|x| x % self.p == 0)
    }

    pub fn is_coboundary(&self, i: usize, v: &[u64]) -> bool {
        in_span(&self.boundaries(i), v, self.p)
    }

    /// `x^m · v`, dropping monomials that fall into the summand ideals.
    pub fn shift(&self, i: usize, v: &[u64], m: &[u32]) -> Vec<u64> {
        let mut out = vec![0; self.dim(i)];
        for (k, cell) in self.cells[i].iter().enumerate() {
            if v[k].is_multiple_of(self.p) {
                continue;
            }
            let exps: Vec<u32> = cell.exps.iter().zip(m).map(|(e, s)| e + s).collect();
            if let Some(t) = self.coordinate(i, &Cell { mask: cell.mask, exps }) {
                out[t] = (out[t] + v[k]) % self.p;
            }
        }
        out
    }

    /// F_p-dimension of the R-submodule of `L^i` generated by `gens`.
    pub fn submodule_dim(&self, i: usize, gens: &[Vec<u64>]) -> usize {
        let bounds: Vec<u32> = self.d.iter().map(|d| self.a * d).collect();
        let shifts = exponent_box(&bounds);
        let span: Vec<Vec<u64>> = gens.iter().flat_map(|g| shifts.iter().map(move |m| self.shift(i, g, m))).collect();
        rank(&span, self.p)
    }

    /// The transition to level `b`: multiplication by `∏_{j∈S} x_j^{d_j(b-a)}`.
    pub fn transition(&self, i: usize, v: &[u64], b: u32) -> (Orthant, Vec<u64>) {
        let target = Orthant::new(self.p, &self.d, b);
        let mut out = vec![0; target.dim(i)];
        for (k, cell) in self.cells[i].iter().enumerate() {
            let mut exps = cell.exps.clone();
            for j in 0..self.codim() {
                if cell.mask >> j & 1 == 1 {
                    exps[j] += (b - self.a) * self.d[j];
                }
            }
            let t = target.coordinate(i, &Cell { mask: cell.mask, exps }).expect("transition stays in the box");
            out[t] = v[k] % self.p;
        }
        (target, out)
    }

    /// The least `b` in `a..=bound` where the transition image of `v` is a
    /// coboundary, trying every level.
    pub fn death_level(&self, i: usize, v: &[u64], bound: u32) -> Option<u32> {
        (self.a..=bound).find(|&b| {
            let (level, w) = self.transition(i, v, b);
            level.is_coboundary(i, &w)
        })
    }
}

/// Whether `x^e` lies in the monomial ideal generated by `gens`.
pub fn monomial_ideal_contains(gens: &[Vec<u32>], e: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(e).all(|(gi, ei)| gi <= ei))
}

/// `x_1^{d_1}, .., x_c^{d_c}` in `F_p[x_1..x_c]` as an engine instance.
pub fn pure_power_instance(p: u64, d: &[u32]) -> Arc<RegSeqContext> {
    let ctx = RingContext::new(p, &VARS[..d.len()], TermOrder::DegRevLex).unwrap();
    let f = (0..d.len())
        .map(|j| {
            let mut e = vec![0; d.len()];
            e[j] = d[j];
            Polynomial::term(&ctx, Monomial::from(e), 1)
        })
        .collect();
    RegSeqContext::new(&ctx, f).unwrap()
}

/// Oracle coordinates of an engine vector whose components are labelled by
/// `labels`.
pub fn to_coords(orthant: &Orthant, i: usize, labels: &[IndexSet], v: &Vector) -> Vec<u64> {
    let mut out = vec![0; orthant.dim(i)];
    for (component, label) in v.iter().zip(labels) {
        for (m, c) in component.terms() {
            let cell = Cell { mask: label.mask(), exps: m.exponents().to_vec() };
            if let Some(k) = orthant.coordinate(i, &cell) {
                out[k] = (out[k] + *c as u64) % orthant.p;
            }
        }
    }
    out
}

/// The engine vector with the given oracle coordinates.
pub fn from_coords(ctx: &Arc<RingContext>, orthant: &Orthant, i: usize, labels: &[IndexSet], v: &[u64]) -> Vector {
    labels
        .iter()
        .map(|label| {
            let terms = orthant
                .cells(i)
                .iter()
                .zip(v)
                .filter(|(cell, c)| cell.mask == label.mask() && **c != 0)
                .map(|(cell, c)| (Monomial::from(cell.exps.clone()), *c as i64));
            Polynomial::from_terms(ctx, terms.collect::<Vec<_>>())
        })
        .collect()
}

/// Number of standard `(position, monomial)` pairs below `bounds` for a
/// module Groebner basis under a position-over-term order.
pub fn standard_count(elements: &[Vector], rank: usize, bounds: &[u32]) -> usize {
    let leads: Vec<(usize, Vec<u32>)> = elements
        .iter()
        .filter_map(|v| {
            v.iter().position(|c| !c.is_zero()).map(|k| (k, v[k].lead_monomial().unwrap().exponents().to_vec()))
        })
        .collect();
    let monomials = exponent_box(bounds);
    (0..rank)
        .map(|k| {
            monomials
                .iter()
                .filter(|e| !leads.iter().any(|(pos, l)| *pos == k && l.iter().zip(e.iter()).all(|(a, b)| a <= b)))
                .count()
        })
        .sum()
}

/// The oracle instances: `(p, d)` with `c ≤ 3`.
pub fn oracle_instances() -> Vec<(u64, Vec<u32>)> {
    let mut out = Vec::new();
    for p in [2, 3] {
        for d in [vec![1], vec![1, 1], vec![1, 1, 1], vec![2, 1]] {
            out.push((p, d));
        }
    }
    out
}

/// Compares the engine with the oracle on one instance and level; returns a
/// description of every disagreement.
pub fn disagreements(p: u64, d: &[u32], a: u32, seed: u64) -> Vec<String> {
    use fedder::ddelta::{build_level, top_class_persistence, verify_vanishing, Schedule};
    use rand::{Rng, SeedableRng};

    let mut out = Vec::new();
    let rs = pure_power_instance(p, d);
    let ctx = rs.ctx().clone();
    let c = d.len();
    let level = build_level(&rs, a).unwrap();
    let oracle = Orthant::new(p, d, a);
    let complex = level.complex();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let box_bounds: Vec<u32> = d.iter().map(|dj| a * dj).collect();
    let tag = format!("p={p} d={d:?} a={a}");

    for i in 0..=c {
        let labels = level.labels(i);
        let mut masks: Vec<u32> = labels.iter().map(|s| s.mask()).collect();
        masks.sort_unstable();
        let mut expected: Vec<u32> = (0..1u32 << c).filter(|m| m.count_ones() as usize == i).collect();
        expected.sort_unstable();
        if masks != expected {
            out.push(format!("{tag} degree {i}: summands {masks:?}"));
            continue;
        }

        let cocycles = complex.cocycle_generators(i).unwrap();
        let coords: Vec<Vec<u64>> = cocycles.iter().map(|z| to_coords(&oracle, i, labels, z)).collect();
        if let Some(z) = coords.iter().find(|z| !oracle.is_cocycle(i, z)) {
            out.push(format!("{tag} degree {i}: engine cocycle {z:?} is not closed"));
        }
        let span = oracle.submodule_dim(i, &coords);
        if span != oracle.kernel_dim(i) {
            out.push(format!("{tag} degree {i}: cocycles span {span}, kernel has {}", oracle.kernel_dim(i)));
        }

        let h = complex.cohomology(i).unwrap();
        let h_dim = standard_count(&h.module.relation_gb().unwrap().elements(), h.module.rank(), &box_bounds);
        if h_dim != oracle.cohomology_dim(i) || h.is_zero() != (oracle.cohomology_dim(i) == 0) {
            out.push(format!("{tag} H^{i}: engine {h_dim}, oracle {}", oracle.cohomology_dim(i)));
        }

        let boundaries = oracle.boundaries(i);
        for trial in 0..12 {
            let v: Vec<u64> = if trial % 2 == 0 || boundaries.is_empty() {
                (0..oracle.dim(i)).map(|_| if rng.gen_bool(0.2) { rng.gen_range(0..p) } else { 0 }).collect()
            } else {
                let mut v = vec![0; oracle.dim(i)];
                for b in &boundaries {
                    let r = rng.gen_range(0..p);
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = (*x + r * y) % p;
                    }
                }
                v
            };
            let w = from_coords(&ctx, &oracle, i, labels, &v);
            if complex.is_coboundary(i, &w).unwrap() != oracle.is_coboundary(i, &v) {
                out.push(format!("{tag} degree {i}: coboundary membership of {v:?}"));
            }
            if complex.is_cocycle(i, &w).unwrap() != oracle.is_cocycle(i, &v) {
                out.push(format!("{tag} degree {i}: cocycle test of {v:?}"));
            }
        }

        for s in labels {
            let ideal = level.summand_ideal(*s);
            let bounds: Vec<u32> = box_bounds.iter().map(|b| b + 1).collect();
            for e in exponent_box(&bounds) {
                let m = Polynomial::term(&ctx, Monomial::from(e.clone()), 1);
                if ideal.contains(&m).unwrap() == oracle.standard(s.mask(), &e) {
                    out.push(format!("{tag} J_{s}: membership of x^{e:?}"));
                }
            }
        }

        let bound = a * p as u32;
        if i < c {
            for schedule in [Schedule::Geometric, Schedule::Unit] {
                let report = verify_vanishing(&rs, i, a, bound, schedule).unwrap();
                for (g, z) in report.generators.iter().zip(&coords) {
                    let expected = oracle.death_level(i, z, bound);
                    if g.death_level != expected {
                        out.push(format!(
                            "{tag} degree {i}: {} dies at {:?}, oracle {expected:?}",
                            g.generator, g.death_level
                        ));
                    }
                }
            }
        } else {
            let report = top_class_persistence(&rs, a, bound, Schedule::Unit).unwrap();
            let one = Cell { mask: (1 << c) - 1, exps: vec![0; c] };
            let mut v = vec![0; oracle.dim(c)];
            v[oracle.coordinate(c, &one).unwrap()] = 1;
            let expected = oracle.death_level(c, &v, bound);
            if report.generators[0].death_level != expected {
                out.push(format!(
                    "{tag} top class dies at {:?}, oracle {expected:?}",
                    report.generators[0].death_level
                ));
            }
        }
    }

    let gens: Vec<Vec<u32>> = (0..c)
        .map(|j| {
            let mut e = vec![0; c];
            e[j] = a * d[j];
            e
        })
        .collect();
    for b in 1..a {
        let colon = rs.bracket_power(a).unwrap().colon(&rs.product_power(rs.full(), (a - b) as u64).unwrap()).unwrap();
        let prod: Vec<u32> = d.iter().map(|dj| dj * (a - b)).collect();
        let bounds: Vec<u32> = box_bounds.iter().map(|x| x + 1).collect();
        for e in exponent_box(&bounds) {
            let shifted: Vec<u32> = e.iter().zip(&prod).map(|(x, y)| x + y).collect();
            let m = Polynomial::term(&ctx, Monomial::from(e.clone()), 1);
            if colon.contains(&m).unwrap() != monomial_ideal_contains(&gens, &shifted) {
                out.push(format!("{tag} (f^[{a}] : f^{}): membership of x^{e:?}", a - b));
            }
        }
    }
    out
}
