use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fpmod::{ChainComplex, FPModule, Matrix, ModuleMap};
use crate::groebner::{Ideal, RegSeqContext};
use crate::polyring::{product, Polynomial};
use crate::subset::IndexSet;

/// One finite level of the ΔΔ complex: term `i` is `⊕_{|S|=i} R/J_S(a)`
/// with `J_S(a) = (f_j : j ∉ S) + (f_i^a : i ∈ S)`, summands in colex order.
///
/// The complex may be built over the first `m` elements of the sequence and
/// a base ideal, which realises it over a quotient ring.
pub struct DDeltaLevel {
    rs: Arc<RegSeqContext>,
    a: u32,
    m: usize,
    base: Vec<Polynomial>,
    labels: Vec<Vec<IndexSet>>,
    ideals: Vec<Vec<Ideal>>,
    powers: Vec<Polynomial>,
    complex: ChainComplex,
}

impl std::fmt::Debug for DDeltaLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DDeltaLevel(a={}, m={}, {})", self.a, self.m, self.rs.describe())
    }
}

/// The level-`a` complex of the whole sequence.
pub fn build_level(rs: &Arc<RegSeqContext>, a: u32) -> Result<DDeltaLevel> {
    DDeltaLevel::build(rs, a, rs.codim(), Vec::new())
}

fn sign(s: IndexSet, j: usize) -> bool {
    s.position_of(j) % 2 == 1
}

impl DDeltaLevel {
    /// The complex of `f_1..f_m` over `R / (base)`.
    pub fn build(rs: &Arc<RegSeqContext>, a: u32, m: usize, base: Vec<Polynomial>) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidLevel(0));
        }
        if m > rs.codim() {
            return Err(Error::InvalidArgument(format!("prefix {m} longer than the sequence")));
        }
        let ctx = rs.ctx();
        let f = &rs.sequence()[..m];
        let powers: Vec<Polynomial> = f.iter().map(|g| g.pow((a - 1) as u64)).collect::<Result<_>>()?;
        let labels: Vec<Vec<IndexSet>> = (0..=m).map(|i| IndexSet::subsets_of_size(m, i)).collect();
        let mut ideals = Vec::with_capacity(m + 1);
        let mut terms = Vec::with_capacity(m + 1);
        for row in &labels {
            let mut row_ideals = Vec::with_capacity(row.len());
            for &s in row {
                let mut gens = base.clone();
                for j in 0..m {
                    gens.push(if s.contains(j) { f[j].pow(a as u64)? } else { f[j].clone() });
                }
                row_ideals.push(Ideal::new(ctx, gens));
            }
            terms.push(Arc::new(FPModule::direct_sum(ctx, &row_ideals, Some(row.clone()))?));
            ideals.push(row_ideals);
        }
        let mut maps = Vec::with_capacity(m);
        for i in 0..m {
            let mut d = Matrix::zero(ctx, labels[i + 1].len(), labels[i].len());
            for (col, &s) in labels[i].iter().enumerate() {
                for j in (0..m).filter(|&j| !s.contains(j)) {
                    let row = index_of(&labels[i + 1], s.with(j));
                    let entry = if sign(s, j) { -&powers[j] } else { powers[j].clone() };
                    d.set(row, col, entry);
                }
            }
            maps.push(ModuleMap::new(terms[i].clone(), terms[i + 1].clone(), d)?);
        }
        let complex = ChainComplex::new(terms, maps)?;
        Ok(DDeltaLevel { rs: rs.clone(), a, m, base, labels, ideals, powers, complex })
    }

    pub fn rs(&self) -> &Arc<RegSeqContext> {
        &self.rs
    }

    pub fn level(&self) -> u32 {
        self.a
    }

    /// Length of the active prefix of the sequence.
    pub fn codim(&self) -> usize {
        self.m
    }

    pub fn base(&self) -> &[Polynomial] {
        &self.base
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn labels(&self, i: usize) -> &[IndexSet] {
        &self.labels[i]
    }

    pub fn summand_ideal(&self, s: IndexSet) -> &Ideal {
        &self.ideals[s.len()][index_of(&self.labels[s.len()], s)]
    }

    /// Position of `s` among the summands of its term.
    pub fn summand_index(&self, s: IndexSet) -> usize {
        index_of(&self.labels[s.len()], s)
    }

    pub fn differential(&self, i: usize) -> &Matrix {
        self.complex.map(i).matrix()
    }

    /// `d^i_j` for `1 ≤ j ≤ i+1`: the unsigned inclusions `S → T` where the
    /// new element is the `j`-th smallest of `T`.
    pub fn coface(&self, i: usize, j: usize) -> Matrix {
        let ctx = self.rs.ctx();
        let mut d = Matrix::zero(ctx, self.labels[i + 1].len(), self.labels[i].len());
        for (col, &s) in self.labels[i].iter().enumerate() {
            for t in (0..self.m).filter(|&t| !s.contains(t)) {
                if s.position_of(t) == j {
                    d.set(index_of(&self.labels[i + 1], s.with(t)), col, self.powers[t].clone());
                }
            }
        }
        d
    }

    /// Checks `d^{i+1}_k d^i_j = d^{i+1}_j d^i_{k-1}` for all `j < k`;
    /// returns the failing `(i, j, k)`.
    pub fn semi_cosimplicial_failures(&self) -> Result<Vec<(usize, usize, usize)>> {
        let mut failures = Vec::new();
        for i in 0..self.m.saturating_sub(1) {
            for k in 2..=i + 2 {
                for j in 1..k {
                    let lhs = self.coface(i + 1, k).mul(&self.coface(i, j))?;
                    let rhs = self.coface(i + 1, j).mul(&self.coface(i, k - 1))?;
                    if lhs != rhs {
                        failures.push((i, j, k));
                    }
                }
            }
        }
        Ok(failures)
    }

    /// `∂ = Σ_j (-1)^j d_j`, checked exactly.
    pub fn differential_matches_cofaces(&self, i: usize) -> Result<bool> {
        let ctx = self.rs.ctx();
        let mut sum = Matrix::zero(ctx, self.labels[i + 1].len(), self.labels[i].len());
        for j in 1..=i + 1 {
            let d = self.coface(i, j);
            for r in 0..sum.rows() {
                for c in 0..sum.cols() {
                    let e = d.get(r, c);
                    let acc = if j % 2 == 1 { sum.get(r, c).checked_sub(e)? } else { sum.get(r, c).checked_add(e)? };
                    sum.set(r, c, acc);
                }
            }
        }
        Ok(&sum == self.differential(i))
    }

    /// `∏_{j ∉ S} f_j^{a-1}`, the multiplier of the summand `S` into the top
    /// term.
    pub fn embed_multiplier(&self, s: IndexSet) -> Result<Polynomial> {
        product(self.rs.ctx(), (0..self.m).filter(|&j| !s.contains(j)).map(|j| &self.powers[j]))
    }

    /// `R/J_S(a) → R/J_[m](a)`.
    pub fn embed_summand(&self, s: IndexSet) -> Result<ModuleMap> {
        let ctx = self.rs.ctx();
        let top = IndexSet::full(self.m);
        let source = Arc::new(FPModule::cyclic(self.summand_ideal(s)));
        let target = Arc::new(FPModule::cyclic(self.summand_ideal(top)));
        ModuleMap::new(source, target, Matrix::from_columns(ctx, 1, &[vec![self.embed_multiplier(s)?]])?)
    }

    /// Pairs `(S, T)` where `embed(T) ∘ d_{S→T} ≠ ±embed(S)` as polynomials.
    pub fn embedding_failures(&self) -> Result<Vec<(IndexSet, IndexSet)>> {
        let mut failures = Vec::new();
        for row in &self.labels {
            for &s in row {
                let lhs = self.embed_multiplier(s)?;
                for j in (0..self.m).filter(|&j| !s.contains(j)) {
                    let t = s.with(j);
                    if self.embed_multiplier(t)?.checked_mul(&self.powers[j])? != lhs {
                        failures.push((s, t));
                    }
                }
            }
        }
        Ok(failures)
    }

    /// Graphviz rendering: one node per summand with its ideal, one edge per
    /// nonzero differential entry.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph ddelta {{");
        let _ = writeln!(out, "  rankdir=LR;");
        let _ = writeln!(out, "  label=\"level {} : {}\";", self.a, self.rs.describe());
        for (i, row) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{i} {{ label=\"degree {i}\";");
            for (k, s) in row.iter().enumerate() {
                let _ = writeln!(out, "    \"{s}\" [label=\"{s}\\nR/{}\"];", self.ideals[i][k]);
            }
            let _ = writeln!(out, "  }}");
        }
        for i in 0..self.m {
            let d = self.differential(i);
            for (col, s) in self.labels[i].iter().enumerate() {
                for (row, t) in self.labels[i + 1].iter().enumerate() {
                    let e = d.get(row, col);
                    if !e.is_zero() {
                        let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label=\"{e}\"];");
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn index_of(labels: &[IndexSet], s: IndexSet) -> usize {
    labels.binary_search(&s).expect("label present")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, RingContext, TermOrder};

    fn xy(p: u64) -> Arc<RegSeqContext> {
        let ctx = RingContext::new(p, &["x", "y"], TermOrder::DegRevLex).unwrap();
        let f = vec![Polynomial::var(&ctx, 0), Polynomial::var(&ctx, 1)];
        RegSeqContext::new(&ctx, f).unwrap()
    }

    #[test]
    fn codim_two_level_two() {
        let rs = xy(3);
        let l = build_level(&rs, 2).unwrap();
        let p = |s: &str| parse_polynomial(s, rs.ctx()).unwrap();
        assert!(l.summand_ideal(IndexSet::empty()).equals(&Ideal::new(rs.ctx(), vec![p("x"), p("y")])).unwrap());
        assert!(l
            .summand_ideal(IndexSet::from_labels([1]))
            .equals(&Ideal::new(rs.ctx(), vec![p("y"), p("x^2")]))
            .unwrap());
        let d0 = l.differential(0);
        assert_eq!((d0.get(0, 0), d0.get(1, 0)), (&p("2*x"), &p("2*y")));
        let d1 = l.differential(1);
        assert_eq!((d1.get(0, 0), d1.get(0, 1)), (&p("y"), &p("2*x")));
        assert!(l.complex().is_complex().unwrap());
        assert!(l.semi_cosimplicial_failures().unwrap().is_empty());
        assert!(l.differential_matches_cofaces(0).unwrap() && l.differential_matches_cofaces(1).unwrap());
        assert!(l.embedding_failures().unwrap().is_empty());
        assert_eq!(l.embed_multiplier(IndexSet::from_labels([1])).unwrap(), p("y"));
        assert!(l.embed_multiplier(IndexSet::full(2)).unwrap().is_one());
    }

    #[test]
    fn level_one_has_unit_multipliers() {
        let l = build_level(&xy(2), 1).unwrap();
        assert!(l.differential(0).get(0, 0).is_one());
        assert!(l.to_dot().contains("\"{1}\" -> \"{1,2}\""));
    }
}
