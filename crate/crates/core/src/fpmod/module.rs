use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::engine::{Basis, SVec};
use crate::groebner::Ideal;
use crate::polyring::{Polynomial, RingContext};
use crate::subset::IndexSet;

/// An element of a free module R^n.
pub type Vector = Vec<Polynomial>;

pub fn zero_vector(ctx: &Arc<RingContext>, n: usize) -> Vector {
    vec![Polynomial::zero(ctx); n]
}

pub fn basis_vector(ctx: &Arc<RingContext>, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(ctx, n);
    v[i] = Polynomial::one(ctx);
    v
}

pub fn is_zero_vector(v: &[Polynomial]) -> bool {
    v.iter().all(Polynomial::is_zero)
}

/// Canonical text of a vector, e.g. `(x, 0, y^2)`.
pub fn format_vector(v: &[Polynomial]) -> String {
    let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Gröbner basis of a submodule of R^rank under the position-over-term
/// extension of the ring order.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    ctx: Arc<RingContext>,
    basis: Basis,
}

impl ModuleGb {
    pub fn new(ctx: &Arc<RingContext>, rank: usize, gens: &[Vector]) -> Result<Self> {
        if gens.iter().any(|g| g.len() != rank) {
            return Err(Error::InvalidArgument(format!("generator length differs from rank {rank}")));
        }
        let svecs: Vec<SVec> = gens.iter().map(|g| SVec::from_polys(g, 0)).collect();
        Ok(ModuleGb { ctx: ctx.clone(), basis: Basis::compute(ctx, rank, &svecs)? })
    }

    pub fn rank(&self) -> usize {
        self.basis.rank
    }

    pub fn elements(&self) -> Vec<Vector> {
        let n = self.rank() as u32;
        self.basis.elements.iter().map(|e| e.to_polys(&self.ctx, 0, n)).collect()
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Result<Vector> {
        if v.len() != self.rank() {
            return Err(Error::InvalidArgument(format!("vector of length {} in rank {}", v.len(), self.rank())));
        }
        let r = self.basis.reduce(&self.ctx, &SVec::from_polys(v, 0))?;
        Ok(r.to_polys(&self.ctx, 0, self.rank() as u32))
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(is_zero_vector(&self.normal_form(v)?))
    }
}

/// Reduced form of `v` modulo the submodule with basis `n`; zero iff `v ∈ N`.
pub fn module_normal_form(v: &[Polynomial], n: &ModuleGb) -> Result<Vector> {
    n.normal_form(v)
}

/// Pairs `(top, bottom)` generate a submodule of R^{m+k}; returns the bottom
/// parts of a basis of its intersection with `0 ⊕ R^k`.
pub(crate) fn eliminate(
    ctx: &Arc<RingContext>,
    top_rank: usize,
    bottom_rank: usize,
    gens: &[(Vector, Vector)],
) -> Result<Vec<Vector>> {
    let m = top_rank as u32;
    let svecs: Vec<SVec> =
        gens.iter().map(|(top, bottom)| SVec::from_polys(top, 0).concat(SVec::from_polys(bottom, m))).collect();
    let basis = Basis::compute(ctx, top_rank + bottom_rank, &svecs)?;
    Ok(basis.tail_elements(m).map(|e| e.to_polys(ctx, m, m + bottom_rank as u32)).collect())
}

/// A finitely presented module `R^rank / ⟨relations⟩`.
#[derive(Clone)]
pub struct FPModule {
    ctx: Arc<RingContext>,
    rank: usize,
    relations: Vec<Vector>,
    labels: Option<Vec<IndexSet>>,
    gb: OnceLock<ModuleGb>,
}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FPModule(rank {}, {} relations)", self.rank, self.relations.len())
    }
}

impl FPModule {
    pub fn new(ctx: &Arc<RingContext>, rank: usize, relations: Vec<Vector>) -> Result<Self> {
        if relations.iter().any(|r| r.len() != rank) {
            return Err(Error::InvalidArgument(format!("relation length differs from rank {rank}")));
        }
        let relations = relations.into_iter().filter(|r| !is_zero_vector(r)).collect();
        Ok(FPModule { ctx: ctx.clone(), rank, relations, labels: None, gb: OnceLock::new() })
    }

    pub fn free(ctx: &Arc<RingContext>, rank: usize) -> Self {
        FPModule { ctx: ctx.clone(), rank, relations: Vec::new(), labels: None, gb: OnceLock::new() }
    }

    /// `R / I`.
    pub fn cyclic(ideal: &Ideal) -> Self {
        let relations = ideal.gens().iter().map(|g| vec![g.clone()]).collect();
        FPModule { ctx: ideal.ctx().clone(), rank: 1, relations, labels: None, gb: OnceLock::new() }
    }

    /// `⊕_k R / I_k`, with optional labels for the summands.
    pub fn direct_sum(ctx: &Arc<RingContext>, ideals: &[Ideal], labels: Option<Vec<IndexSet>>) -> Result<Self> {
        let n = ideals.len();
        if labels.as_ref().is_some_and(|l| l.len() != n) {
            return Err(Error::InvalidArgument("label count differs from summand count".into()));
        }
        let mut relations = Vec::new();
        for (k, ideal) in ideals.iter().enumerate() {
            for g in ideal.gens() {
                let mut v = zero_vector(ctx, n);
                v[k] = g.clone();
                relations.push(v);
            }
        }
        let mut module = FPModule::new(ctx, n, relations)?;
        module.labels = labels;
        Ok(module)
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn labels(&self) -> Option<&[IndexSet]> {
        self.labels.as_deref()
    }

    pub fn relation_gb(&self) -> Result<&ModuleGb> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = ModuleGb::new(&self.ctx, self.rank, &self.relations)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Normal form of a representative modulo the relations.
    pub fn reduce(&self, v: &[Polynomial]) -> Result<Vector> {
        self.relation_gb()?.normal_form(v)
    }

    pub fn is_zero_element(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    /// Whether every element is zero.
    pub fn is_zero(&self) -> Result<bool> {
        for i in 0..self.rank {
            if !self.is_zero_element(&basis_vector(&self.ctx, self.rank, i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
