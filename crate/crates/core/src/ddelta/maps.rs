use std::sync::Arc;

use super::level::DDeltaLevel;
use crate::error::{Error, Result};
use crate::fpmod::{FPModule, Matrix, ModuleMap, SemilinearMap, Vector};
use crate::polyring::Polynomial;
use crate::subset::IndexSet;

/// A diagonal chain map between two levels of the same shape, acting on the
/// summand `S` by `r ↦ m_S · r^(p^e)`.
#[derive(Clone, Debug)]
pub struct LevelChainMap {
    source_level: u32,
    target_level: u32,
    frobenius: u32,
    multipliers: Vec<Vec<Polynomial>>,
}

/// `τ(a→b)`: multiplication by `f_S^{b-a}` on the summand `S`.
pub fn transition_chain_map(la: &DDeltaLevel, lb: &DDeltaLevel) -> Result<LevelChainMap> {
    same_shape(la, lb)?;
    let (a, b) = (la.level(), lb.level());
    if b < a {
        return Err(Error::InvalidArgument(format!("transition from level {a} down to {b}")));
    }
    let rs = la.rs();
    let multipliers = (0..=la.codim())
        .map(|i| la.labels(i).iter().map(|&s| rs.product_power(s, (b - a) as u64)).collect())
        .collect::<Result<_>>()?;
    Ok(LevelChainMap { source_level: a, target_level: b, frobenius: 0, multipliers })
}

/// The Fedder map `L_a → L_{ap}`: `r ↦ f_S^{p-1} · r^p` on the summand `S`.
pub fn fedder_chain_map(la: &DDeltaLevel) -> Result<LevelChainMap> {
    let rs = la.rs();
    let p = rs.ctx().characteristic();
    let target = la.level().checked_mul(p).ok_or(Error::ExponentOverflow)?;
    let multipliers = (0..=la.codim())
        .map(|i| la.labels(i).iter().map(|&s| rs.product_power(s, (p - 1) as u64)).collect())
        .collect::<Result<_>>()?;
    Ok(LevelChainMap { source_level: la.level(), target_level: target, frobenius: 1, multipliers })
}

fn same_shape(x: &DDeltaLevel, y: &DDeltaLevel) -> Result<()> {
    if !Arc::ptr_eq(x.rs(), y.rs()) || x.codim() != y.codim() || x.base() != y.base() {
        return Err(Error::InvalidArgument("levels of different complexes".into()));
    }
    Ok(())
}

impl LevelChainMap {
    pub fn source_level(&self) -> u32 {
        self.source_level
    }

    pub fn target_level(&self) -> u32 {
        self.target_level
    }

    /// `e` in `r ↦ m · r^(p^e)`; zero for linear maps.
    pub fn frobenius_power(&self) -> u32 {
        self.frobenius
    }

    pub fn multipliers(&self, i: usize) -> &[Polynomial] {
        &self.multipliers[i]
    }

    pub fn multiplier(&self, s: IndexSet, level: &DDeltaLevel) -> &Polynomial {
        &self.multipliers[s.len()][level.summand_index(s)]
    }

    /// Image of a representative of degree `i`, not reduced.
    pub fn apply(&self, i: usize, v: &[Polynomial]) -> Result<Vector> {
        v.iter().zip(&self.multipliers[i]).map(|(x, m)| m.checked_mul(&x.frobenius(self.frobenius)?)).collect()
    }

    fn diagonal(&self, source: &DDeltaLevel, i: usize) -> Matrix {
        let n = self.multipliers[i].len();
        let mut d = Matrix::zero(source.rs().ctx(), n, n);
        for (k, m) in self.multipliers[i].iter().enumerate() {
            d.set(k, k, m.clone());
        }
        d
    }

    /// Degrees `i` where `∂_target · M_i ≠ M_{i+1} · ∂_source^{[p^e]}`.
    pub fn commutation_failures(&self, source: &DDeltaLevel, target: &DDeltaLevel) -> Result<Vec<usize>> {
        same_shape(source, target)?;
        if source.level() != self.source_level || target.level() != self.target_level {
            return Err(Error::InvalidArgument("chain map applied to the wrong levels".into()));
        }
        let mut failures = Vec::new();
        for i in 0..source.codim() {
            let lhs = target.differential(i).mul(&self.diagonal(source, i))?;
            let rhs = self.diagonal(source, i + 1).mul(&source.differential(i).frobenius(self.frobenius)?)?;
            if lhs != rhs {
                failures.push(i);
            }
        }
        Ok(failures)
    }

    /// Summands whose component does not descend to the quotients.
    pub fn ill_defined_components(&self, source: &DDeltaLevel, target: &DDeltaLevel) -> Result<Vec<IndexSet>> {
        let ctx = source.rs().ctx();
        let mut bad = Vec::new();
        for i in 0..=source.codim() {
            for (k, &s) in source.labels(i).iter().enumerate() {
                let src = Arc::new(FPModule::cyclic(source.summand_ideal(s)));
                let tgt = Arc::new(FPModule::cyclic(target.summand_ideal(s)));
                let m = Matrix::from_columns(ctx, 1, &[vec![self.multipliers[i][k].clone()]])?;
                let ok = if self.frobenius == 0 {
                    ModuleMap::new(src, tgt, m)?.is_well_defined()?
                } else {
                    SemilinearMap::new(src, tgt, m, self.frobenius)?.is_well_defined()?
                };
                if !ok {
                    bad.push(s);
                }
            }
        }
        Ok(bad)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LevelChainMap) -> Result<LevelChainMap> {
        if next.source_level != self.target_level {
            return Err(Error::InvalidArgument("composition of non-adjacent chain maps".into()));
        }
        let multipliers = self
            .multipliers
            .iter()
            .zip(&next.multipliers)
            .map(|(mine, theirs)| {
                mine.iter().zip(theirs).map(|(m, n)| n.checked_mul(&m.frobenius(next.frobenius)?)).collect()
            })
            .collect::<Result<_>>()?;
        Ok(LevelChainMap {
            source_level: self.source_level,
            target_level: next.target_level,
            frobenius: self.frobenius + next.frobenius,
            multipliers,
        })
    }

    /// Equal as diagonal maps on representatives.
    pub fn same_as(&self, other: &LevelChainMap) -> bool {
        self.source_level == other.source_level
            && self.target_level == other.target_level
            && self.frobenius == other.frobenius
            && self.multipliers == other.multipliers
    }
}

/// Summands where `embed_{ap}(S) · F_S ≠ f^{p-1} · embed_a(S)^p`, i.e. where
/// the Fedder chain map fails to intertwine with the Fedder action on the
/// top term.
pub fn fedder_embedding_failures(la: &DDeltaLevel, lap: &DDeltaLevel) -> Result<Vec<IndexSet>> {
    let fed = fedder_chain_map(la)?;
    let rs = la.rs();
    let p = rs.ctx().characteristic() as u64;
    let twist = rs.product_power(IndexSet::full(la.codim()), p - 1)?;
    let mut bad = Vec::new();
    for i in 0..=la.codim() {
        for &s in la.labels(i) {
            let lhs = lap.embed_multiplier(s)?.checked_mul(fed.multiplier(s, la))?;
            let rhs = twist.checked_mul(&la.embed_multiplier(s)?.frobenius(1)?)?;
            if lhs != rhs {
                bad.push(s);
            }
        }
    }
    Ok(bad)
}
