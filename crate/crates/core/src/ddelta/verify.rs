use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::level::{build_level, DDeltaLevel};
use super::maps::transition_chain_map;
use crate::error::{Error, Result};
use crate::fpmod::{basis_vector, format_vector, Vector};
use crate::groebner::{Ideal, RegSeqContext};
use crate::polyring::Polynomial;
use crate::subset::IndexSet;

/// Levels visited when searching for the death of a class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    /// `a, ap, ap², ..`
    #[default]
    Geometric,
    /// `a, a+1, a+2, ..`
    Unit,
}

impl Schedule {
    pub fn levels(self, a: u32, p: u32, bound: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut b = a;
        while b <= bound {
            out.push(b);
            let next = match self {
                Schedule::Geometric => b.checked_mul(p),
                Schedule::Unit => b.checked_add(1),
            };
            match next {
                Some(n) => b = n,
                None => break,
            }
        }
        out
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Schedule::Geometric => "geometric",
            Schedule::Unit => "unit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorDeath {
    /// Cocycle representative at the start level.
    pub generator: String,
    /// Smallest level where its transition image is a coboundary; `None`
    /// when no tested level up to the bound kills it.
    pub death_level: Option<u32>,
}

/// Death levels of the cocycle generators of degree `i` at level `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeathReport {
    pub degree: usize,
    pub start_level: u32,
    pub bound: u32,
    pub schedule: Schedule,
    /// Number of generators of `H^i` at the start level.
    pub cohomology_generators: usize,
    pub generators: Vec<GeneratorDeath>,
    pub levels_tested: Vec<u32>,
}

impl DeathReport {
    pub fn all_died(&self) -> bool {
        self.generators.iter().all(|g| g.death_level.is_some())
    }

    /// The largest death level, or the start level when nothing needs to die.
    pub fn max_death_level(&self) -> Option<u32> {
        self.generators.iter().try_fold(self.start_level, |acc, g| g.death_level.map(|d| acc.max(d)))
    }
}

/// Lazily built levels of one sequence.
struct LevelCache<'a> {
    rs: &'a Arc<RegSeqContext>,
    levels: BTreeMap<u32, DDeltaLevel>,
}

impl<'a> LevelCache<'a> {
    fn new(rs: &'a Arc<RegSeqContext>) -> Self {
        LevelCache { rs, levels: BTreeMap::new() }
    }

    fn get(&mut self, a: u32) -> Result<&DDeltaLevel> {
        if !self.levels.contains_key(&a) {
            let level = build_level(self.rs, a)?;
            self.levels.insert(a, level);
        }
        Ok(&self.levels[&a])
    }

    /// Whether `τ(a→b)(v)` is a coboundary in degree `i`.
    fn dies(&mut self, i: usize, a: u32, v: &[Polynomial], b: u32) -> Result<bool> {
        self.get(a)?;
        self.get(b)?;
        let (la, lb) = (&self.levels[&a], &self.levels[&b]);
        let image = transition_chain_map(la, lb)?.apply(i, v)?;
        lb.complex().is_coboundary(i, &image)
    }
}

fn walk(
    cache: &mut LevelCache,
    i: usize,
    a: u32,
    v: &[Polynomial],
    schedule: &[u32],
    tested: &mut Vec<u32>,
) -> Result<Option<u32>> {
    let mut last_alive = None;
    for &b in schedule {
        tested.push(b);
        if cache.dies(i, a, v, b)? {
            // Death is stable under transitions, so bisect the gap.
            let (mut lo, mut hi) = (last_alive.map_or(b, |l: u32| l + 1), b);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                tested.push(mid);
                if cache.dies(i, a, v, mid)? {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            return Ok(Some(hi));
        }
        last_alive = Some(b);
    }
    Ok(None)
}

fn death_report(
    rs: &Arc<RegSeqContext>,
    i: usize,
    a: u32,
    generators: Vec<Vector>,
    cohomology_generators: usize,
    bound: u32,
    schedule: Schedule,
) -> Result<DeathReport> {
    let levels = schedule.levels(a, rs.ctx().characteristic(), bound);
    let mut cache = LevelCache::new(rs);
    let mut tested = Vec::new();
    let mut out = Vec::with_capacity(generators.len());
    for z in generators {
        let death_level = walk(&mut cache, i, a, &z, &levels, &mut tested)?;
        out.push(GeneratorDeath { generator: format_vector(&z), death_level });
    }
    tested.sort_unstable();
    tested.dedup();
    Ok(DeathReport {
        degree: i,
        start_level: a,
        bound,
        schedule,
        cohomology_generators,
        generators: out,
        levels_tested: tested,
    })
}

/// Follows every cocycle generator of degree `i < c` at level `a` through
/// the transitions until it becomes a coboundary.
pub fn verify_vanishing(
    rs: &Arc<RegSeqContext>,
    i: usize,
    a: u32,
    bound: u32,
    schedule: Schedule,
) -> Result<DeathReport> {
    if i >= rs.codim() {
        return Err(Error::InvalidArgument(format!("degree {i} is not below the codimension {}", rs.codim())));
    }
    let level = build_level(rs, a)?;
    let cohomology = level.complex().cohomology(i)?.generators.len();
    let generators = level.complex().cocycle_generators(i)?;
    death_report(rs, i, a, generators, cohomology, bound, schedule)
}

/// The top class `1` at level `a` under the same search; it never dies.
pub fn top_class_persistence(rs: &Arc<RegSeqContext>, a: u32, bound: u32, schedule: Schedule) -> Result<DeathReport> {
    let c = rs.codim();
    death_report(rs, c, a, vec![basis_vector(rs.ctx(), 1, 0)], 1, bound, schedule)
}

fn gb_text(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal.groebner_basis()?.iter().map(|g| g.to_string()).collect())
}

/// A basis element of one ideal outside the other, if they differ.
pub fn ideal_difference_witness(x: &Ideal, y: &Ideal) -> Result<Option<Polynomial>> {
    for (u, v) in [(x, y), (y, x)] {
        for g in u.groebner_basis()? {
            if !v.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
    }
    Ok(None)
}

fn first_witness(pairs: &[(&Ideal, &Ideal)]) -> Result<Option<String>> {
    for (x, y) in pairs {
        if let Some(w) = ideal_difference_witness(x, y)? {
            return Ok(Some(w.to_string()));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentationReport {
    pub level: u32,
    /// `(f^[a] : f)`.
    pub colon_by_product: Vec<String>,
    /// `Σ_j (f^[a] : f_j)`.
    pub sum_of_colons: Vec<String>,
    /// Image of the last differential in the top term, plus `f^[a]`.
    pub boundary_image: Vec<String>,
    pub colon_identity: bool,
    pub image_identity: bool,
    pub witness: Option<String>,
}

impl AugmentationReport {
    pub fn holds(&self) -> bool {
        self.colon_identity && self.image_identity
    }
}

pub fn verify_augmentation(rs: &Arc<RegSeqContext>, a: u32) -> Result<AugmentationReport> {
    let bracket = rs.bracket_power(a)?;
    let lhs = bracket.colon(rs.f_prod())?;
    let mut rhs = Ideal::zero(rs.ctx());
    for fj in rs.sequence() {
        rhs = rhs.sum(&bracket.colon(fj)?);
    }
    let level = build_level(rs, a)?;
    let c = rs.codim();
    let top = IndexSet::full(c);
    let mut image: Vec<Polynomial> = bracket.gens().to_vec();
    for &s in level.labels(c - 1) {
        let col = level.summand_index(s);
        let entry = level.differential(c - 1).get(0, col);
        image.push(entry.checked_mul(&level.embed_multiplier(top)?)?);
    }
    let image = Ideal::new(rs.ctx(), image);
    Ok(AugmentationReport {
        level: a,
        colon_identity: lhs.equals(&rhs)?,
        image_identity: image.equals(&rhs)?,
        colon_by_product: gb_text(&lhs)?,
        sum_of_colons: gb_text(&rhs)?,
        boundary_image: gb_text(&image)?,
        witness: first_witness(&[(&lhs, &rhs), (&image, &rhs)])?,
    })
}

/// Colon ideals of the codimension-two decomposition of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codim2Report {
    pub q: u64,
    /// `((fg)^q, f^{q+p}, g^{q+1}) : f^{q+1}`.
    pub colon_f: Vec<String>,
    /// `(f^{p-1}, g^q)`.
    pub expected_f: Vec<String>,
    pub colon_g: Vec<String>,
    pub expected_g: Vec<String>,
    pub colon_f_holds: bool,
    pub colon_g_holds: bool,
    /// Generators of `(f^{q+1}) ∩ (g^{q+1})`.
    pub intersection: Vec<String>,
    pub intersection_holds: bool,
    /// A polynomial separating the two sides of the first failing identity.
    pub witness: Option<String>,
}

impl Codim2Report {
    pub fn holds(&self) -> bool {
        self.colon_f_holds && self.colon_g_holds && self.intersection_holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureKernelReport {
    pub frobenius_exponent: u32,
    pub q: u64,
    /// `(f^[q+p] : f^{p-1})`.
    pub colon: Vec<String>,
    /// `f^[q+1]`.
    pub expected: Vec<String>,
    pub holds: bool,
    /// `(f^[p] : f^{p-1}) = (f_1, .., f_c)`: the kernel on the copy of `R/f`.
    pub base_colon_holds: bool,
    /// The ideals of the `K^0` term `(f) / f^[p]`.
    pub k0_ideal: Vec<String>,
    pub k0_bracket: Vec<String>,
    pub codim2: Option<Codim2Report>,
    pub witness: Option<String>,
}

impl StructureKernelReport {
    pub fn passes(&self) -> bool {
        self.holds && self.base_colon_holds && self.codim2.as_ref().is_none_or(Codim2Report::holds)
    }
}

fn q_of(rs: &RegSeqContext, e: u32) -> Result<u64> {
    let p = rs.ctx().characteristic() as u64;
    p.checked_pow(e).filter(|&q| q + p < u32::MAX as u64).ok_or(Error::ExponentOverflow)
}

pub fn verify_structure_kernels(rs: &Arc<RegSeqContext>, e: u32) -> Result<StructureKernelReport> {
    let q = q_of(rs, e)?;
    let p = rs.ctx().characteristic() as u64;
    let twist = rs.f_prod().pow(p - 1)?;
    let colon = rs.bracket_power((q + p) as u32)?.colon(&twist)?;
    let expected = rs.bracket_power((q + 1) as u32)?;
    let base = rs.bracket_power(p as u32)?.colon(&twist)?;
    let plain = rs.ideal_of(rs.full());
    let codim2 = if rs.codim() == 2 { Some(verify_codim2_v(rs, e)?) } else { None };
    Ok(StructureKernelReport {
        frobenius_exponent: e,
        q,
        holds: colon.equals(&expected)?,
        base_colon_holds: base.equals(&plain)?,
        colon: gb_text(&colon)?,
        expected: gb_text(&expected)?,
        k0_ideal: gb_text(&plain)?,
        k0_bracket: gb_text(&*rs.bracket_power(p as u32)?)?,
        witness: first_witness(&[(&colon, &expected), (&base, &plain)])?
            .or_else(|| codim2.as_ref().and_then(|r| r.witness.clone())),
        codim2,
    })
}

/// Colon identity for one ordering `(f, g)`.
fn codim2_colon(f: &Polynomial, g: &Polynomial, q: u64, p: u64) -> Result<(Ideal, Ideal)> {
    let ctx = f.ctx();
    let fg = f.checked_mul(g)?;
    let ideal = Ideal::new(ctx, vec![fg.pow(q)?, f.pow(q + p)?, g.pow(q + 1)?]);
    let colon = ideal.colon(&f.pow(q + 1)?)?;
    let expected = Ideal::new(ctx, vec![f.pow(p - 1)?, g.pow(q)?]);
    Ok((colon, expected))
}

pub fn verify_codim2_v(rs: &Arc<RegSeqContext>, e: u32) -> Result<Codim2Report> {
    if rs.codim() != 2 {
        return Err(Error::InvalidArgument(format!("codimension {} is not 2", rs.codim())));
    }
    let q = q_of(rs, e)?;
    let p = rs.ctx().characteristic() as u64;
    let (f, g) = (&rs.sequence()[0], &rs.sequence()[1]);
    let (colon_f, expected_f) = codim2_colon(f, g, q, p)?;
    let (colon_g, expected_g) = codim2_colon(g, f, q, p)?;
    let ctx = rs.ctx();
    let meet = Ideal::principal(&f.pow(q + 1)?).intersect(&Ideal::principal(&g.pow(q + 1)?))?;
    let target = Ideal::new(ctx, vec![f.checked_mul(g)?.pow(q)?, f.pow(q + p)?, g.pow(q + p)?]);
    let mut outside = None;
    for h in meet.groebner_basis()? {
        if !target.contains(h)? {
            outside = Some(h.to_string());
            break;
        }
    }
    let intersection_holds = outside.is_none();
    let witness = first_witness(&[(&colon_f, &expected_f), (&colon_g, &expected_g)])?.or(outside);
    Ok(Codim2Report {
        q,
        colon_f_holds: colon_f.equals(&expected_f)?,
        colon_g_holds: colon_g.equals(&expected_g)?,
        colon_f: gb_text(&colon_f)?,
        expected_f: gb_text(&expected_f)?,
        colon_g: gb_text(&colon_g)?,
        expected_g: gb_text(&expected_g)?,
        intersection: gb_text(&meet)?,
        intersection_holds,
        witness,
    })
}
