use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::config::CheckSpec;
use super::report::Status;
use crate::cech::CechClass;
use crate::ddelta::{
    build_level, fedder_chain_map, fedder_embedding_failures, ideal_difference_witness, quotient_and_kernel_complexes,
    transition_chain_map, verify_augmentation, verify_codim2_v, verify_structure_kernels, verify_vanishing,
    DDeltaLevel, Schedule,
};
use crate::error::{Error, Result};
use crate::fpmod::format_vector;
use crate::groebner::{Ideal, RegSeqContext};
use crate::polyring::Polynomial;
use crate::subset::IndexSet;

/// Result of one unit of work, before timing and labelling.
pub(crate) struct Outcome {
    pub status: Status,
    pub details: Value,
    pub witness: Option<String>,
}

impl Outcome {
    fn judged(ok: bool, details: Value, witness: Option<String>) -> Self {
        Outcome { status: if ok { Status::Pass } else { Status::Fail }, details, witness }
    }
}

/// One record's worth of work: a check applied to an instance with concrete
/// parameters.
#[derive(Clone, Debug)]
pub(crate) struct Task {
    pub instance: usize,
    pub check: &'static str,
    pub params: Value,
    kind: TaskKind,
}

#[derive(Clone, Debug)]
enum TaskKind {
    Colon { max: u32 },
    Wellformed { a: u32 },
    Stability { a: u32 },
    Vanishing { a: u32, degree: usize, bound: u32, schedule: Schedule },
    Augmentation { max_level: u32 },
    StructureKernels { e: u32 },
    Codim2 { e: u32 },
    Algebra { samples: usize, max_exponent: u32, seed: u64 },
    Filtration { a: u32 },
}

fn default_levels(p: u32) -> Vec<u32> {
    let mut v = vec![1, 2, p + 1, p * p + 1];
    v.sort_unstable();
    v.dedup();
    v
}

/// Expands a check into tasks for one instance, validating its parameters.
pub(crate) fn expand(check: &CheckSpec, instance: usize, rs: &RegSeqContext, seed: u64) -> Result<Vec<Task>> {
    let p = rs.ctx().characteristic();
    let c = rs.codim();
    let name = check.name();
    let task = |params: Value, kind: TaskKind| Task { instance, check: name, params, kind };
    let positive = |levels: &[u32]| -> Result<()> {
        if levels.contains(&0) {
            return Err(Error::Config(format!("{name}: levels must be at least 1")));
        }
        Ok(())
    };
    Ok(match check {
        CheckSpec::ColonIdentities { max } => vec![task(json!({ "max": max }), TaskKind::Colon { max: *max })],
        CheckSpec::ComplexWellformed { levels } | CheckSpec::FrobeniusStability { levels } => {
            let levels = levels.clone().unwrap_or_else(|| default_levels(p));
            positive(&levels)?;
            levels
                .into_iter()
                .map(|a| {
                    let kind = if matches!(check, CheckSpec::ComplexWellformed { .. }) {
                        TaskKind::Wellformed { a }
                    } else {
                        TaskKind::Stability { a }
                    };
                    task(json!({ "level": a }), kind)
                })
                .collect()
        }
        CheckSpec::VerifyVanishing { levels, degrees, bound, schedule } => {
            positive(levels)?;
            let degrees = degrees.clone().unwrap_or_else(|| (0..c).collect());
            if let Some(&i) = degrees.iter().find(|&&i| i >= c) {
                return Err(Error::Config(format!("{name}: degree {i} is not below the codimension {c}")));
            }
            let mut out = Vec::new();
            for &a in levels {
                let bound = bound.unwrap_or(a.saturating_mul(p * p));
                for &degree in &degrees {
                    let params = json!({ "level": a, "degree": degree, "bound": bound, "schedule": schedule });
                    out.push(task(params, TaskKind::Vanishing { a, degree, bound, schedule: *schedule }));
                }
            }
            out
        }
        CheckSpec::VerifyAugmentation { max_level } => {
            positive(&[*max_level])?;
            vec![task(json!({ "max_level": max_level }), TaskKind::Augmentation { max_level: *max_level })]
        }
        CheckSpec::VerifyStructureKernels { exponents } => {
            exponents.iter().map(|&e| task(json!({ "exponent": e }), TaskKind::StructureKernels { e })).collect()
        }
        CheckSpec::VerifyCodim2V { exponents } => {
            if c != 2 {
                return Err(Error::Config(format!("{name}: codimension {c} is not 2")));
            }
            exponents.iter().map(|&e| task(json!({ "exponent": e }), TaskKind::Codim2 { e })).collect()
        }
        CheckSpec::CechFedderAlgebra { samples, max_exponent } => {
            let params = json!({ "samples": samples, "max_exponent": max_exponent });
            let seed = seed ^ stable_hash(&rs.describe());
            vec![task(params, TaskKind::Algebra { samples: *samples, max_exponent: *max_exponent, seed })]
        }
        CheckSpec::Filtration { levels } => {
            positive(levels)?;
            levels.iter().map(|&a| task(json!({ "level": a }), TaskKind::Filtration { a })).collect()
        }
    })
}

/// FNV-1a, so per-instance seeds do not depend on the platform hasher.
fn stable_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl Task {
    pub(crate) fn run(&self, rs: &Arc<RegSeqContext>) -> Outcome {
        match self.execute(rs) {
            Ok(outcome) => outcome,
            Err(Error::BudgetExceeded(msg)) => {
                Outcome { status: Status::BudgetExceeded, details: json!({ "error": msg }), witness: None }
            }
            Err(e) => Outcome {
                status: Status::Fail,
                details: json!({ "error": e.to_string() }),
                witness: Some(e.to_string()),
            },
        }
    }

    fn execute(&self, rs: &Arc<RegSeqContext>) -> Result<Outcome> {
        match self.kind {
            TaskKind::Colon { max } => colon_identities(rs, max),
            TaskKind::Wellformed { a } => complex_wellformed(rs, a),
            TaskKind::Stability { a } => frobenius_stability(rs, a),
            TaskKind::Vanishing { a, degree, bound, schedule } => {
                let report = verify_vanishing(rs, degree, a, bound, schedule)?;
                let status = if report.all_died() { Status::Pass } else { Status::BoundExceeded };
                let witness = report.generators.iter().find(|g| g.death_level.is_none()).map(|g| g.generator.clone());
                Ok(Outcome { status, details: serde_json::to_value(&report).expect("report"), witness })
            }
            TaskKind::Augmentation { max_level } => {
                let reports = (1..=max_level).map(|a| verify_augmentation(rs, a)).collect::<Result<Vec<_>>>()?;
                let failing = reports.iter().find(|r| !r.holds());
                let witness = failing.map(|r| format!("a={}: {}", r.level, r.witness.clone().unwrap_or_default()));
                Ok(Outcome::judged(failing.is_none(), json!(reports), witness))
            }
            TaskKind::StructureKernels { e } => {
                let report = verify_structure_kernels(rs, e)?;
                Ok(Outcome::judged(report.passes(), json!(report), report.witness.clone()))
            }
            TaskKind::Codim2 { e } => {
                let report = verify_codim2_v(rs, e)?;
                Ok(Outcome::judged(report.holds(), json!(report), report.witness.clone()))
            }
            TaskKind::Algebra { samples, max_exponent, seed } => cech_fedder_algebra(rs, samples, max_exponent, seed),
            TaskKind::Filtration { a } => filtration(rs, a),
        }
    }
}

fn colon_identities(rs: &Arc<RegSeqContext>, max: u32) -> Result<Outcome> {
    let mut checked = 0;
    for b in 2..=max {
        let fb = rs.bracket_power(b)?;
        for a in 1..b {
            let fa = rs.bracket_power(a)?;
            let by_power = fb.colon(&rs.f_prod().pow((b - a) as u64)?)?;
            if let Some(w) = ideal_difference_witness(&by_power, &fa)? {
                let details = json!({ "a": a, "b": b, "identity": "(f^[b] : f^(b-a)) = f^[a]" });
                return Ok(Outcome::judged(false, details, Some(w.to_string())));
            }
            let by_bracket = fb.colon_ideal(&fa)?;
            let expected = Ideal::principal(&rs.f_prod().pow((b - a) as u64)?).sum(&fb);
            if let Some(w) = ideal_difference_witness(&by_bracket, &expected)? {
                let details = json!({ "a": a, "b": b, "identity": "(f^[b] : f^[a]) = (f^(b-a)) + f^[b]" });
                return Ok(Outcome::judged(false, details, Some(w.to_string())));
            }
            checked += 1;
        }
    }
    Ok(Outcome::judged(true, json!({ "pairs": checked }), None))
}

/// First column of `∂^{i+1} ∂^i` that is nonzero in the target term.
fn square_witness(level: &DDeltaLevel) -> Result<Option<String>> {
    let cx = level.complex();
    for i in 0..level.codim().saturating_sub(1) {
        let composite = cx.map(i).then(cx.map(i + 1))?;
        for (k, col) in composite.matrix().columns().into_iter().enumerate() {
            if !cx.term(i + 2).is_zero_element(&col)? {
                return Ok(Some(format!("degree {i}, summand {}: {}", level.labels(i)[k], format_vector(&col))));
            }
        }
    }
    Ok(None)
}

fn complex_wellformed(rs: &Arc<RegSeqContext>, a: u32) -> Result<Outcome> {
    let level = build_level(rs, a)?;
    let c = rs.codim();
    let mut witness = square_witness(&level)?;
    for (i, m) in level.complex().maps().iter().enumerate() {
        if witness.is_none() && !m.is_well_defined()? {
            witness = Some(format!("differential {i} is not well defined"));
        }
    }
    let cosimplicial = level.semi_cosimplicial_failures()?;
    if witness.is_none() {
        witness = cosimplicial
            .first()
            .map(|(i, j, k)| format!("d^{}_{k} d^{i}_{j} != d^{}_{j} d^{i}_{}", i + 1, i + 1, k - 1));
    }
    for i in 0..c {
        if witness.is_none() && !level.differential_matches_cofaces(i)? {
            witness = Some(format!("differential {i} is not the signed sum of cofaces"));
        }
    }
    let embeddings = level.embedding_failures()?;
    if witness.is_none() {
        witness = embeddings.first().map(|(s, t)| format!("embedding {s} -> {t}"));
    }
    let bottom = level.summand_ideal(IndexSet::empty());
    let top = level.summand_ideal(IndexSet::full(c));
    let ends = bottom.equals(&rs.ideal_of(rs.full()))? && top.equals(&*rs.bracket_power(a)?)?;
    if witness.is_none() && !ends {
        witness = Some("end terms differ from R/(f) and R/f^[a]".into());
    }
    let ranks: Vec<usize> = (0..=c).map(|i| level.labels(i).len()).collect();
    let details = json!({
        "ranks": ranks,
        "semi_cosimplicial_identities_failed": cosimplicial.len(),
        "embedding_failures": embeddings.len(),
    });
    Ok(Outcome::judged(witness.is_none(), details, witness))
}

fn frobenius_stability(rs: &Arc<RegSeqContext>, a: u32) -> Result<Outcome> {
    let p = rs.ctx().characteristic();
    let b = a + 1;
    let la = build_level(rs, a)?;
    let lb = build_level(rs, b)?;
    let lap = build_level(rs, a * p)?;
    let lbp = build_level(rs, b * p)?;
    let fa = fedder_chain_map(&la)?;
    let fb = fedder_chain_map(&lb)?;
    let mut witness = None;
    if let Some(i) = fa.commutation_failures(&la, &lap)?.first() {
        witness = Some(format!("Fedder map does not commute with differential {i}"));
    }
    let one_way = transition_chain_map(&la, &lb)?.then(&fb)?;
    let other_way = fa.then(&transition_chain_map(&lap, &lbp)?)?;
    let transitions_commute = one_way.same_as(&other_way);
    if witness.is_none() && !transitions_commute {
        let bad = (0..=rs.codim())
            .flat_map(|i| la.labels(i).iter().copied())
            .find(|&s| one_way.multiplier(s, &la) != other_way.multiplier(s, &la))
            .expect("differing summand");
        witness =
            Some(format!("summand {bad}: {} vs {}", one_way.multiplier(bad, &la), other_way.multiplier(bad, &la)));
    }
    let embedding = fedder_embedding_failures(&la, &lap)?;
    if witness.is_none() {
        witness = embedding.first().map(|s| format!("summand {s} does not intertwine with the Fedder action"));
    }
    let natural_on_bottom = fa.multiplier(IndexSet::empty(), &la).is_one();
    if witness.is_none() && !natural_on_bottom {
        witness = Some("Fedder map on R/(f) is not the Frobenius".into());
    }
    let details = json!({
        "source_level": a,
        "target_level": a * p,
        "transition": [a, b],
        "transitions_commute": transitions_commute,
        "embedding_failures": embedding.len(),
    });
    Ok(Outcome::judged(witness.is_none(), details, witness))
}

fn random_poly(rs: &RegSeqContext, rng: &mut ChaCha8Rng) -> Polynomial {
    Polynomial::random(rs.ctx(), rng, 3, 4)
}

fn cech_fedder_algebra(rs: &Arc<RegSeqContext>, samples: usize, max_exponent: u32, seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rs.ctx().characteristic() as u64;
    let f = rs.f_prod();
    let fail =
        |property: &str, witness: String| Ok(Outcome::judged(false, json!({ "property": property }), Some(witness)));
    for _ in 0..samples {
        let r = random_poly(rs, &mut rng);
        let lhs = CechClass::new(rs, &r, 1)?.f_fed()?;
        let rhs = CechClass::new(rs, &r.pow(p)?, 1)?;
        if !lhs.equals(&rhs)? {
            return fail("Fedder action fixes the image of R/f", r.to_string());
        }
    }
    let start = CechClass::one_over(rs, 2)?;
    let mut xi = start.clone();
    for e in 1..=max_exponent {
        xi = xi.f_fed()?;
        let q = p.checked_pow(e).filter(|&q| q < u32::MAX as u64).ok_or(Error::ExponentOverflow)?;
        if !xi.equals(&CechClass::one_over(rs, q as u32 + 1)?)? {
            return fail("iterated Fedder action on 1/f^2", format!("e={e}: {xi}"));
        }
    }
    for _ in 0..samples {
        let level = rng.gen_range(1..=3);
        let xi = CechClass::new(rs, &random_poly(rs, &mut rng), level)?;
        let lhs = xi.f_fed()?.scale(f)?;
        let rhs = xi.scale(f)?.f_nat()?;
        if !lhs.equals(&rhs)? {
            return fail("f . F_fed = F_nat . f", xi.to_string());
        }
        let s = random_poly(rs, &mut rng);
        if !xi.scale(&s)?.f_fed()?.equals(&xi.f_fed()?.scale(&s.pow(p)?)?)? {
            return fail("semilinearity", format!("s={s}, xi={xi}"));
        }
    }
    let details = json!({ "samples": samples, "max_exponent": max_exponent, "seed": seed });
    Ok(Outcome::judged(true, details, None))
}

fn filtration(rs: &Arc<RegSeqContext>, a: u32) -> Result<Outcome> {
    let level = build_level(rs, a)?;
    let mut certificates = Vec::new();
    let mut witness = None;
    for n in 1..=rs.codim() {
        let filt = quotient_and_kernel_complexes(&level, n)?;
        let complexes = filt.quotient.complex().is_complex()? && filt.kernel.complex().is_complex()?;
        if witness.is_none() {
            if !filt.certificate.holds() {
                witness = Some(format!("n={n}: {}", filt.certificate.mismatches.join("; ")));
            } else if !complexes {
                witness = Some(format!("n={n}: a quotient or kernel fails to be a complex"));
            }
        }
        certificates.push(json!({ "n": n, "certificate": filt.certificate, "complexes": complexes }));
    }
    Ok(Outcome::judged(witness.is_none(), json!(certificates), witness))
}
