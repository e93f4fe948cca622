use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ddelta::Schedule;
use crate::error::{Error, Result};
use crate::groebner::{describe_sequence, RegSeqContext};
use crate::polyring::{parse_polynomial, Budget, RingContext, TermOrder};

pub const MAX_DEGREE_ENV: &str = "FEDDER_MAX_DEGREE";
pub const MAX_PAIRS_ENV: &str = "FEDDER_MAX_PAIRS";

/// A batch of checks over one or more sequences.
///
/// A single instance may be given inline through `p`, `vars`, `order` and
/// `sequence`; further ones go in `instances`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<TermOrder>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub instances: Vec<InstanceConfig>,
    pub checks: Vec<CheckSpec>,
    #[serde(default)]
    pub budget: BudgetConfig,
    #[serde(default)]
    pub seed: u64,
    /// Levels drawn by `--dot`.
    #[serde(default = "default_dot_levels")]
    pub dot_levels: Vec<u32>,
}

fn default_dot_levels() -> Vec<u32> {
    vec![2]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    pub p: u64,
    pub vars: Vec<String>,
    #[serde(default)]
    pub order: TermOrder,
    pub sequence: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetConfig {
    #[serde(default)]
    pub max_degree: Option<u64>,
    #[serde(default)]
    pub max_pairs: Option<usize>,
}

impl BudgetConfig {
    /// Config values, then environment overrides, then defaults.
    pub fn resolve(&self) -> Result<Budget> {
        let mut budget = Budget::default();
        if let Some(d) = self.max_degree {
            budget.max_degree = d;
        }
        if let Some(n) = self.max_pairs {
            budget.max_pairs = n;
        }
        if let Some(d) = env_number(MAX_DEGREE_ENV)? {
            budget.max_degree = d;
        }
        if let Some(n) = env_number(MAX_PAIRS_ENV)? {
            budget.max_pairs = n as usize;
        }
        Ok(budget)
    }
}

fn env_number(name: &str) -> Result<Option<u64>> {
    match std::env::var(name) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| Error::Config(format!("{name}={v} is not a number"))),
        Err(_) => Ok(None),
    }
}

/// One requested check with its parameters; omitted parameters take the
/// defaults shown by `list-checks`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", deny_unknown_fields)]
pub enum CheckSpec {
    #[serde(rename = "colon_identities")]
    ColonIdentities {
        #[serde(default = "six")]
        max: u32,
    },
    #[serde(rename = "complex_wellformed")]
    ComplexWellformed {
        #[serde(default)]
        levels: Option<Vec<u32>>,
    },
    #[serde(rename = "frobenius_stability")]
    FrobeniusStability {
        #[serde(default)]
        levels: Option<Vec<u32>>,
    },
    #[serde(rename = "verify_vanishing")]
    VerifyVanishing {
        #[serde(default = "two_only")]
        levels: Vec<u32>,
        #[serde(default)]
        degrees: Option<Vec<usize>>,
        #[serde(default)]
        bound: Option<u32>,
        #[serde(default)]
        schedule: Schedule,
    },
    #[serde(rename = "verify_augmentation")]
    VerifyAugmentation {
        #[serde(default = "five")]
        max_level: u32,
    },
    #[serde(rename = "verify_structure_kernels")]
    VerifyStructureKernels {
        #[serde(default = "one_two")]
        exponents: Vec<u32>,
    },
    #[serde(rename = "verify_codim2_V")]
    VerifyCodim2V {
        #[serde(default = "one_two")]
        exponents: Vec<u32>,
    },
    #[serde(rename = "cech_fedder_algebra")]
    CechFedderAlgebra {
        #[serde(default = "hundred")]
        samples: usize,
        #[serde(default = "three")]
        max_exponent: u32,
    },
    #[serde(rename = "filtration")]
    Filtration {
        #[serde(default = "two_only")]
        levels: Vec<u32>,
    },
}

fn six() -> u32 {
    6
}
fn five() -> u32 {
    5
}
fn three() -> u32 {
    3
}
fn hundred() -> usize {
    100
}
fn two_only() -> Vec<u32> {
    vec![2]
}
fn one_two() -> Vec<u32> {
    vec![1, 2]
}

impl CheckSpec {
    pub fn name(&self) -> &'static str {
        match self {
            CheckSpec::ColonIdentities { .. } => "colon_identities",
            CheckSpec::ComplexWellformed { .. } => "complex_wellformed",
            CheckSpec::FrobeniusStability { .. } => "frobenius_stability",
            CheckSpec::VerifyVanishing { .. } => "verify_vanishing",
            CheckSpec::VerifyAugmentation { .. } => "verify_augmentation",
            CheckSpec::VerifyStructureKernels { .. } => "verify_structure_kernels",
            CheckSpec::VerifyCodim2V { .. } => "verify_codim2_V",
            CheckSpec::CechFedderAlgebra { .. } => "cech_fedder_algebra",
            CheckSpec::Filtration { .. } => "filtration",
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("line {} column {}: {e}", e.line(), e.column())))
    }

    /// The inline instance followed by `instances`.
    pub fn instance_configs(&self) -> Result<Vec<InstanceConfig>> {
        let mut out = Vec::new();
        match (&self.p, &self.vars, &self.sequence) {
            (Some(p), Some(vars), Some(sequence)) => out.push(InstanceConfig {
                p: *p,
                vars: vars.clone(),
                order: self.order.unwrap_or_default(),
                sequence: sequence.clone(),
            }),
            (None, None, None) if self.order.is_none() => {}
            _ => return Err(Error::Config("inline instance needs all of p, vars and sequence".into())),
        }
        out.extend(self.instances.iter().cloned());
        if out.is_empty() {
            return Err(Error::Config("no instance given".into()));
        }
        Ok(out)
    }

    /// Parses and certifies every instance.
    pub fn build_instances(&self) -> Result<Vec<Arc<RegSeqContext>>> {
        self.prepare()?
            .into_iter()
            .map(|b| match b {
                Prepared::Ready(rs) => Ok(rs),
                Prepared::OverBudget { message, .. } => Err(Error::BudgetExceeded(message)),
            })
            .collect()
    }

    /// Like [`RunConfig::build_instances`], but an instance whose
    /// certification runs out of budget is kept as such instead of aborting.
    pub(crate) fn prepare(&self) -> Result<Vec<Prepared>> {
        let budget = self.budget.resolve()?;
        let instances = self.instance_configs()?;
        let mut out = Vec::with_capacity(instances.len());
        for (k, inst) in instances.iter().enumerate() {
            let ctx = RingContext::new(inst.p, &inst.vars, inst.order)
                .map_err(|e| Error::Config(format!("instance {k}: {e}")))?
                .with_budget(budget);
            let f = inst
                .sequence
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    parse_polynomial(s, &ctx).map_err(|e| Error::Config(format!("instance {k}, sequence[{i}]: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if self.checks.iter().any(|c| matches!(c, CheckSpec::VerifyCodim2V { .. })) && f.len() != 2 {
                return Err(Error::Config(format!(
                    "verify_codim2_V needs codimension 2, got {}",
                    describe_sequence(&ctx, &f)
                )));
            }
            let describe = describe_sequence(&ctx, &f);
            out.push(match RegSeqContext::new(&ctx, f) {
                Ok(rs) => Prepared::Ready(rs),
                Err(Error::BudgetExceeded(message)) => Prepared::OverBudget { describe, message },
                Err(Error::NotPermutable(m)) => return Err(Error::NotPermutable(format!("instance {k}: {m}"))),
                Err(other) => return Err(other),
            });
        }
        Ok(out)
    }
}

pub(crate) enum Prepared {
    Ready(Arc<RegSeqContext>),
    OverBudget { describe: String, message: String },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_style_config() {
        let cfg = RunConfig::from_json(
            r#"{"p":2,"vars":["x","y"],"sequence":["x","y"],"checks":[{"check":"colon_identities","max":4}]}"#,
        )
        .unwrap();
        assert_eq!(cfg.checks, vec![CheckSpec::ColonIdentities { max: 4 }]);
        assert_eq!(cfg.build_instances().unwrap().len(), 1);
    }

    #[test]
    fn rejects_unknown_checks_and_bad_sequences() {
        let err = RunConfig::from_json(r#"{"p":2,"vars":["x"],"sequence":["x"],"checks":[{"check":"nope"}]}"#);
        assert!(matches!(err, Err(Error::Config(_))));
        let cfg = RunConfig::from_json(r#"{"p":2,"vars":["x","y"],"sequence":["x","x"],"checks":[]}"#).unwrap();
        match cfg.build_instances() {
            Err(Error::NotPermutable(m)) => assert!(m.contains("T={1}, j=2")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
