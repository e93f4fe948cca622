//! Config-driven batch verification: expands checks into tasks, runs them
//! on a worker pool and assembles a deterministic report.

mod catalog;
mod checks;
mod config;
mod report;

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

pub use catalog::{list_checks, CheckInfo, CATALOG};
pub use config::{BudgetConfig, CheckSpec, InstanceConfig, RunConfig, MAX_DEGREE_ENV, MAX_PAIRS_ENV};
pub use report::{CheckRecord, Status, VerificationReport, SCHEMA_VERSION};

use crate::ddelta::build_level;
use crate::error::{Error, Result};
use config::Prepared;

/// Exit code for configurations that cannot be run.
pub const INVALID_INPUT: i32 = 3;

/// Runs every check on every instance with `jobs` worker threads (`0` picks
/// the number of cores). Errors are input errors; check failures are
/// reported as records.
pub fn run(config: &RunConfig, jobs: usize) -> Result<VerificationReport> {
    let prepared = config.prepare()?;
    let mut instances = Vec::new();
    let mut tasks = Vec::new();
    let mut records = Vec::new();
    for (k, p) in prepared.into_iter().enumerate() {
        match p {
            Prepared::Ready(rs) => {
                for check in &config.checks {
                    tasks.extend(checks::expand(check, k, &rs, config.seed)?);
                }
                instances.push((k, rs));
            }
            Prepared::OverBudget { describe, message } => {
                for check in &config.checks {
                    records.push((k, over_budget(check, &describe, &message)));
                }
            }
        }
    }
    let by_index = |k: usize| &instances.iter().find(|(j, _)| *j == k).expect("instance built").1;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    records.extend(pool.install(|| {
        tasks
            .par_iter()
            .map(|task| {
                let rs = by_index(task.instance);
                let start = Instant::now();
                let outcome = task.run(rs);
                let record = CheckRecord {
                    check: task.check.to_string(),
                    instance: rs.describe(),
                    params: task.params.clone(),
                    status: outcome.status,
                    details: outcome.details,
                    witness: outcome.witness,
                    wall_time: start.elapsed().as_secs_f64(),
                };
                (task.instance, record)
            })
            .collect::<Vec<_>>()
    }));
    records.sort_by(|(i, a), (j, b)| (i, &a.check, a.params.to_string()).cmp(&(j, &b.check, b.params.to_string())));
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        seed: config.seed,
        records: records.into_iter().map(|(_, r)| r).collect(),
    })
}

/// A record for a check that never ran because certifying its sequence
/// exceeded the budget.
fn over_budget(check: &CheckSpec, describe: &str, message: &str) -> CheckRecord {
    let mut params = serde_json::to_value(check).expect("check spec serializes");
    if let Some(map) = params.as_object_mut() {
        map.remove("check");
    }
    CheckRecord {
        check: check.name().to_string(),
        instance: describe.to_string(),
        params,
        status: Status::BudgetExceeded,
        details: serde_json::json!({ "stage": "sequence certification", "error": message }),
        witness: None,
        wall_time: 0.0,
    }
}

/// Writes `instance<k>_level<a>.dot` for every instance and configured level.
pub fn write_dot(config: &RunConfig, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    let instances = config.build_instances()?;
    std::fs::create_dir_all(dir).map_err(|e| Error::Config(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (k, rs) in instances.iter().enumerate() {
        for &a in &config.dot_levels {
            let path = dir.join(format!("instance{k}_level{a}.dot"));
            std::fs::write(&path, build_level(rs, a)?.to_dot())
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            written.push(path);
        }
    }
    Ok(written)
}
