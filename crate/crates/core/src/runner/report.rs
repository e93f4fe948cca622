use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    BoundExceeded,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    /// `p=..;vars=..;order=..;f=..`
    pub instance: String,
    pub params: Value,
    pub status: Status,
    pub details: Value,
    #[serde(default)]
    pub witness: Option<String>,
    /// Seconds.
    pub wall_time: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub seed: u64,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    /// 0 when everything passes, 1 on any failure, 2 when only bounds or
    /// budgets were exceeded.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().any(|r| r.status == Status::Fail) {
            1
        } else if self.records.iter().any(|r| r.status != Status::Pass) {
            2
        } else {
            0
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    /// One line per record.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let status = serde_json::to_value(r.status).expect("status");
            out.push_str(&format!(
                "{:<15} {:<25} {} {} ({:.2}s)\n",
                status.as_str().unwrap_or_default(),
                r.check,
                r.instance,
                r.params,
                r.wall_time
            ));
            if let Some(w) = &r.witness {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
        out.push_str(&format!(
            "{} records: {} pass, {} fail, {} bound_exceeded, {} budget_exceeded\n",
            self.records.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::BoundExceeded),
            self.count(Status::BudgetExceeded)
        ));
        out
    }

    /// The report with every `wall_time` zeroed, for reproducibility checks.
    pub fn without_timings(&self) -> VerificationReport {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.wall_time = 0.0;
        }
        r
    }
}
