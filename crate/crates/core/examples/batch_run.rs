//! Runs a JSON config through the batch runner, as the `fedder run` command
//! does, and prints the summary and the report.
//!
//! cargo run --example batch_run

use fedder::runner::{self, RunConfig};

const CONFIG: &str = r#"{
  "instances": [
    {"p": 2, "vars": ["x", "y"], "sequence": ["x+y", "x*y"]},
    {"p": 3, "vars": ["x", "y"], "sequence": ["x", "y"]}
  ],
  "checks": [
    {"check": "colon_identities", "max": 4},
    {"check": "verify_codim2_V", "exponents": [1]},
    {"check": "verify_vanishing", "levels": [2], "bound": 8}
  ],
  "seed": 1
}"#;

fn main() -> fedder::Result<()> {
    let config = RunConfig::from_json(CONFIG)?;
    let report = runner::run(&config, 2)?;
    print!("{}", report.summary());
    println!("exit code {}", report.exit_code());
    println!("{}", serde_json::to_string_pretty(&report.without_timings()).unwrap());
    Ok(())
}
