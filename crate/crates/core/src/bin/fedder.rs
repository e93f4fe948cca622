use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fedder::runner::{self, RunConfig, INVALID_INPUT};

/// Batch verification of Fedder-action identities over F_p[x_1..x_n].
///
/// Budget overrides: FEDDER_MAX_DEGREE, FEDDER_MAX_PAIRS.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks of a JSON config.
    Run {
        config: PathBuf,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write Graphviz diagrams of the configured levels here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print every check with its parameters and the statement it verifies.
    ListChecks,
}

fn run(config: PathBuf, jobs: usize, report: Option<PathBuf>, dot: Option<PathBuf>) -> Result<i32, String> {
    let text = std::fs::read_to_string(&config).map_err(|e| format!("{}: {e}", config.display()))?;
    let cfg = RunConfig::from_json(&text).map_err(|e| format!("{}: {e}", config.display()))?;
    let result = runner::run(&cfg, jobs).map_err(|e| e.to_string())?;
    if let Some(dir) = dot {
        for path in runner::write_dot(&cfg, &dir).map_err(|e| e.to_string())? {
            eprintln!("wrote {}", path.display());
        }
    }
    let json = serde_json::to_string_pretty(&result).expect("report serializes");
    match report {
        Some(path) => std::fs::write(&path, json + "\n").map_err(|e| format!("{}: {e}", path.display()))?,
        None => println!("{json}"),
    }
    eprint!("{}", result.summary());
    Ok(result.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::ListChecks => {
            print!("{}", runner::list_checks());
            0
        }
        Command::Run { config, jobs, report, dot } => run(config, jobs, report, dot).unwrap_or_else(|e| {
            eprintln!("error: {e}");
            INVALID_INPUT
        }),
    };
    ExitCode::from(code as u8)
}
