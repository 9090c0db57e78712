//! Command-line front end: parse a JSON run config, run the selected solvers,
//! emit tables, norms and timing reports.
//!
//! Exit codes: 0 success, 1 fatal error, 2 success with degraded cells.

use burgers_laplace_cli::{config, run};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "burgers-laplace",
    about = "Viscid Burgers solver via Laplace-domain closed forms and numerical inversion",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected solvers and write tables plus a report.
    Solve {
        #[arg(long)]
        config: PathBuf,
        /// Output directory; overrides the config's output.path.
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
    /// Check the config against the schema and report problems.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run every selected solver three times and report minimum wall time
    /// per stage.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
}

fn threads_from_env() -> Result<usize, String> {
    match std::env::var("BURGERS_THREADS") {
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("BURGERS_THREADS must be a positive integer (got '{v}')")),
        Err(_) => Ok(1),
    }
}

fn load_config(path: &PathBuf) -> Result<config::RunConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    config::parse(&text).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match threads_from_env() {
        Ok(n) => n,
        Err(msg) => {
            eprintln!("{msg}");
            return ExitCode::from(1);
        }
    };

    match cli.command {
        Command::Validate { config } => match load_config(&config) {
            Ok(cfg) => {
                match cfg.problem.validate() {
                    Ok(warnings) => {
                        for w in warnings {
                            eprintln!("warning: {w}");
                        }
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        return ExitCode::from(1);
                    }
                }
                println!(
                    "config ok: {} solver(s), {} x {} grid",
                    cfg.solvers.len(),
                    cfg.ts.len(),
                    cfg.xs.len()
                );
                ExitCode::SUCCESS
            }
            Err(msg) => {
                eprintln!("{msg}");
                ExitCode::from(1)
            }
        },
        Command::Solve { config, output_dir } => match load_config(&config) {
            Ok(cfg) => {
                let out = output_dir.unwrap_or_else(|| PathBuf::from(&cfg.output_dir));
                match run::run(&cfg, &out, threads) {
                    Ok(outcome) => {
                        for f in &outcome.files {
                            println!("wrote {}", f.display());
                        }
                        ExitCode::from(outcome.exit_code)
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        ExitCode::from(1)
                    }
                }
            }
            Err(msg) => {
                eprintln!("{msg}");
                ExitCode::from(1)
            }
        },
        Command::Bench { config, output_dir } => match load_config(&config) {
            Ok(cfg) => {
                let out = output_dir.unwrap_or_else(|| PathBuf::from(&cfg.output_dir));
                match run::bench(&cfg, &out, threads, 3) {
                    Ok(outcome) => {
                        for f in &outcome.files {
                            println!("wrote {}", f.display());
                        }
                        ExitCode::from(outcome.exit_code)
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        ExitCode::from(1)
                    }
                }
            }
            Err(msg) => {
                eprintln!("{msg}");
                ExitCode::from(1)
            }
        },
    }
}
