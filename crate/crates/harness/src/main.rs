use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hilbert_axioms_harness::{
    parse_suites, run_suites, DimRange, Format, Model, RunError, SuiteConfig, SuiteId,
};

/// Seeded checks of the dagger-category axioms on Hilbert spaces and relations.
///
/// Exit status: 0 when every verdict is as expected (including the designed
/// failures of relations), 1 on an unexpected verdict, 2 on a usage error.
/// RAYON_NUM_THREADS sets the thread count.
#[derive(Parser)]
#[command(name = "hilbert-axioms", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run suites and emit a report.
    Check {
        /// fdhilb-r, fdhilb-c or finrel.
        #[arg(long)]
        model: Model,
        /// Inclusive dimension range, e.g. 1..5 [default: 1..5, 1..4 for finrel]
        #[arg(long)]
        dims: Option<DimRange>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Comma-separated suite ids [default: every suite for the model]
        #[arg(long)]
        suites: Option<String>,
        /// json or text.
        #[arg(long, default_value = "text")]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show the relations that witness the failing axioms.
    Counterexample {
        #[arg(long)]
        model: Model,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn execute(config: &SuiteConfig, format: Format, out: Option<PathBuf>) -> ExitCode {
    let report = match run_suites(config) {
        Ok(report) => report,
        Err(RunError::Config(e)) => return usage(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let rendered = report.emit(format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{rendered}"),
    }
    if report.all_expected {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Check {
            model,
            dims,
            trials,
            seed,
            tol,
            suites,
            format,
            out,
        } => {
            let mut config = SuiteConfig::new(model);
            if let Some(range) = dims {
                config.dim_min = range.min;
                config.dim_max = range.max;
            }
            config.trials = trials;
            config.seed = seed;
            config.tol = tol;
            if let Some(list) = suites {
                match parse_suites(&list) {
                    Ok(ids) => config.suites = ids,
                    Err(e) => return usage(e),
                }
            }
            execute(&config, format, out)
        }
        Command::Counterexample { model, format } => {
            if model != Model::FinRel {
                return usage(format_args!(
                    "{model} satisfies every axiom; counterexamples exist for finrel only"
                ));
            }
            let config = SuiteConfig::counterexamples();
            debug_assert!(config.suites.contains(&SuiteId::EqualiserWitness));
            execute(&config, format, None)
        }
    }
}
