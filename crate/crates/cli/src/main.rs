use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stellate::interp::{execute, selftest_script, Format, RunConfig, EXIT_USAGE};
use stellate_core::DEFAULT_MAX_ITER;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "stellate",
    version,
    about = "Star-operations on monomial ideals"
)]
struct Cli {
    /// Seed for every sampled suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples drawn per suite.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Largest exponent in sampled generators.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    max_deg: i64,
    /// Iteration guard for S-transform chains.
    #[arg(long, global = true, env = "STELLATE_MAX_ITER", default_value_t = DEFAULT_MAX_ITER as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_iter: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Number of ring variables for `check` and `suite`.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    vars: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a script file.
    Eval { file: PathBuf },
    /// Run one check; arguments are script expressions.
    Check { name: String, args: Vec<String> },
    /// Run one property suite; arguments are script expressions.
    Suite { name: String, args: Vec<String> },
    /// Reproduce a named counterexample.
    Counterexample { name: String },
    /// Run every suite on fixed inputs.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        seed: cli.seed,
        samples: cli.samples as usize,
        max_deg: cli.max_deg,
        max_iter: cli.max_iter as usize,
        format: match cli.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        },
    };
    let ring = format!("ring R = monomial(vars={})\n", cli.vars);
    let src = match &cli.command {
        Command::Eval { file } => match std::fs::read_to_string(file) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", file.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        },
        Command::Check { name, args } => format!("{ring}check {name} {}", args.join(" ")),
        Command::Suite { name, args } => format!("{ring}suite {name} {}", args.join(" ")),
        Command::Counterexample { name } => format!("counterexample {name}\n"),
        Command::Selftest => selftest_script().to_string(),
    };
    let outcome = execute(&src, &cfg);
    let rendered = outcome.render(cfg.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(outcome.exit_code as u8)
}
