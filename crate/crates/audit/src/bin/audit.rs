use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use binomial_sums_audit::config::{Config, Format};
use binomial_sums_audit::registry::registry;
use binomial_sums_audit::runner::{run_audit, Status};
use binomial_sums_audit::seq::{Family, Sequence};
use binomial_sums_audit::AuditError;

/// Exact identity audit and sequence export for binomial power sums.
#[derive(Parser)]
#[command(name = "audit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every selected identity over its grid.
    Run {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Glob over identity ids, e.g. `inP*`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Include per-entry elapsed milliseconds (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Print registry ids with their formulas.
    List,
    /// Export exact values of one sequence.
    Seq {
        #[arg(long)]
        family: String,
        /// `key=value,...`, e.g. `p=3,m=0,lambda=1`.
        #[arg(long, default_value = "")]
        params: String,
        /// Inclusive index range `a..b`.
        #[arg(long)]
        range: String,
        #[arg(long, value_enum, default_value_t = SeqFormat::Csv)]
        format: SeqFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> Result<ExitCode, AuditError> {
    match command {
        Command::Run {
            config,
            filter,
            format,
            out,
            threads,
            timings,
        } => {
            let mut cfg = match config {
                Some(path) => Config::load(&path)?,
                None => Config::default(),
            };
            cfg.timings |= timings;
            let filter = filter.or_else(|| cfg.filter.clone());
            let threads = match threads.or(cfg.threads) {
                Some(0) => return Err(AuditError::Usage("--threads must be at least 1".into())),
                Some(n) => n,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            let report = run_audit(&cfg, filter.as_deref(), threads)?;
            for e in &report.entries {
                let mark = if e.status == Status::Pass { "ok  " } else { "FAIL" };
                eprintln!("{mark} {:<24} {} (expected {})", e.id, e.verdict, e.expected);
            }
            let text = match format.or(cfg.format).unwrap_or_default() {
                Format::Json => report.to_json(),
                Format::Md => report.to_markdown(),
                Format::Csv => report.to_csv()?,
            };
            emit(out, &text)?;
            Ok(if report.all_expected() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::List => {
            for e in registry() {
                println!("{}\t{}\t{}", e.id, e.expected, e.paper_ref);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Seq {
            family,
            params,
            range,
            format,
            out,
        } => {
            let family = Family::parse(&family, &params)?;
            let seq = Sequence::compute(&family, &range)?;
            let text = match format {
                SeqFormat::Csv => seq.to_csv()?,
                SeqFormat::Json => seq.to_json(),
            };
            emit(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), AuditError> {
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|source| AuditError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
