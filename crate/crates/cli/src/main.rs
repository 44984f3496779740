use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use frobenius_cli::commands::{self, Options, EXIT_INPUT};
use frobenius_cli::Kind;
use frobenius_core::Tolerance64;

#[derive(Parser)]
#[command(
    name = "frobenius",
    version,
    about = "Classify real algebras given by structure constants"
)]
struct Cli {
    /// Zero threshold; sets both the absolute and the relative tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Identify the algebra as R, C or H, or print a witness that it is not
    /// an associative division algebra.
    Classify { path: PathBuf },
    /// Check the identity and associativity only.
    Verify { path: PathBuf },
    /// Odd-dimensional fast path through a real eigenvector.
    Shortcut { path: PathBuf },
    /// Write a fixture tensor.
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Dimension for rn-componentwise.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match Tolerance64::uniform(cli.tol) {
        Err(_) => commands::CommandOutput {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: --tol must lie strictly between 0 and 1, got {}\n", cli.tol),
        },
        Ok(tol) => {
            let opts = Options { tol, json: cli.json };
            match &cli.command {
                Command::Classify { path } => commands::classify_file(path, &opts),
                Command::Verify { path } => commands::verify_file(path, &opts),
                Command::Shortcut { path } => commands::shortcut_file(path, &opts),
                Command::Generate { kind, seed, n, out } => commands::generate(*kind, *seed, *n, out.as_deref()),
            }
        }
    };
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(output.stdout.as_bytes());
    let _ = std::io::stderr().write_all(output.stderr.as_bytes());
    ExitCode::from(output.code as u8)
}
