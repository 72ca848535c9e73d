//! `kernel` command-line front end: run script files or evaluate single
//! expressions against the exterior-algebra kernel.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use extensor_cli::{run_expr, run_script, Format, Outcome};

#[derive(Parser)]
#[command(name = "kernel", about = "Exterior-algebra kernel script runner")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file.
    Run {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Evaluate a single expression.
    Eval {
        expr: String,
        /// Dimension of the base space.
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

fn finish(outcome: Outcome) -> ExitCode {
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Run { file, format } => match std::fs::read_to_string(&file) {
            Ok(src) => finish(run_script(&src, format.into())),
            Err(e) => {
                eprintln!("cannot read {}: {e}", file.display());
                ExitCode::from(3)
            }
        },
        Cmd::Eval { expr, dim, format } => finish(run_expr(&expr, dim, format.into())),
    }
}
