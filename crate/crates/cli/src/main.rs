use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wb_cli::commands::{self, Failure, Output};
use wb_cli::format;

#[derive(Parser)]
#[command(name = "wb", about = "Exact workbench for comodules, oplax structures and lifted adjunctions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the axioms of every declaration.
    Validate { file: PathBuf },
    /// Run a construction and print the result as a workbench file.
    Compute {
        file: PathBuf,
        /// tensor, hom, enriched, conv, kelly, lift, adjoint, factor or transfer
        verb: String,
        args: Vec<String>,
        /// Name of the produced declaration.
        #[arg(long = "as")]
        name: Option<String>,
    },
    /// Run every applicable check, seeded by WB_SEED.
    Report { file: PathBuf },
}

fn load(path: &PathBuf) -> Result<format::WorkbenchFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))
}

fn seed() -> Result<u64, Failure> {
    match std::env::var("WB_SEED") {
        Err(_) => Ok(0),
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("WB_SEED must be an unsigned integer, got `{s}`"))),
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.cmd {
        Cmd::Validate { file } => Ok(commands::validate(&load(&file)?)),
        Cmd::Compute { file, verb, args, name } => commands::compute(&load(&file)?, &verb, &args, name.as_deref()),
        Cmd::Report { file } => {
            let s = seed()?;
            Ok(commands::report(&load(&file)?, s))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
