mod args;
mod commands;
mod grid;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::CliError;
use report::RunReport;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let report = match commands::run(&cli.command) {
        Ok(out) => {
            if let Some(raw) = out.raw {
                print!("{raw}");
                return ExitCode::SUCCESS;
            }
            RunReport::success(argv, out.inputs, out.payload, out.rows)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Domain(e)) => RunReport::failure(argv, Vec::new(), e.kind(), e.to_string()),
        Err(CliError::Io(msg)) => RunReport::failure(argv, Vec::new(), "io", msg),
    };
    let text = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    }
    .expect("reports serialize");
    println!("{text}");
    if cli.verbose {
        eprintln!("{}", report.summary());
    }
    ExitCode::from(report.exit_code as u8)
}
