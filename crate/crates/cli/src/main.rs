//! `qchar`: weight diagrams, paths, composition factors, characters and dimensions of
//! simple q(n)-modules from the command line.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match commands::run(cli) {
        Ok(report) => {
            match format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
                ),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
