mod args;
mod commands;
mod document;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = commands::run(&cli);
    let (out, err) = match cli.format {
        Format::Json => (doc.to_json_string(), String::new()),
        Format::Text => doc.to_text(),
    };
    // A closed pipe is not worth a panic.
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(doc.exit_code())
}
