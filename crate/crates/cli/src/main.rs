use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kuratowski_cli::{run, Cli};

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    if !outcome.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "error: {}", outcome.stderr.trim_end());
    }
    ExitCode::from(outcome.code as u8)
}
