use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;

use dualspace::Error;
use dualspace_cli::{error_report, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let config = cli.config;
    let input = match config.common().input.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| format!("standard input: {e}"))
        }
    };
    let (report, code) = match input {
        Ok(text) => run(&config, &text),
        Err(msg) => (error_report(&config, &Error::InvalidArgument(msg)), 1),
    };
    if let Some(err) = report.get("error") {
        eprintln!("error: {}", err["message"].as_str().unwrap_or("unknown"));
    }
    let text = serde_json::to_string_pretty(&report).expect("reports are plain JSON");
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(code as u8)
}
