use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use invdiam::cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result =
        std::panic::catch_unwind(|| run(&cli)).unwrap_or_else(|_| Err(CliError::Internal("invariant violated".into())));
    match result {
        Ok(out) => {
            let mut text = serde_json::to_string_pretty(&out.doc).expect("JSON values serialize");
            text.push('\n');
            let written = match &cli.output {
                Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if cli.pretty {
                eprintln!("{}", out.summary);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
